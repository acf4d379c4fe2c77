"""Strong-topology probes: neighborhoods, convergence, Cauchy tails,
completeness, norm equivalence, and the finite-dimensional comparison
constant between a space and a scalar-field norm.

All convergence claims are horizon-bounded verdicts over a finite prefix
of the sequence; margins are reported so failures are diagnosable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distfn import DistFn, compare_leq
from .pnspace import PNSpace, Vector, as_vector, vec_scale, vec_sub

DEFAULT_LAMBDAS = (0.5, 0.25, 0.1, 0.05)
DEFAULT_HORIZON = 64


@dataclass(frozen=True)
class SequenceSpec:
    """Deterministic vector sequence: an explicit list, or a generator
    (harmonic 1/m, geometric 2^m, geometric decay 2^-m) times a direction."""

    kind: str  # 'explicit' | 'harmonic' | 'geometric' | 'geometric_decay'
    direction: Vector = (1.0,)
    terms: tuple[Vector, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("explicit", "harmonic", "geometric", "geometric_decay"):
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "explicit" and not self.terms:
            raise ValueError("explicit sequence needs terms")

    def term(self, m: int) -> Vector:
        if m < 1:
            raise ValueError("terms are 1-indexed")
        if self.kind == "explicit":
            return self.terms[min(m, len(self.terms)) - 1]
        if self.kind == "harmonic":
            return vec_scale(1.0 / m, self.direction)
        if self.kind == "geometric":
            return vec_scale(2.0**m, self.direction)
        return vec_scale(2.0**-m, self.direction)

    def classical_limit(self) -> Vector | None:
        """Componentwise limit of the tuple sequence, when recognizable."""
        if self.kind in ("harmonic", "geometric_decay"):
            return tuple(0.0 for _ in self.direction)
        if self.kind == "explicit":
            if all(t == self.terms[0] for t in self.terms):
                return self.terms[0]
            return None
        return None  # geometric escapes

    def describe(self) -> str:
        if self.kind == "explicit":
            return f"explicit[{len(self.terms)}]"
        return self.kind


def parse_sequence(text: str, dim: int = 1) -> SequenceSpec:
    """Parse ``harmonic``, ``geometric``, ``geometric_decay`` or
    ``explicit:v1;v2;...`` (components comma-separated within a term)."""
    direction = (1.0,) + (0.0,) * (dim - 1)
    if text in ("harmonic", "geometric", "geometric_decay"):
        return SequenceSpec(text, direction)
    kind, _, rest = text.partition(":")
    if kind == "explicit" and rest:
        terms = tuple(tuple(float(c) for c in t.split(",")) for t in rest.split(";"))
        return SequenceSpec("explicit", direction, terms)
    raise ValueError(f"malformed sequence spec {text!r}")


def neighborhood_contains(space: PNSpace, p, q, lam: float) -> bool:
    """Strong lambda-neighborhood membership: nu_{p-q}(lambda) > 1 - lambda."""
    if not (0.0 < lam < 1.0):
        raise ValueError("lambda must lie in (0, 1)")
    p = as_vector(p, space.dim)
    q = as_vector(q, space.dim)
    return space.norm_of(vec_sub(p, q)).eval(lam) > 1.0 - lam


@dataclass(frozen=True)
class LambdaVerdict:
    lam: float
    n: int | None  # least tail start, None on failure
    worst_margin: float  # most negative membership margin seen

    @property
    def succeeded(self) -> bool:
        return self.n is not None


@dataclass(frozen=True)
class ConvergenceReport:
    per_lambda: tuple[LambdaVerdict, ...]
    horizon: int

    @property
    def converges(self) -> bool:
        return all(v.succeeded for v in self.per_lambda)

    def verdict_at(self, lam: float) -> LambdaVerdict:
        for v in self.per_lambda:
            if v.lam == lam:
                return v
        raise KeyError(lam)

    def to_dict(self) -> dict:
        return {
            "converges": self.converges,
            "per_lambda": [
                {"lambda": v.lam, "N": v.n, "worst_margin": v.worst_margin} for v in self.per_lambda
            ],
            "horizon": self.horizon,
        }


def convergence_probe(
    space: PNSpace,
    seq: SequenceSpec,
    target,
    lambdas=DEFAULT_LAMBDAS,
    horizon: int = DEFAULT_HORIZON,
) -> ConvergenceReport:
    """Least N per lambda with the whole tail N..horizon inside the strong
    lambda-neighborhood of the target, or failure with the worst margin."""
    if not lambdas:
        raise ValueError("lambda list must be nonempty")
    target = as_vector(target, space.dim)
    if seq.kind == "explicit":
        horizon = min(horizon, len(seq.terms))
    diffs = [space.norm_of(vec_sub(seq.term(m), target)) for m in range(1, horizon + 1)]
    verdicts = []
    for lam in lambdas:
        if not (0.0 < lam < 1.0):
            raise ValueError("lambda must lie in (0, 1)")
        margins = [f.eval(lam) - (1.0 - lam) for f in diffs]
        worst = min(margins)
        last_bad = max((i for i, m in enumerate(margins) if m <= 0.0), default=-1)
        if last_bad == horizon - 1:
            verdicts.append(LambdaVerdict(lam, None, worst))
        else:
            verdicts.append(LambdaVerdict(lam, last_bad + 2, worst))
    return ConvergenceReport(tuple(verdicts), horizon)


def cauchy_probe(
    space: PNSpace,
    seq: SequenceSpec,
    lambdas=DEFAULT_LAMBDAS,
    horizon: int = DEFAULT_HORIZON,
) -> ConvergenceReport:
    """Pairwise tail check: least N with nu_{p_n - p_m}(lambda) > 1 - lambda
    for all N < m < n <= horizon."""
    if not lambdas:
        raise ValueError("lambda list must be nonempty")
    if seq.kind == "explicit":
        horizon = min(horizon, len(seq.terms))
    terms = [seq.term(m) for m in range(1, horizon + 1)]
    pair_norms = {}
    for i in range(horizon):
        for j in range(i + 1, horizon):
            pair_norms[(i, j)] = space.norm_of(vec_sub(terms[j], terms[i]))
    verdicts = []
    for lam in lambdas:
        if not (0.0 < lam < 1.0):
            raise ValueError("lambda must lie in (0, 1)")
        worst = math.inf
        needed = 0
        for (i, j), f in pair_norms.items():
            margin = f.eval(lam) - (1.0 - lam)
            worst = min(worst, margin)
            if margin <= 0.0:
                needed = max(needed, i + 1)  # N must exclude index i+1 (1-based)
        if needed >= horizon - 1:
            verdicts.append(LambdaVerdict(lam, None, worst))
        else:
            verdicts.append(LambdaVerdict(lam, max(needed, 1), worst))
    return ConvergenceReport(tuple(verdicts), horizon)


@dataclass(frozen=True)
class CompletenessResult:
    status: str  # 'cauchy_and_converges' | 'cauchy_no_limit_detected' | 'not_cauchy'
    limit: Vector | None
    cauchy: ConvergenceReport
    convergence: ConvergenceReport | None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "limit": list(self.limit) if self.limit is not None else None,
            "cauchy": self.cauchy.to_dict(),
            "convergence": self.convergence.to_dict() if self.convergence else None,
        }


def completeness_probe(
    space: PNSpace,
    seq: SequenceSpec,
    lambdas=DEFAULT_LAMBDAS,
    horizon: int = DEFAULT_HORIZON,
) -> CompletenessResult:
    """Run the Cauchy probe; on success propose the componentwise classical
    limit of the tuple sequence and re-run the convergence probe toward it."""
    cr = cauchy_probe(space, seq, lambdas, horizon)
    if not cr.converges:
        return CompletenessResult("not_cauchy", None, cr, None)
    limit = seq.classical_limit()
    if limit is None:
        return CompletenessResult("cauchy_no_limit_detected", None, cr, None)
    limit = as_vector(limit, space.dim)
    conv = convergence_probe(space, seq, limit, lambdas, horizon)
    if conv.converges:
        return CompletenessResult("cauchy_and_converges", limit, cr, conv)
    return CompletenessResult("cauchy_no_limit_detected", None, cr, conv)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent_on_battery: bool
    witness: str | None
    details: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "equivalent_on_battery": self.equivalent_on_battery,
            "witness": self.witness,
            "details": list(self.details),
        }


def default_battery(dim: int = 1):
    direction = (1.0,) + (0.0,) * (dim - 1)
    zero = (0.0,) * dim
    constant = SequenceSpec("explicit", direction, terms=(direction,) * 4)
    return [
        (SequenceSpec("harmonic", direction), zero),
        (SequenceSpec("geometric_decay", direction), zero),
        (constant, direction),
    ]


def equivalence_probe(
    space_a: PNSpace,
    space_b: PNSpace,
    battery=None,
    lambdas=DEFAULT_LAMBDAS,
    horizon: int = DEFAULT_HORIZON,
) -> EquivalenceResult:
    """Compare convergence verdicts of the two norms over a battery of
    (sequence, target) pairs.  A mismatch refutes equivalence with the
    witness item; agreement on the battery is evidence, not proof."""
    if space_a.dim != space_b.dim:
        raise ValueError("spaces must share a dimension")
    if battery is None:
        battery = default_battery(space_a.dim)
    if not battery:
        raise ValueError("battery must be nonempty")
    details = []
    witness = None
    for seq, target in battery:
        va = convergence_probe(space_a, seq, target, lambdas, horizon).converges
        vb = convergence_probe(space_b, seq, target, lambdas, horizon).converges
        details.append({"sequence": seq.describe(), "a_converges": va, "b_converges": vb})
        if va != vb and witness is None:
            witness = seq.describe()
    return EquivalenceResult(witness is None, witness, tuple(details))


def linearly_independent(vectors, tol: float = 1e-12) -> bool:
    """Gaussian elimination with partial pivoting; independent when the
    row-echelon rank (pivots above tol) equals the number of vectors."""
    rows = [list(map(float, v)) for v in vectors]
    n = len(rows)
    if n == 0:
        return True
    cols = len(rows[0])
    if any(len(r) != cols for r in rows) or n > cols:
        return False
    rank = 0
    for col in range(cols):
        piv = max(range(rank, n), key=lambda r: abs(rows[r][col]))
        if abs(rows[piv][col]) <= tol:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pval = rows[rank][col]
        for r in range(rank + 1, n):
            factor = rows[r][col] / pval
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            return True
    return rank == n


def default_coeff_samples(n: int, count: int = 200, seed: int = 0) -> tuple[tuple[float, ...], ...]:
    """Coefficient vectors on the unit l1 sphere: a deterministic edge grid
    for n = 2, random simplex points with sign patterns otherwise."""
    out: set[tuple[float, ...]] = set()
    if n == 1:
        return ((1.0,), (-1.0,))
    if n == 2:
        for t in np.linspace(0.0, 1.0, count + 1):
            for s1 in (1.0, -1.0):
                for s2 in (1.0, -1.0):
                    out.add((s1 * t, s2 * (1.0 - t)))
        return tuple(sorted(out))
    rng = np.random.default_rng(seed)
    for i in range(n):
        for sgn in (1.0, -1.0):
            e = [0.0] * n
            e[i] = sgn
            out.add(tuple(e))
    while len(out) < count:
        w = rng.dirichlet(np.ones(n))
        signs = rng.choice((-1.0, 1.0), size=n)
        out.add(tuple(float(s * c) for s, c in zip(signs, w)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class ComparisonConstant:
    c: float | None
    n_samples: int

    @property
    def found(self) -> bool:
        return self.c is not None


def find_comparison_constant(
    space: PNSpace,
    basis,
    field_space: PNSpace,
    coeff_samples=None,
    tol: float = 0.0,
    hi_cap: float = 2.0**20,
) -> ComparisonConstant:
    """Largest c > 0 with nu_{sum beta_j p_j} <= nu'_c for every sampled
    coefficient vector on the unit l1 sphere (nu' is the field norm).

    Found by doubling then bisection; feasibility is monotone because the
    field norm shrinks as its argument grows.  A search failure is not a
    refutation of the comparison inequality's existence.
    """
    basis = [as_vector(b, space.dim) for b in basis]
    if not linearly_independent(basis):
        raise ValueError("basis vectors must be linearly independent")
    if field_space.dim != 1:
        raise ValueError("field norm must be one-dimensional")
    if coeff_samples is None:
        coeff_samples = default_coeff_samples(len(basis))
    lhs: list[DistFn] = []
    for beta in coeff_samples:
        v = tuple(sum(b * p[i] for b, p in zip(beta, basis)) for i in range(space.dim))
        lhs.append(space.norm_of(v))

    def feasible(c: float) -> bool:
        rhs = field_space.norm_of((c,))
        return all(compare_leq(f, rhs, tol).holds for f in lhs)

    lo = 1e-12
    if not feasible(lo):
        return ComparisonConstant(None, len(lhs))
    hi = None
    c = 1e-6
    while c <= hi_cap:
        if feasible(c):
            lo = c
        else:
            hi = c
            break
        c *= 2.0
    if hi is None:
        return ComparisonConstant(lo, len(lhs))
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return ComparisonConstant(lo, len(lhs))
