"""Probabilistic normed spaces: built-in norm families and axiom probes.

A space is a finite-dimensional real vector space together with a map
``nu`` from vectors into the distribution-function space and a pair of
triangle functions (tau, tau_star).  The built-in families, all driven
by the magnitude of the vector:

==========  ===========================================================
id          nu_p for p != 0                          (nu_theta = eps(0))
==========  ===========================================================
``E9``      unit step at |p| / (a + |p|)
``E12``     plateau at exp(-|p|^(1/2))
``E19``     unit step at ||p||           (base norm l1 / l2 / linf)
``E19b``    unit step at ||p|| / (a + ||p||)
``E21``     plateau at 1 / (|p| + 2)
``E25``     ratio with scale |p|^(1/2)   (rational-carrier flag, doc only)
``E27``     unit step at (a + |p|) / a
==========  ===========================================================

The probes report violations as data rather than raising; every checker
is a pure function of immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distfn import (
    EPS0,
    DistFn,
    Plateau,
    Ratio,
    compare_leq,
    distfn_equal,
    eps,
)
from .tnorms import LawCheck
from .triangle import TriangleFn, parse_triangle

Vector = tuple[float, ...]

FAMILIES = ("E9", "E12", "E19", "E19b", "E21", "E25", "E27")

_BASE_NORMS = {
    "l1": lambda p: sum(abs(c) for c in p),
    "l2": lambda p: math.sqrt(sum(c * c for c in p)),
    "linf": lambda p: max((abs(c) for c in p), default=0.0),
}


def as_vector(p, dim: int) -> Vector:
    if isinstance(p, (int, float)):
        p = (float(p),)
    v = tuple(float(c) for c in p)
    if len(v) != dim:
        raise ValueError(f"vector {v} has length {len(v)}, expected {dim}")
    return v


def vec_add(p: Vector, q: Vector) -> Vector:
    return tuple(a + b for a, b in zip(p, q))

def vec_sub(p: Vector, q: Vector) -> Vector:
    return tuple(a - b for a, b in zip(p, q))

def vec_scale(a: float, p: Vector) -> Vector:
    return tuple(a * c for c in p)

def is_zero(p: Vector) -> bool:
    return all(c == 0.0 for c in p)


@dataclass(frozen=True)
class PNSpace:
    family: str
    dim: int
    tau: TriangleFn
    tau_star: TriangleFn
    a: float = 1.0
    base_norm: str = "l2"
    rational_carrier: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown space family {self.family!r}")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.family in ("E9", "E12", "E21", "E25", "E27") and self.dim != 1:
            raise ValueError(f"family {self.family} is one-dimensional")
        if self.family in ("E9", "E19b", "E27") and not self.a > 0.0:
            raise ValueError("parameter a must be positive")
        if self.base_norm not in _BASE_NORMS:
            raise ValueError(f"unknown base norm {self.base_norm!r}")

    @property
    def zero(self) -> Vector:
        return (0.0,) * self.dim

    def magnitude(self, p: Vector) -> float:
        return _BASE_NORMS[self.base_norm](p)

    def norm_of(self, p) -> DistFn:
        """The distribution-valued norm of the vector p."""
        p = as_vector(p, self.dim)
        if is_zero(p):
            return EPS0
        m = self.magnitude(p)
        if self.family == "E9":
            return eps(m / (self.a + m))
        if self.family == "E12":
            return Plateau(math.exp(-math.sqrt(m)))
        if self.family == "E19":
            return eps(m)
        if self.family == "E19b":
            return eps(m / (self.a + m))
        if self.family == "E21":
            return Plateau(1.0 / (m + 2.0))
        if self.family == "E25":
            return Ratio(math.sqrt(m))
        return eps((self.a + m) / self.a)  # E27

    def norm_at_magnitude(self, m: float) -> DistFn:
        """norm_of at any vector of magnitude m >= 0 (all families are radial)."""
        if m == 0.0:
            return EPS0
        direction = (1.0,) + (0.0,) * (self.dim - 1)
        scale = m / self.magnitude(direction)
        return self.norm_of(vec_scale(scale, direction))

    def describe(self) -> str:
        parts = [self.family]
        if self.family in ("E9", "E19b", "E27"):
            parts.append(f"a={self.a:g}")
        if self.family in ("E19", "E19b"):
            parts.append(self.base_norm)
            if self.dim != 1:
                parts.append(f"dim={self.dim}")
        return ":".join([parts[0], ",".join(parts[1:])]) if len(parts) > 1 else parts[0]


_DEFAULT_TAUS = {
    # (tau, tau_star) pairings matching each family's native quadruple
    "E9": ("sup:prod", "max"),
    "E12": ("sup:prod", "inf:prod"),
    "E19": ("sup:prod", "max"),
    "E19b": ("sup:prod", "max"),
    "E21": ("sup:lukasiewicz", "sup:min"),
    "E25": ("sup:prod", "inf:t2"),
    "E27": ("sup:prod", "max"),
}


def make_space(
    family: str,
    *,
    dim: int | None = None,
    a: float = 1.0,
    base_norm: str = "l2",
    tau: TriangleFn | str | None = None,
    tau_star: TriangleFn | str | None = None,
) -> PNSpace:
    if family not in FAMILIES:
        raise ValueError(f"unknown space family {family!r}; choose from {FAMILIES}")
    if dim is None:
        dim = 1
    d_tau, d_star = _DEFAULT_TAUS[family]
    tau = parse_triangle(tau) if isinstance(tau, str) else (tau or parse_triangle(d_tau))
    tau_star = (
        parse_triangle(tau_star) if isinstance(tau_star, str) else (tau_star or parse_triangle(d_star))
    )
    return PNSpace(
        family=family,
        dim=dim,
        tau=tau,
        tau_star=tau_star,
        a=a,
        base_norm=base_norm,
        rational_carrier=(family == "E25"),
    )


def parse_space(text: str, tau: str | None = None, tau_star: str | None = None) -> PNSpace:
    """Parse CLI space specs like ``E9:a=1``, ``E19:l2,dim=2``, ``E19b:a=1,l2``."""
    head, _, rest = text.partition(":")
    kwargs: dict = {}
    if rest:
        for tokraw in rest.split(","):
            tok = tokraw.strip()
            if not tok:
                continue
            if "=" in tok:
                key, val = tok.split("=", 1)
                if key == "a":
                    kwargs["a"] = float(val)
                elif key == "dim":
                    kwargs["dim"] = int(val)
                else:
                    raise ValueError(f"unknown space parameter {key!r} in {text!r}")
            elif tok in _BASE_NORMS:
                kwargs["base_norm"] = tok
            else:
                raise ValueError(f"unknown space token {tok!r} in {text!r}")
    return make_space(head, tau=tau, tau_star=tau_star, **kwargs)


@dataclass(frozen=True)
class SampleSpec:
    """Deterministic probe battery: vectors, convex weights and scalars."""

    vectors: tuple[Vector, ...]
    lambdas: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 1.0)
    alphas: tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0)
    seed: int = 0


_MAGNITUDES = (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0, 8.0, -8.0)


def default_samples(space: PNSpace) -> SampleSpec:
    dirs: list[Vector] = []
    for i in range(space.dim):
        e = [0.0] * space.dim
        e[i] = 1.0
        dirs.append(tuple(e))
    if space.dim > 1:
        dirs.append((1.0,) * space.dim)
    vecs: list[Vector] = []
    seen = set()
    for c in _MAGNITUDES:
        for d in dirs:
            v = vec_scale(c, d)
            if v not in seen:
                seen.add(v)
                vecs.append(v)
    return SampleSpec(vectors=tuple(vecs))


@dataclass(frozen=True)
class AxiomReport:
    n1: LawCheck
    n2: LawCheck
    n3: LawCheck
    n4: LawCheck
    tau_le_tau_star: LawCheck

    @property
    def all_hold(self) -> bool:
        return all(c.ok for c in (self.n1, self.n2, self.n3, self.n4))

    def to_dict(self) -> dict:
        return {
            "N1": self.n1.ok,
            "N2": self.n2.ok,
            "N3": self.n3.ok,
            "N4": self.n4.ok,
            "tau_le_tau_star": self.tau_le_tau_star.ok,
        }


def axiom_suite(space: PNSpace, samples: SampleSpec | None = None, tol: float = 1e-9) -> AxiomReport:
    """Check N1-N4 pointwise on the sample battery.

    N1: nu_theta is the unit step at 0, and no other sampled vector maps to it.
    N2: nu_{-p} = nu_p.
    N3: nu_{p+q} >= tau(nu_p, nu_q).
    N4: nu_p <= tau_star(nu_{lambda p}, nu_{(1-lambda) p}).
    The tau <= tau_star requirement is probed on the sampled norm pairs.
    """
    if samples is None:
        samples = default_samples(space)
    if not samples.vectors:
        raise ValueError("sample battery must be nonempty")
    norms = {p: space.norm_of(p) for p in samples.vectors}

    n1_v = []
    if not distfn_equal(space.norm_of(space.zero), EPS0, tol):
        n1_v.append(("theta", space.zero))
    for p, f in norms.items():
        if not is_zero(p) and distfn_equal(f, EPS0, tol):
            n1_v.append(("nonzero maps to unit step", p))

    n2_v = [(p,) for p, f in norms.items() if not distfn_equal(space.norm_of(vec_scale(-1.0, p)), f, tol)]

    n3_v = []
    for p, fp in norms.items():
        for q, fq in norms.items():
            lhs = space.tau(fp, fq)
            c = compare_leq(lhs, space.norm_of(vec_add(p, q)), tol)
            if not c.holds:
                n3_v.append((p, q, c.witness))

    n4_v = []
    for p, fp in norms.items():
        for lam in samples.lambdas:
            rhs = space.tau_star(space.norm_of(vec_scale(lam, p)), space.norm_of(vec_scale(1.0 - lam, p)))
            c = compare_leq(fp, rhs, tol)
            if not c.holds:
                n4_v.append((p, lam, c.witness))

    order_v = []
    pairs = list(norms.values())
    for f, g in zip(pairs, pairs[1:] + pairs[:1]):
        c = compare_leq(space.tau(f, g), space.tau_star(f, g), tol)
        if not c.holds:
            order_v.append((c.witness,))

    return AxiomReport(
        n1=LawCheck(not n1_v, tuple(n1_v[:3])),
        n2=LawCheck(not n2_v, tuple(n2_v[:3])),
        n3=LawCheck(not n3_v, tuple(n3_v[:3])),
        n4=LawCheck(not n4_v, tuple(n4_v[:3])),
        tau_le_tau_star=LawCheck(not order_v, tuple(order_v[:3])),
    )


@dataclass(frozen=True)
class ScalingViolation:
    alpha: float
    p: Vector
    x: float
    lhs: DistFn
    rhs: DistFn


@dataclass(frozen=True)
class ScalingResult:
    holds: bool
    violations: tuple[ScalingViolation, ...]

    @property
    def witness(self) -> ScalingViolation | None:
        return self.violations[0] if self.violations else None


def serstnev_check(space: PNSpace, samples: SampleSpec | None = None, tol: float = 1e-9) -> ScalingResult:
    """Test the Serstnev scaling identity nu_{alpha p}(x) = nu_p(x / |alpha|)
    by comparing norm_of(alpha p) with the argument-scaled norm pointwise."""
    if samples is None:
        samples = default_samples(space)
    violations = []
    for alpha in samples.alphas:
        for sgn in (1.0, -1.0):
            av = sgn * alpha
            if av == 0.0:
                continue
            for p in samples.vectors:
                lhs = space.norm_of(vec_scale(av, p))
                rhs = space.norm_of(p).scale_arg(abs(av))
                fwd = compare_leq(lhs, rhs, tol)
                bwd = compare_leq(rhs, lhs, tol)
                if not (fwd.holds and bwd.holds):
                    x = fwd.witness if fwd.witness is not None else bwd.witness
                    violations.append(ScalingViolation(av, p, x, lhs, rhs))
    return ScalingResult(not violations, tuple(violations))


def scalar_monotonicity_check(
    space: PNSpace,
    trials=None,
    samples: SampleSpec | None = None,
    tol: float = 1e-9,
) -> LawCheck:
    """|alpha| <= |beta| forces nu_{beta p} <= nu_{alpha p} pointwise.

    ``trials`` is an iterable of (alpha, beta, p); by default all ordered
    scalar pairs from the sample battery are crossed with its vectors.
    """
    if trials is None:
        if samples is None:
            samples = default_samples(space)
        trials = [
            (a, b, p)
            for a in samples.alphas
            for b in samples.alphas
            if abs(a) <= abs(b)
            for p in samples.vectors
        ]
    violations = []
    for alpha, beta, p in trials:
        p = as_vector(p, space.dim)
        c = compare_leq(space.norm_of(vec_scale(beta, p)), space.norm_of(vec_scale(alpha, p)), tol)
        if not c.holds:
            violations.append((alpha, beta, p, c.witness))
    return LawCheck(not violations, tuple(violations[:3]))


def random_scalar_triples(n: int, seed: int, scale: float = 8.0):
    """n random (alpha, beta, p) trials with |alpha| <= |beta|, for dim-1 spaces."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        x, y = rng.uniform(-scale, scale, size=2)
        alpha, beta = sorted((x, y), key=abs)
        p = (float(rng.uniform(-scale, scale)),)
        out.append((float(alpha), float(beta), p))
    return out


@dataclass(frozen=True)
class VanishingResult:
    """Outcome of the vanishing-at-infinity probe (nu_p -> 0 pointwise as
    |p| grows, i.e. the norm escapes to the minimal element)."""

    has_property: bool
    failures: tuple[tuple[float, float], ...]  # (x, tail value)
    tail_values: tuple[tuple[float, float], ...]


def lg_probe(
    space: PNSpace,
    x_probes: tuple[float, ...] = (0.5, 1.0, 2.0, 4.0),
    escape_magnitudes: tuple[float, ...] | None = None,
    threshold: float = 1e-6,
) -> VanishingResult:
    """Check lim_{|p| -> inf} nu_p(x) = 0 at each probe x along an
    unbounded increasing escape of magnitudes (default powers of two)."""
    if escape_magnitudes is None:
        escape_magnitudes = tuple(float(2.0**k) for k in range(0, 61, 2))
    failures = []
    tails = []
    for x in x_probes:
        vals = [space.norm_at_magnitude(m).eval(x) for m in escape_magnitudes]
        tail = min(vals)
        tails.append((x, vals[-1]))
        if tail >= threshold:
            failures.append((x, tail))
    return VanishingResult(not failures, tuple(failures), tuple(tails))


@dataclass(frozen=True)
class DeltaProbeResult:
    found: bool
    delta: float | None


def small_scalar_delta_probe(
    space: PNSpace,
    p,
    h: float,
    alpha_checks: int = 48,
    max_delta: float = 2.0**20,
    min_delta: float = 1e-9,
) -> DeltaProbeResult:
    """Search for delta > 0 such that |alpha| < delta forces
    nu_{alpha p}(h) > 1 - h, by doubling then bisecting on delta;
    each candidate is vetted on a scalar ladder up to delta."""
    if not (0.0 < h < 1.0):
        raise ValueError("h must lie in (0, 1)")
    p = as_vector(p, space.dim)

    def ok(delta: float) -> bool:
        alphas = delta * np.linspace(1.0 / alpha_checks, 1.0, alpha_checks)
        return all(space.norm_of(vec_scale(float(a), p)).eval(h) > 1.0 - h for a in alphas)

    if not ok(min_delta):
        return DeltaProbeResult(False, None)
    lo = min_delta
    hi = None
    d = max(min_delta * 2.0, 1e-6)
    while d <= max_delta:
        if ok(d):
            lo = d
        else:
            hi = d
            break
        d *= 2.0
    if hi is None:
        return DeltaProbeResult(True, lo)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return DeltaProbeResult(True, lo)


def strong_tvs_probe(
    space: PNSpace,
    ps=((0.5,), (1.0,), (4.0,)),
    hs=(0.1, 0.25, 0.5, 0.75),
) -> LawCheck:
    """Operational stand-in for the topological-vector-space property:
    the small-scalar threshold must exist for every sampled (p, h).
    A probe, not a definition; failures carry the offending pair."""
    failures = []
    for p in ps:
        if is_zero(as_vector(p, space.dim)):
            continue
        for h in hs:
            if not small_scalar_delta_probe(space, p, h).found:
                failures.append((p, h))
    return LawCheck(not failures, tuple(failures[:4]))
