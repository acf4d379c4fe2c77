"""Probabilistic radius, four-way boundedness classification, lower-bound
witnesses, the convergent-sequence bound construction, and a refutation
probe for distributional compactness."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distfn import (
    DPLUS_TOL,
    EPS_INF,
    INF,
    DistFn,
    Grid,
    Plateau,
    Ratio,
    Step,
    compare_leq,
    eps,
    pointwise_min,
)
from .pnspace import PNSpace, Vector, as_vector, default_samples, vec_sub
from .topology import DEFAULT_HORIZON, SequenceSpec, convergence_probe
from .triangle import conv_plateau

CERTAINLY_BOUNDED = "certainly_bounded"
PERHAPS_BOUNDED = "perhaps_bounded"
PERHAPS_UNBOUNDED = "perhaps_unbounded"
CERTAINLY_UNBOUNDED = "certainly_unbounded"


@dataclass(frozen=True)
class SetSpec:
    """A subset of the carrier: an explicit finite list, the whole line,
    the rationals in a closed interval (dim 1), or a sequence image."""

    kind: str  # 'finite' | 'all_reals' | 'interval_rationals' | 'sequence_image'
    vectors: tuple[Vector, ...] = ()
    lo: float = 0.0
    hi: float = 0.0
    n_samples: int = 200
    seq: SequenceSpec | None = None
    horizon: int = DEFAULT_HORIZON

    def __post_init__(self):
        if self.kind not in ("finite", "all_reals", "interval_rationals", "sequence_image"):
            raise ValueError(f"unknown set kind {self.kind!r}")
        if self.kind == "finite" and not self.vectors:
            raise ValueError("finite set must be nonempty")
        if self.kind == "interval_rationals" and not (self.lo < self.hi):
            raise ValueError("interval must be nondegenerate")
        if self.kind == "sequence_image" and self.seq is None:
            raise ValueError("sequence_image needs a sequence")

    def members(self, dim: int = 1) -> tuple[Vector, ...]:
        """Enumerated (finite kinds) or sampled (interval) members."""
        if self.kind == "finite":
            return tuple(as_vector(v, dim) for v in self.vectors)
        if self.kind == "sequence_image":
            return tuple(self.seq.term(m) for m in range(1, self.horizon + 1))
        if self.kind == "interval_rationals":
            return tuple((float(x),) for x in np.linspace(self.lo, self.hi, self.n_samples))
        raise ValueError("the whole carrier cannot be enumerated")

    def describe(self) -> str:
        if self.kind == "finite":
            return f"finite[{len(self.vectors)}]"
        if self.kind == "interval_rationals":
            return f"interval_rationals[{self.lo:g},{self.hi:g}]"
        if self.kind == "sequence_image":
            return f"image({self.seq.describe()})"
        return "all_reals"


def finite_set(vectors) -> SetSpec:
    return SetSpec(
        "finite",
        vectors=tuple(
            (float(v),) if isinstance(v, (int, float)) else tuple(float(c) for c in v)
            for v in vectors
        ),
    )


def all_reals() -> SetSpec:
    return SetSpec("all_reals")


def interval_rationals(lo: float, hi: float, n_samples: int = 200) -> SetSpec:
    return SetSpec("interval_rationals", lo=float(lo), hi=float(hi), n_samples=n_samples)


def sequence_image(seq: SequenceSpec, horizon: int = DEFAULT_HORIZON) -> SetSpec:
    return SetSpec("sequence_image", seq=seq, horizon=horizon)


def prob_radius(space: PNSpace, a: SetSpec) -> DistFn:
    """Probabilistic radius: the left-regularized pointwise infimum of the
    member norms.

    For finite member lists this is the exact pointwise min (a finite min
    of left-continuous nondecreasing functions is left-continuous, so the
    regularization is the identity).  For the generator kinds the built-in
    families are all radial and nonincreasing in |p|, so the infimum has a
    closed form: the norm at the supremum magnitude, or the minimal
    element when magnitudes are unbounded.
    """
    if a.kind in ("finite", "sequence_image"):
        return pointwise_min([space.norm_of(p) for p in a.members(space.dim)])
    if a.kind == "interval_rationals":
        if space.dim != 1:
            raise ValueError("interval sets are one-dimensional")
        m = max(abs(a.lo), abs(a.hi))
        return space.norm_at_magnitude(m)
    # all_reals: magnitudes are unbounded
    if space.family in ("E9", "E19b"):
        return eps(1.0)  # thresholds m / (a + m) increase to 1
    return EPS_INF


@dataclass(frozen=True)
class RadiusReport:
    radius: DistFn
    cls: str
    witness_x0: float | None
    plateau: float

    @property
    def d_bounded(self) -> bool:
        return self.cls in (CERTAINLY_BOUNDED, PERHAPS_BOUNDED)

    def to_dict(self) -> dict:
        return {
            "class": self.cls,
            "x0": self.witness_x0,
            "plateau": self.plateau,
            "d_bounded": self.d_bounded,
        }


def _attainment_threshold(f: DistFn, level: float) -> float | None:
    """Smallest jump abscissa past which F >= level, for representations
    that attain their plateau at finite arguments; None otherwise."""
    if isinstance(f, Plateau):
        return 0.0 if f.gamma >= level else None
    step = f.as_exact_step()
    if isinstance(f, Grid):
        for x, v in zip(f.xs, f.vs):
            if v >= level:
                return x
        return None
    if step is not None:
        for k, v in enumerate(step.levels):
            if v >= level:
                return step.breakpoints[k - 1] if k > 0 else 0.0
        return None
    return None  # Ratio never attains its plateau at finite x


def classify_set(space: PNSpace, a: SetSpec, tol: float = 1e-9) -> RadiusReport:
    """Four-way classification of the probabilistic radius R:

    * certainly bounded:   R(x0) reaches 1 at some finite x0,
    * perhaps bounded:     R < 1 at finite arguments but the plateau is 1,
    * perhaps unbounded:   the plateau lies strictly between 0 and 1,
    * certainly unbounded: the plateau vanishes (R is the minimal element).

    The witness x0 for the certain class is the jump threshold past which
    R equals 1 (the infimum of valid witnesses; the value AT the threshold
    is still the lower level by left-continuity).
    """
    radius = prob_radius(space, a)
    plateau = radius.plateau
    x0 = _attainment_threshold(radius, 1.0 - tol)
    if x0 is not None and plateau >= 1.0 - tol:
        return RadiusReport(radius, CERTAINLY_BOUNDED, x0, plateau)
    if plateau >= 1.0 - tol:
        return RadiusReport(radius, PERHAPS_BOUNDED, None, plateau)
    if plateau > tol:
        return RadiusReport(radius, PERHAPS_UNBOUNDED, None, plateau)
    return RadiusReport(radius, CERTAINLY_UNBOUNDED, None, plateau)


@dataclass(frozen=True)
class WitnessResult:
    g: DistFn | None
    verified: bool
    checked: int

    @property
    def found(self) -> bool:
        return self.g is not None


def _verification_members(space: PNSpace, a: SetSpec) -> tuple[Vector, ...]:
    if a.kind == "all_reals":
        return default_samples(space).vectors
    return a.members(space.dim)


def dbounded_witness(space: PNSpace, a: SetSpec, tol: float = 1e-9) -> WitnessResult:
    """A proper lower bound G with nu_p >= G for all members, when one
    exists.  The radius itself serves: it is a pointwise lower bound by
    construction and is proper exactly when the set is D-bounded."""
    report = classify_set(space, a, tol)
    if not report.d_bounded:
        return WitnessResult(None, False, 0)
    g = report.radius
    members = _verification_members(space, a)
    verified = all(compare_leq(g, space.norm_of(p), max(tol, 1e-9)).holds for p in members)
    return WitnessResult(g, verified, len(members))


@dataclass(frozen=True)
class SequenceBoundResult:
    status: str  # 'ok' | 'premise_norms_not_proper' | 'premise_tau_not_proper' | 'premise_not_convergent'
    h: DistFn | None
    n: int | None
    verified: bool

    @property
    def succeeded(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> dict:
        return {"status": self.status, "N": self.n, "verified": self.verified}


def convergent_set_bound(
    space: PNSpace,
    seq: SequenceSpec,
    target,
    lam: float = 0.25,
    horizon: int = DEFAULT_HORIZON,
    tol: float = DPLUS_TOL,
) -> SequenceBoundResult:
    """Build a proper lower bound H for the image of a convergent sequence:
    take G = pointwise min of the tail difference norms, then
    H = min(nu_{p_1}, ..., nu_{p_{N-1}}, tau(G, nu_target)).

    Premises checked on samples: the norm maps into the proper functions,
    tau preserves properness on sampled pairs, and the sequence enters the
    lambda-neighborhood of the target within the horizon.
    """
    target = as_vector(target, space.dim)
    terms = [seq.term(m) for m in range(1, horizon + 1)]
    sampled = list(terms) + [target] + [v for v in default_samples(space).vectors]
    norms = [space.norm_of(p) for p in sampled]
    if not all(f.in_d_plus(tol) for f in norms):
        return SequenceBoundResult("premise_norms_not_proper", None, None, False)
    for f, g in zip(norms[:4], norms[1:5]):
        if conv_plateau(space.tau, f, g) < 1.0 - tol:
            return SequenceBoundResult("premise_tau_not_proper", None, None, False)
    conv = convergence_probe(space, seq, target, (lam,), horizon)
    verdict = conv.per_lambda[0]
    if not verdict.succeeded:
        return SequenceBoundResult("premise_not_convergent", None, None, False)
    n = verdict.n
    tail = [space.norm_of(vec_sub(terms[m - 1], target)) for m in range(n, horizon + 1)]
    g = pointwise_min(tail)
    head = [space.norm_of(terms[m - 1]) for m in range(1, n)]
    h = pointwise_min(head + [space.tau(g, space.norm_of(target))])
    ok = h.in_d_plus(max(tol, 1e-6)) and all(
        compare_leq(h, space.norm_of(p), 1e-9).holds for p in terms
    )
    return SequenceBoundResult("ok" if ok else "bound_unverified", h, n, ok)


@dataclass(frozen=True)
class CompactnessResult:
    refuted: bool
    level: float
    witness: str | None
    detail: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "refuted": self.refuted,
            "level": self.level,
            "witness": self.witness,
            "detail": list(self.detail),
        }


def _default_test_sequence(a: SetSpec, dim: int) -> SequenceSpec:
    if a.kind == "sequence_image":
        return a.seq
    if a.kind in ("finite",):
        return SequenceSpec("explicit", (1.0,) + (0.0,) * (dim - 1), a.members(dim))
    if a.kind == "interval_rationals":
        # terms walk toward an interior point at geometric speed; the 3/4
        # ratio keeps all gaps far above float resolution, so terms stay
        # pairwise distinct through the default horizon
        target = a.lo + (a.hi - a.lo) / math.sqrt(2.0)
        span = (a.hi - target) / 2.0
        terms = tuple((target + span * 0.75**m,) for m in range(1, DEFAULT_HORIZON + 1))
        return SequenceSpec("explicit", (1.0,), terms)
    raise ValueError("compactness probe needs an enumerable set")


def compactness_probe(
    space: PNSpace,
    a: SetSpec,
    candidate_limits=None,
    lam: float = 0.25,
    horizon: int = DEFAULT_HORIZON,
    tail_window: int = 8,
) -> CompactnessResult:
    """Refutation-only probe for distributional compactness, relative to
    the tested level.

    A subsequence converging to q at level ``lam`` must keep hitting the
    strong lam-neighborhood of q through the horizon.  A candidate is
    ruled out when the last ``tail_window`` terms contain no such hit
    (the candidate's own index excluded); if every candidate from the set
    is ruled out, no subsequence window converges at this level, and the
    refutation is recorded together with the level.

    Candidates default to the sequence's own terms, which lie in the set
    by construction; callers add the classical limit when they know it
    belongs to the set.  The verdict is level-and-horizon-bounded: pick
    ``lam`` fine enough to separate the members' mutual gaps but coarse
    enough that the horizon can resolve it.  No refutation proves
    nothing.
    """
    seq = _default_test_sequence(a, space.dim)
    if seq.kind == "explicit":
        horizon = min(horizon, len(seq.terms))
    terms = [seq.term(m) for m in range(1, horizon + 1)]
    if candidate_limits is None:
        candidates = [(p, m) for m, p in enumerate(terms, start=1)]
    else:
        candidates = [(as_vector(q, space.dim), None) for q in candidate_limits]
        candidates += [(p, m) for m, p in enumerate(terms, start=1)]
    tail_start = max(1, horizon - tail_window + 1)
    detail = []
    refuted = True
    for q, self_index in candidates:
        hits = [
            m
            for m in range(tail_start, horizon + 1)
            if m != self_index
            and space.norm_of(vec_sub(terms[m - 1], q)).eval(lam) > 1.0 - lam
        ]
        detail.append({"candidate": list(q), "tail_hits": len(hits)})
        if hits:
            refuted = False
            break
    return CompactnessResult(refuted, lam, seq.describe() if refuted else None, tuple(detail))
