"""Triangular norms on [0, 1], their dual conorms, and law-checking probes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


def _t2(a: float, b: float) -> float:
    # closed form only valid on (0,1)^2; boundaries fixed by continuity limits
    if a <= 0.0 or b <= 0.0:
        return 0.0
    if a >= 1.0:
        return b
    if b >= 1.0:
        return a
    return 1.0 / (1.0 + math.hypot(1.0 / a - 1.0, 1.0 / b - 1.0))


def _t2_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(divide="ignore"):
        u = np.where(a > 0.0, 1.0 / np.maximum(a, 1e-300) - 1.0, np.inf)
        v = np.where(b > 0.0, 1.0 / np.maximum(b, 1e-300) - 1.0, np.inf)
    r = np.hypot(u, v)
    out = np.where(np.isinf(r), 0.0, 1.0 / (1.0 + r))
    return out


@dataclass(frozen=True)
class TNorm:
    """A commutative, associative, monotone binary operation on [0, 1]
    with identity 1.  ``fn`` is the scalar form, ``fn_np`` vectorized."""

    name: str
    fn: Callable[[float, float], float]
    fn_np: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)

    @property
    def conorm(self) -> "TConorm":
        return TConorm(self)


@dataclass(frozen=True)
class TConorm:
    """Dual of a t-norm via S(x, y) = 1 - T(1-x, 1-y); identity 0."""

    base: TNorm

    def __call__(self, x: float, y: float) -> float:
        # the identity holds definitionally; skipping the roundtrip keeps
        # it exact where 1 - (1 - y) would lose an ulp
        if x == 0.0:
            return y
        if y == 0.0:
            return x
        return 1.0 - self.base.fn(1.0 - x, 1.0 - y)

    def fn_np(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return 1.0 - self.base.fn_np(1.0 - np.asarray(x), 1.0 - np.asarray(y))

    @property
    def name(self) -> str:
        return self.base.name + "*"


TNORMS: dict[str, TNorm] = {
    "min": TNorm("min", lambda x, y: min(x, y), np.minimum),
    "prod": TNorm("prod", lambda x, y: x * y, np.multiply),
    "lukasiewicz": TNorm(
        "lukasiewicz",
        lambda x, y: max(x + y - 1.0, 0.0),
        lambda x, y: np.maximum(np.asarray(x) + np.asarray(y) - 1.0, 0.0),
    ),
    "t2": TNorm("t2", _t2, _t2_np),
}


def get_tnorm(name: str) -> TNorm:
    try:
        return TNORMS[name]
    except KeyError:
        raise ValueError(f"unknown t-norm {name!r}; choose from {sorted(TNORMS)}") from None


def _check_unit(x: float) -> float:
    if not (0.0 <= x <= 1.0):
        raise ValueError(f"argument {x!r} outside [0, 1]")
    return float(x)


def tnorm_eval(t: TNorm, x: float, y: float) -> float:
    return t(_check_unit(x), _check_unit(y))


def conorm_eval(t: TNorm, x: float, y: float) -> float:
    return t.conorm(_check_unit(x), _check_unit(y))


@dataclass(frozen=True)
class LawCheck:
    ok: bool
    violations: tuple = ()

    def describe(self) -> str:
        return "ok" if self.ok else f"{len(self.violations)} violation(s), first {self.violations[0]}"


@dataclass(frozen=True)
class TNormLawReport:
    name: str
    commutative: LawCheck
    associative: LawCheck
    identity: LawCheck
    monotone: LawCheck
    archimedean_conorm: bool
    n_samples: int
    seed: int

    @property
    def all_laws_hold(self) -> bool:
        return all(c.ok for c in (self.commutative, self.associative, self.identity, self.monotone))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "commutative": self.commutative.ok,
            "associative": self.associative.ok,
            "identity": self.identity.ok,
            "monotone": self.monotone.ok,
            "archimedean_conorm": self.archimedean_conorm,
            "violations": sum(
                len(c.violations)
                for c in (self.commutative, self.associative, self.identity, self.monotone)
            ),
        }


def law_suite(t: TNorm, n_samples: int = 1000, seed: int = 7, tol: float = 1e-12) -> TNormLawReport:
    """Check the t-norm laws on random triples and flag whether the dual
    conorm is Archimedean in the operational sense S(x, x) > x on (0, 1)."""
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    rng = np.random.default_rng(seed)
    xs = rng.random(n_samples)
    ys = rng.random(n_samples)
    zs = rng.random(n_samples)

    comm, assoc, ident, mono = [], [], [], []
    for x, y, z in zip(xs, ys, zs):
        if abs(t(x, y) - t(y, x)) > tol:
            comm.append((x, y))
        if abs(t(t(x, y), z) - t(x, t(y, z))) > tol:
            assoc.append((x, y, z))
        if abs(t(x, 1.0) - x) > tol or abs(t(1.0, x) - x) > tol:
            ident.append((x,))
        lo, hi = min(x, y), max(x, y)
        if t(lo, z) > t(hi, z) + tol:
            mono.append((lo, hi, z))

    s = t.conorm
    interior = xs * 0.98 + 0.01  # keep strictly inside (0, 1)
    archimedean = all(s(x, x) > x for x in interior)

    return TNormLawReport(
        name=t.name,
        commutative=LawCheck(not comm, tuple(comm[:3])),
        associative=LawCheck(not assoc, tuple(assoc[:3])),
        identity=LawCheck(not ident, tuple(ident[:3])),
        monotone=LawCheck(not mono, tuple(mono[:3])),
        archimedean_conorm=archimedean,
        n_samples=n_samples,
        seed=seed,
    )
