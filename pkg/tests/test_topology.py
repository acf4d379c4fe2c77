"""Strong-topology probes: neighborhoods, convergence and Cauchy verdicts,
completeness, equivalence batteries, and the comparison constant."""

import math

import numpy as np
import pytest

from pncalc.pnspace import make_space
from pncalc.topology import (
    SequenceSpec,
    cauchy_probe,
    completeness_probe,
    convergence_probe,
    default_battery,
    default_coeff_samples,
    equivalence_probe,
    find_comparison_constant,
    linearly_independent,
    neighborhood_contains,
    parse_sequence,
)

HARMONIC = SequenceSpec("harmonic")
GEOMETRIC = SequenceSpec("geometric")
DECAY = SequenceSpec("geometric_decay")


# ------------------------------------------------------------ neighborhoods

def test_neighborhood_examples():
    e19 = make_space("E19")
    assert neighborhood_contains(e19, 0.0, 0.1, 0.5)  # eps(0.1)(0.5) = 1 > 0.5
    assert neighborhood_contains(e19, 0.7, 0.7, 0.01)  # q = p always inside
    e21 = make_space("E21")
    # plateau 1/2.1 = 0.476 < 0.75
    assert not neighborhood_contains(e21, 0.0, 0.1, 0.25)


def test_neighborhood_rejects_bad_level():
    with pytest.raises(ValueError):
        neighborhood_contains(make_space("E19"), 0.0, 0.1, 0.0)
    with pytest.raises(ValueError):
        neighborhood_contains(make_space("E19"), 0.0, 0.1, 1.0)


def test_neighborhood_monotone_in_level():
    space = make_space("E19b", a=1.0)
    rng = np.random.default_rng(8)
    for _ in range(50):
        q = float(rng.uniform(-2.0, 2.0))
        l1, l2 = sorted(rng.uniform(0.01, 0.99, size=2))
        if neighborhood_contains(space, 0.0, q, l1):
            assert neighborhood_contains(space, 0.0, q, l2)


# ------------------------------------------------------------ convergence

def test_harmonic_convergence_index_in_step_space():
    rep = convergence_probe(make_space("E19"), HARMONIC, 0.0, (0.25,), 64)
    assert rep.per_lambda[0].n == 5  # first m with 1/m < 0.25


def test_harmonic_diverges_in_plateau_space():
    rep = convergence_probe(make_space("E21"), HARMONIC, 0.0, (0.25,), 64)
    v = rep.per_lambda[0]
    assert v.n is None
    assert v.worst_margin < 0.0  # fails at every index


def test_constant_sequence_converges_immediately():
    const = SequenceSpec("explicit", terms=((0.7,),) * 6)
    for family in ("E19", "E12", "E25"):
        rep = convergence_probe(make_space(family), const, 0.7, (0.25, 0.1), 10)
        assert all(v.n == 1 for v in rep.per_lambda)


def test_convergence_index_shrinks_as_level_grows():
    rep = convergence_probe(make_space("E19"), HARMONIC, 0.0, (0.05, 0.1, 0.25, 0.5), 64)
    ns = [v.n for v in rep.per_lambda]
    assert all(n is not None for n in ns)
    assert ns == sorted(ns, reverse=True)


def test_convergence_rejects_bad_inputs():
    with pytest.raises(ValueError):
        convergence_probe(make_space("E19"), HARMONIC, 0.0, (), 64)
    with pytest.raises(ValueError):
        convergence_probe(make_space("E19"), HARMONIC, 0.0, (1.5,), 64)


# ------------------------------------------------------------ cauchy

def test_harmonic_is_cauchy_in_step_space():
    rep = cauchy_probe(make_space("E19"), HARMONIC, (0.25, 0.1), 64)
    assert rep.converges
    # tail differences |1/n - 1/m| < lambda need roughly 1/lambda terms
    assert rep.verdict_at(0.25).n <= 8


def test_geometric_escape_is_not_cauchy():
    rep = cauchy_probe(make_space("E9", a=1.0), GEOMETRIC, (0.25,), 64)
    v = rep.per_lambda[0]
    assert v.n is None  # thresholds |d|/(1+|d|) >= 0.25 kill every tail
    assert not rep.converges


def test_constant_sequence_is_cauchy_with_n_one():
    const = SequenceSpec("explicit", terms=((1.0,),) * 8)
    rep = cauchy_probe(make_space("E19"), const, (0.25,), 8)
    assert rep.verdict_at(0.25).n == 1


def test_convergence_implies_cauchy_on_battery():
    # empirical form: success at level lambda/2 toward a target implies the
    # pairwise check at lambda, via the triangle axiom of the space
    cases = [
        (make_space("E19"), HARMONIC, 0.0),
        (make_space("E19b", a=1.0), HARMONIC, 0.0),
        (make_space("E12"), DECAY, 0.0),
        (make_space("E25"), DECAY, 0.0),
    ]
    for space, seq, target in cases:
        for lam in (0.5, 0.25):
            conv = convergence_probe(space, seq, target, (lam / 2.0,), 64)
            if conv.converges:
                assert cauchy_probe(space, seq, (lam,), 64).converges, (space.family, lam)


# ------------------------------------------------------------ completeness

def test_completeness_statuses():
    r = completeness_probe(make_space("E19"), HARMONIC)
    assert r.status == "cauchy_and_converges"
    assert r.limit == (0.0,)

    r = completeness_probe(make_space("E9", a=1.0), GEOMETRIC, (0.25,))
    assert r.status == "not_cauchy"

    r = completeness_probe(make_space("E12"), DECAY)
    assert r.status == "cauchy_and_converges"
    assert r.limit == (0.0,)


def test_completeness_no_limit_for_unrecognized_explicit():
    # an explicit non-constant list has no recognizable classical limit
    terms = tuple((1.0 / m,) for m in range(1, 33))
    seq = SequenceSpec("explicit", terms=terms)
    r = completeness_probe(make_space("E19"), seq, (0.5,), 32)
    assert r.status == "cauchy_no_limit_detected"


def test_harmonic_not_cauchy_in_plateau_space():
    r = completeness_probe(make_space("E21"), HARMONIC, (0.25,))
    assert r.status == "not_cauchy"


# ------------------------------------------------------------ equivalence

def test_equivalent_step_families():
    rep = equivalence_probe(make_space("E19"), make_space("E19b", a=1.0))
    assert rep.equivalent_on_battery
    assert rep.witness is None


def test_plateau_vs_step_families_refuted_by_harmonic():
    rep = equivalence_probe(
        make_space("E21"), make_space("E19"), battery=[(HARMONIC, 0.0)]
    )
    assert not rep.equivalent_on_battery
    assert rep.witness == "harmonic"


def test_equivalence_reflexive_and_symmetric():
    a, b = make_space("E19"), make_space("E21")
    assert equivalence_probe(a, a).equivalent_on_battery
    assert (
        equivalence_probe(a, b).equivalent_on_battery
        == equivalence_probe(b, a).equivalent_on_battery
    )


def test_equivalence_requires_matching_dimension():
    with pytest.raises(ValueError):
        equivalence_probe(make_space("E19", dim=2), make_space("E19"))


# ------------------------------------------------------------ comparison constant

def test_comparison_constant_l2_sphere_minimum():
    space = make_space("E19", dim=2, base_norm="l2")
    rep = find_comparison_constant(space, [(1.0, 0.0), (0.0, 1.0)], make_space("E19"))
    assert rep.found
    assert rep.c == pytest.approx(1.0 / math.sqrt(2.0), abs=0.01)


def test_comparison_constant_linf_sphere_minimum():
    space = make_space("E19", dim=2, base_norm="linf")
    rep = find_comparison_constant(space, [(1.0, 0.0), (0.0, 1.0)], make_space("E19"))
    assert rep.c == pytest.approx(0.5, abs=0.01)


def test_comparison_constant_dim_one_is_identity():
    rep = find_comparison_constant(make_space("E19"), [(1.0,)], make_space("E19"))
    assert rep.c == pytest.approx(1.0, abs=1e-6)


def test_comparison_constant_scales_with_field_threshold():
    # doubling the field norm's a parameter reshapes feasibility
    # consistently: eps(c/(1+c)) ordering in c is preserved
    space = make_space("E19", dim=2, base_norm="l2")
    basis = [(1.0, 0.0), (0.0, 1.0)]
    c_plain = find_comparison_constant(space, basis, make_space("E19")).c
    scaled = make_space("E19b", a=1.0)  # field thresholds c/(1+c) < target
    c_soft = find_comparison_constant(space, basis, scaled).c
    # the softened field norm admits a larger constant since its
    # thresholds saturate below 1 while the sphere minimum is ~0.707
    assert c_soft > c_plain


def test_comparison_constant_scales_linearly_with_basis():
    # doubling the basis doubles every left side's threshold, so the
    # largest feasible constant doubles too
    field = make_space("E19")
    space = make_space("E19", dim=2, base_norm="l2")
    c1 = find_comparison_constant(space, [(1.0, 0.0), (0.0, 1.0)], field).c
    c2 = find_comparison_constant(space, [(2.0, 0.0), (0.0, 2.0)], field).c
    assert c2 == pytest.approx(2.0 * c1, rel=1e-6)


def test_comparison_constant_none_when_field_threshold_floors():
    # a field norm whose thresholds start above the sphere minimum admits
    # no positive constant; the search reports failure, not a refutation
    field = make_space("E27", a=1.0)  # thresholds (1 + |c|)/1 >= 1
    space = make_space("E19", dim=2, base_norm="l2")
    rep = find_comparison_constant(space, [(1.0, 0.0), (0.0, 1.0)], field)
    assert not rep.found
    assert rep.c is None


def test_dependent_basis_rejected():
    with pytest.raises(ValueError):
        find_comparison_constant(
            make_space("E19", dim=2), [(1.0, 1.0), (2.0, 2.0)], make_space("E19")
        )


def test_linear_independence_checker():
    assert linearly_independent([(1.0, 0.0), (0.0, 1.0)])
    assert not linearly_independent([(1.0, 1.0), (2.0, 2.0)])
    assert not linearly_independent([(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
    assert linearly_independent([(1e-6, 0.0), (0.0, 1e-6)])


def test_coeff_samples_lie_on_l1_sphere():
    for n in (1, 2, 3):
        for beta in default_coeff_samples(n, count=50):
            assert sum(abs(b) for b in beta) == pytest.approx(1.0, abs=1e-9)


# ------------------------------------------------------------ sequences

def test_sequence_generators():
    assert HARMONIC.term(4) == (0.25,)
    assert GEOMETRIC.term(3) == (8.0,)
    assert DECAY.term(3) == (0.125,)
    assert HARMONIC.classical_limit() == (0.0,)
    assert GEOMETRIC.classical_limit() is None


def test_parse_sequence():
    assert parse_sequence("harmonic").kind == "harmonic"
    s = parse_sequence("explicit:1;0.5;0.25")
    assert s.terms == ((1.0,), (0.5,), (0.25,))
    s2 = parse_sequence("explicit:1,0;0,1", dim=2)
    assert s2.terms == ((1.0, 0.0), (0.0, 1.0))
    with pytest.raises(ValueError):
        parse_sequence("fibonacci")
