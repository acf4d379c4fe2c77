"""Built-in space families: norm values, axiom suite, scaling identity,
scalar monotonicity, vanishing at infinity, and the small-scalar probe."""

import math

import pytest

from pncalc.distfn import EPS0, Plateau, Ratio, compare_leq, distfn_equal, eps
from pncalc.pnspace import (
    SampleSpec,
    axiom_suite,
    default_samples,
    lg_probe,
    make_space,
    parse_space,
    random_scalar_triples,
    scalar_monotonicity_check,
    serstnev_check,
    small_scalar_delta_probe,
)
from pncalc.triangle import parse_triangle

ALL_FAMILIES = ("E9", "E12", "E19", "E19b", "E21", "E25", "E27")


# ------------------------------------------------------------ norm values

def test_norm_closed_forms():
    assert make_space("E9", a=1.0).norm_of(1.0) == eps(0.5)
    assert make_space("E25").norm_of(4.0) == Ratio(2.0)  # |4|^(1/2) = 2
    assert make_space("E25").norm_of(4.0).eval(2.0) == pytest.approx(0.5)
    assert make_space("E12").norm_of(1.0) == Plateau(math.exp(-1.0))
    assert make_space("E21").norm_of(1.0) == Plateau(1.0 / 3.0)
    assert make_space("E27", a=2.0).norm_of(4.0) == eps(3.0)  # (2 + 4) / 2
    assert make_space("E19", dim=2).norm_of((3.0, 4.0)) == eps(5.0)
    assert make_space("E19", dim=2, base_norm="l1").norm_of((3.0, 4.0)) == eps(7.0)
    assert make_space("E19b", a=1.0).norm_of(1.0) == eps(0.5)


def test_zero_vector_maps_to_maximal_element():
    for family in ALL_FAMILIES:
        assert make_space(family).norm_of(0.0) == EPS0


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        make_space("E19", dim=2).norm_of(1.0)
    with pytest.raises(ValueError):
        make_space("E12", dim=3)


def test_parse_space_round_trip():
    s = parse_space("E19b:a=2,l1,dim=3")
    assert (s.family, s.a, s.base_norm, s.dim) == ("E19b", 2.0, "l1", 3)
    with pytest.raises(ValueError):
        parse_space("E19:bogus")
    with pytest.raises(ValueError):
        parse_space("E99")


def test_negation_symmetry_exact():
    for family in ALL_FAMILIES:
        space = make_space(family)
        for p in (0.5, 1.0, 2.0, 8.0):
            assert space.norm_of(p) == space.norm_of(-p)


def test_norm_image_properness_split():
    # proper-valued families versus plateau families with mass at infinity
    for family in ("E9", "E19", "E19b", "E25", "E27"):
        assert make_space(family).norm_of(2.0).in_d_plus()
    for family in ("E12", "E21"):
        assert not make_space(family).norm_of(2.0).in_d_plus()


def test_monotone_in_magnitude():
    for family in ALL_FAMILIES:
        space = make_space(family)
        for lo, hi in ((0.5, 1.0), (1.0, 4.0), (2.0, 8.0)):
            assert compare_leq(space.norm_of(hi), space.norm_of(lo), 1e-12).holds


# ------------------------------------------------------------ axiom suite

def test_axioms_hold_for_all_builtin_pairings():
    for family in ALL_FAMILIES:
        rep = axiom_suite(make_space(family))
        assert rep.all_hold, (family, rep.to_dict())
        assert rep.tau_le_tau_star.ok


def test_e12_axioms_with_product_pairing():
    space = make_space("E12", tau="sup:prod", tau_star="inf:prod")
    rep = axiom_suite(space, tol=1e-9)
    assert rep.all_hold


def test_e19_with_max_tau_fails_n3():
    # tau = pointwise min makes N3 demand eps(2) >= eps(1), which flips
    space = make_space("E19", tau="max", tau_star="max")
    rep = axiom_suite(space)
    assert not rep.n3.ok
    witnesses = [(p, q) for p, q, _ in rep.n3.violations]
    assert any(p == q and p != (0.0,) for p, q in witnesses)


def test_axiom_suite_rejects_empty_battery():
    with pytest.raises(ValueError):
        axiom_suite(make_space("E12"), SampleSpec(vectors=()))


# ------------------------------------------------------------ scaling identity

def test_scaling_identity_holds_for_homogeneous_steps():
    assert serstnev_check(make_space("E19")).holds
    assert serstnev_check(make_space("E19", dim=2)).holds


def test_scaling_identity_violated_for_e9_with_expected_witness():
    rep = serstnev_check(make_space("E9", a=1.0))
    assert not rep.holds
    hit = next(v for v in rep.violations if v.alpha == 2.0 and v.p == (1.0,))
    assert hit.lhs == eps(2.0 / 3.0)  # norm of 2: threshold 2/(1+2)
    assert hit.rhs == eps(1.0)  # argument-scaled norm of 1: threshold 2*0.5
    assert 2.0 / 3.0 < hit.x <= 1.0


def test_scaling_identity_violated_for_e12():
    rep = serstnev_check(make_space("E12"))
    assert not rep.holds
    w = rep.witness
    # plateaus are scale-invariant in the argument, so any |alpha| != 1 differs
    assert abs(w.alpha) != 1.0


# ------------------------------------------------------------ scalar order

def test_scalar_monotonicity_examples():
    e9 = make_space("E9", a=1.0)
    assert compare_leq(e9.norm_of(2.0), e9.norm_of(1.0), 0.0).holds  # eps(2/3) <= eps(1/2)
    rep = scalar_monotonicity_check(e9, trials=[(1.0, 2.0, (1.0,))])
    assert rep.ok
    rep = scalar_monotonicity_check(e9, trials=[(2.0, 2.0, (1.0,))])  # equal scalars
    assert rep.ok
    e12 = make_space("E12")
    rep = scalar_monotonicity_check(e12, trials=[(0.5, 3.0, (1.0,)), (-1.0, 2.0, (0.5,))])
    assert rep.ok


def test_scalar_monotonicity_random_battery():
    for k, family in enumerate(ALL_FAMILIES):
        space = make_space(family)
        rep = scalar_monotonicity_check(space, trials=random_scalar_triples(40, seed=k), tol=1e-9)
        assert rep.ok, (family, rep.violations)


# ------------------------------------------------------------ vanishing probe

def test_vanishing_at_infinity_contrast():
    assert lg_probe(make_space("E12")).has_property
    assert lg_probe(make_space("E25")).has_property
    rep = lg_probe(make_space("E9", a=1.0))
    assert not rep.has_property
    # thresholds |p|/(1+|p|) stay below 1, so values at x=2 stick at 1
    assert dict(rep.failures)[2.0] == pytest.approx(1.0)
    assert not lg_probe(make_space("E19b", a=1.0)).has_property


def test_vanishing_for_escaping_thresholds():
    # eps(threshold)(x) drops to 0 once the threshold passes x, and the
    # plateau 1/(|p|+2) falls to 0, so these families all vanish
    assert lg_probe(make_space("E19")).has_property
    assert lg_probe(make_space("E21")).has_property
    assert lg_probe(make_space("E27", a=1.0)).has_property


# ------------------------------------------------------------ delta probe

def test_delta_probe_on_step_family():
    rep = small_scalar_delta_probe(make_space("E19"), 1.0, 0.5)
    assert rep.found
    assert rep.delta == pytest.approx(0.5, abs=1e-6)


def test_delta_probe_on_plateau_family_matches_closed_form():
    # exp(-sqrt(a)) > 0.5 iff a < (ln 2)^2
    rep = small_scalar_delta_probe(make_space("E12"), 1.0, 0.5)
    assert rep.found
    assert rep.delta == pytest.approx(math.log(2.0) ** 2, abs=1e-6)


def test_delta_probe_none_when_plateau_capped():
    # 1/(|alpha| + 2) <= 1/2 < 0.75 for every alpha, so no delta exists
    rep = small_scalar_delta_probe(make_space("E21"), 1.0, 0.25)
    assert not rep.found
    assert rep.delta is None


def test_strong_tvs_probe_separates_families():
    from pncalc.pnspace import strong_tvs_probe

    # Archimedean-paired families admit thresholds at every sampled (p, h)
    for family in ("E19", "E12", "E25"):
        assert strong_tvs_probe(make_space(family)).ok, family
    # the plateau family capped at 1/2 fails once 1 - h exceeds the cap
    rep = strong_tvs_probe(make_space("E21"))
    assert not rep.ok
    assert rep.violations


def test_delta_probe_validates_h():
    with pytest.raises(ValueError):
        small_scalar_delta_probe(make_space("E19"), 1.0, 0.0)
    with pytest.raises(ValueError):
        small_scalar_delta_probe(make_space("E19"), 1.0, 1.0)


def test_ratio_family_convex_split_is_sharp():
    # under the dual-of-t2 inf-convolution, splitting p into lam*p and
    # (1-lam)*p reproduces nu_p exactly: the optimizer sits at s = lam*x,
    # which the candidate fractions contain for dyadic lam
    space = make_space("E25")
    for p in (1.0, 4.0):
        fp = space.norm_of(p)
        for lam in (0.25, 0.5, 0.75):
            rhs = space.tau_star(space.norm_of(lam * p), space.norm_of((1.0 - lam) * p))
            for x in (0.5, 1.0, 2.0, 8.0):
                assert rhs.eval(x) == pytest.approx(fp.eval(x), abs=1e-9), (p, lam, x)


# ------------------------------------------------------------ strengthened split

def test_scaling_families_satisfy_strengthened_split():
    # spaces passing the scaling identity also glue back exactly under
    # the sup-convolution with min
    tau_m = parse_triangle("sup:min")
    for spec in ("E19", "E19:l1,dim=2"):
        space = parse_space(spec)
        for p in default_samples(space).vectors:
            fp = space.norm_of(p)
            for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
                lhs = tau_m(
                    space.norm_of(tuple(lam * c for c in p)),
                    space.norm_of(tuple((1.0 - lam) * c for c in p)),
                )
                assert distfn_equal(lhs, fp, 1e-12), (spec, p, lam)
