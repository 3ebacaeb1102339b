"""Order checkers on pairs with analytically known relations."""
import numpy as np
import pytest

from oddsmodels import (CapabilityError, GridSpec, ValidationError, build_grid,
                        check_order, classify_shape, make_baseline, make_ell,
                        make_omo)

E1 = make_baseline("exp", 1.0)
E2 = make_baseline("exp", 2.0)
LL = make_baseline("loglogistic")
W2 = make_baseline("weibull", 2.0, 1.0)
G4 = make_baseline("gamma", 4.0, 1.0)


def test_grid_spec_validation():
    with pytest.raises(ValidationError):
        GridSpec(count=8)
    with pytest.raises(ValidationError):
        GridSpec(p_lo=0.5, p_hi=0.1)
    with pytest.raises(ValidationError):
        GridSpec(p_lo=0.0)


def test_build_grid_dedupes_identical_images():
    xs = build_grid(E1, E1)
    assert xs.size == 2049
    assert xs[0] == pytest.approx(1.00005e-4, rel=1e-4)
    assert xs[-1] == pytest.approx(9.2103, rel=1e-4)
    assert np.array_equal(xs, build_grid(E1, E1))
    both = build_grid(E1, E2)
    assert 2049 < both.size <= 4098


def test_st_known_direction():
    v = check_order("st", E2, E1)
    assert v.status == "holds" and not v.equal
    v = check_order("st", E1, E2)
    assert v.status == "reversed"


def test_self_comparison_sets_equality():
    for rel in ("st", "hr", "rh", "lr", "c", "disp"):
        v = check_order(rel, E1, E1)
        assert v.status == "holds" and v.equal, rel
        assert v.holds and v.reversed_


def test_noncomparable_crossing_has_witness():
    G = make_omo(E1, 1.0, 2.0)
    v = check_order("st", E1, G)
    assert v.status == "crosses"
    assert v.witness is not None and np.isfinite(v.witness)


def test_antisymmetry():
    pairs = [("st", E2, E1), ("hr", E2, E1), ("lr", E2, E1),
             ("c", W2, LL), ("disp", E2, E1)]
    for rel, a, b in pairs:
        fwd = check_order(rel, a, b)
        rev = check_order(rel, b, a)
        assert fwd.status == "holds" and rev.status == "reversed", rel


def test_likelihood_ratio_implies_weaker_orders():
    # Transformed laws at theta = 1 are lr-comparable with their baseline;
    # lr must imply hr and rh, and those imply st.
    for beta in (0.25, 0.7):
        G = make_omo(E1, beta, 1.0)
        assert check_order("lr", E1, G).status == "holds"
        assert check_order("hr", E1, G).status == "holds"
        assert check_order("rh", E1, G).status == "holds"
        assert check_order("st", E1, G).status == "holds"
    for beta in (1.8, 6.0):
        G = make_omo(E1, beta, 1.0)
        assert check_order("lr", G, E1).status == "holds"
        assert check_order("hr", G, E1).status == "holds"
        assert check_order("rh", G, E1).status == "holds"
        assert check_order("st", G, E1).status == "holds"


def test_order_implication_chain_randomized():
    # Whenever lr reports holds, hr and rh must hold; hr or rh imply st.
    rng = np.random.default_rng(61)
    spec = GridSpec(count=257)
    checked = 0
    for base in (E1, W2, G4, LL):
        for _ in range(8):
            beta = float(np.exp(rng.uniform(np.log(0.15), np.log(7.0))))
            G = make_omo(base, beta, 1.0)
            pair = (base, G) if beta <= 1.0 else (G, base)
            if check_order("lr", *pair, spec).holds:
                checked += 1
                assert check_order("hr", *pair, spec).holds
                assert check_order("rh", *pair, spec).holds
                assert check_order("st", *pair, spec).holds
    assert checked >= 20


def test_convex_transform_vs_reference():
    # Increasing odds rate is equivalent to preceding the log-logistic.
    for d in (W2, G4, E1):
        assert check_order("c", d, LL).holds
        assert classify_shape(d).ior
    # Weibull shape 2 is IHR hence precedes the exponential.
    assert check_order("c", W2, E1).status == "holds"


def test_dispersive_known_direction():
    assert check_order("disp", E2, E1).status == "holds"
    assert check_order("disp", E1, E2).status == "reversed"


def test_classify_shapes():
    rep = classify_shape(W2)
    assert rep.ihr and not rep.dhr and rep.ior and not rep.dor
    rep = classify_shape(E1)
    assert rep.ihr and rep.dhr and "constant hazard" in rep.note
    assert rep.ior and not rep.dor
    assert rep.cdf_concave and not rep.cdf_convex
    rep = classify_shape(LL)
    assert rep.ior and rep.dor and "constant odds rate" in rep.note
    assert not rep.ihr and rep.dhr
    rep = classify_shape(G4)
    assert rep.ihr and not rep.dhr and rep.ior


def test_st_survival_and_odds_views_agree():
    for a, b in [(E2, E1), (E1, make_omo(E1, 0.5, 1.0)), (W2, E1)]:
        v = check_order("st", a, b)
        assert v.status in ("holds", "reversed", "crosses")
        assert "disagree" not in v.note


def test_theta_one_family_member_equals_scaled_loglogistic():
    # K(alpha, beta, 1) is the log-logistic rescaled by beta for any alpha,
    # so the convex transform comparison is an equality case.
    for alpha in (0.5, 2.0):
        for beta in (0.5, 2.0):
            v = check_order("c", LL, make_ell(alpha, beta, 1.0))
            assert v.holds, (alpha, beta, v)


def test_capability_error_for_missing_surface():
    class CdfOnly:
        def cdf(self, x):
            return E1.cdf(x)

        def sf(self, x):
            return E1.sf(x)

        def quantile(self, u):
            return E1.quantile(u)

    with pytest.raises(CapabilityError):
        check_order("lr", CdfOnly(), E1)

    class NoQuantile:
        def cdf(self, x):
            return E1.cdf(x)

    with pytest.raises(CapabilityError):
        build_grid(NoQuantile(), E1)


def test_unknown_relation_rejected():
    with pytest.raises(ValidationError):
        check_order("icx", E1, E2)


def test_verdict_carries_grid_metadata():
    v = check_order("st", E2, E1, GridSpec(count=257))
    assert v.spec.count == 257
    assert "0.0001" in v.note or "1e-04" in v.note or "quantile" in v.note
