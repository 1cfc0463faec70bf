import numpy as np
import numpy.testing as npt
import pytest
from scipy import integrate

from plaplace.datatypes import DualRegime, ExponentField, Regime, SamplingPlan, WeightField
from plaplace.estimates import compute_constants
from plaplace.nonlinearity import (
    CanonicalFamily,
    ExpressionNonlinearity,
    GrowthData,
    check_H1,
    check_H2,
    check_H3,
    check_H4,
    classify_regime,
    eval_F,
    eval_f,
)


def test_canonical_values_and_primitives():
    f = CanonicalFamily(3, a=1.0, b=2.0, q=3.0, rho=0.5)
    assert eval_f(f, 1, 2.0, 0.0) == pytest.approx(-8.0 + 2.0)
    assert eval_f(f, 2, -1.0, np.pi / 2) == pytest.approx(1.0 + 3.0)
    assert eval_F(f, 1, 2.0, 0.0) == pytest.approx(-16.0 / 4 + 4.0)
    assert eval_F(f, 3, 0.0, 1.0) == 0.0


def test_canonical_primitive_matches_quadrature():
    f = CanonicalFamily(2, a=[0.5, 1.0], b=[1.0, -1.0], q=[1.5, 2.0], rho=0.3)
    for k in (1, 2):
        for x in np.linspace(-3, 3, 7):
            expected, _ = integrate.quad(lambda t: f.f(k, t, 0.7), 0.0, x)
            assert f.F(k, x, 0.7) == pytest.approx(expected, abs=1e-7)


def test_canonical_validation():
    with pytest.raises(ValueError):
        CanonicalFamily(3, a=-1.0)
    with pytest.raises(ValueError):
        CanonicalFamily(3, q=0.5)
    with pytest.raises(ValueError):
        CanonicalFamily(3, rho=1.0)
    with pytest.raises(ValueError):
        CanonicalFamily(3).f(4, 0.0, 0.0)


def test_canonical_derivative():
    f = CanonicalFamily(2, a=2.0, q=3.0)
    npt.assert_allclose(f.derivative(np.array([1, 2]), np.array([1.0, -2.0]), 0.0), [-6.0, -24.0])
    assert not CanonicalFamily(2, a=0.0).depends_on_x


def test_growth_data():
    g = GrowthData(3, a=[1.0, 2.0, 0.5], b=[-3.0, 1.0, 0.0], q=[1.0, 2.0, 1.5])
    assert g.a_plus == 2.0
    assert g.b_plus == 3.0
    assert (g.q_minus, g.q_plus) == (1.0, 2.0)
    with pytest.raises(ValueError):
        GrowthData(3, a=-1.0, b=0.0, q=1.0)
    with pytest.raises(ValueError):
        GrowthData(3, a=1.0, b=0.0, q=0.5)


def test_H1_passes_for_canonical():
    f = CanonicalFamily(4, a=[0.0, 1.0, 2.0, 0.5], b=[1.0, -1.0, 0.0, 2.0], q=[1.0, 2.0, 3.0, 1.5], rho=0.5)
    assert check_H1(f, f.growth) == []


def test_H1_reports_violations():
    f = CanonicalFamily(3, a=1.0, b=1.0, q=2.0)
    too_small = GrowthData(3, a=0.5, b=1.0, q=2.0)
    found = check_H1(f, too_small, SamplingPlan(x_count=11, u_count=1))
    assert found
    assert all(v.lhs > v.rhs for v in found)
    assert {v.k for v in found} == {1, 2, 3}


def test_H2():
    assert check_H2(CanonicalFamily(3, a=1.0, q=2.0, rho=0.5), 3) == []
    found = check_H2(ExpressionNonlinearity("x"), 3)
    assert found
    assert all(v.x1 < v.x2 and v.f1 < v.f2 for v in found)
    assert check_H4(ExpressionNonlinearity("-x^3"), 2) == []


def test_undefined_points_are_violations():
    f = ExpressionNonlinearity("1/x")
    plan = SamplingPlan(x_count=11, u_count=1)

    found = check_H1(f, GrowthData(3, a=0.0, b=1.0, q=1.0), plan)
    assert len(found) == 3
    assert all(v.x == 0.0 and np.isnan(v.lhs) for v in found)

    found = check_H2(f, 3, plan)
    assert len(found) == 6
    assert all(0.0 in (v.x1, v.x2) for v in found)

    result = check_H3(f, 3, [0.0, 1.0])
    assert not result.holds
    assert result.failures == [(1, 0.0), (2, 0.0), (3, 0.0)]


def test_H3():
    result = check_H3(CanonicalFamily(3, b=1.0), 3, [-1.0, 0.0, 1.0])
    assert result.holds and result.witness == 1
    assert bool(result)

    result = check_H3(ExpressionNonlinearity("sin(u)"), 3, [0.0, 1.0])
    assert not result.holds
    assert result.witness is None
    assert result.failures[0] == (1, 0.0)

    result = check_H3(CanonicalFamily(3, b=[0.0, 0.0, 2.0]), 3, [0.5])
    assert result.witness == 3

    with pytest.raises(ValueError):
        check_H3(CanonicalFamily(3), 3, [])


def _classify(p, q, a, lam, T=3, h=1.0):
    p = ExponentField(T, p)
    h = WeightField(T, h)
    g = GrowthData(T, a, 1.0, q)
    return classify_regime(p, g, lam, compute_constants(p, h, g))


def test_borderline_threshold():
    result = _classify(2.0, 1.0, 1.0, 0.1)
    assert result.lambda_star == pytest.approx(1 / 6, abs=1e-15)
    assert result.primal == Regime.BORDERLINE_ADMISSIBLE
    assert result.primal.covered
    assert _classify(2.0, 1.0, 1.0, 0.2).primal == Regime.BORDERLINE_INADMISSIBLE
    assert _classify(2.0, 1.0, 1.0, 1 / 6).primal == Regime.BORDERLINE_INADMISSIBLE


def test_regimes():
    assert _classify(4.0, 1.0, 1.0, 100.0).primal == Regime.STRICTLY_COERCIVE
    result = _classify(2.0, 3.0, 1.0, 1.0)
    assert result.primal == Regime.NOT_COVERED
    assert result.dual == DualRegime.ANTI_COERCIVE
    assert _classify(3.0, 1.0, 1.0, 1.0).dual == DualRegime.NOT_COVERED

    # q- + 1 = p+ is the dual borderline
    dual = _classify(2.0, 1.0, 1.0, 1.0)
    assert dual.dual == DualRegime.BORDERLINE_ADMISSIBLE
    assert dual.dual_lambda_star < 1.0
    assert _classify(2.0, 1.0, 1.0, 0.05).dual == DualRegime.BORDERLINE_INADMISSIBLE


def test_unknown_regime_without_growth():
    p = ExponentField(3, 2.0)
    result = classify_regime(p, None, 1.0, None)
    assert result.primal == Regime.UNKNOWN
    assert result.to_dict()["primal"] == "Unknown"
