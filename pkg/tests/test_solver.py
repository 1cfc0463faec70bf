import numpy as np
import numpy.testing as npt
import pytest

from plaplace.datatypes import (
    AntiCoerciveError,
    ExponentField,
    GridFunction,
    OraclePreconditionError,
    Regime,
    SolveOutcome,
    SolverOptions,
    Trend,
    UniquenessVerdict,
    WeightField,
)
from plaplace.energy import ProblemInstance, energy, strong_residual
from plaplace.estimates import compute_constants
from plaplace.nonlinearity import CanonicalFamily, ExpressionNonlinearity, GrowthData, check_H3, classify_regime
from plaplace.solver import (
    DescentSolver,
    NewtonSolver,
    coercivity_ray_probe,
    maximize_dual,
    minimize,
    multistart,
    newton_minimize,
    tridiagonal_oracle,
    uniqueness_radius,
)
from plaplace.utils import h_norm, sup_norm

from conftest import LINEAR_SOLUTION


def _quartic_instance():
    """f = x^3 grows faster than the p = 2 diffusion: not covered."""
    f = ExpressionNonlinearity("powq(x, 3)", F="x^4 / 4", growth=GrowthData(3, 1.0, 0.0, 3.0))
    return ProblemInstance(3, 2.0, 1.0, 1.0, f)


def _random_linear_instance(rng):
    T = int(rng.integers(2, 51))
    f = CanonicalFamily(T, a=0.0, b=rng.uniform(-1.0, 1.0, T), rho=rng.uniform(0.0, 0.9))
    return ProblemInstance(T, 2.0, rng.uniform(0.5, 2.0, T + 2), rng.uniform(0.1, 1.0), f, rng.uniform(-3, 3, T))


def test_linear_minimizer(linear_instance, tight_opts):
    report = minimize(linear_instance, opts=tight_opts)
    assert report.converged
    assert report.outcome == SolveOutcome.CONVERGED
    assert report.grad_norm <= 1e-12
    npt.assert_allclose(report.minimizer.values, LINEAR_SOLUTION, atol=1e-10)
    assert report.energy == pytest.approx(-2.5, abs=1e-12)
    assert report.breakdown.total == report.energy


def test_zero_forcing_needs_no_iterations(zero_instance):
    report = minimize(zero_instance)
    assert report.converged
    assert report.iterations == 0
    assert report.minimizer == GridFunction.zeros(3)
    assert report.energy == 0.0
    assert report.curvature is None


def test_starting_at_the_minimizer(linear_instance):
    x = GridFunction(3, LINEAR_SOLUTION)
    report = minimize(linear_instance, x)
    assert report.iterations == 0
    assert report.minimizer == x


def test_minimize_rejects_mismatched_start(linear_instance):
    with pytest.raises(ValueError):
        minimize(linear_instance, GridFunction.zeros(4))


def test_nonquadratic_exponent():
    inst = ProblemInstance(5, 4.0, 1.0, 1.0, CanonicalFamily(5, a=0.0, b=1.0))
    report = minimize(inst)
    assert report.converged
    assert np.max(np.abs(strong_residual(inst, report.minimizer))) <= 1e-10
    # Symmetric forcing gives a symmetric solution
    npt.assert_allclose(report.minimizer.values, report.minimizer.values[::-1], atol=1e-8)


def test_oracle_agreement(rng):
    for _ in range(50):
        inst = _random_linear_instance(rng)
        report = minimize(inst)
        assert report.converged
        assert h_norm(report.minimizer - tridiagonal_oracle(inst)) <= 1e-8


def test_oracle_linear_example(linear_instance):
    npt.assert_allclose(tridiagonal_oracle(linear_instance).values, LINEAR_SOLUTION, atol=1e-14)


def test_doubling_h_halves_the_solution(tight_opts):
    inst = ProblemInstance(3, 2.0, 2.0, 1.0, CanonicalFamily(3, a=0.0, b=1.0))
    report = minimize(inst, opts=tight_opts)
    npt.assert_allclose(report.minimizer.values, LINEAR_SOLUTION / 2, atol=1e-10)


def test_scaling_leaves_the_minimizer_unchanged(rng):
    inst = ProblemInstance(6, rng.uniform(2.0, 3.0, 8), rng.uniform(0.5, 2.0, 8), 0.5, CanonicalFamily(6, a=0.2, b=1.0, q=1.0))
    first = minimize(inst, opts=SolverOptions(tol=1e-11))
    second = minimize(inst.scaled(4.0), opts=SolverOptions(tol=1e-11))
    assert first.converged and second.converged
    npt.assert_allclose(first.minimizer.values, second.minimizer.values, atol=1e-8)


def test_trace_is_monotone_up_to_roundoff(rng):
    inst = ProblemInstance(
        10, rng.uniform(1.5, 3.5, 12), rng.uniform(0.5, 2.0, 12), 1.0, CanonicalFamily(10, a=0.5, b=1.0, q=1.2)
    )
    report = minimize(inst)
    E = report.trace[:, 0]
    assert report.trace.shape == (report.iterations + 1, 3)
    assert np.all(np.diff(E) <= 2e-14 * (1.0 + np.abs(E[:-1])))
    assert report.trace[-1, 1] == report.grad_norm


def test_trace_can_be_dropped(linear_instance):
    report = minimize(linear_instance, opts=SolverOptions(keep_trace=False))
    assert report.trace.shape == (1, 3)
    assert report.trace[0, 0] == report.energy


def test_iteration_budget(linear_instance):
    report = minimize(linear_instance, opts=SolverOptions(max_iter=1, tol=1e-14))
    assert report.iterations == 1
    assert not report.converged
    assert report.outcome == SolveOutcome.NOT_CONVERGED


def test_newton_agrees_with_descent():
    inst = ProblemInstance(5, [2.0, 3.0, 4.0, 3.0, 2.5, 2.0, 2.0], 1.0, 1.0, CanonicalFamily(5, a=0.5, b=1.0, q=1.5))
    descent = minimize(inst, opts=SolverOptions(tol=1e-11))
    newton = newton_minimize(inst, opts=SolverOptions(tol=1e-11))
    assert descent.converged and newton.converged
    npt.assert_allclose(newton.minimizer.values, descent.minimizer.values, atol=1e-8)


def test_newton_on_the_linear_instance(linear_instance, tight_opts):
    report = minimize(linear_instance, opts=tight_opts.copy(method="newton"))
    npt.assert_allclose(report.minimizer.values, LINEAR_SOLUTION, atol=1e-12)
    assert report.iterations <= 2


def test_newton_hessian(linear_instance):
    solver = NewtonSolver(linear_instance)
    diag, off = solver.hessian_bands(np.array([1.5, 2.0, 1.5]))
    npt.assert_allclose(diag, [2.0, 2.0, 2.0])
    npt.assert_allclose(off, [-1.0, -1.0])


def test_newton_needs_p_at_least_two():
    inst = ProblemInstance(3, 1.5, 1.0, 1.0, CanonicalFamily(3))
    with pytest.raises(ValueError):
        NewtonSolver(inst)
    with pytest.raises(ValueError):
        newton_minimize(inst)


def test_dual_maximization(linear_instance, tight_opts):
    report = maximize_dual(linear_instance, opts=tight_opts)
    assert report.objective == "dual"
    assert report.converged
    npt.assert_allclose(report.minimizer.values, LINEAR_SOLUTION, atol=1e-10)
    assert report.energy == pytest.approx(2.5, abs=1e-12)
    assert report.to_dict()["objective"] == "dual"


def test_solver_rejects_unknown_objective(linear_instance):
    with pytest.raises(ValueError):
        DescentSolver(linear_instance, objective="saddle")


def test_multistart_is_unique_consistent(linear_instance, tight_opts):
    result = multistart(linear_instance, tight_opts.copy(starts=4))
    assert result.verdict == UniquenessVerdict.UNIQUE_CONSISTENT
    assert len(result.reports) == 5
    assert result.failures == []
    assert result.max_distance <= result.radius
    assert result.primary is result.reports[0]
    npt.assert_allclose(result.primary.minimizer.values, LINEAR_SOLUTION, atol=1e-10)


def test_multistart_is_seeded(borderline_instance):
    opts = SolverOptions(starts=3, seed=7)
    first = multistart(borderline_instance, opts)
    second = multistart(borderline_instance, opts)
    for a, b in zip(first.reports, second.reports):
        assert a.minimizer == b.minimizer


def test_multistart_with_threads(borderline_instance):
    opts = SolverOptions(starts=4, seed=3)
    serial = multistart(borderline_instance, opts)
    threaded = multistart(borderline_instance, opts.copy(workers=3))
    assert serial.verdict == threaded.verdict == UniquenessVerdict.UNIQUE_CONSISTENT
    for a, b in zip(serial.reports, threaded.reports):
        assert a.minimizer == b.minimizer


def test_uniqueness_radius_floor(linear_instance):
    report = minimize(linear_instance, GridFunction(3, LINEAR_SOLUTION))
    opts = SolverOptions(tol=1e-30)
    assert uniqueness_radius([report], opts, 3) >= 1e3 * np.finfo(float).eps


def test_divergence_is_reported():
    events = []
    solver = DescentSolver(_quartic_instance())
    solver.log_event = lambda level, msg: events.append((level, msg))

    with pytest.raises(AntiCoerciveError) as info:
        solver.run(GridFunction(3, [0.0, 5.0, 5.0, 5.0, 0.0]))
    assert info.value.regime == "NotCovered"
    assert info.value.iterate is not None
    assert any(level == "warning" and "NotCovered" in msg for level, msg in events)
    assert any(level == "error" for level, _ in events)


def test_multistart_degrades_on_divergence():
    result = multistart(_quartic_instance(), SolverOptions(starts=5, seed=1))
    assert result.verdict == UniquenessVerdict.DEGRADED
    assert result.anti_coercive
    # x0 = 0 is a critical point of this energy
    assert result.primary is not None and result.primary.iterations == 0
    data = result.to_dict()
    assert data["verdict"] == "degraded"
    assert data["runs"] == 6


def test_ray_probe_upward(linear_instance):
    probe = coercivity_ray_probe(linear_instance, GridFunction(3, [0.0, 1.0, 1.0, 1.0, 0.0]), 100.0)
    assert probe.trend == Trend.UPWARD
    assert probe.dominates
    assert probe.ts.shape == probe.energies.shape == probe.bounds.shape == (50,)
    npt.assert_allclose(probe.energies, probe.ts**2 - 3 * probe.ts, rtol=1e-12, atol=1e-12)


def test_ray_probe_downward():
    f = ExpressionNonlinearity("x", F="x^2 / 2", growth=GrowthData(3, 1.0, 0.0, 1.0))
    inst = ProblemInstance(3, 2.0, 1.0, 10.0, f)
    probe = coercivity_ray_probe(inst, GridFunction(3, [0.0, 1.0, 1.0, 1.0, 0.0]), 10.0, points=20)
    assert probe.trend == Trend.DOWNWARD
    assert probe.dominates
    assert probe.to_dict()["trend"] == "downward"


def test_ray_probe_without_growth():
    inst = ProblemInstance(3, 2.0, 1.0, 1.0, ExpressionNonlinearity("1 + 0 * x", F="x"))
    probe = coercivity_ray_probe(inst, GridFunction(3, [0.0, 1.0, 1.0, 1.0, 0.0]), 100.0)
    assert np.all(np.isnan(probe.bounds))
    assert probe.trend == Trend.UPWARD


def test_ray_probe_validation(linear_instance):
    with pytest.raises(ValueError):
        coercivity_ray_probe(linear_instance, GridFunction.zeros(3), 1.0)
    with pytest.raises(ValueError):
        coercivity_ray_probe(linear_instance, GridFunction(3, [0.0, 1.0, 1.0, 1.0, 0.0]), 0.0)


def test_oracle_preconditions(linear_instance):
    with pytest.raises(OraclePreconditionError):
        tridiagonal_oracle(ProblemInstance(3, 3.0, 1.0, 1.0, CanonicalFamily(3, a=0.0)))
    with pytest.raises(OraclePreconditionError):
        tridiagonal_oracle(ProblemInstance(3, 2.0, 1.0, 1.0, CanonicalFamily(3, a=1.0)))


def test_report_invariants(linear_instance):
    report = minimize(linear_instance)
    with pytest.raises(ValueError):
        type(report)(report.minimizer, report.energy, 1.0, 3, True, 1e-10)
    assert energy(linear_instance, report.minimizer).total == report.energy


def test_unique_minimizers_of_covered_instances(rng):
    counts = {Regime.STRICTLY_COERCIVE: 0, Regime.BORDERLINE_ADMISSIBLE: 0}
    for idx in range(70):
        T = int(rng.integers(2, 10))
        a = rng.uniform(0.5, 1.0, T)
        # Every seventh instance has no forcing, so H3 fails and zero is the minimizer
        b = np.zeros(T) if idx % 7 == 6 else rng.uniform(-2.0, 2.0, T)
        f = CanonicalFamily(T, a=a, b=b, q=1.0, rho=rng.uniform(0.0, 0.9))
        if idx < 20:
            # p = q + 1: keep lambda below the threshold
            p = 2.0
            lam = 0.5 * compute_constants(ExponentField(T, p), WeightField(T, 1.0), f.growth).lambda_star
            expected = Regime.BORDERLINE_ADMISSIBLE
        else:
            p = rng.uniform(2.5, 3.5, T + 2)
            lam = rng.uniform(0.1, 1.0)
            expected = Regime.STRICTLY_COERCIVE
        inst = ProblemInstance(T, p, 1.0, lam, f, rng.uniform(-3.0, 3.0, T))

        bundle = compute_constants(inst.p, inst.h, inst.growth)
        assert classify_regime(inst.p, inst.growth, inst.lam, bundle).primal == expected
        counts[expected] += 1

        result = multistart(inst, SolverOptions(starts=10, radius=10.0, seed=idx))
        assert result.verdict == UniquenessVerdict.UNIQUE_CONSISTENT
        assert result.max_distance <= 1e-7
        assert result.primary.energy <= 0.0
        if check_H3(inst.f, T, inst.u.values):
            assert sup_norm(result.primary.minimizer) > 1e-10
        else:
            assert h_norm(result.primary.minimizer) == 0.0

    assert counts == {Regime.STRICTLY_COERCIVE: 50, Regime.BORDERLINE_ADMISSIBLE: 20}


def test_dual_and_primal_share_the_critical_point(rng):
    both = 0
    for _ in range(20):
        T = int(rng.integers(2, 10))
        f = CanonicalFamily(T, a=rng.uniform(0.0, 1.0, T), b=rng.uniform(-2.0, 2.0, T), q=rng.uniform(1.0, 2.0, T))
        inst = ProblemInstance(T, rng.uniform(2.0, 3.0, T + 2), rng.uniform(0.5, 2.0, T + 2), rng.uniform(0.1, 1.0), f)
        primal = minimize(inst)
        dual = maximize_dual(inst)
        if primal.converged and dual.converged:
            both += 1
            assert h_norm(primal.minimizer - dual.minimizer) <= 1e-8
            assert dual.energy == -primal.energy
    assert both == 20
