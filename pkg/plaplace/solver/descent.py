import logging
from collections import deque

import numpy as np

from plaplace.constants import (
    BB_STEP_BOUNDS,
    DIVERGENCE_FLOOR,
    ITERATE_CEILING,
    MAX_BACKTRACKS,
    ROUNDOFF_FLOOR,
)
from plaplace.datatypes import AntiCoerciveError, GridFunction, InputShapeError, SolverOptions
from plaplace.energy import ProblemInstance, energy, gradient
from plaplace.estimates import compute_constants
from plaplace.nonlinearity import classify_regime
from plaplace.utils import emit_signal, h_norm

from .report import SolveReport

logger = logging.getLogger(__name__)

# BB steps kept for the curvature estimate
LATE_STEPS = 10


class DescentSolver:
    """
    Gradient descent on J_u with Armijo backtracking and Barzilai-Borwein
    step proposals. Works on the vector of interior values; the boundary
    zeros are only added back for evaluation and reporting.

    With objective="dual" the same iteration maximizes J^1_u = -J_u.
    """

    def __init__(self, inst: ProblemInstance, opts: SolverOptions = None, objective: str = "primal"):
        # Signals
        self.log_event = None

        if objective not in ("primal", "dual"):
            raise ValueError(f"objective must be 'primal' or 'dual' but got {objective!r}")
        self.inst = inst
        self.opts = opts or SolverOptions()
        self.objective = objective

    def check_regime(self):
        g = self.inst.growth
        if g is None:
            emit_signal(self.log_event, "debug", "No growth data declared; regime unknown")
            return None

        bundle = compute_constants(self.inst.p, self.inst.h, g)
        regime = classify_regime(self.inst.p, g, self.inst.lam, bundle)
        if self.objective == "primal" and not regime.primal.covered:
            emit_signal(
                self.log_event,
                "warning",
                f"Regime {regime.primal.label} is not covered by the existence theorem; watching for divergence",
            )
        elif self.objective == "dual" and not regime.dual.covered:
            emit_signal(
                self.log_event,
                "warning",
                f"Regime {regime.dual.label} is not covered by the dual theorem; watching for divergence",
            )
        return regime

    def _energy(self, z):
        with np.errstate(over="ignore", invalid="ignore"):
            return energy(self.inst, GridFunction.from_interior(z)).total

    def _gradient(self, z):
        with np.errstate(over="ignore", invalid="ignore"):
            return gradient(self.inst, GridFunction.from_interior(z))

    def _direction(self, z, g):
        return -g

    def _line_search(self, z, E, g, d, step):
        slope = float(np.dot(g, d))
        floor = ROUNDOFF_FLOOR * (1.0 + abs(E))

        t = step
        for _ in range(MAX_BACKTRACKS):
            z_new = z + t * d
            E_new = self._energy(z_new)
            if E_new < DIVERGENCE_FLOOR:
                raise self._divergence(z_new, E_new, f"energy {E_new:.3e} below {DIVERGENCE_FLOOR:.0e}")

            if E_new <= E + self.opts.armijo * t * slope:
                return t, z_new, E_new, self._gradient(z_new)

            # Sufficient decrease is below roundoff; accept if the gradient shrinks
            if abs(E_new - E) <= floor:
                g_new = self._gradient(z_new)
                if np.linalg.norm(g_new) < np.linalg.norm(g):
                    return t, z_new, E_new, g_new

            t *= self.opts.backtrack
        return None

    def _next_step(self, s, y, t, bb_steps):
        sy = float(np.dot(s, y))
        if sy > 0:
            bb = float(np.clip(np.dot(s, s) / sy, *BB_STEP_BOUNDS))
            bb_steps.append(bb)
            return bb
        return min(t / self.opts.backtrack, BB_STEP_BOUNDS[1])

    def _divergence(self, z, E, reason):
        self._iterate = z
        regime = getattr(self, "_regime", None)
        label = None
        if regime is not None:
            label = regime.primal.label if self.objective == "primal" else regime.dual.label
        message = f"Anti-coercive behaviour detected after {self._iterations} iterations: {reason}"
        if label is not None:
            message += f" (regime {label})"
        emit_signal(self.log_event, "error", message)
        return AntiCoerciveError(
            message,
            iterate=GridFunction.from_interior(z),
            energy=E,
            iteration=self._iterations,
            regime=label,
        )

    def run(self, x0: GridFunction = None) -> SolveReport:
        inst, opts = self.inst, self.opts
        if x0 is None:
            x0 = GridFunction.zeros(inst.T)
        if x0.T != inst.T:
            raise InputShapeError(f"x0 has T={x0.T} but the instance has T={inst.T}")

        self._regime = self.check_regime()
        self._iterations = 0

        z = x0.interior.copy()
        E = self._energy(z)
        g = self._gradient(z)
        if not (np.isfinite(E) and np.all(np.isfinite(g))):
            raise ValueError("Energy or gradient is not finite at the starting point")
        gnorm = float(np.max(np.abs(g)))

        trace = [(E, gnorm, 0.0)]
        bb_steps = deque(maxlen=LATE_STEPS)
        step = opts.initial_step
        converged = gnorm <= opts.tol

        while not converged and self._iterations < opts.max_iter:
            accepted = self._line_search(z, E, g, self._direction(z, g), step)
            if accepted is None:
                emit_signal(
                    self.log_event,
                    "debug",
                    f"Line search stalled at iteration {self._iterations} (gradient norm {gnorm:.3e})",
                )
                break

            t, z_new, E_new, g_new = accepted
            self._iterations += 1
            norm = h_norm(GridFunction.from_interior(z_new))
            if norm > ITERATE_CEILING:
                raise self._divergence(z_new, E_new, f"h_norm {norm:.3e} above {ITERATE_CEILING:.0e}")

            step = self._next_step(z_new - z, g_new - g, t, bb_steps)
            z, E, g = z_new, E_new, g_new
            gnorm = float(np.max(np.abs(g)))
            if opts.keep_trace:
                trace.append((E, gnorm, t))
            converged = gnorm <= opts.tol

        if not opts.keep_trace:
            trace = [(E, gnorm, trace[-1][2])]

        if converged:
            emit_signal(self.log_event, "debug", f"Converged in {self._iterations} iterations (energy {E:.6e})")
        else:
            emit_signal(
                self.log_event,
                "warning",
                f"Stopped after {self._iterations} iterations with gradient norm {gnorm:.3e} > {opts.tol:.1e}",
            )

        x = GridFunction.from_interior(z)
        breakdown = energy(inst, x)
        value = breakdown.total if self.objective == "primal" else -breakdown.total
        return SolveReport(
            minimizer=x,
            energy=value,
            grad_norm=gnorm,
            iterations=self._iterations,
            converged=converged,
            tol=opts.tol,
            trace=np.array(trace, dtype=float),
            bb_steps=bb_steps,
            objective=self.objective,
            breakdown=breakdown,
        )
