import numpy as np

from plaplace.datatypes import AntiCoerciveError, GridFunction, SolveOutcome, UniquenessVerdict
from plaplace.utils import TRACE_COLUMNS


class SolveReport:
    """Result of one descent run. `energy` is the value of the objective that was optimized."""

    def __init__(
        self,
        minimizer: GridFunction,
        energy: float,
        grad_norm: float,
        iterations: int,
        converged: bool,
        tol: float,
        trace=None,
        bb_steps=(),
        objective: str = "primal",
        breakdown=None,
    ):
        self.minimizer = minimizer
        self.energy = float(energy)
        self.grad_norm = float(grad_norm)
        self.iterations = int(iterations)
        self.converged = bool(converged)
        self.tol = float(tol)
        self.trace = np.empty((0, len(TRACE_COLUMNS))) if trace is None else np.asarray(trace)
        # Accepted Barzilai-Borwein steps of the last iterations
        self.bb_steps = tuple(float(s) for s in bb_steps)
        self.objective = objective
        self.breakdown = breakdown

        if self.converged and not self.grad_norm <= self.tol:
            raise ValueError("A converged report must satisfy the gradient tolerance")

    @property
    def outcome(self):
        return SolveOutcome.CONVERGED if self.converged else SolveOutcome.NOT_CONVERGED

    @property
    def curvature(self):
        """Crude local curvature 1 / (largest late BB step); None without BB steps."""
        if not self.bb_steps:
            return None
        return 1.0 / max(self.bb_steps)

    def to_dict(self):
        data = {
            "objective": self.objective,
            "minimizer": self.minimizer.values.tolist(),
            "energy": self.energy,
            "grad_norm": self.grad_norm,
            "iterations": self.iterations,
            "converged": self.converged,
        }
        if self.breakdown is not None:
            data["breakdown"] = self.breakdown.to_dict()
        return data

    def __repr__(self):
        return (
            f"SolveReport(objective={self.objective!r}, energy={self.energy!r}, "
            f"grad_norm={self.grad_norm!r}, iterations={self.iterations}, converged={self.converged})"
        )


class UniquenessReport:
    def __init__(self, reports, failures, max_distance: float, radius: float, verdict: UniquenessVerdict, indices=None):
        self.reports = list(reports)
        # Start index of each report; start 0 is x0 = 0
        self.indices = list(range(len(self.reports))) if indices is None else list(indices)
        # (start index, exception) for members that raised
        self.failures = list(failures)
        self.max_distance = float(max_distance)
        self.radius = float(radius)
        self.verdict = verdict

    @property
    def primary(self):
        """The run from x0 = 0, or None if it raised."""
        for idx, report in zip(self.indices, self.reports):
            if idx == 0:
                return report
        return None

    @property
    def anti_coercive(self):
        return any(isinstance(e, AntiCoerciveError) for _, e in self.failures)

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "runs": len(self.reports) + len(self.failures),
            "failures": [{"start": i, "error": str(e)} for i, e in self.failures],
            "max_distance": self.max_distance,
            "radius": self.radius,
        }
