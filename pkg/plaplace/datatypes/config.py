import json

import numpy as np

from plaplace.constants import BASE_LAB_CONFIG, BASE_SAMPLING_PLAN, BASE_SOLVER_CONFIG


class Configuration:
    def __init__(self):
        pass

    def set_param(self, param, value):
        current = getattr(self, param, None)
        if current is not None and not isinstance(current, bool):
            setattr(self, param, type(current)(value))
        elif isinstance(current, bool):
            setattr(self, param, _as_bool(value))
        else:
            setattr(self, param, value)
        self.validate()

    def get_param(self, param, default_value=None):
        try:
            value = getattr(self, param)
        except AttributeError:
            value = default_value
        return value

    def validate(self):
        pass

    def to_dict(self):
        """Convert object to dictionary for JSON serialization"""
        return {
            key: value
            for key, value in self.__dict__.items()
            if not key.startswith("_") and not callable(value)
        }

    @classmethod
    def from_dict(cls, data):
        """Create a configuration from a dictionary, rejecting unknown keys"""
        data = dict(data or {})
        known = cls().to_dict()
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise KeyError(f"Unknown {cls.__name__} keys: {', '.join(unknown)}")
        config = cls()
        for key, value in data.items():
            config.set_param(key, value)
        return config

    def to_json(self):
        """Serialize to JSON string"""
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, json_str):
        """Deserialize from JSON string"""
        return cls.from_dict(json.loads(json_str))

    def __repr__(self):
        params = ", ".join(f"{k}={v!r}" for k, v in self.to_dict().items())
        return f"{self.__class__.__name__}({params})"


def _as_bool(value):
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)


class SolverOptions(Configuration):
    """Descent, multistart and Newton settings shared by every solve."""

    def __init__(
        self,
        tol: float = BASE_SOLVER_CONFIG["tol"],
        max_iter: int = BASE_SOLVER_CONFIG["max_iter"],
        initial_step: float = BASE_SOLVER_CONFIG["initial_step"],
        backtrack: float = BASE_SOLVER_CONFIG["backtrack"],
        armijo: float = BASE_SOLVER_CONFIG["armijo"],
        seed: int = BASE_SOLVER_CONFIG["seed"],
        starts: int = BASE_SOLVER_CONFIG["starts"],
        radius: float = BASE_SOLVER_CONFIG["radius"],
        method: str = BASE_SOLVER_CONFIG["method"],
        keep_trace: bool = BASE_SOLVER_CONFIG["keep_trace"],
        workers: int = BASE_SOLVER_CONFIG["workers"],
    ):
        super().__init__()
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.initial_step = float(initial_step)
        self.backtrack = float(backtrack)
        self.armijo = float(armijo)
        self.seed = int(seed)
        self.starts = int(starts)
        self.radius = float(radius)
        self.method = str(method)
        self.keep_trace = bool(keep_trace)
        self.workers = int(workers)
        self.validate()

    def validate(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive but got {self.tol}")
        if self.max_iter < 0:
            raise ValueError(f"max_iter must be nonnegative but got {self.max_iter}")
        if not self.initial_step > 0:
            raise ValueError(f"initial_step must be positive but got {self.initial_step}")
        if not 0 < self.backtrack < 1:
            raise ValueError(f"backtrack must lie in (0, 1) but got {self.backtrack}")
        if not 0 < self.armijo < 0.5:
            raise ValueError(f"armijo must lie in (0, 0.5) but got {self.armijo}")
        if self.starts < 1:
            raise ValueError(f"starts must be at least 1 but got {self.starts}")
        if not self.radius >= 0:
            raise ValueError(f"radius must be nonnegative but got {self.radius}")
        if self.method not in ("descent", "newton"):
            raise ValueError(f"method must be 'descent' or 'newton' but got {self.method!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1 but got {self.workers}")

    def copy(self, **overrides):
        data = self.to_dict()
        data.update(overrides)
        return SolverOptions(**data)


class SamplingPlan(Configuration):
    """Ranges and counts for the sampled hypothesis checks."""

    def __init__(
        self,
        x_radius: float = BASE_SAMPLING_PLAN["x_radius"],
        x_count: int = BASE_SAMPLING_PLAN["x_count"],
        u_radius: float = BASE_SAMPLING_PLAN["u_radius"],
        u_count: int = BASE_SAMPLING_PLAN["u_count"],
    ):
        super().__init__()
        self.x_radius = float(x_radius)
        self.x_count = int(x_count)
        self.u_radius = float(u_radius)
        self.u_count = int(u_count)
        self.validate()

    def validate(self):
        if not self.x_radius > 0:
            raise ValueError(f"x_radius must be positive but got {self.x_radius}")
        if self.x_count < 2:
            raise ValueError(f"x_count must be at least 2 but got {self.x_count}")
        if not self.u_radius >= 0:
            raise ValueError(f"u_radius must be nonnegative but got {self.u_radius}")
        if self.u_count < 1:
            raise ValueError(f"u_count must be at least 1 but got {self.u_count}")

    def x_samples(self):
        return np.linspace(-self.x_radius, self.x_radius, self.x_count)

    def u_samples(self):
        if self.u_count == 1:
            return np.zeros(1)
        return np.linspace(-self.u_radius, self.u_radius, self.u_count)


class LabOptions(Configuration):
    """Settings for the well-posedness experiments."""

    def __init__(
        self,
        dependence_tolerance: float = BASE_LAB_CONFIG["dependence_tolerance"],
        probe_samples: int = BASE_LAB_CONFIG["probe_samples"],
        probe_min_norm: float = BASE_LAB_CONFIG["probe_min_norm"],
        probe_max_norm: float = BASE_LAB_CONFIG["probe_max_norm"],
        ray_points: int = BASE_LAB_CONFIG["ray_points"],
        seed: int = BASE_LAB_CONFIG["seed"],
    ):
        super().__init__()
        self.dependence_tolerance = float(dependence_tolerance)
        self.probe_samples = int(probe_samples)
        self.probe_min_norm = float(probe_min_norm)
        self.probe_max_norm = float(probe_max_norm)
        self.ray_points = int(ray_points)
        self.seed = int(seed)
        self.validate()

    def validate(self):
        if not self.dependence_tolerance > 0:
            raise ValueError(
                f"dependence_tolerance must be positive but got {self.dependence_tolerance}"
            )
        if self.probe_samples < 1:
            raise ValueError(f"probe_samples must be at least 1 but got {self.probe_samples}")
        if not 1 <= self.probe_min_norm <= self.probe_max_norm:
            raise ValueError("probe norms must satisfy 1 <= probe_min_norm <= probe_max_norm")
        if self.ray_points < 2:
            raise ValueError(f"ray_points must be at least 2 but got {self.ray_points}")
