DIVERGENCE_FLOOR = -1e12  # Energies below this are treated as unbounded below
ITERATE_CEILING = 1e8  # h_norm of iterates above this is treated as escape to infinity
BB_STEP_BOUNDS = (1e-12, 1e12)
MAX_BACKTRACKS = 60
ROUNDOFF_FLOOR = 1e-14  # Relative energy noise below which Armijo cannot discriminate

"""
Defaults for the descent solver. We assume -
* Problems are desk-scale (T up to roughly 10^4)
* Gradient tolerance is absolute and measured in the max-norm
* Multistart points are drawn uniformly from an h_norm ball
"""
BASE_SOLVER_CONFIG = {
    "tol": 1e-10,
    "max_iter": 100000,
    "initial_step": 1.0,
    "backtrack": 0.5,
    "armijo": 1e-4,
    "seed": 0,
    "starts": 10,
    "radius": 10.0,
    "method": "descent",
    "keep_trace": True,
    "workers": 1,
}
