BASE_LAB_CONFIG = {
    "dependence_tolerance": 0.05,  # Relative to max(1, h_norm of the limit solution)
    "probe_samples": 1000,
    "probe_min_norm": 1.0,
    "probe_max_norm": 1e3,
    "ray_points": 50,
    "seed": 0,
}

NONPOSITIVITY_SLACK = 1e-12
