"""
Hypotheses are checked by dense sampling. Defaults -
* 201 x-points on [-10, 10]
* 11 u-points on [-5, 5]
* every node k in Z[1, T]
"""
BASE_SAMPLING_PLAN = {
    "x_radius": 10.0,
    "x_count": 201,
    "u_radius": 5.0,
    "u_count": 11,
}

MONOTONE_SLACK = 1e-12
GROWTH_SLACK = 1e-12

QUADRATURE_TOL = 1e-10
QUADRATURE_LIMIT = 40
