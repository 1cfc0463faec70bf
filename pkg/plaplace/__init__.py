# Core functionality that should always be available
from plaplace import constants as constants
from plaplace import datatypes as datatypes
from plaplace import utils as utils
from plaplace import nonlinearity as nonlinearity
from plaplace import energy as energy
from plaplace import estimates as estimates
from plaplace import solver as solver
from plaplace import lab as lab

__all__ = [
    "constants",
    "datatypes",
    "utils",
    "nonlinearity",
    "energy",
    "estimates",
    "solver",
    "lab",
]
