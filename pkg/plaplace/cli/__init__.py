# Core functionality that should always be available
from .commands import (
    COMMANDS,
    EXIT_INPUT,
    EXIT_NUMERICAL,
    EXIT_OK,
    cmd_check,
    cmd_constants,
    cmd_depend,
    cmd_solve,
    cmd_sweep,
)
from .config import Experiment, build_experiment, load_document, load_experiment, make_parameter
from .writers import format_cell, to_csv, to_json

__all__ = [
    "COMMANDS",
    "EXIT_INPUT",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "cmd_check",
    "cmd_constants",
    "cmd_depend",
    "cmd_solve",
    "cmd_sweep",
    "Experiment",
    "build_experiment",
    "load_document",
    "load_experiment",
    "make_parameter",
    "format_cell",
    "to_csv",
    "to_json",
]
