# Core functionality that should always be available
from .grid import (
    forward_difference,
    h_norm,
    random_grid_function,
    random_in_ball,
    summation_by_parts_defect,
    sup_norm,
)
from .ipc import emit_signal, logger_event
from .jobs import run_jobs
from .numeric import powq
from .storage import (
    TRACE_COLUMNS,
    get_unique_path,
    init_trace_file,
    read_trace_file,
    update_trace_file,
)

__all__ = [
    "forward_difference",
    "h_norm",
    "random_grid_function",
    "random_in_ball",
    "summation_by_parts_defect",
    "sup_norm",
    "emit_signal",
    "logger_event",
    "run_jobs",
    "powq",
    "TRACE_COLUMNS",
    "get_unique_path",
    "init_trace_file",
    "read_trace_file",
    "update_trace_file",
]
