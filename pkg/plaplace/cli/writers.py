"""
Report writers. CSV cells use '.16e' for reals and true/false for booleans;
JSON documents are written with sorted keys so reruns are byte-identical;
NaN becomes null and infinities become the strings "inf" and "-inf".
"""
import csv
import io
import json

import numpy as np

from plaplace.utils import get_unique_path

DEPEND_COLUMNS = ("n", "delta_n", "norm_xn", "dist_to_limit", "converged")
SWEEP_COLUMNS = ("lambda", "regime", "converged", "unique_consistent", "final_energy", "residual")


def format_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".16e")
    if value is None:
        return ""
    return str(value)


def to_csv(columns, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"CSV rows need {len(columns)} cells but got {len(row)}")
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if np.isnan(value):
            return None
        if np.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    return value


def to_json(document) -> str:
    return json.dumps(_plain(document), sort_keys=True, indent=2, allow_nan=False) + "\n"


def emit(text: str, out_dir, name: str, stream):
    """Write to a fresh file in out_dir, or to the stream when no directory is given."""
    if out_dir is None:
        stream.write(text)
        return None
    path = get_unique_path(out_dir, name)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(text)
    return path
