import h5py
import numpy as np
from pathlib import Path

TRACE_COLUMNS = ("energy", "grad_norm", "step")


def get_unique_path(dirname, filename):
    f_path = Path(dirname) / filename
    base, ext = f_path.stem, f_path.suffix
    counter = 1
    while f_path.exists():
        counter += 1
        f_path = f_path.with_name(f"{base}_{counter}{ext}")
    return f_path


def init_trace_file(file_path, chunk_size: int = 500, attrs: dict = None):
    with h5py.File(file_path, "w") as f:
        dset = f.create_dataset(
            "trace",
            shape=(0, len(TRACE_COLUMNS)),
            maxshape=(None, len(TRACE_COLUMNS)),
            dtype="float64",
            chunks=(chunk_size, len(TRACE_COLUMNS)),
        )
        dset.attrs["columns"] = ",".join(TRACE_COLUMNS)
        for key, value in (attrs or {}).items():
            f.attrs[key] = value


def update_trace_file(file_path, chunk):
    chunk = np.atleast_2d(np.asarray(chunk, dtype=float))
    if chunk.shape[1] != len(TRACE_COLUMNS):
        raise ValueError(
            f"Trace chunks need {len(TRACE_COLUMNS)} columns but got {chunk.shape[1]}"
        )

    with h5py.File(file_path, "a") as f:
        dset = f["trace"]
        cur_rows = dset.shape[0]
        new_rows = cur_rows + chunk.shape[0]
        dset.resize((new_rows, chunk.shape[1]))
        dset[cur_rows:new_rows, :] = chunk


def read_trace_file(file_path):
    with h5py.File(file_path, "r") as f:
        return np.array(f["trace"]), dict(f.attrs)
