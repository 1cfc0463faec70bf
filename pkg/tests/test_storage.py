import numpy as np
import numpy.testing as npt
import pytest

from plaplace.solver import minimize
from plaplace.utils import (
    TRACE_COLUMNS,
    get_unique_path,
    init_trace_file,
    read_trace_file,
    update_trace_file,
)


def test_unique_paths(tmp_path):
    first = get_unique_path(tmp_path, "solve.json")
    assert first == tmp_path / "solve.json"
    first.write_text("{}")
    second = get_unique_path(tmp_path, "solve.json")
    assert second.name == "solve_2.json"
    second.write_text("{}")
    assert get_unique_path(tmp_path, "solve.json").name == "solve_3.json"


def test_trace_file_grows_by_chunks(tmp_path):
    path = tmp_path / "trace.h5"
    init_trace_file(path, chunk_size=4, attrs={"T": 3, "objective": "primal"})
    update_trace_file(path, [[0.0, 1.0, 0.0], [-1.0, 0.5, 1.0]])
    update_trace_file(path, [-1.5, 0.1, 0.5])

    data, attrs = read_trace_file(path)
    npt.assert_array_equal(data, [[0.0, 1.0, 0.0], [-1.0, 0.5, 1.0], [-1.5, 0.1, 0.5]])
    assert attrs["T"] == 3
    assert attrs["objective"] == "primal"


def test_trace_chunks_are_checked(tmp_path):
    path = tmp_path / "trace.h5"
    init_trace_file(path)
    with pytest.raises(ValueError):
        update_trace_file(path, np.zeros((2, len(TRACE_COLUMNS) + 1)))


def test_solver_trace_round_trip(tmp_path, linear_instance):
    report = minimize(linear_instance)
    path = tmp_path / "trace.h5"
    init_trace_file(path)
    update_trace_file(path, report.trace)
    data, _ = read_trace_file(path)
    npt.assert_array_equal(data, report.trace)
