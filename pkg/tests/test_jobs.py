import queue

from plaplace.utils import run_jobs
from plaplace.utils.jobs import JobWorker


def _fail():
    raise ValueError("boom")


def test_results_keep_submission_order():
    jobs = [lambda i=i: i * i for i in range(8)]
    assert run_jobs(jobs) == [(True, i * i) for i in range(8)]
    assert run_jobs(jobs, workers=3) == [(True, i * i) for i in range(8)]


def test_failures_are_returned():
    events = []
    results = run_jobs([lambda: 1, _fail], workers=2, log_event=lambda level, msg: events.append(level))
    assert results[0] == (True, 1)
    ok, err = results[1]
    assert not ok and isinstance(err, ValueError)
    assert events == ["debug"]


def test_worker_exits_once_the_queue_is_drained():
    job_queue = queue.Queue()
    for idx in range(3):
        job_queue.put((idx, lambda idx=idx: idx))
    results = {}
    worker = JobWorker(job_queue, results)
    worker.start()
    worker.join(timeout=5.0)
    assert not worker.is_alive()
    assert results == {0: (True, 0), 1: (True, 1), 2: (True, 2)}
    assert job_queue.empty()
