import queue
from threading import Thread

from .ipc import emit_signal


class JobWorker(Thread):
    """Drains (index, job) pairs from a shared queue and stores results by index."""

    def __init__(self, job_queue: queue.Queue, results: dict):
        super().__init__(daemon=True)
        self.log_event = None

        self.job_queue = job_queue
        self.results = results

    def run(self):
        while True:
            try:
                idx, job = self.job_queue.get_nowait()
            except queue.Empty:
                break

            try:
                self.results[idx] = (True, job())
            except Exception as e:
                emit_signal(self.log_event, "debug", f"Job {idx} failed: {e}")
                self.results[idx] = (False, e)
            finally:
                self.job_queue.task_done()


def run_jobs(jobs, workers: int = 1, log_event=None):
    """
    Run independent zero-argument callables and return [(ok, result_or_exception)]
    in submission order, whatever order they finished in.
    """
    jobs = list(jobs)
    results = {}

    if workers <= 1 or len(jobs) <= 1:
        for idx, job in enumerate(jobs):
            try:
                results[idx] = (True, job())
            except Exception as e:
                emit_signal(log_event, "debug", f"Job {idx} failed: {e}")
                results[idx] = (False, e)
    else:
        job_queue = queue.Queue()
        for idx, job in enumerate(jobs):
            job_queue.put((idx, job))

        pool = []
        for _ in range(min(workers, len(jobs))):
            worker = JobWorker(job_queue, results)
            worker.log_event = log_event
            worker.start()
            pool.append(worker)
        for worker in pool:
            worker.join()

    return [results[idx] for idx in range(len(jobs))]
