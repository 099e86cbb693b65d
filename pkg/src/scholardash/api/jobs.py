"""Asynchronous topic-training jobs.

Submission returns immediately with a queued record; a worker pool owns
training. Job state only ever moves queued -> running -> done | failed,
and a finished model is immutable, so polling is idempotent and reads
never race training. Finished model artifacts and the job table persist
alongside the store when a state directory is configured.
"""
from __future__ import annotations

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from scholardash import topics
from scholardash.query import FilterQuery, select
from scholardash.store import Corpus


class UnknownJob(Exception):
    def __init__(self, job_id: str):
        super().__init__(f"no job {job_id!r}")


class UnknownModel(Exception):
    def __init__(self, model_id: str):
        super().__init__(f"no model {model_id!r}")


class JobNotDone(Exception):
    def __init__(self, job_id: str, state: str):
        self.state = state
        super().__init__(f"job {job_id!r} is {state}, model not available")


@dataclass
class TrainParams:
    k: int = topics.DEFAULT_TOPICS
    alpha: float | None = None
    beta: float = topics.DEFAULT_BETA
    iterations: int = topics.DEFAULT_ITERATIONS
    seed: int = 0
    lam: float = topics.DEFAULT_LAMBDA

    def validate(self) -> None:
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.alpha is not None and self.alpha <= 0:
            raise ValueError("alpha must be > 0")
        if self.beta <= 0:
            raise ValueError("beta must be > 0")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError("lambda must be within [0, 1]")


@dataclass
class JobRecord:
    job_id: str
    state: str  # queued | running | done | failed
    submitted_at: str
    finished_at: str | None
    params: dict
    result_ref: str | None
    error: str | None

    def to_json(self) -> dict:
        return asdict(self)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class TopicJobService:
    """Thread-safe job registry plus the worker pool that trains models."""

    def __init__(self, corpus: Corpus, workers: int = 2, state_dir: str | Path | None = None):
        self._corpus = corpus
        self._jobs: dict[str, JobRecord] = {}
        self._models: dict[str, topics.TopicModel] = {}
        self._lock = threading.Lock()
        self._workers = max(1, workers)
        self._pool = ThreadPoolExecutor(max_workers=self._workers, thread_name_prefix="topic-job")
        self._state_dir = Path(state_dir) if state_dir is not None else None
        if self._state_dir is not None:
            (self._state_dir / "models").mkdir(parents=True, exist_ok=True)
            self._restore_jobs()

    # -- lifecycle ----------------------------------------------------

    def submit(self, filter_query: FilterQuery, params: TrainParams, filters_echo: dict | None = None) -> JobRecord:
        """Queue a training job; raises TooManyDocuments before queueing."""
        params.validate()
        with self._corpus.lock.read():
            ids = select(self._corpus, filter_query)
        if len(ids) > topics.MAX_TRAINING_DOCS:
            raise topics.TooManyDocuments(len(ids))

        job = JobRecord(
            job_id=uuid.uuid4().hex,
            state="queued",
            submitted_at=_now(),
            finished_at=None,
            params={
                "k": params.k,
                "alpha": params.alpha,
                "beta": params.beta,
                "iterations": params.iterations,
                "seed": params.seed,
                "lambda": params.lam,
                "filters": filters_echo or {},
            },
            result_ref=None,
            error=None,
        )
        with self._lock:
            self._jobs[job.job_id] = job
            snapshot = replace(job)
        self._persist_jobs()
        # Snapshot taken before the pool can start mutating the record, so
        # the caller always sees the queued state.
        self._pool.submit(self._run, job.job_id, sorted(ids), params)
        return snapshot

    def _run(self, job_id: str, ids: list[str], params: TrainParams) -> None:
        self._transition(job_id, "running")
        try:
            with self._corpus.lock.read():
                papers = []
                for record_id in ids:
                    record = self._corpus.get(record_id)
                    if record is not None:
                        papers.append((record.id, record.title, record.abstract))
            processed = topics.preprocess(papers)
            model = topics.train(
                processed,
                k=params.k,
                alpha=params.alpha,
                beta=params.beta,
                iterations=params.iterations,
                seed=params.seed,
            )
        except Exception as exc:
            self._transition(job_id, "failed", error=f"{type(exc).__name__}: {exc}")
            return
        with self._lock:
            self._models[job_id] = model
        self._write_model(job_id, model)
        self._transition(job_id, "done", result_ref=f"/api/v1/topics/models/{job_id}")

    def _transition(self, job_id: str, state: str, error: str | None = None, result_ref: str | None = None) -> None:
        with self._lock:
            job = self._jobs[job_id]
            job.state = state
            if state in ("done", "failed"):
                job.finished_at = _now()
            job.error = error
            job.result_ref = result_ref
        self._persist_jobs()

    # -- reads ---------------------------------------------------------

    def get_job(self, job_id: str) -> JobRecord:
        with self._lock:
            job = self._jobs.get(job_id)
            if job is not None:
                job = replace(job)
        if job is None:
            raise UnknownJob(job_id)
        return job

    def get_model(self, model_id: str) -> topics.TopicModel:
        with self._lock:
            model = self._models.get(model_id)
            job = self._jobs.get(model_id)
        if model is not None:
            return model
        if job is not None and job.state in ("queued", "running"):
            raise JobNotDone(model_id, job.state)
        loaded = self._read_model(model_id)
        if loaded is None:
            raise UnknownModel(model_id)
        with self._lock:
            self._models[model_id] = loaded
        return loaded

    def model_lambda(self, model_id: str) -> float:
        try:
            job = self.get_job(model_id)
            return float(job.params.get("lambda", topics.DEFAULT_LAMBDA))
        except UnknownJob:
            return topics.DEFAULT_LAMBDA

    def wait_all(self) -> None:
        """Block until queued work drains (test helper)."""
        self._pool.shutdown(wait=True)
        self._pool = ThreadPoolExecutor(max_workers=self._workers, thread_name_prefix="topic-job")

    def shutdown(self) -> None:
        self._pool.shutdown(wait=False, cancel_futures=True)

    # -- persistence ----------------------------------------------------

    def model_artifact_path(self, model_id: str) -> Path | None:
        if self._state_dir is None:
            return None
        return self._state_dir / "models" / f"{model_id}.json"

    def _write_model(self, model_id: str, model: topics.TopicModel) -> None:
        path = self.model_artifact_path(model_id)
        if path is not None:
            path.write_bytes(topics.model_to_bytes(model))

    def _read_model(self, model_id: str) -> topics.TopicModel | None:
        path = self.model_artifact_path(model_id)
        if path is None or not path.exists():
            return None
        return topics.model_from_bytes(path.read_bytes())

    def _persist_jobs(self) -> None:
        if self._state_dir is None:
            return
        with self._lock:
            payload = [job.to_json() for job in self._jobs.values()]
        (self._state_dir / "jobs.json").write_text(
            json.dumps(payload, sort_keys=True, indent=1), encoding="utf-8"
        )

    def _restore_jobs(self) -> None:
        path = self._state_dir / "jobs.json"
        if not path.exists():
            return
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            return
        for entry in payload:
            job = JobRecord(**entry)
            # A previous process died mid-flight; those jobs cannot finish.
            if job.state in ("queued", "running"):
                job.state = "failed"
                job.error = "interrupted by shutdown"
                job.finished_at = job.finished_at or _now()
            self._jobs[job.job_id] = job
