"""HTTP/JSON session service hosting the simulator.

One resource per concept: POST /api/sessions creates a session from DSL
text; measure/evolve/release mutate it; trace and model are read-only.
Sessions live in memory, are guarded by per-session locks (operations on
one session serialize, distinct sessions run concurrently) and are
evicted after an hour of inactivity.
"""
from __future__ import annotations

import secrets
import string
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .dsl import parse
from .errors import LiarError, PortInUse, UnknownSession, ZeroAmplitudeOutcome
from .inference import classify
from .linalg import vector_to_json
from .quantize import model_to_json
from .session import Session, create_session

SESSION_TTL_SECONDS = 3600.0
_ID_ALPHABET = string.ascii_letters + string.digits


@dataclass
class SessionEntry:
    id: str
    session: Session
    verdict: str
    assignments: list[list[str]]
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class SessionStore:
    """Thread-safe id -> session map with idle eviction."""

    def __init__(self, ttl: float = SESSION_TTL_SECONDS):
        self._entries: dict[str, SessionEntry] = {}
        self._lock = threading.Lock()
        self._ttl = ttl

    def _evict(self, now: float) -> None:
        stale = [sid for sid, e in self._entries.items() if now - e.last_access > self._ttl]
        for sid in stale:
            del self._entries[sid]

    def add(self, entry: SessionEntry) -> None:
        with self._lock:
            self._evict(time.monotonic())
            self._entries[entry.id] = entry

    def get(self, session_id: str) -> SessionEntry:
        with self._lock:
            now = time.monotonic()
            self._evict(now)
            entry = self._entries.get(session_id)
            if entry is None:
                raise UnknownSession(session_id)
            entry.last_access = now
            return entry

    @staticmethod
    def new_id() -> str:
        return "".join(secrets.choice(_ID_ALPHABET) for _ in range(12))


class CreateSessionRequest(BaseModel):
    dsl: str


class MeasureRequest(BaseModel):
    sentence: int
    value: str  # "true" | "false" | "sample"
    seed: int | None = None


class EvolveRequest(BaseModel):
    dt: float | None = None
    steps: int | None = None


def _snapshot(entry: SessionEntry) -> dict:
    s = entry.session
    return {
        "id": entry.id,
        "time": s.time,
        "dim": s.model.dim,
        "tau": s.model.tau,
        "verdict": entry.verdict,
        "basis": {str(k): token.label() for k, token in enumerate(s.model.basis_labels)},
        "probabilities": {token.label(): p for token, p in s.probabilities().items()},
        "state": vector_to_json(s.state),
    }


def _status_for(exc: LiarError) -> int:
    if isinstance(exc, ZeroAmplitudeOutcome):
        return 409
    if isinstance(exc, UnknownSession):
        return 404
    return 400


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="liarsim", docs_url=None, redoc_url=None)
    store = SessionStore()
    app.state.store = store

    @app.exception_handler(LiarError)
    def _domain_error(_, exc: LiarError):
        body = {"error": exc.code, "message": str(exc)}
        line = getattr(exc, "line", None)
        if line is not None:
            body["line"] = line
        return JSONResponse(status_code=_status_for(exc), content=body)

    @app.exception_handler(ValueError)
    def _value_error(_, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": "bad_request", "message": str(exc)})

    @app.post("/api/sessions", status_code=201)
    def create(req: CreateSessionRequest):
        system = parse(req.dsl)
        classification = classify(system)
        entry = SessionEntry(
            id=SessionStore.new_id(),
            session=create_session(system),
            verdict=classification.verdict,
            assignments=[
                ["true" if v else "false" for v in a]
                for a in classification.consistent_assignments
            ],
        )
        store.add(entry)
        return {**_snapshot(entry), "assignments": entry.assignments}

    @app.get("/api/sessions/{sid}")
    def get_session(sid: str):
        entry = store.get(sid)
        with entry.lock:
            return {**_snapshot(entry), "assignments": entry.assignments}

    @app.post("/api/sessions/{sid}/measure")
    def measure(sid: str, req: MeasureRequest):
        entry = store.get(sid)
        with entry.lock:
            if req.value == "sample":
                outcome = entry.session.measure_sample(req.sentence, req.seed)
                probability = entry.session.log[-1].payload["probability"]
            elif req.value in ("true", "false"):
                probability = entry.session.hypothesize(req.sentence, req.value == "true")
                outcome = req.value
            else:
                raise ValueError(f"value must be 'true', 'false' or 'sample', got {req.value!r}")
            return {"probability": probability, "outcome": outcome, **_snapshot(entry)}

    @app.post("/api/sessions/{sid}/evolve")
    def evolve(sid: str, req: EvolveRequest):
        entry = store.get(sid)
        with entry.lock:
            if req.dt is None and req.steps is None:
                raise ValueError("body must carry either 'dt' or 'steps'")
            dt = req.dt if req.dt is not None else req.steps * entry.session.model.tau
            entry.session.evolve(dt)
            return _snapshot(entry)

    @app.post("/api/sessions/{sid}/release")
    def release(sid: str):
        entry = store.get(sid)
        with entry.lock:
            entry.session.release()
            return _snapshot(entry)

    @app.get("/api/sessions/{sid}/trace")
    def trace(sid: str, t0: float = 0.0, t1: float = 0.0, dt: float = 0.0, format: str = "csv"):
        entry = store.get(sid)
        with entry.lock:
            table = entry.session.trace(t0, t1, dt)
        if format == "json":
            return table.to_json()
        return Response(content=table.to_csv(), media_type="text/csv")

    @app.get("/api/sessions/{sid}/model")
    def model(sid: str):
        entry = store.get(sid)
        with entry.lock:
            return model_to_json(entry.session.model)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="console")

    return app


def serve(port: int, static_dir: str | None = None) -> None:
    """Run the service until interrupted; raises PortInUse if the port is taken."""
    import socket

    import uvicorn

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        probe.bind(("0.0.0.0", port))
    except OSError as exc:
        raise PortInUse(port) from exc
    finally:
        probe.close()

    uvicorn.run(create_app(static_dir), host="0.0.0.0", port=port, log_level="info")
