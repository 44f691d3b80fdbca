"""Session-based HTTP API for interactive configuration.

Models are uploaded once and shared read-only; every session owns one
configuration state. Per-session requests are serialized with a lock, so
concurrent decision posts cannot lose updates. All semantics stay in the
engine; the service only translates HTTP to engine calls.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from . import engine, files, oracle
from .assets import Catalog, filter_partial
from .errors import (
    CompileError,
    FeatureLineError,
    ModelSyntaxError,
    ModelValidationError,
    NothingToUndoError,
    InvalidDecisionError,
    UnknownLabelError,
    VoidModelError,
)
from .model import FeatureModel, StateColor, StructuralColor, render_colors

DEFAULT_SESSION_TTL = 24 * 3600.0


@dataclass
class _ModelEntry:
    model: FeatureModel
    decls: list
    catalog: Catalog
    cycles: list


@dataclass
class _Session:
    session_id: str
    model_id: str
    state: engine.ConfigState
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_touched: float = field(default_factory=time.monotonic)

    def touch(self) -> None:
        self.last_touched = time.monotonic()


class Store:
    """In-memory model and session registry with idle-session expiry."""

    def __init__(self, ttl: float = DEFAULT_SESSION_TTL):
        self.ttl = ttl
        self.models: dict[str, _ModelEntry] = {}
        self.sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def add_model(self, text: str) -> tuple[str, _ModelEntry]:
        model, decls, catalog = files.parse_model(text)
        cycles = [list(c) for c in oracle.detect_cycles(model).components]
        entry = _ModelEntry(model=model, decls=decls, catalog=catalog,
                            cycles=cycles)
        with self._lock:
            model_id = f"m{len(self.models) + 1}"
            self.models[model_id] = entry
        return model_id, entry

    def add_session(self, model_id: str) -> _Session:
        entry = self.models[model_id]
        state = engine.initial_state(entry.model)
        session = _Session(session_id=uuid.uuid4().hex[:12], model_id=model_id,
                           state=state)
        with self._lock:
            self.sessions[session.session_id] = session
        return session

    def purge_idle(self) -> None:
        now = time.monotonic()
        with self._lock:
            stale = [sid for sid, s in self.sessions.items()
                     if now - s.last_touched > self.ttl]
            for sid in stale:
                del self.sessions[sid]


def _error(status: int, code: str, message: str, details=None) -> JSONResponse:
    body = {"code": code, "message": message}
    if details is not None:
        body["details"] = details
    return JSONResponse(status_code=status, content=body)


def _session_view(store: Store, session: _Session) -> dict:
    entry = store.models[session.model_id]
    model = entry.model
    state = session.state
    view = render_colors(model, state)
    probe = engine.lookahead(state)
    moves_of = {
        engine.Move.FREE: ["select", "discard"],
        engine.Move.SELECT_FORBIDDEN: ["discard"],
        engine.Move.DISCARD_FORBIDDEN: ["select"],
        engine.Move.DEAD_END: [],
    }
    boxes = []
    for bid in model.preorder():
        box = model.boxes[bid]
        st = state.states[bid]
        row = {
            "id": bid,
            "label": box.label,
            "parent": box.parent,
            "group": box.group.value,
            "mandatory": box.mandatory,
            "structural_color": view.structural[bid].value,
            "state_color": view.state[bid].value,
            "state": st.value,
            "moves": moves_of.get(probe.moves.get(bid), []),
        }
        decision = state.provenance.get(bid)
        if decision is not None and not decision.is_user:
            source_label = (model.boxes[decision.source].label
                            if decision.source else None)
            row["reason"] = {"rule": decision.rule.value, "source": source_label}
        boxes.append(row)
    return {
        "session_id": session.session_id,
        "model_id": session.model_id,
        "open": engine.open_count(state),
        "complete": engine.is_complete(state),
        "dead_end": probe.dead_end,
        "journal_length": len(state.user_decisions()),
        "boxes": boxes,
    }


def create_app(ttl: float = DEFAULT_SESSION_TTL,
               allow_origins: list[str] | None = None,
               ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="featureline", version="0.1.0")
    store = Store(ttl=ttl)
    app.state.store = store

    if allow_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(CORSMiddleware, allow_origins=allow_origins,
                           allow_methods=["*"], allow_headers=["*"])

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    @app.middleware("http")
    async def _purge(request: Request, call_next):
        store.purge_idle()
        return await call_next(request)

    @app.post("/models", status_code=201)
    async def upload_model(request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        try:
            model_id, entry = store.add_model(text)
        except ModelSyntaxError as exc:
            return _error(400, "syntax-error", str(exc))
        except ModelValidationError as exc:
            return _error(422, "invalid-model", "model violates invariants",
                          details=[str(v) for v in exc.violations])
        except (CompileError, FeatureLineError) as exc:
            return _error(422, "compile-error", str(exc))
        return {
            "model_id": model_id,
            "name": entry.model.name,
            "violations": [],
            "cycles": entry.cycles,
            "boxes": len(entry.model.boxes),
            "assets": len(entry.catalog),
        }

    @app.post("/models/{model_id}/sessions", status_code=201)
    def create_session(model_id: str):
        if model_id not in store.models:
            return _error(404, "not-found", f"no model {model_id}")
        try:
            session = store.add_session(model_id)
        except VoidModelError as exc:
            return _error(409, "void-model", str(exc))
        return _session_view(store, session)

    def _with_session(session_id: str):
        session = store.sessions.get(session_id)
        if session is None:
            return None
        session.touch()
        return session

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            return _session_view(store, session)

    @app.post("/sessions/{session_id}/decisions")
    async def post_decision(session_id: str, request: Request):
        session = _with_session(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        body = await request.json()
        label = body.get("label", "")
        try:
            action = engine.Action(body.get("action", ""))
        except ValueError:
            return _error(400, "bad-action",
                          f"action must be select or discard")
        model = store.models[session.model_id].model
        with session.lock:
            try:
                new_state, report = engine.decide_label(session.state, label,
                                                        action)
            except UnknownLabelError as exc:
                return _error(404, "unknown-label", str(exc))
            except InvalidDecisionError as exc:
                return _error(409, "invalid-decision", str(exc))
            if not report.accepted:
                return _error(409, "rejected", "decision leads to a "
                              "contradiction", details=_rejection_body(model, report))
            session.state = new_state
            forced = [{
                "box": d.box,
                "label": model.boxes[d.box].label,
                "action": d.action.value,
                "rule": d.rule.value,
                "source": model.boxes[d.source].label if d.source else None,
            } for d in report.forced]
            return {
                "accepted": True,
                "forced": forced,
                "open": engine.open_count(session.state),
                "complete": engine.is_complete(session.state),
            }

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            try:
                session.state = engine.undo(session.state)
            except NothingToUndoError as exc:
                return _error(409, "nothing-to-undo", str(exc))
            return _session_view(store, session)

    @app.get("/sessions/{session_id}/assets")
    def get_assets(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        entry = store.models[session.model_id]
        with session.lock:
            result = filter_partial(entry.catalog, session.state)
        rows = [{
            "id": asset.id,
            "name": asset.name,
            "kind": asset.kind.value,
            "status": result.status_of(asset.id),
        } for asset in entry.catalog]
        return {
            "assets": rows,
            "included": list(result.included),
            "excluded": list(result.excluded),
            "undecided": list(result.undecided),
        }

    @app.get("/sessions/{session_id}/export")
    def get_export(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, "not-found", f"no session {session_id}")
        with session.lock:
            text = files.export_config(session.state)
        return Response(content=text, media_type="application/json")

    @app.get("/models/{model_id}/diagram")
    def get_diagram(model_id: str, session: str | None = None):
        if model_id not in store.models:
            return _error(404, "not-found", f"no model {model_id}")
        state = None
        if session is not None:
            sess = _with_session(session)
            if sess is None or sess.model_id != model_id:
                return _error(404, "not-found", f"no session {session}")
            state = sess.state
        text = files.export_dot(store.models[model_id].model, state)
        return Response(content=text, media_type="text/vnd.graphviz")

    return app


def _rejection_body(model: FeatureModel, report: engine.PropagationReport) -> dict:
    def chain(steps):
        return [{
            "box": d.box,
            "label": model.boxes[d.box].label,
            "action": d.action.value,
            "rule": d.rule.value,
            "source": model.boxes[d.source].label if d.source else None,
        } for d in steps]

    return {
        "conflict": report.conflict,
        "conflict_label": (model.boxes[report.conflict].label
                           if report.conflict else None),
        "select_chain": chain(report.select_chain),
        "discard_chain": chain(report.discard_chain),
    }
