"""HTTP session service.

Exposes the library over a small JSON API under ``/api/v1``.  A session
holds one net, the trace of steps fired so far, and a version counter;
every mutating request must quote the version it saw, and a mismatch is
answered with 409 so concurrent clients cannot interleave blindly.
Sessions live in process memory only.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from . import bsa, csa, fixtures, netio, scenarios, semantics
from .errors import DocumentError, NetError, StepNotEnabled, \
    ValidationError

DEFAULT_STEP_LIMIT = 200


@dataclass
class Session:
    id: str
    doc: netio.NetDocument
    source: str
    version: int = 0
    steps: list = field(default_factory=list)
    markings: list = field(default_factory=list)

    @property
    def marking(self) -> frozenset:
        return self.markings[-1]


def _fire(doc: netio.NetDocument, m: frozenset, u: frozenset) -> frozenset:
    if doc.kind == "acyclic":
        return semantics.fire(doc.net, m, u)
    if doc.kind == "csa":
        return csa.csa_fire(doc.net, m, u)
    return bsa.bsa_fire(doc.net, m, u)


def _decomposition(net, m: frozenset, u: frozenset) -> list:
    try:
        return [sorted(g) for g in csa.decompose_step(net, m, u)]
    except NetError:
        return [sorted(u)]


def _candidates(doc: netio.NetDocument, m: frozenset, limit: int):
    entries = []
    if doc.kind == "acyclic":
        for u in sorted(semantics.enabled_steps(doc.net, m), key=sorted):
            entries.append({"transitions": sorted(u), "enabled": True,
                            "reason": None,
                            "decomposition": [[t] for t in sorted(u)]})
    elif doc.kind == "csa":
        for u in sorted(csa.csa_enabled_steps(doc.net, m), key=sorted):
            entries.append({"transitions": sorted(u), "enabled": True,
                            "reason": None,
                            "decomposition": _decomposition(doc.net, m,
                                                            u)})
    else:
        under = bsa.underlying_csa(doc.net)
        for u in sorted(csa.csa_enabled_steps(under, m), key=sorted):
            ok, reason = bsa.step_verdict(doc.net, m, u)
            entries.append({
                "transitions": sorted(u), "enabled": ok,
                "reason": None if ok else reason,
                "decomposition": _decomposition(under, m, u) if ok
                else None})
    truncated = len(entries) > limit
    return entries[:limit], truncated


def _trace_text(steps: list) -> str:
    return ";".join(",".join(sorted(u)) for u in steps)


def _scenario_payload(doc: netio.NetDocument, steps: list) -> dict:
    if doc.kind == "acyclic":
        s = scenarios.scenario_of(doc.net, steps)
        return {"kind": "acyclic", "transitions": sorted(s.transitions)}
    if doc.kind == "csa":
        s = csa.csa_scenario_of(doc.net, steps)
        return {"kind": "csa", "transitions": sorted(s.transitions)}
    s = bsa.bsa_scenario_of(doc.net, steps)
    return {"kind": "bsa",
            "lower": sorted(s.net.lower.transitions),
            "upper": sorted(s.net.upper.transitions)}


def _scenario_list(doc: netio.NetDocument) -> list:
    if doc.kind == "acyclic":
        found = scenarios.enumerate_scenarios(doc.net)
        top = {frozenset(s.transitions)
               for s in scenarios.maximal_scenarios(doc.net)}
        return [{"transitions": sorted(s.transitions),
                 "maximal": frozenset(s.transitions) in top}
                for s in sorted(found, key=lambda s: (len(s.transitions),
                                                      sorted(s.transitions)))]
    if doc.kind == "csa":
        found = csa.csa_scenarios(doc.net)
        top = {frozenset(s.transitions)
               for s in csa.csa_maximal_scenarios(doc.net)}
        return [{"transitions": sorted(s.transitions),
                 "maximal": frozenset(s.transitions) in top}
                for s in sorted(found, key=lambda s: (len(s.transitions),
                                                      sorted(s.transitions)))]
    found = bsa.bsa_scenarios(doc.net)
    top = {(frozenset(s.net.lower.transitions),
            frozenset(s.net.upper.transitions))
           for s in bsa.bsa_maximal_scenarios(doc.net)}
    out = []
    for s in sorted(found, key=lambda s: (len(s.net.lower.transitions),
                                          sorted(s.net.lower.transitions))):
        key = (frozenset(s.net.lower.transitions),
               frozenset(s.net.upper.transitions))
        out.append({"lower": sorted(key[0]), "upper": sorted(key[1]),
                    "maximal": key in top})
    return out


def create_app() -> FastAPI:
    app = FastAPI(title="sonet", docs_url=None, redoc_url=None)
    # the web client may be hosted on a different port than the API
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict = {}
    lock = threading.Lock()

    def get_session(sid: str) -> Session:
        s = sessions.get(sid)
        if s is None:
            raise HTTPException(404, detail=f"unknown session {sid}")
        return s

    def check_version(s: Session, payload: dict) -> None:
        seen = payload.get("version")
        if seen != s.version:
            raise HTTPException(
                409, detail={"error": "stale-version",
                             "version": s.version, "seen": seen})

    def state_payload(s: Session, limit: int = DEFAULT_STEP_LIMIT) -> dict:
        entries, truncated = _candidates(s.doc, s.marking, limit)
        return {"id": s.id, "version": s.version, "kind": s.doc.kind,
                "source": s.source,
                "marking": sorted(s.marking),
                "initial_marking": sorted(s.markings[0]),
                "steps_fired": len(s.steps),
                "candidates": entries, "truncated": truncated}

    @app.get("/api/v1/fixtures")
    def list_fixtures() -> dict:
        return {"fixtures": [{"name": n, "kind": fixtures.fixture_kind(n)}
                             for n in fixtures.fixture_names()]}

    @app.post("/api/v1/sessions", status_code=201)
    def create_session(payload: dict = Body(...)) -> dict:
        name = payload.get("fixture")
        raw = payload.get("document")
        if (name is None) == (raw is None):
            raise HTTPException(
                422, detail="give exactly one of fixture, document")
        try:
            if name is not None:
                doc = netio.document_for(fixtures.fixture(name))
                source = name
            else:
                doc = netio.parse(json.dumps(raw))
                source = "upload"
        except (DocumentError, ValidationError, NetError) as exc:
            raise HTTPException(422, detail=str(exc)) from exc
        sid = uuid.uuid4().hex[:12]
        s = Session(sid, doc, source)
        s.markings.append(doc.initial_marking())
        with lock:
            sessions[sid] = s
        return {"id": sid, "version": s.version, "kind": doc.kind}

    @app.get("/api/v1/sessions/{sid}/state")
    def get_state(sid: str, limit: int = DEFAULT_STEP_LIMIT) -> dict:
        return state_payload(get_session(sid), limit)

    @app.post("/api/v1/sessions/{sid}/fire")
    def fire_step(sid: str, payload: dict = Body(...)) -> dict:
        s = get_session(sid)
        with lock:
            check_version(s, payload)
            u = frozenset(payload.get("step") or ())
            if not u:
                raise HTTPException(422, detail="empty step")
            try:
                after = _fire(s.doc, s.marking, u)
            except StepNotEnabled as exc:
                raise HTTPException(
                    422, detail={"error": "step-not-enabled",
                                 "step": sorted(u),
                                 "missing": sorted(exc.missing),
                                 "reason": exc.reason}) from exc
            except NetError as exc:
                raise HTTPException(422, detail=str(exc)) from exc
            s.steps.append(u)
            s.markings.append(after)
            s.version += 1
        return state_payload(s)

    @app.post("/api/v1/sessions/{sid}/undo")
    def undo_step(sid: str, payload: dict = Body(...)) -> dict:
        s = get_session(sid)
        with lock:
            check_version(s, payload)
            if not s.steps:
                raise HTTPException(422, detail="nothing to undo")
            s.steps.pop()
            s.markings.pop()
            s.version += 1
        return state_payload(s)

    @app.post("/api/v1/sessions/{sid}/reset")
    def reset_session(sid: str, payload: dict = Body(...)) -> dict:
        s = get_session(sid)
        with lock:
            check_version(s, payload)
            del s.steps[:]
            del s.markings[1:]
            s.version += 1
        return state_payload(s)

    @app.get("/api/v1/sessions/{sid}/document")
    def get_document(sid: str) -> dict:
        s = get_session(sid)
        return json.loads(netio.serialize(s.doc))

    @app.get("/api/v1/sessions/{sid}/trace")
    def get_trace(sid: str) -> dict:
        s = get_session(sid)
        text = _trace_text(s.steps)
        ref = s.source if s.source != "upload" else "net.sonet.json"
        return {"id": s.id, "version": s.version,
                "steps": [sorted(u) for u in s.steps],
                "markings": [sorted(m) for m in s.markings],
                "text": text,
                "replay_command": f"sonet run {ref} --steps '{text}'"}

    @app.get("/api/v1/sessions/{sid}/scenario")
    def get_scenario(sid: str) -> dict:
        s = get_session(sid)
        try:
            payload = _scenario_payload(s.doc, list(s.steps))
        except NetError as exc:
            raise HTTPException(
                422, detail={"error": "no-scenario",
                             "detail": str(exc)}) from exc
        payload["version"] = s.version
        return payload

    @app.get("/api/v1/sessions/{sid}/scenarios")
    def list_scenarios(sid: str) -> dict:
        s = get_session(sid)
        try:
            return {"version": s.version,
                    "scenarios": _scenario_list(s.doc)}
        except NetError as exc:
            raise HTTPException(422, detail=str(exc)) from exc

    @app.get("/api/v1/sessions/{sid}/dot",
             response_class=PlainTextResponse)
    def get_dot(sid: str) -> str:
        s = get_session(sid)
        return netio.export_dot(s.doc, marking=s.marking)

    @app.delete("/api/v1/sessions/{sid}", status_code=204)
    def delete_session(sid: str) -> None:
        get_session(sid)
        with lock:
            del sessions[sid]

    return app
