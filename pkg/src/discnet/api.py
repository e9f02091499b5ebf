"""Local HTTP JSON API for the workbench UI and scripted clients.

Single-process, local-first, no authentication.  Error bodies are always
``{"code", "message", "detail"}`` so clients can branch on ``code``.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import exports, gateway
from .corpus import MatchPolicy
from .errors import WorkbenchError
from .sessions import SessionStore

_STATUS_BY_CODE = {
    "session-not-found": 404,
    "step-out-of-range": 400,
    "bad-parameter": 400,
    # everything else that is a client-data problem
    "corpus-format": 422,
    "encoding": 422,
    "integrity": 422,
    "empty-corpus": 422,
    "empty-vocabulary": 422,
    "sample-size": 422,
    "pairing": 422,
    "degenerate-variance": 422,
    "sheet-precondition": 422,
}

_MEDIA_TYPES = {
    "json": "application/json",
    "dot": "text/vnd.graphviz",
    "csv": "text/csv",
}


class PolicyModel(BaseModel):
    mode: str = "normalized-token"
    case_fold: bool = True
    unicode_normalize: bool = True


class CreateSessionRequest(BaseModel):
    corpus_csv: str
    wordlist: str
    policy: PolicyModel | None = None


class TTestRequest(BaseModel):
    kind: str = Field(pattern="^(paired|unpaired)$")
    a: list[float]
    b: list[float]
    welch: bool = False


def create_app(store: SessionStore, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="discnet", version="0.1.0")

    @app.exception_handler(WorkbenchError)
    async def workbench_error(_request: Request, exc: WorkbenchError):
        return JSONResponse(
            status_code=_STATUS_BY_CODE.get(exc.code, 500),
            content={"code": exc.code, "message": exc.message, "detail": exc.detail()},
        )

    @app.post("/api/sessions", status_code=201)
    def create_session(req: CreateSessionRequest):
        policy = MatchPolicy.from_dict(req.policy.model_dump()) if req.policy else MatchPolicy()
        session = store.create(req.corpus_csv.encode("utf-8"), req.wordlist.encode("utf-8"), policy)
        return session.meta_obj()

    @app.get("/api/sessions/{session_id}")
    def session_meta(session_id: str):
        return store.get(session_id).meta_obj()

    @app.get("/api/sessions/{session_id}/units")
    def session_units(session_id: str):
        session = store.get(session_id)
        rows = session.bip.matrix.rows
        return {
            "units": [
                {
                    "unit_id": u.unit_id,
                    "agent": u.agent,
                    "text": u.text,
                    "group": u.group,
                    "words": sorted(session.vocab.words[w] for w in rows[pos]),
                }
                for pos, u in enumerate(session.corpus.units)
            ]
        }

    @app.get("/api/sessions/{session_id}/networks")
    def session_networks(session_id: str, step: int | None = None):
        session = store.get(session_id)
        k = session.n_units if step is None else step
        return gateway.networks_wire(session, k)

    @app.get("/api/sessions/{session_id}/metrics")
    def session_metrics(session_id: str, kind: str = "words", metric: str = "density"):
        session = store.get(session_id)
        return exports.series_to_obj(gateway.get_metric_series(session, kind, metric))

    @app.get("/api/sessions/{session_id}/export")
    def session_export(
        session_id: str,
        format: str = "json",
        kind: str = "words",
        step: int | None = None,
        metric: str = "density",
    ):
        session = store.get(session_id)
        bundle = gateway.export(session, format, kind, step=step, metric=metric)
        return Response(content=bundle.payload, media_type=_MEDIA_TYPES[bundle.format])

    @app.put("/api/sessions/{session_id}/sheet")
    def put_sheet(session_id: str, sheet_obj: dict):
        return store.save_sheet(session_id, sheet_obj).to_obj()

    @app.get("/api/sessions/{session_id}/sheet")
    def get_sheet(session_id: str):
        sheet = store.load_sheet(session_id)
        obj = sheet.to_obj()
        obj["validation"] = sheet.validate().to_obj()
        return obj

    @app.post("/api/stats/ttest")
    def stats_ttest(req: TTestRequest):
        return gateway.run_stats(req.kind, req.a, req.b, welch=req.welch).to_obj()

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=Path(ui_dir), html=True), name="ui")

    return app
