"""HTTP facade over the engine for the workbench UI.

Reads are served from an immutable snapshot; mutations go through a single
writer lock, publish a new snapshot version atomically, and return it.
Clients may send the version they saw; a mismatch yields 409 so the UI can
refresh instead of clobbering newer edits.
"""

from __future__ import annotations

import threading
from datetime import date

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .classifier import classify, train
from .errors import CvminerError, MissingClass, UnknownResume
from .features import corpus_rank_stats, extract_features, rank_durations
from .lexicon import Lexicon, default_lexicon
from .mobility import (
    CommunityTaxonomy,
    RegionGeometry,
    animate_range,
    default_taxonomy,
    snapshot as mobility_snapshot,
)
from .model import LabelSource, PatternLabel, RawResume, ResumeBase
from .parser import parse_resume
from .ranks import RankException, RankRule, quantify, trajectory_of
from .relations import NeighborQuery, top_k
from .store import BasicInfoEdit, CorpusSnapshot, CorpusStore, LabelEdit, RankEdit
from .validator import validate


class LabelBody(BaseModel):
    pattern: str
    version: int | None = None


class RankBody(BaseModel):
    record_index: int
    org_index: int
    title_index: int
    rank: int
    version: int | None = None


class BasicBody(BaseModel):
    field: str
    value: str | None = None
    version: int | None = None


class RetrainBody(BaseModel):
    version: int | None = None


class ValidateBody(BaseModel):
    text: str


class Engine:
    """Snapshot holder: lock-free reads, serialized writes."""

    def __init__(
        self,
        store: CorpusStore,
        snapshot: CorpusSnapshot,
        lexicon: Lexicon | None = None,
        rules: list[RankRule] | None = None,
        exceptions: list[RankException] | None = None,
    ):
        self.store = store
        self.snapshot = snapshot
        self.lexicon = lexicon or default_lexicon()
        self.rules = rules
        self.exceptions = exceptions
        self.geometry = RegionGeometry()
        self.taxonomy: CommunityTaxonomy = default_taxonomy()
        self._write_lock = threading.Lock()

    def mutate(self, expected_version: int | None, fn) -> CorpusSnapshot:
        with self._write_lock:
            current = self.snapshot
            if expected_version is not None and expected_version != current.version:
                raise HTTPException(
                    status_code=409,
                    detail=f"version {expected_version} is stale (current {current.version})",
                )
            new = fn(current)
            self.snapshot = new
            return new


def _year_value(d: date) -> float:
    return d.year + (d - date(d.year, 1, 1)).days / 365.25


def _base_to_payload(base: ResumeBase) -> dict:
    from .document import serialize_base
    import json

    return json.loads(serialize_base(base))


def _get_base(snap: CorpusSnapshot, resume_id: str) -> ResumeBase:
    base = snap.resumes.get(resume_id)
    if base is None:
        raise HTTPException(status_code=404, detail=f"unknown resume {resume_id!r}")
    return base


def create_app(
    store: CorpusStore,
    lexicon: Lexicon | None = None,
    rules: list[RankRule] | None = None,
    exceptions: list[RankException] | None = None,
) -> FastAPI:
    engine = Engine(store, store.load(), lexicon, rules, exceptions)
    app = FastAPI(title="cvminer", version="0.1.0")
    app.state.engine = engine
    # the workbench may be served from a different origin than the API
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(CvminerError)
    async def _engine_error(_request, exc: CvminerError):
        from fastapi.responses import JSONResponse

        status = 404 if isinstance(exc, UnknownResume) else 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/resumes")
    def list_resumes(limit: int = 1000, offset: int = 0):
        snap = engine.snapshot
        ids = sorted(snap.resumes)[offset : offset + limit]
        return {
            "version": snap.version,
            "total": len(snap.resumes),
            "resumes": [
                {
                    "resume_id": rid,
                    "name": snap.resumes[rid].basic.name,
                    "pattern_label": _opt(snap.resumes[rid].pattern_label),
                    "label_source": _opt(snap.resumes[rid].label_source),
                }
                for rid in ids
            ],
        }

    @app.get("/resumes/{resume_id}")
    def get_resume(resume_id: str):
        snap = engine.snapshot
        base = _get_base(snap, resume_id)
        return {
            "version": snap.version,
            "resume": _base_to_payload(base),
            "raw_text": snap.raw_texts.get(resume_id),
            "warnings": snap.warnings.get(resume_id, []),
        }

    @app.get("/resumes/{resume_id}/trajectory")
    def get_trajectory(resume_id: str, mode: str = Query("year")):
        if mode not in ("year", "age"):
            raise HTTPException(status_code=400, detail="mode must be 'year' or 'age'")
        snap = engine.snapshot
        base = _get_base(snap, resume_id)
        offset = 0.0
        if mode == "age":
            if base.basic.birth_date is None:
                raise HTTPException(
                    status_code=400, detail="age mode requires a birth date"
                )
            offset = float(base.basic.birth_date.year)
        traj = trajectory_of(base, snap.as_of)
        segments = []
        for idx, begin, end, rank in traj.record_spans():
            rows = [r for r in traj.rows if r.record_index == idx]
            segments.append(
                {
                    "x_begin": _year_value(begin) - offset,
                    "x_end": _year_value(end) - offset,
                    "rank": rank,
                    "location": _loc_str(rows[0].location),
                    "org": "; ".join(dict.fromkeys(r.org for r in rows)),
                    "title": "; ".join(dict.fromkeys(r.title for r in rows)),
                }
            )
        return {
            "version": snap.version,
            "resume_id": resume_id,
            "mode": mode,
            "segments": segments,
            "pattern": _opt(base.pattern_label),
        }

    @app.get("/histogram")
    def get_histogram(id: str | None = None):
        snap = engine.snapshot
        trajectories = [
            trajectory_of(base, snap.as_of) for _, base in sorted(snap.resumes.items())
        ]
        stats = corpus_rank_stats(trajectories)
        individual = None
        if id is not None:
            base = _get_base(snap, id)
            individual = {
                "resume_id": id,
                "t": rank_durations(trajectory_of(base, snap.as_of)),
            }
        return {
            "version": snap.version,
            "mean_years": list(stats.mean_years),
            "count": stats.count,
            "mean_growth_rate": stats.mean_growth_rate,
            "individual": individual,
        }

    @app.get("/resumes/{resume_id}/neighbors")
    def get_neighbors(resume_id: str, k: int = 5, kind: str = "explicit"):
        snap = engine.snapshot
        _get_base(snap, resume_id)
        try:
            query = NeighborQuery(focus=resume_id, k=k, kind=kind)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        edges = top_k(snap.resumes, query, as_of=snap.as_of)
        return {
            "version": snap.version,
            "focus": resume_id,
            "k": k,
            "kind": kind,
            "neighbors": [
                {
                    "id": e.b,
                    "value": e.value,
                    "kind": e.kind,
                    "evidence": [
                        {
                            "org": ev.org,
                            "overlap_begin": ev.overlap_begin.isoformat(),
                            "overlap_end": ev.overlap_end.isoformat(),
                        }
                        for ev in e.evidence
                    ],
                }
                for e in edges
            ],
        }

    @app.post("/resumes/{resume_id}/label")
    def post_label(resume_id: str, body: LabelBody):
        try:
            pattern = PatternLabel(body.pattern)
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"unknown pattern {body.pattern!r}"
            ) from None
        snap = engine.mutate(
            body.version,
            lambda cur: engine.store.apply_edit(cur, resume_id, LabelEdit(pattern)),
        )
        return {"version": snap.version}

    @app.post("/resumes/{resume_id}/rank")
    def post_rank(resume_id: str, body: RankBody):
        edit = RankEdit(
            record_index=body.record_index,
            org_index=body.org_index,
            title_index=body.title_index,
            rank=body.rank,
        )
        snap = engine.mutate(
            body.version,
            lambda cur: engine.store.apply_edit(cur, resume_id, edit),
        )
        return {"version": snap.version}

    @app.post("/resumes/{resume_id}/basic")
    def post_basic(resume_id: str, body: BasicBody):
        def _edit(cur: CorpusSnapshot) -> CorpusSnapshot:
            try:
                return engine.store.apply_edit(
                    cur, resume_id, BasicInfoEdit(field=body.field, value=body.value)
                )
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None

        snap = engine.mutate(body.version, _edit)
        return {"version": snap.version}

    @app.post("/retrain")
    def post_retrain(body: RetrainBody | None = None):
        def _retrain(cur: CorpusSnapshot) -> CorpusSnapshot:
            labeled = []
            for rid in sorted(cur.resumes):
                base = cur.resumes[rid]
                if base.label_source is LabelSource.EXPERT and base.pattern_label:
                    fv = extract_features(trajectory_of(base, cur.as_of))
                    labeled.append((fv, base.pattern_label))
            if not labeled:
                raise HTTPException(status_code=400, detail="no expert labels to train on")
            try:
                model = train(labeled)
            except MissingClass as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            classified = {}
            for rid in sorted(cur.resumes):
                base = cur.resumes[rid]
                if base.label_source is not LabelSource.EXPERT:
                    fv = extract_features(trajectory_of(base, cur.as_of))
                    classified[rid] = classify(model, fv)
            return engine.store.with_model(cur, model, classified)

        snap = engine.mutate(body.version if body else None, _retrain)
        return {
            "version": snap.version,
            "model": {
                "classes": [
                    {"name": c.label.value, "prior": c.prior}
                    for c in snap.model.classes
                ],
                "sigma_floor": snap.model.sigma_floor,
            },
        }

    @app.post("/validate")
    def post_validate(body: ValidateBody):
        snap = engine.snapshot
        if not body.text.strip():
            raise HTTPException(status_code=400, detail="empty resume text")
        raw = RawResume(id="__unknown__", text=body.text)
        base = quantify(
            parse_resume(raw, engine.lexicon), engine.rules, engine.exceptions
        )
        report = validate(base, snap.resumes, as_of=snap.as_of)
        return {
            "version": snap.version,
            "best": report.best,
            "degree": report.degree,
            "percent": report.percent,
            "confident": report.confident,
            "candidates": [
                {"resume_id": rid, "degree": deg} for rid, deg in report.candidates
            ],
            "mismatches": [
                {
                    "path": m.path,
                    "test_value": m.test_value,
                    "standard_value": m.standard_value,
                }
                for m in report.mismatches
            ],
        }

    @app.get("/mobility")
    def get_mobility(t: str):
        snap = engine.snapshot
        timestamp = _parse_date(t)
        snap_doc = mobility_snapshot(
            snap.resumes,
            timestamp,
            geom=engine.geometry,
            tax=engine.taxonomy,
            as_of=snap.as_of,
        )
        return {"version": snap.version, **_snapshot_payload(snap_doc)}

    @app.get("/mobility/animate")
    def get_mobility_animation(
        frm: str = Query(alias="from"), to: str = Query(...), steps: int = Query(...)
    ):
        if steps < 2:
            raise HTTPException(status_code=400, detail="steps must be >= 2")
        snap = engine.snapshot
        t0, t1 = _parse_date(frm), _parse_date(to)
        if not t0 < t1:
            raise HTTPException(status_code=400, detail="'from' must precede 'to'")
        snaps = animate_range(
            snap.resumes,
            t0,
            t1,
            steps,
            geom=engine.geometry,
            tax=engine.taxonomy,
            as_of=snap.as_of,
        )
        return {
            "version": snap.version,
            "snapshots": [_snapshot_payload(s) for s in snaps],
        }

    @app.get("/geometry")
    def get_geometry():
        g = engine.geometry
        return {
            "disk_radius": g.disk_radius,
            "outer_radius": g.outer_radius,
            "node_unit": g.node_unit,
            "sector_order": list(g.sector_order),
        }

    return app


def _opt(value) -> str | None:
    return value.value if value is not None else None


def _loc_str(location) -> str:
    parts = [p for p in (location.city, location.province) if p]
    return ", ".join(parts)


def _parse_date(raw: str) -> date:
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise HTTPException(
            status_code=400, detail=f"invalid date {raw!r} (expected YYYY-MM-DD)"
        ) from None


def _snapshot_payload(snap) -> dict:
    return {
        "timestamp": snap.timestamp.isoformat(),
        "nodes": [
            {
                "id": n.resume_id,
                "community": n.community,
                "rank": n.rank,
                "x": n.x,
                "y": n.y,
                "links": list(n.links),
            }
            for n in snap.nodes
        ],
        "events": [
            {"id": e.resume_id, "form": e.form, "detail": e.detail}
            for e in snap.events
        ],
    }
