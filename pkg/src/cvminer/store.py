"""Versioned, copy-on-write corpus store.

Every state change produces a new numbered snapshot directory; existing
versions are never touched, so any number of readers can keep using an old
snapshot while the single writer publishes a new one. Layout per version:

    corpus/<version>/manifest
    corpus/<version>/raw/<id>.txt
    corpus/<version>/resumes/<id>.doc
    corpus/<version>/model.doc          (once a model is trained)
    corpus/<version>/edges.tsv          (materialized relation cache)

Everything is plain text, diff-able and reproducible: re-ingesting the same
input yields byte-identical resume documents.
"""

from __future__ import annotations

import datetime as _dt
import json
from dataclasses import dataclass, replace
from datetime import date
from pathlib import Path

from .classifier import PatternModel, parse_model, serialize_model
from .document import parse_document, serialize_base
from .errors import AllResumesFailed, InvalidRank, UnknownResume
from .lexicon import Lexicon, default_lexicon
from .model import (
    Gender,
    LabelSource,
    PatternLabel,
    RankSource,
    RawResume,
    ResumeBase,
    Title,
)
from .parser import parse_resume
from .ranks import RankException, RankRule, quantify
from .relations import RelationEdge, export_edges

MANIFEST_NAME = "manifest"


@dataclass(frozen=True)
class RankEdit:
    record_index: int
    org_index: int
    title_index: int
    rank: int


@dataclass(frozen=True)
class LabelEdit:
    pattern: PatternLabel


@dataclass(frozen=True)
class BasicInfoEdit:
    field: str
    value: str | None


Edit = RankEdit | LabelEdit | BasicInfoEdit

_BASIC_FIELDS = {
    "name",
    "gender",
    "nation",
    "birth_place",
    "date_birth",
    "date_work",
    "date_party",
}


@dataclass(frozen=True)
class CorpusSnapshot:
    version: int
    resumes: dict[str, ResumeBase]
    raw_texts: dict[str, str]
    warnings: dict[str, list[str]]
    failed: dict[str, str]
    as_of: date
    created_at: str
    model: PatternModel | None = None
    edges: tuple[RelationEdge, ...] | None = None


class CorpusStore:
    """Directory-backed snapshot store; one writer, any number of readers."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def versions(self) -> list[int]:
        return sorted(
            int(p.name) for p in self.root.iterdir() if p.is_dir() and p.name.isdigit()
        )

    def current_version(self) -> int | None:
        versions = self.versions()
        return versions[-1] if versions else None

    # -- writing ---------------------------------------------------------

    def ingest(
        self,
        raws: list[RawResume],
        lexicon: Lexicon | None = None,
        rules: list[RankRule] | None = None,
        exceptions: list[RankException] | None = None,
        as_of: date | None = None,
    ) -> CorpusSnapshot:
        """Parse + quantify raw resumes into a new snapshot version."""
        lexicon = lexicon or default_lexicon()
        as_of = as_of or date.today()
        resumes: dict[str, ResumeBase] = {}
        raw_texts: dict[str, str] = {}
        warnings: dict[str, list[str]] = {}
        failed: dict[str, str] = {}
        for raw in sorted(raws, key=lambda r: r.id):
            collected: list[str] = []
            try:
                base = parse_resume(raw, lexicon, collected)
            except Exception as exc:  # noqa: BLE001 - every parse error is survivable
                failed[raw.id] = str(exc)
                continue
            resumes[raw.id] = quantify(base, rules, exceptions)
            raw_texts[raw.id] = raw.text
            if collected:
                warnings[raw.id] = collected
        if not resumes:
            raise AllResumesFailed(f"all {len(raws)} resumes failed to parse")
        return self._write_version(resumes, raw_texts, warnings, failed, None, as_of)

    def apply_edit(
        self, snapshot: CorpusSnapshot, resume_id: str, edit: Edit
    ) -> CorpusSnapshot:
        return self.apply_edits(snapshot, [(resume_id, edit)])

    def apply_edits(
        self, snapshot: CorpusSnapshot, edits: list[tuple[str, Edit]]
    ) -> CorpusSnapshot:
        """A new version with the edits applied; the input snapshot is untouched."""
        resumes = dict(snapshot.resumes)
        for resume_id, edit in edits:
            if resume_id not in resumes:
                raise UnknownResume(resume_id)
            resumes[resume_id] = _apply_one(resumes[resume_id], edit)
        return self._write_version(
            resumes,
            snapshot.raw_texts,
            snapshot.warnings,
            snapshot.failed,
            snapshot.model,
            snapshot.as_of,
        )

    def with_model(
        self,
        snapshot: CorpusSnapshot,
        model: PatternModel,
        classified: dict[str, PatternLabel] | None = None,
    ) -> CorpusSnapshot:
        """A new version carrying a trained model and classifier-made labels."""
        resumes = dict(snapshot.resumes)
        for resume_id, label in (classified or {}).items():
            base = resumes[resume_id]
            if base.label_source is LabelSource.EXPERT:
                continue
            resumes[resume_id] = base.with_label(label, LabelSource.CLASSIFIER)
        return self._write_version(
            resumes,
            snapshot.raw_texts,
            snapshot.warnings,
            snapshot.failed,
            model,
            snapshot.as_of,
        )

    def save_edges(self, snapshot: CorpusSnapshot, edges: list[RelationEdge]) -> Path:
        """Materialize the relation cache for this version (derived data)."""
        path = self.root / str(snapshot.version) / "edges.tsv"
        path.write_text(export_edges(edges), encoding="utf-8")
        return path

    def _write_version(
        self,
        resumes: dict[str, ResumeBase],
        raw_texts: dict[str, str],
        warnings: dict[str, list[str]],
        failed: dict[str, str],
        model: PatternModel | None,
        as_of: date,
    ) -> CorpusSnapshot:
        version = (self.current_version() or 0) + 1
        created_at = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
        tmp = self.root / f".tmp-{version}"
        if tmp.exists():
            raise RuntimeError(f"stale temp directory {tmp}")
        (tmp / "resumes").mkdir(parents=True)
        (tmp / "raw").mkdir()
        for resume_id in sorted(resumes):
            (tmp / "resumes" / f"{resume_id}.doc").write_text(
                serialize_base(resumes[resume_id]), encoding="utf-8"
            )
            if resume_id in raw_texts:
                (tmp / "raw" / f"{resume_id}.txt").write_text(
                    raw_texts[resume_id], encoding="utf-8"
                )
        if model is not None:
            (tmp / "model.doc").write_text(serialize_model(model), encoding="utf-8")
        manifest = {
            "version": version,
            "created_at": created_at,
            "as_of": as_of.isoformat(),
            "resume_ids": sorted(resumes),
            "warnings": {k: warnings[k] for k in sorted(warnings)},
            "failed": {k: failed[k] for k in sorted(failed)},
        }
        (tmp / MANIFEST_NAME).write_text(
            json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        tmp.rename(self.root / str(version))
        return CorpusSnapshot(
            version=version,
            resumes=dict(resumes),
            raw_texts=dict(raw_texts),
            warnings={k: list(v) for k, v in warnings.items()},
            failed=dict(failed),
            as_of=as_of,
            created_at=created_at,
            model=model,
            edges=None,
        )

    # -- reading ---------------------------------------------------------

    def load(self, version: int | None = None) -> CorpusSnapshot:
        if version is None:
            version = self.current_version()
            if version is None:
                raise FileNotFoundError(f"no snapshots under {self.root}")
        vdir = self.root / str(version)
        manifest = json.loads((vdir / MANIFEST_NAME).read_text(encoding="utf-8"))
        resumes = {}
        raw_texts = {}
        for resume_id in manifest["resume_ids"]:
            resumes[resume_id] = parse_document(
                (vdir / "resumes" / f"{resume_id}.doc").read_text(encoding="utf-8")
            )
            raw_path = vdir / "raw" / f"{resume_id}.txt"
            if raw_path.exists():
                raw_texts[resume_id] = raw_path.read_text(encoding="utf-8")
        model = None
        model_path = vdir / "model.doc"
        if model_path.exists():
            model = parse_model(model_path.read_text(encoding="utf-8"))
        edges = None
        edges_path = vdir / "edges.tsv"
        if edges_path.exists():
            edges = tuple(_parse_edge(line) for line in
                          edges_path.read_text(encoding="utf-8").splitlines() if line)
        return CorpusSnapshot(
            version=manifest["version"],
            resumes=resumes,
            raw_texts=raw_texts,
            warnings=manifest.get("warnings", {}),
            failed=manifest.get("failed", {}),
            as_of=date.fromisoformat(manifest["as_of"]),
            created_at=manifest["created_at"],
            model=model,
            edges=edges,
        )


def _parse_edge(line: str) -> RelationEdge:
    a, b, kind, value = line.split("\t")
    return RelationEdge(a=a, b=b, kind=kind, value=float(value))


def _apply_one(base: ResumeBase, edit: Edit) -> ResumeBase:
    if isinstance(edit, RankEdit):
        return _apply_rank_edit(base, edit)
    if isinstance(edit, LabelEdit):
        return base.with_label(edit.pattern, LabelSource.EXPERT)
    if isinstance(edit, BasicInfoEdit):
        return _apply_basic_edit(base, edit)
    raise TypeError(f"unknown edit type {type(edit).__name__}")


def _apply_rank_edit(base: ResumeBase, edit: RankEdit) -> ResumeBase:
    if not 0 <= edit.rank <= 8:
        raise InvalidRank(f"rank {edit.rank} outside 0..8")
    try:
        record = base.experiences[edit.record_index]
        org = record.organizations[edit.org_index]
        title = org.titles[edit.title_index]
    except IndexError:
        raise InvalidRank(
            f"no title at record {edit.record_index}, org {edit.org_index}, "
            f"title {edit.title_index}"
        ) from None
    new_title = Title(
        title_name=title.title_name, rank=edit.rank, rank_source=RankSource.EXPERT
    )
    new_titles = tuple(
        new_title if k == edit.title_index else t for k, t in enumerate(org.titles)
    )
    new_orgs = tuple(
        replace(o, titles=new_titles) if k == edit.org_index else o
        for k, o in enumerate(record.organizations)
    )
    new_records = tuple(
        replace(r, organizations=new_orgs) if k == edit.record_index else r
        for k, r in enumerate(base.experiences)
    )
    out = replace(base, experiences=new_records)
    # the stored classification no longer matches the edited features
    if out.label_source is LabelSource.CLASSIFIER:
        out = replace(out, pattern_label=None, label_source=None)
    return out


def _apply_basic_edit(base: ResumeBase, edit: BasicInfoEdit) -> ResumeBase:
    if edit.field not in _BASIC_FIELDS:
        raise ValueError(f"unknown basic-info field {edit.field!r}")
    basic = base.basic
    value = edit.value
    if edit.field == "name":
        basic = replace(basic, name=value or "")
    elif edit.field == "gender":
        basic = replace(basic, gender=Gender(value or "unknown"))
    elif edit.field == "nation":
        basic = replace(basic, nation=value)
    elif edit.field == "birth_place":
        basic = replace(basic, birth_place=value)
    else:
        parsed = date.fromisoformat(value) if value else None
        attr = {"date_birth": "birth_date", "date_work": "work_date", "date_party": "party_date"}
        basic = replace(basic, **{attr[edit.field]: parsed})
    return replace(base, basic=basic)
