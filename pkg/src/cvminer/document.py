"""Canonical resume document: serialization and strict parsing.

The wire format is UTF-8 JSON with a fixed field order, two-space indent and
a trailing newline, so that equal bases always produce byte-equal documents.
``parse_document`` is the exact inverse and validates every invariant,
reporting the path of the first offending field.
"""

from __future__ import annotations

import json
from datetime import date
from typing import Any

from .errors import SchemaViolation
from .model import (
    BasicInfo,
    ExperienceRecord,
    Gender,
    LabelSource,
    Location,
    Organization,
    PatternLabel,
    RankSource,
    ResumeBase,
    Title,
)

OPEN_END = "OPEN"


def serialize_base(base: ResumeBase) -> str:
    """Render a resume base as its canonical document text."""
    doc: dict[str, Any] = {
        "resume_id": base.resume_id,
        "basic_info": {
            "name": base.basic.name,
            "gender": base.basic.gender.value,
            "nation": base.basic.nation,
            "birth_place": base.basic.birth_place,
            "date_birth": _date_out(base.basic.birth_date),
            "date_work": _date_out(base.basic.work_date),
            "date_party": _date_out(base.basic.party_date),
        },
        "experience": [_record_out(rec) for rec in base.experiences],
    }
    if base.pattern_label is not None:
        doc["pattern_label"] = base.pattern_label.value
        doc["label_source"] = base.label_source.value
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_document(doc: str) -> ResumeBase:
    """Parse a canonical document back into a resume base."""
    try:
        raw = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("$", f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise SchemaViolation("$", "top level must be an object")

    resume_id = _req_str(raw, "resume_id", "resume_id")
    basic = _basic_in(_req(raw, "basic_info", "basic_info"))
    exp_raw = _req(raw, "experience", "experience")
    if not isinstance(exp_raw, list):
        raise SchemaViolation("experience", "must be an array")
    records = tuple(
        _record_in(item, f"experience[{i}]") for i, item in enumerate(exp_raw)
    )

    label = None
    source = None
    if "pattern_label" in raw and raw["pattern_label"] is not None:
        label = _enum_in(PatternLabel, raw["pattern_label"], "pattern_label")
        source = _enum_in(LabelSource, raw.get("label_source"), "label_source")

    try:
        return ResumeBase(
            resume_id=resume_id,
            basic=basic,
            experiences=records,
            pattern_label=label,
            label_source=source,
        )
    except ValueError as exc:
        raise SchemaViolation("experience", str(exc)) from None


def _date_out(d: date | None) -> str | None:
    return d.isoformat() if d is not None else None


def _record_out(rec: ExperienceRecord) -> dict[str, Any]:
    return {
        "date_begin": rec.date_begin.isoformat(),
        "date_end": OPEN_END if rec.date_end is None else rec.date_end.isoformat(),
        "location": {
            "province": rec.location.province,
            "city": rec.location.city,
        },
        "organizations": [
            {
                "organization_name": org.org_name,
                "titles": [_title_out(t) for t in org.titles],
            }
            for org in rec.organizations
        ],
    }


def _title_out(title: Title) -> dict[str, Any]:
    out: dict[str, Any] = {"title_name": title.title_name, "rank": title.rank}
    if title.rank_source is not None:
        out["rank_source"] = title.rank_source.value
    return out


def _req(obj: Any, key: str, path: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaViolation(path, "missing required field")
    return obj[key]


def _req_str(obj: Any, key: str, path: str) -> str:
    value = _req(obj, key, path)
    if not isinstance(value, str):
        raise SchemaViolation(path, "must be a string")
    return value


def _opt_str(obj: dict, key: str, path: str) -> str | None:
    value = obj.get(key)
    if value is not None and not isinstance(value, str):
        raise SchemaViolation(path, "must be a string or null")
    return value


def _date_in(value: Any, path: str) -> date:
    if not isinstance(value, str):
        raise SchemaViolation(path, "must be a YYYY-MM-DD string")
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise SchemaViolation(path, f"invalid calendar date {value!r}") from None


def _opt_date_in(obj: dict, key: str, path: str) -> date | None:
    value = obj.get(key)
    if value is None:
        return None
    return _date_in(value, path)


def _enum_in(cls, value: Any, path: str):
    try:
        return cls(value)
    except ValueError:
        allowed = [e.value for e in cls]
        raise SchemaViolation(path, f"{value!r} not one of {allowed}") from None


def _basic_in(raw: Any) -> BasicInfo:
    if not isinstance(raw, dict):
        raise SchemaViolation("basic_info", "must be an object")
    name = raw.get("name", "")
    if not isinstance(name, str):
        raise SchemaViolation("basic_info.name", "must be a string")
    basic = BasicInfo(
        name=name,
        gender=_enum_in(Gender, raw.get("gender", "unknown"), "basic_info.gender"),
        nation=_opt_str(raw, "nation", "basic_info.nation"),
        birth_place=_opt_str(raw, "birth_place", "basic_info.birth_place"),
        birth_date=_opt_date_in(raw, "date_birth", "basic_info.date_birth"),
        work_date=_opt_date_in(raw, "date_work", "basic_info.date_work"),
        party_date=_opt_date_in(raw, "date_party", "basic_info.date_party"),
    )
    if basic.birth_date and basic.work_date and basic.work_date < basic.birth_date:
        raise SchemaViolation("basic_info.date_work", "work date precedes birth date")
    return basic


def _record_in(raw: Any, path: str) -> ExperienceRecord:
    if not isinstance(raw, dict):
        raise SchemaViolation(path, "must be an object")
    begin = _date_in(_req(raw, "date_begin", f"{path}.date_begin"), f"{path}.date_begin")
    end_raw = _req(raw, "date_end", f"{path}.date_end")
    end = None if end_raw == OPEN_END else _date_in(end_raw, f"{path}.date_end")
    if end is not None and end <= begin:
        raise SchemaViolation(f"{path}.date_end", "date_end not after date_begin")

    loc_raw = raw.get("location") or {}
    if not isinstance(loc_raw, dict):
        raise SchemaViolation(f"{path}.location", "must be an object")
    location = Location(
        province=_opt_str(loc_raw, "province", f"{path}.location.province"),
        city=_opt_str(loc_raw, "city", f"{path}.location.city"),
    )

    orgs_raw = _req(raw, "organizations", f"{path}.organizations")
    if not isinstance(orgs_raw, list) or not orgs_raw:
        raise SchemaViolation(f"{path}.organizations", "must be a non-empty array")
    orgs = tuple(
        _org_in(item, f"{path}.organizations[{i}]") for i, item in enumerate(orgs_raw)
    )
    return ExperienceRecord(
        date_begin=begin, date_end=end, location=location, organizations=orgs
    )


def _org_in(raw: Any, path: str) -> Organization:
    if not isinstance(raw, dict):
        raise SchemaViolation(path, "must be an object")
    name = _req_str(raw, "organization_name", f"{path}.organization_name")
    titles_raw = _req(raw, "titles", f"{path}.titles")
    if not isinstance(titles_raw, list) or not titles_raw:
        raise SchemaViolation(f"{path}.titles", "must be a non-empty array")
    titles = tuple(
        _title_in(item, f"{path}.titles[{i}]") for i, item in enumerate(titles_raw)
    )
    return Organization(org_name=name, titles=titles)


def _title_in(raw: Any, path: str) -> Title:
    if not isinstance(raw, dict):
        raise SchemaViolation(path, "must be an object")
    name = _req_str(raw, "title_name", f"{path}.title_name")
    rank = raw.get("rank")
    if rank is not None and (not isinstance(rank, int) or not 0 <= rank <= 8):
        raise SchemaViolation(f"{path}.rank", "must be an integer 0..8 or null")
    source = None
    if raw.get("rank_source") is not None:
        source = _enum_in(RankSource, raw["rank_source"], f"{path}.rank_source")
    return Title(title_name=name, rank=rank, rank_source=source)
