"""Identify which corpus resume an unknown/unfaithful resume belongs to.

The unknown resume is scored against every corpus member with the matching
degree; the peak is the presumed owner. The two record lists are then
aligned greedily by temporal overlap and diffed field by field to surface
deleted, added or corrupted information.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date

from .errors import EmptyCorpus
from .model import ExperienceRecord, ResumeBase
from .relations import matching_degree, normalize_org

DEFAULT_CANDIDATE_LIMIT = 10
DEFAULT_CONFIDENCE_THRESHOLD = 0.3


@dataclass(frozen=True)
class FieldMismatch:
    path: str
    test_value: str | None
    standard_value: str | None


@dataclass(frozen=True)
class ValidationReport:
    best: str
    degree: float
    candidates: tuple[tuple[str, float], ...]
    mismatches: tuple[FieldMismatch, ...]
    confident: bool

    @property
    def percent(self) -> int:
        return round(100 * self.degree)


def validate(
    unknown: ResumeBase,
    corpus: dict[str, ResumeBase],
    as_of: date | None = None,
    candidate_limit: int = DEFAULT_CANDIDATE_LIMIT,
    threshold: float = DEFAULT_CONFIDENCE_THRESHOLD,
) -> ValidationReport:
    if not corpus:
        raise EmptyCorpus("cannot validate against an empty corpus")

    scored = []
    for resume_id in sorted(corpus):
        degree, _ = matching_degree(unknown, corpus[resume_id], as_of)
        scored.append((resume_id, degree))
    scored.sort(key=lambda item: (-item[1], item[0]))

    best_id, best_degree = scored[0]
    mismatches = diff_resumes(unknown, corpus[best_id], as_of)
    return ValidationReport(
        best=best_id,
        degree=best_degree,
        candidates=tuple(scored[:candidate_limit]),
        mismatches=tuple(mismatches),
        confident=best_degree >= threshold,
    )


def _overlap_days(a: ExperienceRecord, b: ExperienceRecord, as_of: date) -> int:
    begin = max(a.date_begin, b.date_begin)
    end = min(a.end_or(as_of), b.end_or(as_of))
    return max(0, (end - begin).days)


def _share_org(a: ExperienceRecord, b: ExperienceRecord) -> bool:
    orgs_a = {normalize_org(o.org_name) for o in a.organizations}
    return any(normalize_org(o.org_name) in orgs_a for o in b.organizations)


def align_records(
    test: ResumeBase, standard: ResumeBase, as_of: date
) -> list[tuple[int | None, int | None]]:
    """Greedy 1:1 alignment by descending temporal overlap (org equality as
    tie-break); unmatched records pair with None."""
    pairs = []
    for i, rec_t in enumerate(test.experiences):
        for j, rec_s in enumerate(standard.experiences):
            days = _overlap_days(rec_t, rec_s, as_of)
            if days > 0:
                pairs.append((days, _share_org(rec_t, rec_s), i, j))
    pairs.sort(key=lambda p: (-p[0], not p[1], p[2], p[3]))

    used_t: set[int] = set()
    used_s: set[int] = set()
    aligned: list[tuple[int | None, int | None]] = []
    for _, _, i, j in pairs:
        if i in used_t or j in used_s:
            continue
        used_t.add(i)
        used_s.add(j)
        aligned.append((i, j))
    for i in range(len(test.experiences)):
        if i not in used_t:
            aligned.append((i, None))
    for j in range(len(standard.experiences)):
        if j not in used_s:
            aligned.append((None, j))
    aligned.sort(key=lambda p: (p[1] if p[1] is not None else p[0], p[0] is None))
    return aligned


def diff_resumes(
    test: ResumeBase, standard: ResumeBase, as_of: date | None = None
) -> list[FieldMismatch]:
    """Field-level differences; empty test values are treated as missing, not wrong."""
    if as_of is None:
        as_of = date.today()
    out: list[FieldMismatch] = []

    for field_name, t_val, s_val in [
        ("basic_info.name", test.basic.name, standard.basic.name),
        ("basic_info.gender", test.basic.gender.value, standard.basic.gender.value),
        ("basic_info.nation", test.basic.nation, standard.basic.nation),
        ("basic_info.birth_place", test.basic.birth_place, standard.basic.birth_place),
        ("basic_info.date_birth", _d(test.basic.birth_date), _d(standard.basic.birth_date)),
        ("basic_info.date_work", _d(test.basic.work_date), _d(standard.basic.work_date)),
        ("basic_info.date_party", _d(test.basic.party_date), _d(standard.basic.party_date)),
    ]:
        if t_val and s_val and t_val != s_val and t_val != "unknown":
            out.append(FieldMismatch(path=field_name, test_value=t_val, standard_value=s_val))

    for i, j in align_records(test, standard, as_of):
        if i is None:
            out.append(
                FieldMismatch(
                    path=f"experience[{j}]",
                    test_value=None,
                    standard_value=_record_summary(standard.experiences[j]),
                )
            )
            continue
        if j is None:
            out.append(
                FieldMismatch(
                    path=f"experience[{i}]",
                    test_value=_record_summary(test.experiences[i]),
                    standard_value=None,
                )
            )
            continue
        out.extend(_diff_record(test.experiences[i], standard.experiences[j], f"experience[{j}]"))
    return out


def _d(value: date | None) -> str | None:
    return value.isoformat() if value else None


def _record_summary(rec: ExperienceRecord) -> str:
    orgs = "; ".join(o.org_name for o in rec.organizations)
    end = rec.date_end.isoformat() if rec.date_end else "OPEN"
    return f"{rec.date_begin.isoformat()}..{end} {orgs}"


def _diff_record(
    t: ExperienceRecord, s: ExperienceRecord, path: str
) -> list[FieldMismatch]:
    out = []
    fields = [
        ("date_begin", t.date_begin.isoformat(), s.date_begin.isoformat()),
        ("date_end", _d(t.date_end) or "OPEN", _d(s.date_end) or "OPEN"),
        ("location.province", t.location.province, s.location.province),
        ("location.city", t.location.city, s.location.city),
    ]
    for name, t_val, s_val in fields:
        if t_val and s_val and t_val != s_val:
            out.append(FieldMismatch(path=f"{path}.{name}", test_value=t_val, standard_value=s_val))

    t_orgs = {normalize_org(o.org_name): o for o in t.organizations}
    s_orgs = {normalize_org(o.org_name): o for o in s.organizations}
    for idx, k in enumerate(s_orgs):
        if k not in t_orgs:
            out.append(
                FieldMismatch(
                    path=f"{path}.organizations[{idx}].organization_name",
                    test_value=None,
                    standard_value=s_orgs[k].org_name,
                )
            )
            continue
        t_titles = {tt.title_name.casefold() for tt in t_orgs[k].titles}
        s_titles = {st.title_name.casefold() for st in s_orgs[k].titles}
        if t_titles != s_titles:
            out.append(
                FieldMismatch(
                    path=f"{path}.organizations[{idx}].titles",
                    test_value=", ".join(sorted(tt.title_name for tt in t_orgs[k].titles)),
                    standard_value=", ".join(sorted(st.title_name for st in s_orgs[k].titles)),
                )
            )
    for k in t_orgs:
        if k not in s_orgs:
            out.append(
                FieldMismatch(
                    path=f"{path}.organizations",
                    test_value=t_orgs[k].org_name,
                    standard_value=None,
                )
            )
    return out


def serialize_report(report: ValidationReport) -> str:
    doc = {
        "best": report.best,
        "degree": report.degree,
        "percent": report.percent,
        "confident": report.confident,
        "candidates": [{"resume_id": rid, "degree": deg} for rid, deg in report.candidates],
        "mismatches": [
            {"path": m.path, "test_value": m.test_value, "standard_value": m.standard_value}
            for m in report.mismatches
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
