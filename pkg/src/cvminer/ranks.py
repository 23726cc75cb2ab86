"""Title rank quantification and trajectory extraction.

Ranks live on the 0..8 ladder (civilian through president). A rule table
maps title keywords to ranks; an exception table overrides a rule when the
record's location or organization matches a context pattern (e.g. the mayor
of a municipality outranks an ordinary city's mayor). Tables are plain data
files so other ladders can be plugged in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from datetime import date
from importlib import resources
from pathlib import Path

from .errors import UnresolvedRank
from .model import (
    RANK_LADDER,
    RANK_MAX,
    RANK_MIN,
    ExperienceRecord,
    Location,
    RankSource,
    ResumeBase,
    Title,
)


@dataclass(frozen=True)
class RankScale:
    levels: tuple[str, ...] = RANK_LADDER

    def __post_init__(self):
        if len(self.levels) != 9:
            raise ValueError("rank scale must have exactly 9 levels")

    def name_of(self, rank: int) -> str:
        return self.levels[rank]


@dataclass(frozen=True)
class RankRule:
    title_pattern: str
    rank: int
    priority: int = 0

    def __post_init__(self):
        if not RANK_MIN <= self.rank <= RANK_MAX:
            raise ValueError(f"rank {self.rank} outside {RANK_MIN}..{RANK_MAX}")


@dataclass(frozen=True)
class RankException:
    title_pattern: str
    context_pattern: str
    rank_override: int

    def __post_init__(self):
        if not RANK_MIN <= self.rank_override <= RANK_MAX:
            raise ValueError(f"rank {self.rank_override} outside {RANK_MIN}..{RANK_MAX}")


def _norm(text: str) -> str:
    return " ".join(text.lower().split())


def _matches(pattern: str, text: str) -> bool:
    """Word-bounded, case-folded containment of pattern in text."""
    return re.search(rf"\b{re.escape(_norm(pattern))}\b", _norm(text)) is not None


def load_rules(path: str | Path) -> list[RankRule]:
    return [
        RankRule(title_pattern=f[0], rank=int(f[1]), priority=int(f[2]))
        for f in _read_tsv(path, 3)
    ]


def load_exceptions(path: str | Path) -> list[RankException]:
    return [
        RankException(title_pattern=f[0], context_pattern=f[1], rank_override=int(f[2]))
        for f in _read_tsv(path, 3)
    ]


def _read_tsv(path: str | Path, width: int) -> list[list[str]]:
    rows = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != width:
            raise ValueError(f"{path}: expected {width} tab-separated fields: {line!r}")
        rows.append(fields)
    return rows


def default_rules() -> list[RankRule]:
    with resources.as_file(resources.files("cvminer") / "data" / "rank_rules.tsv") as p:
        return load_rules(p)


def default_exceptions() -> list[RankException]:
    with resources.as_file(
        resources.files("cvminer") / "data" / "rank_exceptions.tsv"
    ) as p:
        return load_exceptions(p)


def _context_strings(record: ExperienceRecord, org_name: str) -> list[str]:
    ctx = [org_name]
    if record.location.province:
        ctx.append(record.location.province)
    if record.location.city:
        ctx.append(record.location.city)
    return ctx


def resolve_rank(
    title_name: str,
    record: ExperienceRecord,
    org_name: str,
    rules: list[RankRule],
    exceptions: list[RankException],
) -> tuple[int, RankSource]:
    """Rank for one title: exceptions first, then rules, else 0/unmatched."""
    matching_exc = [
        e
        for e in exceptions
        if _matches(e.title_pattern, title_name)
        and any(_matches(e.context_pattern, ctx) for ctx in _context_strings(record, org_name))
    ]
    if matching_exc:
        best = max(
            matching_exc, key=lambda e: (len(e.title_pattern), len(e.context_pattern))
        )
        return best.rank_override, RankSource.EXCEPTION

    matching = [r for r in rules if _matches(r.title_pattern, title_name)]
    if matching:
        best = max(matching, key=lambda r: (r.priority, len(r.title_pattern)))
        return best.rank, RankSource.RULE
    return 0, RankSource.UNMATCHED


def quantify(
    base: ResumeBase,
    rules: list[RankRule] | None = None,
    exceptions: list[RankException] | None = None,
) -> ResumeBase:
    """Assign a rank to every title; expert-set ranks are left untouched.

    Idempotent: re-quantifying recomputes rule-derived ranks from the same
    tables and therefore changes nothing.
    """
    rules = default_rules() if rules is None else rules
    exceptions = default_exceptions() if exceptions is None else exceptions
    if not rules:
        raise ValueError("rule set must be non-empty")

    new_records = []
    for record in base.experiences:
        new_orgs = []
        for org in record.organizations:
            new_titles = []
            for title in org.titles:
                if title.rank_source is RankSource.EXPERT:
                    new_titles.append(title)
                    continue
                rank, source = resolve_rank(
                    title.title_name, record, org.org_name, rules, exceptions
                )
                new_titles.append(
                    Title(title_name=title.title_name, rank=rank, rank_source=source)
                )
            new_orgs.append(replace(org, titles=tuple(new_titles)))
        new_records.append(replace(record, organizations=tuple(new_orgs)))
    return replace(base, experiences=tuple(new_records))


@dataclass(frozen=True)
class TrajectoryRow:
    record_index: int
    date_begin: date
    date_end: date
    location: Location
    org: str
    title: str
    rank: int


@dataclass(frozen=True)
class CareerTrajectory:
    resume_id: str
    rows: tuple[TrajectoryRow, ...]

    def record_spans(self) -> list[tuple[int, date, date, int]]:
        """(record_index, begin, end, max rank) per distinct record."""
        spans: dict[int, tuple[date, date, int]] = {}
        for row in self.rows:
            cur = spans.get(row.record_index)
            if cur is None:
                spans[row.record_index] = (row.date_begin, row.date_end, row.rank)
            else:
                spans[row.record_index] = (cur[0], cur[1], max(cur[2], row.rank))
        return [(i, b, e, r) for i, (b, e, r) in sorted(spans.items())]


def trajectory_of(base: ResumeBase, as_of: date | None = None) -> CareerTrajectory:
    """Flatten a quantified base into chronological (span, org, title, rank) rows.

    Open-ended records are closed at ``as_of`` (default: today).
    """
    if as_of is None:
        as_of = date.today()
    rows = []
    for idx, record in enumerate(base.experiences):
        end = record.end_or(as_of)
        for org in record.organizations:
            for title in org.titles:
                if title.rank is None:
                    raise UnresolvedRank(
                        f"resume {base.resume_id!r}: title {title.title_name!r} has no rank"
                    )
                rows.append(
                    TrajectoryRow(
                        record_index=idx,
                        date_begin=record.date_begin,
                        date_end=end,
                        location=record.location,
                        org=org.org_name,
                        title=title.title_name,
                        rank=title.rank,
                    )
                )
    return CareerTrajectory(resume_id=base.resume_id, rows=tuple(rows))
