"""Core domain model: raw resumes, the structured resume base, and labels.

Everything here is immutable (frozen dataclasses with tuple fields) so that
bases can be compared for equality, shared between threads, and used as
snapshot contents without defensive copying.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from datetime import date

RANK_MIN = 0
RANK_MAX = 8

# Nine-level ladder, index = rank value.
RANK_LADDER = (
    "civilian",
    "vice county head",
    "county head",
    "vice mayor",
    "mayor",
    "vice governor",
    "governor",
    "vice president",
    "president",
)


class Gender(str, enum.Enum):
    MALE = "male"
    FEMALE = "female"
    UNKNOWN = "unknown"


class PatternLabel(str, enum.Enum):
    """Career progress pattern, in declared tie-break order."""

    ASCENDING = "ascending"
    STEADY = "steady"
    RECESSIONARY = "recessionary"


class LabelSource(str, enum.Enum):
    EXPERT = "expert"
    CLASSIFIER = "classifier"


class RankSource(str, enum.Enum):
    """How a title's rank was assigned."""

    RULE = "rule"
    EXCEPTION = "exception"
    UNMATCHED = "unmatched"
    EXPERT = "expert"


@dataclass(frozen=True)
class RawResume:
    """One semi-structured resume text as received."""

    id: str
    text: str
    source: str | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("resume text must be non-empty")


@dataclass(frozen=True)
class BasicInfo:
    name: str = ""
    gender: Gender = Gender.UNKNOWN
    nation: str | None = None
    birth_place: str | None = None
    birth_date: date | None = None
    work_date: date | None = None
    party_date: date | None = None


@dataclass(frozen=True)
class Title:
    title_name: str
    rank: int | None = None  # None = unset; quantifier fills it
    rank_source: RankSource | None = None

    def __post_init__(self):
        if self.rank is not None and not (RANK_MIN <= self.rank <= RANK_MAX):
            raise ValueError(f"rank {self.rank} outside {RANK_MIN}..{RANK_MAX}")


@dataclass(frozen=True)
class Organization:
    org_name: str
    titles: tuple[Title, ...]

    def __post_init__(self):
        if not self.titles:
            raise ValueError(f"organization {self.org_name!r} has no titles")


@dataclass(frozen=True)
class Location:
    province: str | None = None
    city: str | None = None


@dataclass(frozen=True)
class ExperienceRecord:
    """One career stage: a time span at one or more organizations.

    ``date_end`` of None means the record is still open (ongoing).
    """

    date_begin: date
    date_end: date | None
    location: Location = field(default_factory=Location)
    organizations: tuple[Organization, ...] = ()

    def __post_init__(self):
        if self.date_end is not None and not (self.date_begin < self.date_end):
            raise ValueError(
                f"record span regresses: {self.date_begin} >= {self.date_end}"
            )
        if not self.organizations:
            raise ValueError("experience record has no organizations")

    @property
    def is_open(self) -> bool:
        return self.date_end is None

    def end_or(self, as_of: date) -> date:
        return self.date_end if self.date_end is not None else as_of


@dataclass(frozen=True)
class ResumeBase:
    """The structured, canonical record for one resume."""

    resume_id: str
    basic: BasicInfo = field(default_factory=BasicInfo)
    experiences: tuple[ExperienceRecord, ...] = ()
    pattern_label: PatternLabel | None = None
    label_source: LabelSource | None = None

    def __post_init__(self):
        begins = [r.date_begin for r in self.experiences]
        if begins != sorted(begins):
            raise ValueError("experience records not sorted by date_begin")
        open_idx = [i for i, r in enumerate(self.experiences) if r.is_open]
        if len(open_idx) > 1:
            raise ValueError("more than one open-ended record")
        if open_idx and open_idx[0] != len(self.experiences) - 1:
            raise ValueError("open-ended record must be the last")
        bi = self.basic
        if bi.birth_date and bi.work_date and bi.work_date < bi.birth_date:
            raise ValueError("work date precedes birth date")
        if self.pattern_label is not None and self.label_source is None:
            raise ValueError("pattern_label requires a label_source")

    def career_begin(self) -> date | None:
        return self.experiences[0].date_begin if self.experiences else None

    def with_label(self, label: PatternLabel, source: LabelSource) -> "ResumeBase":
        return replace(self, pattern_label=label, label_source=source)


def years_between(begin: date, end: date) -> float:
    """Duration in fractional years (days / 365.25)."""
    return (end - begin).days / 365.25
