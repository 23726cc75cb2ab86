"""Shared fixtures: the ladder-career reference resume and random generators."""

from __future__ import annotations

import random
from datetime import date, timedelta

import pytest

from cvminer.model import (
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
from cvminer.ranks import quantify, trajectory_of

# Translated officer resume used throughout: career of six records climbing
# from secretary (rank 0) to governor (rank 6), analyzed as of 2015-12-11.
JIM_TEXT = """\
Jim; male; ethnic Han; born on August 2nd, 1975; come from Changsha city, \
Hunan province. Work on January, 1990; Joined the Chinese Communist Party on \
December, 1991. Currently is the governor of Hunan Province.

Year 1989 ~ 1992: Appointed as the secretary of Party Branch of Health Bureau \
of Ningxiang county, Hunan province.

Year 1992 ~ 1995: Appointed as the county head of County Party Committee of \
Ningxiang county, Hunan province.

Year 1995 ~ 1998: Appointed as the vice mayor of Municipal Party Committee of \
Changsha city, Hunan province.

Year 1998 ~ 2002: Appointed as the mayor of Municipal Party Committee of \
Changsha city, Hunan province.

Year 2002 ~ 2010: Appointed as the vice governor of Provincial Party Committee \
of Hunan province.

Year 2010-Up to now: Appointed as the governor of Provincial Party Committee \
of Hunan province.
"""

JIM_AS_OF = date(2015, 12, 11)

_LADDER_ROWS = [
    (date(1989, 1, 1), date(1992, 1, 1), "Party Branch of Health Bureau", "Secretary"),
    (date(1992, 1, 1), date(1995, 1, 1), "County Party Committee", "County head"),
    (date(1995, 1, 1), date(1998, 1, 1), "Municipal Party Committee", "Vice mayor"),
    (date(1998, 1, 1), date(2002, 1, 1), "Municipal Party Committee", "Mayor"),
    (date(2002, 1, 1), date(2010, 1, 1), "Provincial Party Committee", "Vice governor"),
    (date(2010, 1, 1), None, "Provincial Party Committee", "Governor"),
]

LADDER_RANKS = [0, 2, 3, 4, 5, 6]


def build_ladder_base(resume_id: str = "jim") -> ResumeBase:
    """The six-record reference career, ranks unset."""
    records = tuple(
        ExperienceRecord(
            date_begin=begin,
            date_end=end,
            location=Location(province="Hunan", city="Changsha"),
            organizations=(
                Organization(org_name=org, titles=(Title(title_name=title),)),
            ),
        )
        for begin, end, org, title in _LADDER_ROWS
    )
    basic = BasicInfo(
        name="Jim",
        gender=Gender.MALE,
        nation="Han",
        birth_place="Changsha city, Hunan province",
        birth_date=date(1975, 8, 2),
        work_date=date(1990, 1, 1),
        party_date=date(1991, 12, 1),
    )
    return ResumeBase(resume_id=resume_id, basic=basic, experiences=records)


@pytest.fixture
def ladder_base() -> ResumeBase:
    return quantify(build_ladder_base())


@pytest.fixture
def ladder_trajectory(ladder_base):
    return trajectory_of(ladder_base, as_of=JIM_AS_OF)


def make_random_base(rng: random.Random, resume_id: str | None = None) -> ResumeBase:
    """A random invariant-valid base covering the whole schema surface."""
    if resume_id is None:
        resume_id = f"rb{rng.randrange(10 ** 9):09d}"
    birth = None
    work = None
    if rng.random() < 0.8:
        birth = date(rng.randint(1940, 1980), rng.randint(1, 12), rng.randint(1, 28))
        if rng.random() < 0.8:
            work = birth + timedelta(days=rng.randint(6000, 12000))
    basic = BasicInfo(
        name=rng.choice(["", "Ada Keller", "Bo Chen", "Cai Wong", "Jim", "Ñina Ríos"]),
        gender=rng.choice(list(Gender)),
        nation=rng.choice([None, "Han", "Hui"]),
        birth_place=rng.choice([None, "Changsha city, Hunan province", "Northfield"]),
        birth_date=birth,
        work_date=work,
        party_date=rng.choice([None, date(1991, 12, 1)]),
    )

    records = []
    begin = date(rng.randint(1960, 1995), rng.randint(1, 12), rng.randint(1, 28))
    n_records = rng.randint(1, 6)
    for i in range(n_records):
        end = begin + timedelta(days=rng.randint(200, 4000))
        is_last = i == n_records - 1
        orgs = []
        for _ in range(rng.randint(1, 2)):
            titles = []
            for _ in range(rng.randint(1, 2)):
                if rng.random() < 0.3:
                    rank, source = None, None
                else:
                    rank = rng.randint(0, 8)
                    source = rng.choice(list(RankSource))
                titles.append(
                    Title(
                        title_name=rng.choice(
                            ["Secretary", "Mayor", "Governor", "County head", "Clerk"]
                        ),
                        rank=rank,
                        rank_source=source,
                    )
                )
            orgs.append(
                Organization(
                    org_name=rng.choice(
                        [
                            "Party Branch of Health Bureau",
                            "Municipal Party Committee",
                            "Northfield Trade Company",
                            "Cedarvale Hospital",
                        ]
                    )
                    + f" {rng.randrange(100)}",
                    titles=tuple(titles),
                )
            )
        records.append(
            ExperienceRecord(
                date_begin=begin,
                date_end=None if (is_last and rng.random() < 0.3) else end,
                location=Location(
                    province=rng.choice([None, "Hunan", "Redland"]),
                    city=rng.choice([None, "Changsha", "Millcrest"]),
                ),
                organizations=tuple(orgs),
            )
        )
        begin = end + timedelta(days=rng.randint(0, 300))

    label = rng.choice([None, *PatternLabel])
    source = rng.choice(list(LabelSource)) if label else None
    return ResumeBase(
        resume_id=resume_id,
        basic=basic,
        experiences=tuple(records),
        pattern_label=label,
        label_source=source,
    )
