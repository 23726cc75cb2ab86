"""Deterministic synthetic resume corpus with a ground-truth manifest.

Careers are drawn per pattern class with distinct promotion speeds, so the
classes have genuinely different rank time shares; the ``separation`` knob
controls how far apart the speeds are. Selected resume pairs are planted
with two shared organizations and overlapping spans, which makes them (and
only them) frequent at min_support 2 and gives explicit relations a known
answer. The manifest carries everything needed to score classification
accuracy and relation recall without hand labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import PatternLabel, RawResume

PATTERN_CYCLE = (PatternLabel.ASCENDING, PatternLabel.STEADY, PatternLabel.RECESSIONARY)

BASE_PROMOTION_YEARS = 3.5

TITLE_FOR_RANK = (
    "secretary",
    "vice county head",
    "county head",
    "vice mayor",
    "mayor",
    "vice governor",
    "governor",
    "vice president",
    "president",
)

_PLACE_PREFIX = (
    "North", "South", "East", "West", "Green", "Stone", "River", "Lake",
    "Hill", "Spring", "Cedar", "Birch", "Clear", "Iron", "Gold", "Silver",
    "Red", "White", "Long", "High", "Broad", "Bright", "Deep", "Fair",
    "Grand", "Low", "Mill", "New", "Old", "Pine",
)
_PLACE_SUFFIX = (
    "field", "ford", "burg", "ton", "dale", "wood", "haven", "port",
    "bridge", "crest", "gate", "glen", "hollow", "mead", "moor", "ridge",
    "shore", "vale", "view", "well",
)

_FIRST_NAMES = (
    "Alex", "Blake", "Casey", "Drew", "Ellis", "Frank", "Grace", "Harper",
    "Iris", "Jordan", "Kim", "Lee", "Morgan", "Noel", "Owen", "Paige",
    "Quinn", "Riley", "Sam", "Tess", "Uma", "Vern", "Wren", "Yale", "Zane",
)
_LAST_NAMES = (
    "Archer", "Baker", "Carver", "Dalton", "Emery", "Fisher", "Granger",
    "Holt", "Ingram", "Jennings", "Keller", "Larkin", "Mercer", "Norwood",
    "Osborne", "Porter", "Quimby", "Rhodes", "Sawyer", "Thorne",
)

_DOMAINS = (
    "Finance", "Health", "Education", "Transport", "Culture", "Forestry",
    "Water", "Trade", "Planning", "Industry", "Agriculture", "Housing",
    "Energy", "Labor", "Justice", "Taxation",
)

# org type word per community category; every word is both an org-lexicon
# keyword and a taxonomy keyword for exactly that category
_CATEGORY_TYPES = {
    "government": ("Bureau", "Commission", "Committee", "Office"),
    "grass_roots": ("Cooperative",),
    "state_owned_enterprise": ("Company", "Corporation", "Factory", "Group"),
    "non_profit": ("Association", "Institute", "Hospital", "University"),
}
_CATEGORIES = tuple(_CATEGORY_TYPES)

_MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
)


@dataclass(frozen=True)
class SyntheticRecord:
    year_begin: int
    year_end: int | None  # None = ongoing
    rank: int
    org: str
    extra_orgs: tuple[tuple[str, str], ...] = ()  # (title, org) clauses


@dataclass(frozen=True)
class SyntheticResume:
    resume_id: str
    name: str
    pattern: PatternLabel
    category: str
    start_year: int
    end_year: int
    records: list[SyntheticRecord]
    city: str
    province: str


@dataclass(frozen=True)
class GeneratedCorpus:
    raws: list[RawResume]
    manifest: dict


def _places() -> list[str]:
    return [p + s for p in _PLACE_PREFIX for s in _PLACE_SUFFIX]


def generate(n: int, seed: int, separation: float = 0.5) -> GeneratedCorpus:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    places = _places()
    if n + n // 2 > len(places):
        raise ValueError(f"n too large for the place pool ({len(places)})")
    rng.shuffle(places)

    resumes: list[SyntheticResume] = []
    for i in range(n):
        resumes.append(_one_resume(i, rng, separation, places[i]))

    pairs = _plant_pairs(resumes, rng, places[n:])

    raws = [RawResume(id=r.resume_id, text=_render(r)) for r in resumes]
    manifest = {
        "seed": seed,
        "n": n,
        "separation": separation,
        "resumes": [
            {
                "id": r.resume_id,
                "name": r.name,
                "pattern": r.pattern.value,
                "category": r.category,
                "start_year": r.start_year,
                "end_year": r.end_year,
            }
            for r in resumes
        ],
        "planted_pairs": pairs,
    }
    return GeneratedCorpus(raws=raws, manifest=manifest)


def _speed(pattern: PatternLabel, separation: float) -> float:
    """Years per promotion for the class."""
    if pattern is PatternLabel.ASCENDING:
        return BASE_PROMOTION_YEARS / (1.0 + 2.0 * separation)
    if pattern is PatternLabel.RECESSIONARY:
        return BASE_PROMOTION_YEARS * (1.0 + 2.0 * separation)
    return BASE_PROMOTION_YEARS


def _one_resume(
    i: int, rng: random.Random, separation: float, place: str
) -> SyntheticResume:
    pattern = PATTERN_CYCLE[i % 3]
    category = _CATEGORIES[i % 4]
    name = f"{rng.choice(_FIRST_NAMES)} {rng.choice(_LAST_NAMES)}"
    start_year = rng.randint(1965, 1995)
    career_years = rng.randint(25, 40)
    interval = _speed(pattern, separation)

    records: list[SyntheticRecord] = []
    year = start_year
    rank = 0
    end_year = start_year + career_years
    while year < end_year:
        duration = max(1, round(interval * rng.uniform(0.7, 1.3)))
        y_end = min(year + duration, end_year)
        org = _org_name(place, category, rng, len(records))
        extra: tuple[tuple[str, str], ...] = ()
        if rng.random() < 0.15:
            other_cat = rng.choice([c for c in _CATEGORIES if c != category])
            extra = ((
                "committee member",
                _org_name(place, other_cat, rng, len(records), flavor="Joint"),
            ),)
        records.append(
            SyntheticRecord(
                year_begin=year, year_end=y_end, rank=rank, org=org, extra_orgs=extra
            )
        )
        year = y_end
        if pattern is PatternLabel.RECESSIONARY and rng.random() < 0.25:
            rank = max(0, rank - 1)
        else:
            rank = min(8, rank + 1)

    if rng.random() < 0.1:
        last = records[-1]
        records[-1] = SyntheticRecord(
            year_begin=last.year_begin,
            year_end=None,
            rank=last.rank,
            org=last.org,
            extra_orgs=last.extra_orgs,
        )

    return SyntheticResume(
        resume_id=f"r{i:04d}",
        name=name,
        pattern=pattern,
        category=category,
        start_year=start_year,
        end_year=end_year,
        records=records,
        city=place,
        province=rng.choice(_PLACE_PREFIX) + "land",
    )


def _org_name(
    place: str, category: str, rng: random.Random, idx: int, flavor: str = ""
) -> str:
    domain = _DOMAINS[(idx + rng.randrange(len(_DOMAINS))) % len(_DOMAINS)]
    org_type = rng.choice(_CATEGORY_TYPES[category])
    middle = f"{flavor} {domain}".strip()
    return f"{place} {middle} {org_type}"


def _plant_pairs(
    resumes: list[SyntheticResume], rng: random.Random, extra_places: list[str]
) -> list[dict]:
    n = len(resumes)
    n_pairs = min(n // 10, len(extra_places)) if n >= 2 else 0
    if n >= 2 and n_pairs == 0:
        n_pairs = 1
    pairs = []
    for j in range(n_pairs):
        a, b = resumes[2 * j], resumes[2 * j + 1]
        w_begin = max(a.start_year, b.start_year)
        w_end = min(a.end_year, b.end_year)
        if w_begin >= w_end:
            continue
        year = w_begin + min(2, (w_end - w_begin - 1))
        place = extra_places[j]
        d1, d2 = rng.sample(_DOMAINS, 2)
        shared = (f"{place} {d1} Bureau", f"{place} {d2} Committee")
        for member in (a, b):
            idx = _record_covering(member, year)
            rec = member.records[idx]
            member.records[idx] = SyntheticRecord(
                year_begin=rec.year_begin,
                year_end=rec.year_end,
                rank=rec.rank,
                org=rec.org,
                extra_orgs=rec.extra_orgs
                + (("committee member", shared[0]), ("committee member", shared[1])),
            )
        pairs.append(
            {"a": a.resume_id, "b": b.resume_id, "orgs": list(shared), "year": year}
        )
    return pairs


def _record_covering(resume: SyntheticResume, year: int) -> int:
    for idx, rec in enumerate(resume.records):
        end = rec.year_end if rec.year_end is not None else resume.end_year + 100
        if rec.year_begin <= year < end:
            return idx
    return len(resume.records) - 1


def _render(resume: SyntheticResume) -> str:
    rng = random.Random(resume.resume_id)  # text jitter only, id-stable
    birth_year = resume.start_year - rng.randint(20, 26)
    birth_month = _MONTH_NAMES[rng.randrange(12)]
    birth_day = rng.randint(1, 28)
    gender = rng.choice(["male", "female"])
    lines = [
        f"{resume.name}; {gender}; ethnic Han; born on {birth_month} {birth_day}, "
        f"{birth_year}; come from {resume.city} city, {resume.province} province. "
        f"Work on {_MONTH_NAMES[rng.randrange(12)]}, {resume.start_year}.",
        "",
    ]
    for rec in resume.records:
        title = TITLE_FOR_RANK[rec.rank]
        if rec.year_end is None:
            span = f"Year {rec.year_begin}-Up to now"
        else:
            span = f"Year {rec.year_begin} ~ {rec.year_end}"
        clause = (
            f"{span}: Appointed as the {title} of {rec.org} of "
            f"{resume.city} city, {resume.province} province"
        )
        for extra_title, extra_org in rec.extra_orgs:
            clause += f"; also served as the {extra_title} of {extra_org}"
        lines.append(clause + ".")
        lines.append("")
    return "\n".join(lines)
