"""Rule-based extraction of a structured resume base from raw text.

The approach is keyword anchored rather than statistical: date-range markers
split the text into the leading basic-info section and one segment per
experience record; location/org/title keywords then carve each segment into
its semantic fields. Records whose dates cannot be parsed are skipped with a
collected warning so the rest of the resume survives.
"""

from __future__ import annotations

import re
from datetime import date

from .errors import MalformedDate, NoExperienceFound
from .lexicon import Lexicon
from .model import (
    BasicInfo,
    ExperienceRecord,
    Gender,
    Location,
    Organization,
    RawResume,
    ResumeBase,
    Title,
)

# Words that may prefix a title keyword and belong to the title phrase.
TITLE_MODIFIERS = frozenset(
    {"vice", "deputy", "acting", "executive", "general", "assistant", "senior"}
)

# Leading verb phrases stripped from an experience clause.
_VERB_PREFIX = re.compile(
    r"^(?:was\s+|is\s+|been\s+)?"
    r"(?:appointed|served|worked|promoted|transferred|elected|acted|employed)?"
    r"\s*(?:as|to|at|in)?\s*(?:the\s+)?",
    re.IGNORECASE,
)

_MONTHS = {
    name: i + 1
    for i, name in enumerate(
        "january february march april may june july august september october november december".split()
    )
}
_MONTH_RE = "|".join(_MONTHS)

# "August 2nd, 1975" / "August 1975"
_NAMED_DATE = re.compile(
    rf"\b(?P<month>{_MONTH_RE})\s*(?:(?P<day>\d{{1,2}})(?:st|nd|rd|th)?)?\s*,?\s+(?P<year>\d{{4}})",
    re.IGNORECASE,
)
_NUMERIC_DATE = re.compile(r"\b(\d{4})(?:\.(\d{1,2})(?:\.(\d{1,2}))?)?\b")

_DATE_TOKEN = r"\d{4}(?:\.\d{1,2}(?:\.\d{1,2})?)?"


def _range_pattern(lex: Lexicon) -> re.Pattern:
    keywords = "|".join(re.escape(k) for k in lex.date_keywords)
    ongoing = "|".join(
        re.escape(m) for m in sorted(lex.ongoing_markers, key=len, reverse=True)
    )
    return re.compile(
        rf"(?:\b(?:{keywords})\s+)?"
        rf"(?P<begin>{_DATE_TOKEN})"
        rf"\s*(?:~|–|—|\bto\b|-)\s*"
        rf"(?P<end>{_DATE_TOKEN}|{ongoing})",
        re.IGNORECASE,
    )


def parse_date_token(token: str) -> date:
    """Parse "YYYY", "YYYY.M" or "YYYY.M.D"; missing parts default to 1."""
    parts = token.strip().split(".")
    if not 1 <= len(parts) <= 3 or not all(p.isdigit() for p in parts):
        raise MalformedDate(f"unparseable date token {token!r}")
    year = int(parts[0])
    month = int(parts[1]) if len(parts) > 1 else 1
    day = int(parts[2]) if len(parts) > 2 else 1
    try:
        return date(year, month, day)
    except ValueError:
        raise MalformedDate(f"invalid calendar date {token!r}") from None


def _find_date(text: str) -> date | None:
    """Locate a date in free text: month-name form first, then numeric."""
    m = _NAMED_DATE.search(text)
    if m:
        try:
            return date(
                int(m.group("year")),
                _MONTHS[m.group("month").lower()],
                int(m.group("day") or 1),
            )
        except ValueError:
            return None
    m = _NUMERIC_DATE.search(text)
    if m:
        try:
            return date(int(m.group(1)), int(m.group(2) or 1), int(m.group(3) or 1))
        except ValueError:
            return None
    return None


def parse_resume(
    raw: RawResume, lex: Lexicon, warnings: list[str] | None = None
) -> ResumeBase:
    """Convert raw resume text into a structured base (ranks left unset).

    Per-record problems (bad dates, no extractable organization) skip the
    record and append a message to ``warnings`` when a list is supplied.
    Raises NoExperienceFound when not a single record survives.
    """
    if warnings is None:
        warnings = []
    text = raw.text
    markers = list(_range_pattern(lex).finditer(text))
    if not markers:
        raise NoExperienceFound(f"resume {raw.id!r}: no experience records found")

    basic = _parse_basic_info(text[: markers[0].start()], lex, warnings)

    records: list[ExperienceRecord] = []
    for i, marker in enumerate(markers):
        seg_end = markers[i + 1].start() if i + 1 < len(markers) else len(text)
        segment = text[marker.end() : seg_end]
        try:
            begin = parse_date_token(marker.group("begin"))
            end_token = marker.group("end")
            if re.fullmatch(_DATE_TOKEN, end_token):
                end = parse_date_token(end_token)
            else:
                end = None  # ongoing marker
        except MalformedDate as exc:
            warnings.append(f"record {i + 1}: {exc}; skipped")
            continue
        if end is not None and end <= begin:
            warnings.append(
                f"record {i + 1}: span {begin}..{end} does not advance; skipped"
            )
            continue
        orgs = _parse_organizations(segment, lex, warnings, i + 1)
        if not orgs:
            warnings.append(f"record {i + 1}: no organization extracted; skipped")
            continue
        records.append(
            ExperienceRecord(
                date_begin=begin,
                date_end=end,
                location=_parse_location(segment, lex),
                organizations=tuple(orgs),
            )
        )

    records.sort(key=lambda r: r.date_begin)
    kept: list[ExperienceRecord] = []
    for j, rec in enumerate(records):
        if rec.is_open and j != len(records) - 1:
            warnings.append(
                f"open-ended record beginning {rec.date_begin} is not the last; skipped"
            )
            continue
        kept.append(rec)

    if not kept:
        raise NoExperienceFound(f"resume {raw.id!r}: no experience records survived")
    return ResumeBase(resume_id=raw.id, basic=basic, experiences=tuple(kept))


# -- location ---------------------------------------------------------------

def _location_pattern(lex: Lexicon) -> re.Pattern:
    keywords = "|".join(re.escape(k) for k in lex.location_keywords)
    return re.compile(
        rf"([A-Z][\w'’-]*(?:\s+[A-Z][\w'’-]*)*)\s+(?P<kw>(?i:{keywords}))\b"
    )


def _parse_location(segment: str, lex: Lexicon) -> Location:
    province = None
    city = None
    for m in _location_pattern(lex).finditer(segment):
        kw = m.group("kw").lower()
        name = m.group(1)
        if kw == "province":
            province = province or name
        else:
            city = city or name
    return Location(province=province, city=city)


# -- organizations and titles -----------------------------------------------

def _strip_locations(clause: str, lex: Lexicon) -> str:
    """Remove trailing location phrases ("of Ningxiang county", ", Hunan province")."""
    pattern = _location_pattern(lex)
    while True:
        m = pattern.search(clause)
        if not m:
            return clause.strip(" ,.")
        start = m.start()
        prefix = clause[:start]
        trimmed = prefix.rstrip()
        if trimmed.lower().endswith(" of"):
            start = len(trimmed) - 3
        elif trimmed.endswith(","):
            start = len(trimmed) - 1
        clause = (clause[:start] + " " + clause[m.end() :]).strip()


def _title_keywords_by_length(lex: Lexicon) -> list[str]:
    return sorted(lex.title_keywords, key=len, reverse=True)


def _find_title(clause: str, lex: Lexicon) -> tuple[str, int, int] | None:
    """Earliest title keyword (longest first), expanded over leading modifiers."""
    lowered = clause.lower()
    best: tuple[int, int, str] | None = None
    for keyword in _title_keywords_by_length(lex):
        m = re.search(rf"\b{re.escape(keyword)}\b", lowered)
        if m is not None and (best is None or m.start() < best[0]):
            best = (m.start(), m.end(), keyword)
    if best is None:
        return None
    start, end, _ = best
    # pull in modifiers immediately before the keyword
    while True:
        prefix = lowered[:start].rstrip()
        words = prefix.split()
        if words and words[-1] in TITLE_MODIFIERS:
            start = len(prefix) - len(words[-1])
        else:
            break
    phrase = " ".join(clause[start:end].split())
    return phrase, start, end


def _org_span(clause: str, lex: Lexicon) -> str | None:
    """Maximal capitalized chain (allowing inner "of"/"and") ending in an org keyword."""
    keywords = "|".join(re.escape(k) for k in lex.org_keywords)
    m = re.search(
        rf"((?:[A-Z][\w'’-]*|of|and|the|for)(?:\s+(?:[A-Z][\w'’-]*|of|and|the|for))*\s+)?"
        rf"(?P<kw>(?i:{keywords}))\b",
        clause,
    )
    if not m:
        return None
    span = clause[m.start() : m.end()].strip(" ,.")
    return " ".join(span.split()) or None


def _of_tail(clause: str, end: int) -> str | None:
    tail = clause[end:].strip()
    if tail.lower().startswith("of "):
        return tail[3:].strip(" ,.") or None
    return None


def _parse_organizations(
    segment: str, lex: Lexicon, warnings: list[str], record_no: int
) -> list[Organization]:
    segment = segment.strip().lstrip(":,;").strip()
    orgs: dict[str, list[Title]] = {}
    for raw_clause in re.split(r"[;.]\s*", segment):
        original = _VERB_PREFIX.sub("", raw_clause.strip(), count=1)
        clause = _strip_locations(original, lex)
        if not clause:
            continue
        found = _find_title(clause, lex)
        title_name: str | None = None
        org_name: str | None = None
        if found:
            phrase, _, end = found
            title_name = phrase[:1].upper() + phrase[1:].lower()
            org_name = _of_tail(clause, end) or _org_span(clause, lex)
            if org_name is None:
                # org had no keyword and was eaten by location stripping,
                # e.g. "governor of Hunan Province": keep what the text says
                in_original = _find_title(original, lex)
                if in_original:
                    org_name = _of_tail(original, in_original[2])
        else:
            # "<title phrase> of <org>" with an unknown title keyword
            m = re.match(r"(?P<title>[\w'’ -]{2,40}?)\s+of\s+(?P<org>.+)", clause)
            if m and _org_span(m.group("org"), lex):
                raw_title = m.group("title").strip()
                title_name = raw_title[:1].upper() + raw_title[1:].lower()
                org_name = m.group("org").strip(" ,.")
            else:
                org_name = _org_span(clause, lex)
        if org_name is None:
            continue
        org_name = " ".join(org_name.split())
        titles = orgs.setdefault(org_name, [])
        if title_name:
            titles.append(Title(title_name=title_name))
    result = []
    for name, titles in orgs.items():
        if not titles:
            warnings.append(
                f"record {record_no}: organization {name!r} has no title; "
                f"defaulted to 'Member'"
            )
            titles = [Title(title_name="Member")]
        result.append(Organization(org_name=name, titles=tuple(titles)))
    return result


# -- basic info ---------------------------------------------------------------

def _parse_basic_info(
    bi_text: str, lex: Lexicon, warnings: list[str]
) -> BasicInfo:
    name = ""
    gender = Gender.UNKNOWN
    nation = None
    birth_place = None
    birth_date = None
    work_date = None
    party_date = None

    clauses: list[str] = []
    for sentence in re.split(r"(?<=[.!?])\s+|\n+", bi_text):
        for clause in sentence.split(";"):
            clause = clause.strip(" .\t")
            if clause:
                clauses.append(clause)

    for idx, clause in enumerate(clauses):
        lowered = clause.lower()
        if re.search(r"\bfemale\b", lowered):
            gender = Gender.FEMALE
            continue
        if re.search(r"\bmale\b", lowered):
            gender = Gender.MALE
            continue
        if re.search(r"\bborn\b", lowered) and not re.search(r"\bborn in\b", lowered):
            birth_date = birth_date or _find_date(clause)
            if birth_date:
                continue
        if re.search(r"\bwork\w*\b", lowered) and _find_date(clause):
            work_date = work_date or _find_date(clause)
            continue
        if re.search(r"\bparty\b", lowered) and _find_date(clause):
            party_date = party_date or _find_date(clause)
            continue
        m = re.search(r"\bethnic\s+(\w+)", clause, re.IGNORECASE) or re.search(
            r"(\w+)\s+nationality\b", clause, re.IGNORECASE
        )
        if m:
            nation = nation or m.group(1)
            continue
        m = re.match(r"(?:comes?\s+from|born\s+in|native\s+of|from)\s+(.+)", clause, re.IGNORECASE)
        if m and any(k in lowered for k in lex.location_keywords):
            birth_place = birth_place or m.group(1).strip(" ,.")
            continue
        if idx == 0 and not re.search(r"\d", clause) and len(clause.split()) <= 6:
            name = clause

    if birth_date and work_date and work_date < birth_date:
        warnings.append(
            f"work date {work_date} precedes birth date {birth_date}; work date dropped"
        )
        work_date = None

    return BasicInfo(
        name=name,
        gender=gender,
        nation=nation,
        birth_place=birth_place,
        birth_date=birth_date,
        work_date=work_date,
        party_date=party_date,
    )
