"""Keyword lexicons driving the rule-based extractor.

The extraction method is keyword anchored: date keywords locate time ranges,
location/org/title keywords locate their respective phrases. Lexicons are
plain data, one keyword per line in four files (dates, locations, orgs,
titles), so the language resource can be swapped without touching code.
The packaged default is English.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

LEXICON_FILES = {
    "date_keywords": "dates.txt",
    "location_keywords": "locations.txt",
    "org_keywords": "orgs.txt",
    "title_keywords": "titles.txt",
}

# Phrases that mark an ongoing (open-ended) record; not part of the four
# keyword files, overridable on the Lexicon itself.
DEFAULT_ONGOING_MARKERS = ("up to now", "till now", "present", "now")


def _normalize(entries) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for entry in entries:
        word = " ".join(entry.lower().split())
        if word:
            seen.setdefault(word, None)
    return tuple(seen)


@dataclass(frozen=True)
class Lexicon:
    date_keywords: tuple[str, ...]
    location_keywords: tuple[str, ...]
    org_keywords: tuple[str, ...]
    title_keywords: tuple[str, ...]
    ongoing_markers: tuple[str, ...] = DEFAULT_ONGOING_MARKERS

    def __post_init__(self):
        for name in LEXICON_FILES:
            entries = getattr(self, name)
            normalized = _normalize(entries)
            if not normalized:
                raise ValueError(f"lexicon list {name} is empty")
            object.__setattr__(self, name, normalized)
        object.__setattr__(self, "ongoing_markers", _normalize(self.ongoing_markers))


def load_lexicon(directory: str | Path) -> Lexicon:
    """Load the four keyword files from ``directory``."""
    directory = Path(directory)
    kwargs = {}
    for attr, filename in LEXICON_FILES.items():
        lines = (directory / filename).read_text(encoding="utf-8").splitlines()
        kwargs[attr] = [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]
    return Lexicon(**kwargs)


def default_lexicon() -> Lexicon:
    """The packaged English lexicon."""
    data = resources.files("cvminer") / "data"
    kwargs = {}
    for attr, filename in LEXICON_FILES.items():
        lines = (data / filename).read_text(encoding="utf-8").splitlines()
        kwargs[attr] = [ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")]
    return Lexicon(**kwargs)
