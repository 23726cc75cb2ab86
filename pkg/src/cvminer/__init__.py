"""cvminer: engine for mining structured career data out of resume text."""

from .document import parse_document, serialize_base
from .lexicon import Lexicon, default_lexicon, load_lexicon
from .model import (
    BasicInfo,
    ExperienceRecord,
    Gender,
    LabelSource,
    Location,
    Organization,
    PatternLabel,
    RankSource,
    RawResume,
    ResumeBase,
    Title,
)
from .parser import parse_resume

__version__ = "0.1.0"

__all__ = [
    "BasicInfo",
    "ExperienceRecord",
    "Gender",
    "LabelSource",
    "Lexicon",
    "Location",
    "Organization",
    "PatternLabel",
    "RankSource",
    "RawResume",
    "ResumeBase",
    "Title",
    "default_lexicon",
    "load_lexicon",
    "parse_document",
    "parse_resume",
    "serialize_base",
    "__version__",
]
