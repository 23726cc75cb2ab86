"""Exception hierarchy shared by all engine modules."""


class CvminerError(Exception):
    """Base class for every engine-raised error."""


class NoExperienceFound(CvminerError):
    """Raised when a resume text yields zero experience records."""


class MalformedDate(CvminerError):
    """A date token could not be parsed against the date grammar."""


class SchemaViolation(CvminerError):
    """A document failed schema validation.

    ``path`` points at the offending field, e.g. ``experience[2].date_end``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnresolvedRank(CvminerError):
    """A trajectory was requested while some title rank is still unset."""


class ZeroSpan(CvminerError):
    """Feature extraction over a trajectory with zero total duration."""


class EmptyCorpus(CvminerError):
    """An aggregate operation was invoked on an empty corpus."""


class MissingClass(CvminerError):
    """Classifier training data lacks at least one example of a class."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"no training examples for class {label!r}")


class ZeroVector(CvminerError):
    """Cosine similarity against an all-zero vector (defensive)."""


class UnknownResume(CvminerError):
    """A resume id was not found in the corpus."""

    def __init__(self, resume_id: str):
        self.resume_id = resume_id
        super().__init__(f"unknown resume {resume_id!r}")


class InvalidRank(CvminerError):
    """A rank edit outside the 0..8 ladder."""


class AllResumesFailed(CvminerError):
    """Ingest failed to parse every input resume."""


class BeforeCareerStart(CvminerError):
    """Community lookup at a timestamp preceding the career start."""


class StaleVersion(CvminerError):
    """A mutation targeted a snapshot version that is no longer current."""

    def __init__(self, requested: int, current: int):
        self.requested = requested
        self.current = current
        super().__init__(f"snapshot version {requested} is stale (current {current})")
