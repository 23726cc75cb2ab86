"""Career-progress features: per-rank time shares and corpus statistics.

The feature vector of a trajectory is the fraction of the total career span
spent at each of the nine ranks. A record holding several titles at once
counts once, at the highest rank held (the span cannot be double-counted).
Gaps between records belong to no rank and are excluded from the total.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from .errors import EmptyCorpus, ZeroSpan
from .model import years_between
from .ranks import CareerTrajectory

N_RANKS = 9


@dataclass(frozen=True)
class FeatureVector:
    r: tuple[float, ...]  # time share per rank, index = rank value
    t: tuple[float, ...]  # years per rank
    T: float  # total years across all ranks

    def peak_rank(self) -> int:
        """Highest rank with nonzero share."""
        return max(i for i, ti in enumerate(self.t) if ti > 0)

    def growth_rate(self) -> float:
        return self.peak_rank() / self.T


@dataclass(frozen=True)
class RankDurationStats:
    mean_years: tuple[float, ...]
    count: int
    mean_growth_rate: float


def rank_durations(traj: CareerTrajectory, as_of: date | None = None) -> list[float]:
    """Years spent at each rank; ``as_of`` caps record ends when given."""
    t = [0.0] * N_RANKS
    for _, begin, end, rank in traj.record_spans():
        if as_of is not None and end > as_of:
            end = as_of
        if end > begin:
            t[rank] += years_between(begin, end)
    return t


def extract_features(traj: CareerTrajectory, as_of: date | None = None) -> FeatureVector:
    if not traj.rows:
        raise ZeroSpan(f"trajectory {traj.resume_id!r} is empty")
    t = rank_durations(traj, as_of)
    total = sum(t)
    if total <= 0:
        raise ZeroSpan(f"trajectory {traj.resume_id!r} spans zero time")
    return FeatureVector(r=tuple(ti / total for ti in t), t=tuple(t), T=total)


def corpus_rank_stats(
    corpus: list[CareerTrajectory], as_of: date | None = None
) -> RankDurationStats:
    """Arithmetic mean of per-rank durations (and of growth rates) over resumes."""
    if not corpus:
        raise EmptyCorpus("no trajectories to aggregate")
    sums = [0.0] * N_RANKS
    growth_sum = 0.0
    for traj in corpus:
        fv = extract_features(traj, as_of)
        for i in range(N_RANKS):
            sums[i] += fv.t[i]
        growth_sum += fv.growth_rate()
    n = len(corpus)
    return RankDurationStats(
        mean_years=tuple(s / n for s in sums),
        count=n,
        mean_growth_rate=growth_sum / n,
    )
