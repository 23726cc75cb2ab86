"""Interpersonal relation mining over a quantified corpus.

Explicit relations come from shared organizations: each organization is a
basket holding the resumes that ever belonged to it, Apriori finds resume
sets co-occurring in enough baskets, and a matching degree in [0, 1] scores
how much of two careers actually intersects (a temporal Jaccard: overlap
years at shared organizations over the union of both careers' spans).
Implicit relations are cosine similarity of the career-progress features.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date
from itertools import combinations

from .errors import UnknownResume, ZeroVector
from .features import FeatureVector, extract_features
from .model import ResumeBase
from .ranks import trajectory_of

DEFAULT_MIN_SUPPORT = 2


def normalize_org(name: str) -> str:
    """Basket key: case-folded, trimmed, inner whitespace collapsed."""
    return " ".join(name.casefold().split())


@dataclass(frozen=True)
class BasketDataset:
    baskets: dict[str, frozenset[str]]  # org key -> resume ids

    def co_members(self, resume_id: str) -> set[str]:
        others: set[str] = set()
        for members in self.baskets.values():
            if resume_id in members:
                others.update(members)
        others.discard(resume_id)
        return others


@dataclass(frozen=True)
class FrequentSet:
    members: frozenset[str]
    support: int


@dataclass(frozen=True)
class OverlapEvidence:
    org: str
    overlap_begin: date
    overlap_end: date


@dataclass(frozen=True)
class RelationEdge:
    a: str
    b: str
    kind: str  # "explicit" | "implicit"
    value: float
    evidence: tuple[OverlapEvidence, ...] = ()


@dataclass(frozen=True)
class NeighborQuery:
    focus: str
    k: int
    kind: str = "explicit"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("K must be >= 1")
        if self.kind not in ("explicit", "implicit"):
            raise ValueError(f"unknown relation kind {self.kind!r}")


def build_baskets(corpus: list[ResumeBase]) -> BasketDataset:
    baskets: dict[str, set[str]] = {}
    for base in corpus:
        for record in base.experiences:
            for org in record.organizations:
                baskets.setdefault(normalize_org(org.org_name), set()).add(
                    base.resume_id
                )
    return BasketDataset(
        baskets={key: frozenset(ids) for key, ids in sorted(baskets.items())}
    )


def apriori(baskets: BasketDataset, min_support: int) -> list[FrequentSet]:
    """All resume sets (size >= 2) contained in >= min_support baskets.

    Levelwise candidate generation with the downward-closure prune; exact,
    suited to the corpus sizes a workbench holds.
    """
    if min_support < 1:
        raise ValueError("min_support must be >= 1")
    transactions = list(baskets.baskets.values())

    counts: dict[frozenset[str], int] = {}
    for t in transactions:
        for item in t:
            key = frozenset((item,))
            counts[key] = counts.get(key, 0) + 1
    current = {s for s, c in counts.items() if c >= min_support}

    result: list[FrequentSet] = []
    size = 2
    while current:
        # join step: union pairs from the previous level differing by one item
        candidates = {
            a | b for a, b in combinations(sorted(current, key=sorted), 2)
            if len(a | b) == size
        }
        # prune step: every (size-1)-subset must be frequent
        candidates = {
            c
            for c in candidates
            if all(frozenset(sub) in current for sub in combinations(c, size - 1))
        }
        supports = {c: sum(1 for t in transactions if c <= t) for c in candidates}
        current = {c for c, s in supports.items() if s >= min_support}
        result.extend(FrequentSet(members=c, support=supports[c]) for c in current)
        size += 1

    result.sort(key=lambda fs: (len(fs.members), tuple(sorted(fs.members))))
    return result


def _intervals(base: ResumeBase, as_of: date) -> list[tuple[date, date]]:
    return [
        (r.date_begin, r.end_or(as_of))
        for r in base.experiences
        if r.end_or(as_of) > r.date_begin
    ]


def _union_days(intervals: list[tuple[date, date]]) -> int:
    total = 0
    cur_begin: date | None = None
    cur_end: date | None = None
    for begin, end in sorted(intervals):
        if cur_end is None or begin > cur_end:
            if cur_end is not None:
                total += (cur_end - cur_begin).days
            cur_begin, cur_end = begin, end
        elif end > cur_end:
            cur_end = end
    if cur_end is not None:
        total += (cur_end - cur_begin).days
    return total


def matching_degree(
    a: ResumeBase, b: ResumeBase, as_of: date | None = None
) -> tuple[float, tuple[OverlapEvidence, ...]]:
    """Experience-intersection score in [0, 1] plus the contributing overlaps.

    Overlap years at shared organizations over the union of both careers'
    spans, capped at 1. Day counts stay integral until one final division,
    so D(a, a) is exactly 1 and symmetry is exact. 0 means no shared
    organization time at all.
    """
    if as_of is None:
        as_of = date.today()
    union_days = _union_days(_intervals(a, as_of) + _intervals(b, as_of))
    if union_days <= 0:
        return 0.0, ()

    overlap_days = 0
    evidence: list[OverlapEvidence] = []
    for rec_a in a.experiences:
        orgs_a = {normalize_org(o.org_name) for o in rec_a.organizations}
        end_a = rec_a.end_or(as_of)
        for rec_b in b.experiences:
            shared = orgs_a & {normalize_org(o.org_name) for o in rec_b.organizations}
            if not shared:
                continue
            begin = max(rec_a.date_begin, rec_b.date_begin)
            end = min(end_a, rec_b.end_or(as_of))
            if end <= begin:
                continue
            for org in sorted(shared):
                overlap_days += (end - begin).days
                evidence.append(
                    OverlapEvidence(org=org, overlap_begin=begin, overlap_end=end)
                )
    return min(1.0, overlap_days / union_days), tuple(evidence)


def implicit_similarity(a: FeatureVector, b: FeatureVector) -> float:
    """Cosine of the two share vectors; components are non-negative so in [0, 1]."""
    dot = sum(x * y for x, y in zip(a.r, b.r))
    norm_a = math.sqrt(sum(x * x for x in a.r))
    norm_b = math.sqrt(sum(y * y for y in b.r))
    if norm_a == 0 or norm_b == 0:
        raise ZeroVector("feature vector has zero norm")
    return min(1.0, dot / (norm_a * norm_b))


def top_k(
    corpus: dict[str, ResumeBase],
    q: NeighborQuery,
    min_support: int = DEFAULT_MIN_SUPPORT,
    as_of: date | None = None,
) -> list[RelationEdge]:
    """K highest-valued neighbors of the focus resume, ties broken by id."""
    if q.focus not in corpus:
        raise UnknownResume(q.focus)
    focus = corpus[q.focus]

    edges: list[RelationEdge] = []
    if q.kind == "explicit":
        baskets = build_baskets(list(corpus.values()))
        candidates: set[str] = set()
        for fs in apriori(baskets, min_support):
            if q.focus in fs.members:
                candidates.update(fs.members)
        candidates.discard(q.focus)
        if not candidates:
            candidates = baskets.co_members(q.focus)
        for other_id in sorted(candidates):
            value, evidence = matching_degree(focus, corpus[other_id], as_of)
            edges.append(
                RelationEdge(
                    a=q.focus, b=other_id, kind="explicit", value=value, evidence=evidence
                )
            )
    else:
        fv_focus = extract_features(trajectory_of(focus, as_of))
        for other_id in sorted(corpus):
            if other_id == q.focus:
                continue
            fv_other = extract_features(trajectory_of(corpus[other_id], as_of))
            edges.append(
                RelationEdge(
                    a=q.focus,
                    b=other_id,
                    kind="implicit",
                    value=implicit_similarity(fv_focus, fv_other),
                )
            )

    edges.sort(key=lambda e: (-e.value, e.b))
    return edges[: q.k]


def export_edges(edges: list[RelationEdge]) -> str:
    """TSV export: a, b, kind, value."""
    lines = [f"{e.a}\t{e.b}\t{e.kind}\t{e.value:.6f}" for e in edges]
    return "\n".join(lines) + ("\n" if lines else "")
