"""Organization-individual mobility map: communities, regions, layout.

The map is a quadrant diagram: four 90-degree sectors for the base
organization categories plus a central disk for individuals affiliated with
several categories at once. Time runs along the radials, center outward, so
a node's radius encodes the timestamp and its sector the community. A
force-directed relaxation separates nodes inside each region without losing
their seed positions.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from datetime import date, timedelta
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import BeforeCareerStart
from .model import ExperienceRecord, ResumeBase

BASE_COMMUNITIES = (
    "government",
    "grass_roots",
    "state_owned_enterprise",
    "non_profit",
)
COMPOUND = "compound"

DEFAULT_MAX_ITER = 500
DEFAULT_TOLERANCE = 1e-3
ANCHOR_SPRING_RATIO = 0.1  # spring constant relative to the repulsion constant
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True)
class CommunityTaxonomy:
    patterns: tuple[tuple[str, str], ...]  # (org keyword pattern, category)
    default_category: str = "government"

    def __post_init__(self):
        for pattern, category in self.patterns:
            if category not in BASE_COMMUNITIES:
                raise ValueError(f"pattern {pattern!r} maps to unknown category {category!r}")

    def categorize(self, org_name: str) -> str:
        normalized = " ".join(org_name.casefold().split())
        best: tuple[int, str] | None = None
        for pattern, category in self.patterns:
            if re.search(rf"\b{re.escape(pattern)}\b", normalized):
                if best is None or len(pattern) > best[0]:
                    best = (len(pattern), category)
        return best[1] if best else self.default_category


def load_taxonomy(path: str | Path) -> CommunityTaxonomy:
    patterns = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        pattern, category = line.split("\t")
        patterns.append((" ".join(pattern.casefold().split()), category))
    return CommunityTaxonomy(patterns=tuple(patterns))


def default_taxonomy() -> CommunityTaxonomy:
    with resources.as_file(
        resources.files("cvminer") / "data" / "community_categories.tsv"
    ) as p:
        return load_taxonomy(p)


@dataclass(frozen=True)
class RegionGeometry:
    disk_radius: float = 120.0
    outer_radius: float = 480.0
    node_unit: float = 1.5  # node radius = node_unit * (rank + 1)
    sector_order: tuple[str, ...] = BASE_COMMUNITIES

    def node_radius(self, rank: int) -> float:
        return self.node_unit * (rank + 1)

    def sector_bounds(self, community: str) -> tuple[float, float]:
        idx = self.sector_order.index(community)
        span = math.tau / len(self.sector_order)
        return idx * span, (idx + 1) * span

    def contains(self, community: str, x: float, y: float) -> bool:
        r = math.hypot(x, y)
        if community == COMPOUND:
            return r <= self.disk_radius
        theta0, theta1 = self.sector_bounds(community)
        theta = math.atan2(y, x) % math.tau
        return self.disk_radius <= r <= self.outer_radius and theta0 <= theta <= theta1

    def clamp(self, community: str, x: float, y: float, margin: float) -> tuple[float, float]:
        r = math.hypot(x, y)
        theta = math.atan2(y, x) % math.tau
        if community == COMPOUND:
            r = min(r, self.disk_radius - margin)
            return r * math.cos(theta), r * math.sin(theta)
        theta0, theta1 = self.sector_bounds(community)
        r = min(max(r, self.disk_radius + margin), self.outer_radius - margin)
        pad = margin / r
        theta = min(max(theta, theta0 + pad), theta1 - pad)
        return r * math.cos(theta), r * math.sin(theta)


# -- community membership ------------------------------------------------------

def _active_records(base: ResumeBase, t: date) -> list[ExperienceRecord]:
    active = [
        rec
        for rec in base.experiences
        if rec.date_begin <= t and (rec.date_end is None or t < rec.date_end)
    ]
    if active:
        return active
    # between records or after the career end: stay with the latest known one
    past = [rec for rec in base.experiences if rec.date_begin <= t]
    return [max(past, key=lambda r: r.date_begin)] if past else []


def categories_at(base: ResumeBase, t: date, tax: CommunityTaxonomy) -> list[str]:
    """Distinct base categories of the organizations active at t."""
    begin = base.career_begin()
    if begin is None or t < begin:
        raise BeforeCareerStart(f"{base.resume_id!r}: {t} precedes career start {begin}")
    found: list[str] = []
    for rec in _active_records(base, t):
        for org in rec.organizations:
            category = tax.categorize(org.org_name)
            if category not in found:
                found.append(category)
    return found


def community_at(base: ResumeBase, t: date, tax: CommunityTaxonomy) -> str:
    cats = categories_at(base, t, tax)
    return cats[0] if len(cats) == 1 else COMPOUND


def rank_at(base: ResumeBase, t: date) -> int:
    ranks = [
        title.rank or 0
        for rec in _active_records(base, t)
        for org in rec.organizations
        for title in org.titles
    ]
    return max(ranks) if ranks else 0


# -- snapshots -----------------------------------------------------------------

@dataclass(frozen=True)
class MobilityNode:
    resume_id: str
    community: str
    rank: int
    x: float
    y: float
    links: tuple[str, ...]  # base communities of a compound node


@dataclass(frozen=True)
class MobilityEvent:
    resume_id: str
    form: str  # "appointment" | "dismissing"
    detail: str


@dataclass(frozen=True)
class MobilitySnapshot:
    timestamp: date
    nodes: tuple[MobilityNode, ...]
    events: tuple[MobilityEvent, ...]


def corpus_time_range(corpus: dict[str, ResumeBase], as_of: date) -> tuple[date, date]:
    begins = [b.career_begin() for b in corpus.values() if b.experiences]
    ends = [rec.end_or(as_of) for b in corpus.values() for rec in b.experiences]
    if not begins:
        raise ValueError("corpus has no experience records")
    return min(begins), max(ends)


def _time_fraction(t: date, t_min: date, t_max: date) -> float:
    if t_max <= t_min:
        return 0.0
    frac = (t - t_min).days / (t_max - t_min).days
    return min(1.0, max(0.0, frac))


def _seed_position(
    geom: RegionGeometry, community: str, frac: float, margin: float
) -> tuple[float, float]:
    if community == COMPOUND:
        radius = frac * max(0.0, geom.disk_radius - margin)
        theta = math.pi / 4  # fixed heading; relaxation spreads coincident nodes
    else:
        theta0, theta1 = geom.sector_bounds(community)
        theta = (theta0 + theta1) / 2
        lo = geom.disk_radius + margin
        hi = geom.outer_radius - margin
        radius = lo + frac * (hi - lo)
    return radius * math.cos(theta), radius * math.sin(theta)


def snapshot(
    corpus: dict[str, ResumeBase],
    t: date,
    geom: RegionGeometry | None = None,
    tax: CommunityTaxonomy | None = None,
    as_of: date | None = None,
    seed_positions: dict[str, tuple[float, float]] | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> MobilitySnapshot:
    """Mobility state at timestamp t: community, size and position per node.

    ``seed_positions`` carries the previous snapshot's angular placement into
    this one (temporal coherence for animations); the radial coordinate is
    always re-derived from t so time keeps flowing center-outward.
    """
    geom = geom or RegionGeometry()
    tax = tax or default_taxonomy()
    as_of = as_of or date.today()
    t_min, t_max = corpus_time_range(corpus, as_of)
    frac = _time_fraction(t, t_min, t_max)

    members: dict[str, list[tuple[str, int, tuple[str, ...], tuple[float, float]]]] = {}
    events: list[MobilityEvent] = []
    for resume_id in sorted(corpus):
        base = corpus[resume_id]
        begin = base.career_begin()
        if begin is None or t < begin:
            continue
        cats = categories_at(base, t, tax)
        community = cats[0] if len(cats) == 1 else COMPOUND
        rank = rank_at(base, t)
        margin = geom.node_radius(rank)
        seed = _seed_position(geom, community, frac, margin)
        if seed_positions and resume_id in seed_positions:
            px, py = seed_positions[resume_id]
            prev_theta = math.atan2(py, px) % math.tau
            radius = math.hypot(*seed)
            candidate = (radius * math.cos(prev_theta), radius * math.sin(prev_theta))
            if geom.contains(community, *geom.clamp(community, *candidate, margin)):
                seed = geom.clamp(community, *candidate, margin)
        links = tuple(cats) if len(cats) > 1 else ()
        members.setdefault(community, []).append((resume_id, rank, links, seed))
        events.extend(_events_for(base, t))

    nodes: list[MobilityNode] = []
    for community in (*geom.sector_order, COMPOUND):
        group = members.get(community)
        if not group:
            continue
        seeds = np.array([g[3] for g in group])
        radii = np.array([geom.node_radius(g[1]) for g in group])
        positions = layout(seeds, radii, geom, community, max_iter=max_iter)
        for (resume_id, rank, links, _), (x, y) in zip(group, positions):
            nodes.append(
                MobilityNode(
                    resume_id=resume_id,
                    community=community,
                    rank=rank,
                    x=float(x),
                    y=float(y),
                    links=links,
                )
            )
    nodes.sort(key=lambda n: n.resume_id)
    return MobilitySnapshot(timestamp=t, nodes=tuple(nodes), events=tuple(events))


def _events_for(base: ResumeBase, t: date) -> list[MobilityEvent]:
    events = []
    for rec in base.experiences:
        detail = "; ".join(
            f"{title.title_name} of {org.org_name}"
            for org in rec.organizations
            for title in org.titles
        )
        if rec.date_begin == t:
            events.append(MobilityEvent(resume_id=base.resume_id, form="appointment", detail=detail))
        if rec.date_end == t:
            events.append(MobilityEvent(resume_id=base.resume_id, form="dismissing", detail=detail))
    return events


def layout(
    seeds: np.ndarray,
    radii: np.ndarray,
    geom: RegionGeometry,
    community: str,
    max_iter: int = DEFAULT_MAX_ITER,
    tolerance: float = DEFAULT_TOLERANCE,
) -> np.ndarray:
    """Separate nodes inside one region while staying near their seeds.

    Fruchterman-Reingold style inverse-distance repulsion plus an anchor
    spring toward each seed, a hard separation sweep for any pair still
    overlapping, and a clamp into the region every iteration. Fully
    deterministic: coincident seeds are split by a fixed golden-angle jitter,
    no randomness anywhere.
    """
    n = len(seeds)
    if n == 0:
        return seeds.copy()
    jitter_angles = np.arange(n) * _GOLDEN_ANGLE
    pos = seeds + 1e-3 * np.stack([np.cos(jitter_angles), np.sin(jitter_angles)], axis=1)
    if n == 1:
        x, y = geom.clamp(community, seeds[0, 0], seeds[0, 1], float(radii[0]))
        return np.array([[x, y]])

    if community == COMPOUND:
        area = math.pi * geom.disk_radius**2
    else:
        area = (
            math.pi
            * (geom.outer_radius**2 - geom.disk_radius**2)
            / len(geom.sector_order)
        )
    k = math.sqrt(area / n)
    temperature = k
    cooling = 0.95

    for _ in range(max_iter):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, np.inf)
        dist = np.maximum(dist, 1e-9)
        repulse = (k * k / dist**2)[:, :, None] * delta
        disp = repulse.sum(axis=1)
        disp += ANCHOR_SPRING_RATIO * (seeds - pos)

        lengths = np.maximum(np.linalg.norm(disp, axis=1), 1e-12)
        capped = np.minimum(lengths, temperature)
        pos = pos + disp / lengths[:, None] * capped[:, None]

        for i in range(n):
            pos[i] = geom.clamp(community, pos[i, 0], pos[i, 1], float(radii[i]))

        moved = _separate_overlaps(pos, radii, geom, community)
        # cooling must undercut the separation gap or late force steps keep
        # re-compressing freshly separated pairs
        temperature = max(temperature * cooling, tolerance / 2)
        if capped.max() < tolerance and not moved:
            break

    for _ in range(50):
        if not _separate_overlaps(pos, radii, geom, community):
            break
    return pos


def _separate_overlaps(
    pos: np.ndarray, radii: np.ndarray, geom: RegionGeometry, community: str, gap: float = 0.2
) -> bool:
    """Push apart every overlapping pair once, in deterministic index order."""
    n = len(pos)
    moved = False
    for i in range(n):
        for j in range(i + 1, n):
            need = radii[i] + radii[j] + gap
            d = pos[i] - pos[j]
            dist = float(np.hypot(d[0], d[1]))
            if dist >= need:
                continue
            moved = True
            if dist < 1e-9:
                angle = (i * n + j) * _GOLDEN_ANGLE
                direction = np.array([math.cos(angle), math.sin(angle)])
            else:
                direction = d / dist
            shift = (need - dist) / 2
            pos[i] += direction * shift
            pos[j] -= direction * shift
            pos[i] = geom.clamp(community, pos[i, 0], pos[i, 1], float(radii[i]))
            pos[j] = geom.clamp(community, pos[j, 0], pos[j, 1], float(radii[j]))
    return moved


def overlap_count(
    nodes: tuple[MobilityNode, ...], geom: RegionGeometry, epsilon: float = 0.05
) -> int:
    """Pairs of nodes whose circles interpenetrate more than epsilon."""
    count = 0
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            a, b = nodes[i], nodes[j]
            need = geom.node_radius(a.rank) + geom.node_radius(b.rank) - epsilon
            if math.hypot(a.x - b.x, a.y - b.y) < need:
                count += 1
    return count


def animate_range(
    corpus: dict[str, ResumeBase],
    t0: date,
    t1: date,
    steps: int,
    geom: RegionGeometry | None = None,
    tax: CommunityTaxonomy | None = None,
    as_of: date | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[MobilitySnapshot]:
    """Evenly spaced snapshots from t0 to t1; each seeds from its predecessor."""
    if not t0 < t1:
        raise ValueError("t0 must precede t1")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    total_days = (t1 - t0).days
    snapshots: list[MobilitySnapshot] = []
    carried: dict[str, tuple[float, float]] | None = None
    for i in range(steps):
        t = t0 + timedelta(days=round(i * total_days / (steps - 1)))
        snap = snapshot(
            corpus, t, geom=geom, tax=tax, as_of=as_of,
            seed_positions=carried, max_iter=max_iter,
        )
        carried = {node.resume_id: (node.x, node.y) for node in snap.nodes}
        snapshots.append(snap)
    return snapshots


def serialize_snapshot(snap: MobilitySnapshot) -> str:
    doc = {
        "timestamp": snap.timestamp.isoformat(),
        "nodes": [
            {
                "id": n.resume_id,
                "community": n.community,
                "rank": n.rank,
                "x": n.x,
                "y": n.y,
                "links": list(n.links),
            }
            for n in snap.nodes
        ],
        "events": [
            {"id": e.resume_id, "form": e.form, "detail": e.detail} for e in snap.events
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
