"""Acceptance gate: one test per release criterion, at the stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to get one PASS line per
criterion. Each test carries its own independent oracle: brute-force
enumeration, direct formula evaluation, hand arithmetic, or the synthetic
generator's ground-truth manifest.
"""

import math
import random
import time
from dataclasses import replace
from datetime import date
from itertools import combinations

import pytest

from conftest import build_ladder_base, make_random_base
from cvminer.classifier import classify, posterior, train
from cvminer.document import parse_document, serialize_base
from cvminer.features import corpus_rank_stats, extract_features, rank_durations
from cvminer.lexicon import default_lexicon
from cvminer.mobility import RegionGeometry, overlap_count, snapshot
from cvminer.model import (
    ExperienceRecord,
    Location,
    Organization,
    PatternLabel,
    RankSource,
    ResumeBase,
    Title,
)
from cvminer.parser import parse_resume
from cvminer.ranks import quantify, trajectory_of
from cvminer.relations import (
    BasketDataset,
    FrequentSet,
    apriori,
    matching_degree,
)
from cvminer.synth import generate
from cvminer.validator import validate

AS_OF = date(2026, 1, 1)
LADDER_AS_OF = date(2015, 12, 11)


def _ok(name: str, detail: str = ""):
    suffix = f"  ({detail})" if detail else ""
    print(f"PASS  {name}{suffix}")


def _parse_corpus(generated, as_of=AS_OF):
    lex = default_lexicon()
    corpus = {}
    for raw in generated.raws:
        corpus[raw.id] = quantify(parse_resume(raw, lex))
    return corpus


# 1 ---------------------------------------------------------------------------

def test_feature_vector_reproduction():
    """Time-share vector of the reference ladder career, each entry ±0.01."""
    traj = trajectory_of(quantify(build_ladder_base()), as_of=LADDER_AS_OF)
    fv = extract_features(traj)
    reference = [0.11, 0.0, 0.11, 0.11, 0.15, 0.3, 0.22, 0.0, 0.0]
    for i, (got, want) in enumerate(zip(fv.r, reference)):
        assert abs(got - want) <= 0.01, f"entry {i}: {got} vs {want}"
    assert abs(fv.T - 27.0) <= 0.5

    best = min(
        _timed(lambda: extract_features(traj)) for _ in range(200)
    )
    assert best < 1e-3, f"extract_features took {best * 1e3:.3f} ms"
    _ok("feature vector reproduction", f"T={fv.T:.2f}, {best * 1e6:.0f} us/call")


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


# 2 ---------------------------------------------------------------------------

def test_rank_rules_exact():
    """Default ladder: mayor 4, municipality mayor 6, governor 6, etc."""
    cases = [
        ("Mayor", "Plainville", 4),
        ("Mayor", "Beijing", 6),
        ("Governor", None, 6),
        ("Vice governor", None, 5),
        ("County head", None, 2),
        ("Civilian", None, 0),
    ]
    for title, city, expected in cases:
        record = ExperienceRecord(
            date_begin=date(2000, 1, 1),
            date_end=date(2004, 1, 1),
            location=Location(city=city),
            organizations=(Organization("Office", (Title(title),)),),
        )
        base = quantify(ResumeBase(resume_id="t", experiences=(record,)))
        got = base.experiences[0].organizations[0].titles[0].rank
        assert got == expected, f"{title}@{city}: {got} != {expected}"
    _ok("rank rules exact", f"{len(cases)} cases")


# 3 ---------------------------------------------------------------------------

def _direct_posterior(model, x):
    """Independent oracle: literal prior-times-density product, normalized."""
    scores = []
    for c in model.classes:
        product = c.prior
        for ri, eta, sigma in zip(x.r, c.eta, c.sigma):
            product *= (
                1.0 / (math.sqrt(2.0 * math.pi) * sigma)
            ) * math.exp(-((ri - eta) ** 2) / (2.0 * sigma**2))
        scores.append(product)
    total = sum(scores)
    return [s / total for s in scores]


def test_classifier_matches_direct_formula_oracle():
    """1000 random (model, x) pairs: log space vs direct product, 1e-9 rel."""
    from cvminer.classifier import CLASS_ORDER, ClassParams, PatternModel
    from cvminer.features import FeatureVector

    rng = random.Random(101)
    for _ in range(1000):
        priors = [rng.random() + 0.1 for _ in range(3)]
        ptotal = sum(priors)
        classes = tuple(
            ClassParams(
                label=label,
                prior=p / ptotal,
                eta=tuple(rng.random() for _ in range(9)),
                sigma=tuple(rng.uniform(0.1, 0.6) for _ in range(9)),
            )
            for label, p in zip(CLASS_ORDER, priors)
        )
        model = PatternModel(classes=classes, sigma_floor=1e-3)
        shares = [rng.random() + 1e-6 for _ in range(9)]
        total = sum(shares)
        x = FeatureVector(
            r=tuple(s / total for s in shares),
            t=tuple(shares),
            T=total,
        )
        got = posterior(model, x)
        want = _direct_posterior(model, x)
        assert abs(sum(got) - 1.0) <= 1e-9
        for g, w in zip(got, want):
            assert abs(g - w) <= max(1e-9 * abs(w), 1e-12)
    _ok("classifier oracle equivalence", "1000 pairs, 1e-9 relative")


# 4 ---------------------------------------------------------------------------

def test_classifier_accuracy_on_synthetic_corpus():
    """gen-synthetic n=300 sep=0.5, 200/100 split, >= 90% test accuracy."""
    start = time.perf_counter()
    generated = generate(300, seed=42, separation=0.5)
    corpus = _parse_corpus(generated)
    truth = {e["id"]: PatternLabel(e["pattern"]) for e in generated.manifest["resumes"]}
    features = {
        rid: extract_features(trajectory_of(base, AS_OF))
        for rid, base in corpus.items()
    }
    ids = sorted(corpus)
    train_ids, test_ids = ids[:200], ids[200:]
    model = train([(features[rid], truth[rid]) for rid in train_ids])
    correct = sum(1 for rid in test_ids if classify(model, features[rid]) is truth[rid])
    elapsed = time.perf_counter() - start
    accuracy = correct / len(test_ids)
    assert accuracy >= 0.90, f"accuracy {accuracy:.2%}"
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _ok("classifier accuracy", f"{accuracy:.1%} on 100 held out, {elapsed:.2f}s")


# 5 ---------------------------------------------------------------------------

def _brute_force_frequent(baskets: BasketDataset, min_support: int):
    items = sorted({rid for members in baskets.baskets.values() for rid in members})
    out = []
    for size in range(2, len(items) + 1):
        for combo in combinations(items, size):
            support = sum(
                1 for members in baskets.baskets.values() if set(combo) <= members
            )
            if support >= min_support:
                out.append(FrequentSet(members=frozenset(combo), support=support))
    out.sort(key=lambda fs: (len(fs.members), tuple(sorted(fs.members))))
    return out


def test_apriori_equals_power_set_brute_force():
    """50 random corpora (<=12 resumes, <=8 baskets): exact set equality."""
    rng = random.Random(303)
    for trial in range(50):
        n_resumes = rng.randint(2, 12)
        n_baskets = rng.randint(1, 8)
        ids = [f"r{i}" for i in range(n_resumes)]
        baskets = BasketDataset(
            baskets={
                f"o{j}": frozenset(rng.sample(ids, rng.randint(1, n_resumes)))
                for j in range(n_baskets)
            }
        )
        min_support = rng.randint(1, 3)
        got = apriori(baskets, min_support)
        want = _brute_force_frequent(baskets, min_support)
        assert got == want, f"trial {trial} (min_support {min_support})"
    _ok("apriori correctness", "50 corpora vs power-set enumeration")


# 6 ---------------------------------------------------------------------------

def _career(rng, resume_id, org_pool):
    records = []
    year = rng.randint(1970, 1990)
    for _ in range(rng.randint(1, 4)):
        end = year + rng.randint(1, 8)
        records.append(
            ExperienceRecord(
                date_begin=date(year, 1, 1),
                date_end=date(end, 1, 1),
                organizations=(
                    Organization(rng.choice(org_pool), (Title("T", 1, RankSource.RULE),)),
                ),
            )
        )
        year = end + rng.randint(0, 3)
    return ResumeBase(resume_id=resume_id, experiences=tuple(records))


def test_matching_degree_laws():
    """Identity, symmetry, disjoint endpoints and overlap monotonicity."""
    rng = random.Random(404)
    orgs_a = [f"Org {c}" for c in "ABCD"]
    orgs_b = [f"Org {c}" for c in "WXYZ"]
    checked = 0
    for _ in range(900):
        shared = rng.random() < 0.5
        pool_b = orgs_a if shared else orgs_b
        a = _career(rng, "a", orgs_a)
        b = _career(rng, "b", pool_b)
        d_aa, _ = matching_degree(a, a, AS_OF)
        d_ab, ev = matching_degree(a, b, AS_OF)
        d_ba, _ = matching_degree(b, a, AS_OF)
        assert d_aa == 1.0
        assert abs(d_ab - d_ba) <= 1e-12
        assert 0.0 <= d_ab <= 1.0
        if not shared:
            assert d_ab == 0.0 and ev == ()
        checked += 1

    # monotonicity: b's record fixes the union; extending a's overlap interval
    # (inside that union) must never decrease the degree
    for _ in range(100):
        span = rng.randint(8, 20)
        begin = rng.randint(1980, 1995)
        b = ResumeBase(
            resume_id="b",
            experiences=(
                ExperienceRecord(
                    date_begin=date(begin, 1, 1),
                    date_end=date(begin + span, 1, 1),
                    organizations=(Organization("Org A", (Title("T", 1, RankSource.RULE),)),),
                ),
            ),
        )
        start = begin + rng.randint(1, 3)
        previous = -1.0
        for end in range(start + 1, begin + span + 1):
            a = ResumeBase(
                resume_id="a",
                experiences=(
                    ExperienceRecord(
                        date_begin=date(start, 1, 1),
                        date_end=date(end, 1, 1),
                        organizations=(
                            Organization("Org A", (Title("T", 1, RankSource.RULE),)),
                        ),
                    ),
                ),
            )
            degree, _ = matching_degree(a, b, AS_OF)
            assert degree >= previous - 1e-12
            previous = degree
        checked += 1
    assert checked == 1000
    _ok("matching degree laws", "1000 generated pairs")


# 7 ---------------------------------------------------------------------------

def _delete_records(base: ResumeBase, rng) -> ResumeBase:
    n = len(base.experiences)
    n_delete = max(1, round(n * rng.uniform(0.10, 0.30)))
    keep = set(range(n)) - set(rng.sample(range(n), min(n_delete, n - 1)))
    records = tuple(base.experiences[i] for i in sorted(keep))
    return replace(base, resume_id="__unknown__", experiences=records)


def _corrupt_fields(base: ResumeBase, rng) -> ResumeBase:
    records = list(base.experiences)
    n_corrupt = max(1, round(len(records) * 0.15))
    for idx in rng.sample(range(len(records)), min(n_corrupt, len(records))):
        rec = records[idx]
        kind = rng.randrange(3)
        if kind == 0:  # wrong title
            org = rec.organizations[0]
            bad = Organization(
                org.org_name, (Title("Impostor", 0, RankSource.RULE),) + org.titles[1:]
            )
            records[idx] = replace(rec, organizations=(bad,) + rec.organizations[1:])
        elif kind == 1:  # wrong location
            records[idx] = replace(rec, location=Location(province="Nowhere", city="Else"))
        else:  # wrong organization name (loses that shared basket)
            org = rec.organizations[0]
            bad = Organization(f"Corrupted {org.org_name}", org.titles)
            records[idx] = replace(rec, organizations=(bad,) + rec.organizations[1:])
    return replace(base, resume_id="__unknown__", experiences=tuple(records))


def test_validation_protocol_on_corrupted_corpus():
    """Deleted-record and corrupted-field resumes re-identified >= 80%."""
    start = time.perf_counter()
    rng = random.Random(505)
    generated = generate(50, seed=77, separation=0.5)
    corpus = _parse_corpus(generated)
    ids = sorted(corpus)
    blank = lambda b: replace(b, basic=replace(b.basic, name=""))

    deleted_hits = 0
    for rid in ids[:25]:
        unknown = blank(_delete_records(corpus[rid], rng))
        report = validate(unknown, corpus, as_of=AS_OF)
        deleted_hits += report.best == rid

    corrupted_hits = 0
    for rid in ids[25:]:
        unknown = blank(_corrupt_fields(corpus[rid], rng))
        report = validate(unknown, corpus, as_of=AS_OF)
        corrupted_hits += report.best == rid

    elapsed = time.perf_counter() - start
    assert deleted_hits >= 20, f"deleted-group hits {deleted_hits}/25"
    assert corrupted_hits >= 20, f"corrupted-group hits {corrupted_hits}/25"
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    _ok(
        "validation protocol",
        f"{deleted_hits}/25 deleted, {corrupted_hits}/25 corrupted, {elapsed:.2f}s",
    )


# 8 ---------------------------------------------------------------------------

def test_parser_round_trip_500_bases():
    """serialize -> parse -> serialize is byte-exact for 500 random bases."""
    rng = random.Random(606)
    for i in range(500):
        base = make_random_base(rng)
        doc = serialize_base(base)
        parsed = parse_document(doc)
        assert parsed == base, f"base {i} not equal after round trip"
        assert serialize_base(parsed) == doc, f"base {i} not byte-identical"
    _ok("parser round-trip", "500 bases byte-exact")


# 9 ---------------------------------------------------------------------------

def test_mobility_geometry_200_nodes():
    """Point-in-region 100%, zero overlaps at eps=0.05, deterministic."""
    generated = generate(200, seed=88, separation=0.5)
    corpus = _parse_corpus(generated)
    geom = RegionGeometry()
    t = date(1996, 6, 1)  # every generated career has started by 1996
    snap_a = snapshot(corpus, t, geom=geom, as_of=AS_OF)
    assert len(snap_a.nodes) == 200
    inside = sum(
        1 for n in snap_a.nodes if geom.contains(n.community, n.x, n.y)
    )
    assert inside == 200, f"{200 - inside} nodes escaped their region"
    overlaps = overlap_count(snap_a.nodes, geom, epsilon=0.05)
    assert overlaps == 0, f"{overlaps} overlapping pairs"
    snap_b = snapshot(corpus, t, geom=geom, as_of=AS_OF)
    assert [(n.resume_id, n.x, n.y) for n in snap_a.nodes] == [
        (n.resume_id, n.x, n.y) for n in snap_b.nodes
    ]
    _ok("mobility geometry", "200 nodes in-region, 0 overlaps, deterministic")


# 10 --------------------------------------------------------------------------

def test_histogram_statistics_oracle():
    """corpus_rank_stats equals an independent sum/divide to 1e-12."""
    generated = generate(50, seed=99, separation=0.5)
    corpus = _parse_corpus(generated)
    trajectories = [trajectory_of(base, AS_OF) for _, base in sorted(corpus.items())]
    stats = corpus_rank_stats(trajectories)
    per_resume = [rank_durations(traj) for traj in trajectories]
    for i in range(9):
        expected = sum(p[i] for p in per_resume) / len(per_resume)
        assert abs(stats.mean_years[i] - expected) <= 1e-12, f"rank {i}"
    _ok("histogram oracle", "50 resumes, 1e-12")
