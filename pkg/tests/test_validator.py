import random
from dataclasses import replace
from datetime import date

import pytest

from conftest import make_random_base
from cvminer.errors import EmptyCorpus
from cvminer.model import (
    BasicInfo,
    ExperienceRecord,
    Organization,
    RankSource,
    ResumeBase,
    Title,
)
from cvminer.relations import matching_degree
from cvminer.validator import serialize_report, validate

AS_OF = date(2026, 1, 1)


def _base(resume_id, spans, name="Someone"):
    records = tuple(
        ExperienceRecord(
            date_begin=date(b, 1, 1),
            date_end=date(e, 1, 1),
            organizations=(Organization(org, (Title("T", 1, RankSource.RULE),)),),
        )
        for b, e, org in sorted(spans)
    )
    return ResumeBase(
        resume_id=resume_id, basic=BasicInfo(name=name), experiences=records
    )


def _corpus(n=6):
    corpus = {}
    for i in range(n):
        spans = [
            (1980 + i, 1990 + i, f"Org {i} Alpha"),
            (1990 + i, 2000 + i, f"Org {i} Beta"),
            (2000 + i, 2005 + i, f"Org {i} Gamma"),
        ]
        base = _base(f"r{i}", spans, name=f"Person {i}")
        corpus[base.resume_id] = base
    return corpus


def _blank_name(base: ResumeBase) -> ResumeBase:
    return replace(
        base, resume_id="__unknown__", basic=replace(base.basic, name="")
    )


def test_identity_law_for_every_member():
    corpus = _corpus()
    for member in corpus.values():
        report = validate(_blank_name(member), corpus, as_of=AS_OF)
        assert report.best == member.resume_id
        assert report.degree == 1.0
        assert report.percent == 100
        assert report.mismatches == ()
        assert report.confident


def test_disjoint_unknown_flagged_not_confident():
    corpus = _corpus()
    stranger = _base("__unknown__", [(1990, 2000, "Nowhere Guild")], name="")
    report = validate(stranger, corpus, as_of=AS_OF)
    assert report.degree == 0.0
    assert not report.confident


def test_record_deletion_identified_with_hand_oracle():
    corpus = _corpus()
    member = corpus["r2"]
    # delete the middle record (1992-2002 for r2): 10 of 25 years missing
    corrupted = replace(
        _blank_name(member), experiences=(member.experiences[0], member.experiences[2])
    )
    report = validate(corrupted, corpus, as_of=AS_OF)
    assert report.best == "r2"
    # hand interval oracle: overlap 10+5, union 25 (r2 spans 1982..2007)
    assert report.degree == pytest.approx(15 / 25, abs=1e-3)
    deleted = [m for m in report.mismatches if m.test_value is None]
    assert len(deleted) == 1
    assert "Org 2 Beta" in deleted[0].standard_value


def test_corrupted_field_reported():
    corpus = _corpus()
    member = corpus["r1"]
    bad_record = replace(
        member.experiences[1],
        organizations=(
            Organization("Org 1 Beta", (Title("Impostor", 1, RankSource.RULE),)),
        ),
    )
    corrupted = replace(
        _blank_name(member),
        experiences=(member.experiences[0], bad_record, member.experiences[2]),
    )
    report = validate(corrupted, corpus, as_of=AS_OF)
    assert report.best == "r1"
    title_mismatches = [m for m in report.mismatches if m.path.endswith(".titles")]
    assert title_mismatches
    assert title_mismatches[0].test_value == "Impostor"
    assert title_mismatches[0].standard_value == "T"


def test_candidates_sorted_and_match_full_score_vector():
    corpus = _corpus()
    # unknown sharing orgs with r3 fully and r4 partially
    unknown = _base(
        "__unknown__",
        [(1983, 1993, "Org 3 Alpha"), (1993, 2003, "Org 3 Beta"), (2004, 2008, "Org 4 Gamma")],
        name="",
    )
    report = validate(unknown, corpus, as_of=AS_OF)
    # oracle: full matching-degree sort
    scored = []
    for rid, base in sorted(corpus.items()):
        degree, _ = matching_degree(unknown, base, AS_OF)
        scored.append((rid, degree))
    scored.sort(key=lambda item: (-item[1], item[0]))
    assert list(report.candidates) == scored[: len(report.candidates)]
    assert report.best == scored[0][0]
    values = [deg for _, deg in report.candidates]
    assert values == sorted(values, reverse=True)


def test_candidate_limit_respected():
    rng = random.Random(13)
    corpus = {}
    for i in range(30):
        base = make_random_base(rng, resume_id=f"m{i:02d}")
        corpus[base.resume_id] = base
    unknown = _blank_name(corpus["m07"])
    report = validate(unknown, corpus, as_of=AS_OF, candidate_limit=5)
    assert len(report.candidates) == 5
    assert report.best == report.candidates[0][0]
    assert all(report.degree >= deg for _, deg in report.candidates)


def test_validation_deterministic():
    corpus = _corpus()
    unknown = _blank_name(corpus["r4"])
    assert validate(unknown, corpus, as_of=AS_OF) == validate(
        unknown, corpus, as_of=AS_OF
    )


def test_empty_corpus_raises():
    with pytest.raises(EmptyCorpus):
        validate(_base("u", [(1990, 1995, "X")]), {})


def test_report_serializes_with_percent():
    corpus = _corpus()
    report = validate(_blank_name(corpus["r0"]), corpus, as_of=AS_OF)
    doc = serialize_report(report)
    assert '"percent": 100' in doc
    assert '"best": "r0"' in doc
