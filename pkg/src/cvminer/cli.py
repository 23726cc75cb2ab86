"""Batch driver: ingest, analyze, mine, validate, generate, serve."""

from __future__ import annotations

import json
import os
import sys
from datetime import date
from pathlib import Path

import click

from .classifier import classify as classify_fv
from .classifier import train as train_model
from .errors import CvminerError
from .features import extract_features
from .lexicon import default_lexicon, load_lexicon
from .mobility import animate_range, serialize_snapshot, snapshot as mobility_snapshot
from .model import LabelSource, PatternLabel, RawResume
from .parser import parse_resume
from .ranks import load_exceptions, load_rules, quantify, trajectory_of
from .relations import RelationEdge, apriori, build_baskets, matching_degree
from .store import CorpusStore, LabelEdit
from .synth import generate
from .validator import serialize_report, validate as validate_base

DEFAULT_STORE = "corpus"


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _load_snapshot(store_dir: str):
    store = CorpusStore(store_dir)
    try:
        return store, store.load()
    except FileNotFoundError as exc:
        _fail(str(exc))


store_option = click.option(
    "--store", "store_dir", default=DEFAULT_STORE, show_default=True,
    help="Corpus store directory.",
)


@click.group()
def main():
    """Resume mining workbench: parse, rank, classify, relate, validate."""


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--lexicon", "lexicon_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--rules", "rules_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--exceptions", "exceptions_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--as-of", "as_of_raw", default=None, help="Close ongoing records at this date.")
@store_option
def ingest(directory, lexicon_dir, rules_file, exceptions_file, as_of_raw, store_dir):
    """Parse and quantify every .txt resume in DIRECTORY into a new version."""
    lexicon = load_lexicon(lexicon_dir) if lexicon_dir else default_lexicon()
    rules = load_rules(rules_file) if rules_file else None
    exceptions = load_exceptions(exceptions_file) if exceptions_file else None
    as_of = date.fromisoformat(as_of_raw) if as_of_raw else None
    raws = []
    for path in sorted(Path(directory).glob("*.txt")):
        raws.append(RawResume(id=path.stem, text=path.read_text(encoding="utf-8")))
    if not raws:
        _fail(f"no .txt resumes under {directory}")
    store = CorpusStore(store_dir)
    try:
        snap = store.ingest(raws, lexicon, rules, exceptions, as_of=as_of)
    except CvminerError as exc:
        _fail(str(exc))
    click.echo(f"version {snap.version}: {len(snap.resumes)} resumes ingested")
    for rid in sorted(snap.warnings):
        for message in snap.warnings[rid]:
            click.echo(f"warning [{rid}]: {message}")
    for rid in sorted(snap.failed):
        click.echo(f"failed [{rid}]: {snap.failed[rid]}")


@main.command()
@click.argument("resume_id")
@store_option
def features(resume_id, store_dir):
    """Print the 9-entry rank time-share vector and total span for RESUME_ID."""
    _, snap = _load_snapshot(store_dir)
    base = snap.resumes.get(resume_id)
    if base is None:
        _fail(f"unknown resume {resume_id!r}")
    try:
        fv = extract_features(trajectory_of(base, snap.as_of))
    except CvminerError as exc:
        _fail(str(exc))
    click.echo("r = " + ", ".join(f"{v:.4f}" for v in fv.r))
    click.echo("t = " + ", ".join(f"{v:.4f}" for v in fv.t))
    click.echo(f"T = {fv.T:.4f}")


@main.command()
@click.option("--labels", "labels_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help="TSV of resume_id<TAB>pattern expert labels.")
@store_option
def train(labels_file, store_dir):
    """Apply expert labels, train the pattern model, classify the rest."""
    store, snap = _load_snapshot(store_dir)
    edits = []
    for line in Path(labels_file).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rid, _, label = line.partition("\t")
        try:
            edits.append((rid, LabelEdit(PatternLabel(label.strip()))))
        except ValueError:
            _fail(f"unknown pattern label {label!r} for {rid}")
    if not edits:
        _fail("label file is empty")
    try:
        snap = store.apply_edits(snap, edits)
        labeled = [
            (extract_features(trajectory_of(b, snap.as_of)), b.pattern_label)
            for b in snap.resumes.values()
            if b.label_source is LabelSource.EXPERT and b.pattern_label
        ]
        model = train_model(labeled)
        classified = {
            rid: classify_fv(model, extract_features(trajectory_of(b, snap.as_of)))
            for rid, b in sorted(snap.resumes.items())
            if b.label_source is not LabelSource.EXPERT
        }
        snap = store.with_model(snap, model, classified)
    except CvminerError as exc:
        _fail(str(exc))
    click.echo(f"version {snap.version}: model trained on {len(labeled)} labels")
    for c in snap.model.classes:
        click.echo(f"  {c.label.value}: prior {c.prior:.3f}")


@main.command()
@click.argument("resume_id", required=False)
@click.option("--all", "do_all", is_flag=True, help="Classify every resume.")
@store_option
def classify(resume_id, do_all, store_dir):
    """Print the pattern label the trained model assigns."""
    _, snap = _load_snapshot(store_dir)
    if snap.model is None:
        _fail("no trained model in the current snapshot (run `train` first)")
    if not do_all and resume_id is None:
        _fail("give a RESUME_ID or --all")
    ids = sorted(snap.resumes) if do_all else [resume_id]
    for rid in ids:
        base = snap.resumes.get(rid)
        if base is None:
            _fail(f"unknown resume {rid!r}")
        fv = extract_features(trajectory_of(base, snap.as_of))
        click.echo(f"{rid}\t{classify_fv(snap.model, fv).value}")


@main.command()
@click.option("--min-support", default=2, show_default=True)
@store_option
def mine(min_support, store_dir):
    """Mine explicit relations and write edges.tsv for the current version."""
    store, snap = _load_snapshot(store_dir)
    baskets = build_baskets(list(snap.resumes.values()))
    frequent = apriori(baskets, min_support)
    edges = []
    seen = set()
    for fs in frequent:
        if len(fs.members) != 2:
            continue
        a, b = sorted(fs.members)
        if (a, b) in seen:
            continue
        seen.add((a, b))
        value, evidence = matching_degree(snap.resumes[a], snap.resumes[b], snap.as_of)
        edges.append(RelationEdge(a=a, b=b, kind="explicit", value=value, evidence=evidence))
    edges.sort(key=lambda e: (e.a, e.b))
    path = store.save_edges(snap, edges)
    click.echo(f"{len(edges)} edges written to {path}")


@main.command()
@click.argument("resume_file", type=click.Path(exists=True, dir_okay=False))
@store_option
def validate(resume_file, store_dir):
    """Identify the corpus owner of an unknown resume text and diff it."""
    _, snap = _load_snapshot(store_dir)
    text = Path(resume_file).read_text(encoding="utf-8")
    try:
        base = quantify(parse_resume(RawResume(id="__unknown__", text=text), default_lexicon()))
        report = validate_base(base, snap.resumes, as_of=snap.as_of)
    except CvminerError as exc:
        _fail(str(exc))
    click.echo(serialize_report(report), nl=False)


@main.command()
@click.option("--at", "at_raw", default=None, help="Snapshot timestamp (YYYY-MM-DD).")
@click.option("--animate", "animate_raw", nargs=3, default=None,
              type=(str, str, int), help="FROM TO STEPS.")
@click.option("--out", "out_dir", default="mobility", show_default=True)
@store_option
def mobility(at_raw, animate_raw, out_dir, store_dir):
    """Write mobility snapshot documents for a timestamp or an animation range."""
    _, snap = _load_snapshot(store_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    try:
        if at_raw:
            doc = mobility_snapshot(snap.resumes, date.fromisoformat(at_raw), as_of=snap.as_of)
            path = out / f"snapshot_{doc.timestamp.isoformat()}.json"
            path.write_text(serialize_snapshot(doc), encoding="utf-8")
            click.echo(f"wrote {path}")
        elif animate_raw:
            frm, to, steps = animate_raw
            snaps = animate_range(
                snap.resumes, date.fromisoformat(frm), date.fromisoformat(to),
                steps, as_of=snap.as_of,
            )
            for i, doc in enumerate(snaps):
                path = out / f"snapshot_{i:03d}_{doc.timestamp.isoformat()}.json"
                path.write_text(serialize_snapshot(doc), encoding="utf-8")
            click.echo(f"wrote {len(snaps)} snapshots to {out}")
        else:
            _fail("give --at DATE or --animate FROM TO STEPS")
    except (CvminerError, ValueError) as exc:
        _fail(str(exc))


@main.command("gen-synthetic")
@click.option("--n", "count", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--separation", default=0.5, show_default=True, type=float)
@click.option("--out", "out_dir", default="synthetic", show_default=True)
def gen_synthetic(count, seed, separation, out_dir):
    """Generate a deterministic synthetic corpus with a ground-truth manifest."""
    try:
        corpus = generate(count, seed, separation)
    except ValueError as exc:
        _fail(str(exc))
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for raw in corpus.raws:
        (out / f"{raw.id}.txt").write_text(raw.text, encoding="utf-8")
    (out / "manifest.json").write_text(
        json.dumps(corpus.manifest, indent=2) + "\n", encoding="utf-8"
    )
    click.echo(f"wrote {len(corpus.raws)} resumes + manifest.json to {out}")


@main.command()
@click.option("--addr", default=None, help="host:port (default env CVMINER_ADDR or 127.0.0.1:8570)")
@store_option
def serve(addr, store_dir):
    """Start the HTTP API over the current corpus snapshot."""
    import uvicorn

    from .service import create_app

    raw_addr = addr or os.environ.get("CVMINER_ADDR", "127.0.0.1:8570")
    host, _, port_raw = raw_addr.rpartition(":")
    if not host or not port_raw.isdigit():
        _fail(f"bad address {raw_addr!r}, expected host:port")
    store = CorpusStore(store_dir)
    try:
        app = create_app(store)
    except FileNotFoundError as exc:
        _fail(str(exc))
    uvicorn.run(app, host=host, port=int(port_raw), log_level="warning")


if __name__ == "__main__":
    main()
