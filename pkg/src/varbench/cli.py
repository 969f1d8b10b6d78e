"""Command-line front end: list, gen-data, validate, bench, stats, report, run-all, export-diff.

Exit codes:
    0 - success, or a flawed pair failed the gate as expected
    1 - unexpected gate outcome, measurement failure, or malformed records
    2 - usage error (unknown pair, pattern, file or flag)
"""

from __future__ import annotations

import argparse
import difflib
import json
import os
import platform
import statistics
import sys
import time
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path

from . import codesize, corpus, data, ppm, report, stats
from .corpus import CASE_STUDY, CorpusEntry
from .gate import gate_pair
from .model import (
    CorrectnessReport,
    Dataset,
    RecordError,
    StatsSummary,
    dump_jsonl,
)
from .timing import MeasurementError, measure_pair

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ENV_OUTPUT_DIR = "VARBENCH_OUTPUT_DIR"
FORMATS = ("json", "csv", "html")
BACKENDS = {codesize.DEFAULT_BACKEND.id: codesize.DEFAULT_BACKEND, "none": None}


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


@dataclass
class Context:
    entries: tuple
    seed: int
    output_dir: Path
    as_json: bool

    def entry(self, pair_id: str) -> CorpusEntry:
        for e in self.entries:
            if e.id == pair_id:
                return e
        raise UsageError(f"unknown pair {pair_id!r}; run 'list' to see the catalog")

    def emit(self, text: str, payload=None) -> None:
        if self.as_json and payload is not None:
            print(json.dumps(payload, indent=2, ensure_ascii=False))
        elif not self.as_json:
            print(text)


def safe_stem(pair_id: str) -> str:
    return pair_id.replace("/", "__")


def _backend(name: str):
    if name not in BACKENDS:
        raise UsageError(f"unknown code-size backend {name!r}; choose from {', '.join(BACKENDS)}")
    return BACKENDS[name]


def _formats(text) -> tuple:
    if isinstance(text, str):
        text = [t.strip() for t in text.split(",") if t.strip()]
    fmts = tuple(text or ())
    bad = [f for f in fmts if f not in FORMATS]
    if bad or not fmts:
        raise UsageError(f"formats must be a non-empty subset of {','.join(FORMATS)}")
    return fmts


def resolve_dataset(ref: str, seed: int, items: int) -> Dataset:
    """A dataset from a JSONL file, a PPM/PGM file or directory, or an inline pattern spec."""
    path = Path(ref)
    if path.exists():
        try:
            if path.is_dir() or path.suffix.lower() in ppm.SUFFIXES:
                return ppm.ingest_ppm(path)
            return data.load_dataset(path)
        except (RecordError, ppm.PpmError) as exc:
            raise Failure(f"{path}: {exc}") from None
    try:
        return data.synth(data.PatternSpec.parse(ref, seed=seed, items=items))
    except ValueError as exc:
        raise UsageError(f"dataset {ref!r} is neither a file nor a pattern: {exc}") from None


def _check_schema(entry: CorpusEntry, ds: Dataset) -> None:
    if len(ds) and ds.schema != entry.pair.dataset_hint:
        raise UsageError(f"pair {entry.id} takes {entry.pair.dataset_hint!r} data, "
                         f"dataset {ds.id} is {ds.schema!r}")


def merge_reports(pair_id: str, reports) -> CorrectnessReport:
    reports = list(reports)
    examples = [c for r in reports for c in r.counterexamples][:10]
    return CorrectnessReport(pair_id, sum(r.total for r in reports),
                             sum(r.mismatched for r in reports), tuple(examples))


def gate_verdict(entry: CorpusEntry, rep: CorrectnessReport) -> tuple:
    """``(status, as_expected)`` for a gate report under the entry's expectation."""
    want = entry.gate_expectation
    if want == "speed-only":
        return "speed-only", True
    if want == "equivalent":
        return ("passed", True) if rep.mismatched == 0 else ("unexpected-divergence", False)
    return ("failed-as-expected", True) if rep.mismatched else ("unexpected-agreement", False)


def run_gate(entry: CorpusEntry, datasets, workers: int = 1) -> CorrectnessReport:
    return merge_reports(entry.id, (gate_pair(entry.pair, ds, workers=workers) for ds in datasets))


def code_sizes(entry: CorpusEntry, backend) -> list:
    if backend is None:
        return []
    return [codesize.analyze(entry.pair.baseline, backend), codesize.analyze(entry.pair.candidate, backend)]


def write_report(out_dir: Path, stem: str, title: str, formats, records=(), summary=None,
                 sizes=(), gate=None, notes=()) -> dict:
    """Write stats JSON, bucket CSV and HTML for one result set; return the written paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    if summary is None and records:
        summary = stats.summary([r.g for r in records])
    points, r = (), None
    if len(records) >= 2:
        try:
            r, points = stats.correlate_runtime_speedup(records, with_points=True)
        except ValueError:
            points = stats.scatter_points(records)
    written = {}
    if "json" in formats and summary is not None:
        doc = {"summary": summary.to_dict(), "pearson_runtime_speedup": r,
               "code_sizes": [s.to_dict() for s in sizes]}
        p = out_dir / f"{stem}.stats.json"
        p.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        written["stats"] = str(p)
    if "csv" in formats:
        p = out_dir / f"{stem}.buckets.csv"
        p.write_text(stats.histogram_csv(dict(summary.histogram) if summary else {}), encoding="utf-8")
        written["csv"] = str(p)
    if "html" in formats:
        p = out_dir / f"{stem}.html"
        p.write_text(report.render_html(title, summary, points, r, sizes, codesize.REFERENCE_SIZES, gate, notes),
                     encoding="utf-8")
        written["html"] = str(p)
    return written


class _ReportParser(HTMLParser):
    def __init__(self):
        super().__init__()
        self.peak = None
        self.tags = set()
        self.external = []

    def handle_starttag(self, tag, attrs):
        self.tags.add(tag)
        for k, v in attrs:
            if k == "data-peak-bucket":
                self.peak = int(v)
            if k in ("src", "href") and v:
                self.external.append(v)


def load_html_report(path) -> dict:
    """Parse a written HTML report; fails on external references."""
    parser = _ReportParser()
    parser.feed(Path(path).read_text(encoding="utf-8"))
    parser.close()
    if parser.external:
        raise RecordError(f"{path}: report references external resources {parser.external}")
    if "html" not in parser.tags:
        raise RecordError(f"{path}: not an HTML document")
    return {"peak_bucket": parser.peak, "has_svg": "svg" in parser.tags}


def load_stats_json(path) -> StatsSummary:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return StatsSummary.from_dict(doc["summary"])


def load_campaign(path) -> dict:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    for key in ("entries", "exit_code", "all_expected"):
        if key not in doc:
            raise RecordError(f"{path}: campaign lacks {key!r}")
    for e in doc["entries"]:
        if e.get("gate") is not None:
            CorrectnessReport.from_dict(e["gate"])
    return doc


# commands

def cmd_list(ctx: Context, args) -> int:
    rows = [e.to_dict() for e in ctx.entries]
    lines = []
    for d in rows:
        spec = d["defaults"]
        lines.append(f"{d['id']:<48} {d['category']:<10} {d['gate_expectation']:<11} "
                     f"repeat={spec['repeat']} number={spec['number']}")
        lines.append(f"    {d['baseline']['listing_ref']}  ->  {d['candidate']['listing_ref']}")
    lines.append(f"{len(rows)} entries")
    ctx.emit("\n".join(lines), rows)
    return EXIT_OK


def cmd_gen_data(ctx: Context, args) -> int:
    if args.ppm:
        try:
            ds = ppm.ingest_ppm(args.ppm)
        except FileNotFoundError as exc:
            raise UsageError(str(exc)) from None
        except ppm.PpmError as exc:
            raise Failure(f"{args.ppm}: {exc}") from None
    elif args.pattern:
        try:
            spec = data.PatternSpec.parse(args.pattern, seed=ctx.seed, items=args.items, bands=args.bands)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ds = data.synth(spec)
    else:
        raise UsageError("gen-data needs a pattern or --ppm PATH")
    out = Path(args.out) if args.out else ctx.output_dir / f"{ds.id}.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    data.save_dataset(ds, out)
    ctx.emit(f"wrote {len(ds)} items of {ds.schema} to {out}",
             {"path": str(out), "id": ds.id, "schema": ds.schema, "items": len(ds)})
    return EXIT_OK


def cmd_validate(ctx: Context, args) -> int:
    e = ctx.entry(args.pair)
    if args.dataset:
        datasets = [resolve_dataset(args.dataset, ctx.seed, args.items)]
        _check_schema(e, datasets[0])
    else:
        datasets = corpus.gate_datasets(e, items=args.items, seed=ctx.seed)
    reports = [gate_pair(e.pair, ds, workers=args.workers) for ds in datasets]
    rep = merge_reports(e.id, reports)
    status, ok = gate_verdict(e, rep)
    lines = [f"{e.id}: {status} ({rep.mismatched}/{rep.total} mismatched, fraction {rep.fraction:.4f})"]
    for c in rep.counterexamples[:3]:
        lines.append(f"  {c.item_id}: baseline {c.baseline[:80]} | candidate {c.candidate[:80]}")
    ctx.emit("\n".join(lines), {"pair_id": e.id, "status": status, "expected": e.gate_expectation,
                                "report": rep.to_dict(), "datasets": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(ctx: Context, args) -> int:
    e = ctx.entry(args.pair)
    if not e.pair.expected_equivalent and e.gated and not args.force:
        print(f"refusing to time {e.id}: its candidate is known to be wrong (use --force)", file=sys.stderr)
        return EXIT_FAIL
    if args.dataset:
        ds = resolve_dataset(args.dataset, ctx.seed, args.items)
        _check_schema(e, ds)
    else:
        ds = corpus.bench_dataset(e, items=args.items, seed=ctx.seed)
    if not args.skip_gate and e.gated:
        status, ok = gate_verdict(e, run_gate(e, [ds]))
        if status != "passed":
            print(f"gate {status} for {e.id}; nothing timed", file=sys.stderr)
            return EXIT_FAIL
    spec = e.pair.default_spec.replace(args.repeat, args.number)
    out = Path(args.out) if args.out else ctx.output_dir / f"{safe_stem(e.id)}.records.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    try:
        records = measure_pair(e.pair, ds, spec)
    except MeasurementError as err:
        partial = out.with_name(out.name.replace(".jsonl", "") + ".partial.jsonl")
        stats.save_records(err.partial, partial)
        print(f"{err}; {len(err.partial)} records saved to {partial}", file=sys.stderr)
        return EXIT_FAIL
    stats.save_records(records, out)
    gs = [r.g for r in records]
    ctx.emit(f"{e.id}: {report.summary_line(gs)} -> {out}",
             {"pair_id": e.id, "records": str(out), "count": len(gs), "min_g": min(gs),
              "median_g": statistics.median(gs), "max_g": max(gs)})
    return EXIT_OK


def _summary_source(args):
    """Records and summary from a records file or a replay fixture."""
    if args.full_scale or args.getcount_table:
        fixture = stats.FULL_SCALE if args.full_scale else stats.GETCOUNT_TABLE
        return [], stats.summary(stats.expand_fixture(fixture)), "full-scale" if args.full_scale else "getcount-table"
    if not args.records:
        raise UsageError("give a records file, --full-scale or --getcount-table")
    path = Path(args.records)
    if not path.exists():
        raise UsageError(f"no such records file: {path}")
    try:
        records = stats.load_records(path)
    except RecordError as exc:
        raise Failure(f"{path}: {exc}") from None
    if not records:
        raise Failure(f"{path}: no records to summarize")
    stem = path.name[:-len(".records.jsonl")] if path.name.endswith(".records.jsonl") else path.stem
    return records, stats.summary([r.g for r in records]), stem


def cmd_stats(ctx: Context, args) -> int:
    records, s, _ = _summary_source(args)
    doc = s.to_dict()
    doc["peak_bucket"] = s.peak_bucket
    if len(records) >= 2:
        try:
            doc["pearson_runtime_speedup"] = stats.correlate_runtime_speedup(records)
        except ValueError:
            doc["pearson_runtime_speedup"] = None
    text = (f"count={s.count} mean={s.mean:.4f} std={s.std:.4f} min={s.min_g:.4f} "
            f"max={s.max_g:.4f} peak_bucket={s.peak_bucket}")
    if "pearson_runtime_speedup" in doc and doc["pearson_runtime_speedup"] is not None:
        text += f" pearson={doc['pearson_runtime_speedup']:.4f}"
    ctx.emit(text, doc)
    return EXIT_OK


def cmd_report(ctx: Context, args) -> int:
    records, s, stem = _summary_source(args)
    formats = _formats(args.formats)
    backend = _backend(args.backend)
    sizes = []
    pair_id = args.pair or (records[0].pair_id if records else None)
    if pair_id:
        try:
            sizes = code_sizes(ctx.entry(pair_id), backend)
        except UsageError:
            if args.pair:
                raise
    notes = ["replayed from the shipped bucket table"] if not records else []
    out = Path(args.out) if args.out else ctx.output_dir
    written = write_report(out, stem, f"Improvement factors: {pair_id or stem}", formats,
                           records, s, sizes, notes=notes)
    ctx.emit("\n".join(f"wrote {p}" for p in written.values()), written)
    return EXIT_OK


def listing_diff(a_source: str, b_source: str, a_name: str = "baseline", b_name: str = "candidate") -> str:
    return "".join(difflib.unified_diff(a_source.splitlines(keepends=True), b_source.splitlines(keepends=True),
                                        fromfile=a_name, tofile=b_name))


def cmd_export_diff(ctx: Context, args) -> int:
    e = ctx.entry(args.pair)
    if e.category != CASE_STUDY:
        raise UsageError(f"{e.id} is a {e.category} entry; diffs are exported for case studies only")
    p = e.pair
    sys.stdout.write(listing_diff(corpus.listing_source(p.baseline), corpus.listing_source(p.candidate),
                                  p.baseline.id, p.candidate.id))
    return EXIT_OK


# campaign

def _campaign_config(ctx: Context, args) -> dict:
    cfg = {"pairs": "all", "dataset": None, "repeat": None, "number": None, "formats": list(FORMATS),
           "fail_on_gate": True, "items": 20, "gate_items": 1000, "workers": 1}
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(loaded) - set(cfg) - {"output_dir", "seed"}
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        cfg.update(loaded)
    for key in ("pairs", "dataset", "repeat", "number", "formats", "fail_on_gate", "items",
                "gate_items", "workers"):
        v = getattr(args, key, None)
        if v is not None:
            cfg[key] = v
    if "seed" in cfg and not args.seed_given:
        ctx.seed = int(cfg["seed"])
    if "output_dir" in cfg and not args.output_dir_given:
        ctx.output_dir = Path(cfg["output_dir"])
    cfg["formats"] = list(_formats(cfg["formats"]))
    pairs = cfg["pairs"]
    if pairs == "all":
        cfg["pairs"] = [e.id for e in ctx.entries]
    else:
        if isinstance(pairs, str):
            pairs = [p for p in pairs.split(",") if p]
        for p in pairs:
            ctx.entry(p)
        cfg["pairs"] = list(pairs)
    return cfg


def _run_entry(ctx: Context, e: CorpusEntry, cfg: dict, fixed: Dataset | None, backend) -> dict:
    out_dir = ctx.output_dir / "pairs" / safe_stem(e.id)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = safe_stem(e.id)
    usable = fixed if fixed is not None and fixed.schema == e.pair.dataset_hint else None
    row = {"id": e.id, "category": e.category, "gate_expectation": e.gate_expectation,
           "gate": None, "gate_status": None, "bench": None, "status": "expected", "artifacts": {}}
    rep = None
    if e.gated:
        datasets = [usable] if usable else corpus.gate_datasets(e, items=cfg["gate_items"], seed=ctx.seed)
        rep = run_gate(e, datasets, workers=cfg["workers"])
        gpath = out_dir / f"{stem}.gate.json"
        gpath.write_text(json.dumps(rep.to_dict(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        row["gate"] = rep.to_dict()
        row["artifacts"]["gate"] = str(gpath)
    status, ok = gate_verdict(e, rep) if rep else ("speed-only", True)
    row["gate_status"] = status
    if not ok:
        row["status"] = "failed"
    records = []
    if ok and status in ("passed", "speed-only"):
        ds = usable or corpus.bench_dataset(e, items=cfg["items"], seed=ctx.seed)
        spec = e.pair.default_spec.replace(cfg["repeat"], cfg["number"])
        try:
            records = measure_pair(e.pair, ds, spec)
        except MeasurementError as err:
            records = err.partial
            row["status"] = "measurement-failed"
            row["error"] = str(err)
        if records:
            gs = [r.g for r in records]
            row["bench"] = {"repeat": spec.repeat, "number": spec.number, "count": len(gs),
                            "min_g": min(gs), "median_g": statistics.median(gs), "max_g": max(gs),
                            "mean_g": statistics.fmean(gs)}
    rpath = out_dir / f"{stem}.records.jsonl"
    rpath.write_text(dump_jsonl(r.to_dict() for r in records), encoding="utf-8")
    row["artifacts"]["records"] = str(rpath)
    sizes = code_sizes(e, backend)
    if len(sizes) == 2 and all(s.supported for s in sizes):
        row["code_size"] = {"baseline": sizes[0].total_size, "candidate": sizes[1].total_size,
                            "delta": codesize.compare_sizes(*sizes), "backend_id": sizes[0].backend_id}
    notes = [f"gate: {status}"] + ([e.notes] if e.notes else [])
    row["artifacts"].update(write_report(out_dir, stem, e.id, cfg["formats"], records, None, sizes, rep, notes))
    return row


def cmd_run_all(ctx: Context, args) -> int:
    cfg = _campaign_config(ctx, args)
    backend = _backend(args.backend)
    fixed = resolve_dataset(cfg["dataset"], ctx.seed, cfg["items"]) if cfg["dataset"] else None
    ctx.output_dir.mkdir(parents=True, exist_ok=True)
    started = time.time()
    rows = []
    for k, pid in enumerate(cfg["pairs"], start=1):
        e = ctx.entry(pid)
        t0 = time.perf_counter()
        row = _run_entry(ctx, e, cfg, fixed, backend)
        row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
        bench = row["bench"]
        g = f" median g={bench['median_g']:.3f}" if bench else ""
        print(f"[{k}/{len(cfg['pairs'])}] {pid}: {row['gate_status']}{g} ({row['status']}, {row['seconds']:.1f}s)",
              file=sys.stderr)
    gate_failed = any(r["status"] == "failed" for r in rows)
    measure_failed = any(r["status"] == "measurement-failed" for r in rows)
    code = EXIT_FAIL if measure_failed or (gate_failed and cfg["fail_on_gate"]) else EXIT_OK
    doc = {
        "tool": "varbench",
        "host": {"python": platform.python_version(), "implementation": platform.python_implementation(),
                 "machine": platform.machine(), "system": platform.system()},
        "seed": ctx.seed,
        "config": cfg,
        "started": started,
        "seconds": round(time.time() - started, 3),
        "all_expected": not gate_failed and not measure_failed,
        "exit_code": code,
        "entries": rows,
    }
    path = ctx.output_dir / "campaign.json"
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    n_ok = sum(r["status"] == "expected" for r in rows)
    ctx.emit(f"{n_ok}/{len(rows)} entries behaved as expected; campaign written to {path}",
             {"campaign": str(path), "exit_code": code, "expected": n_ok, "entries": len(rows)})
    return code


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--seed", type=int, help="seed for synthetic data (default 0)", **kw)
    p.add_argument("--output-dir", help=f"artifact directory (default ${ENV_OUTPUT_DIR} or ./varbench-out)", **kw)
    p.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="varbench", parents=[_common(True)],
                     description="Gate, time and report optimized function variants against their originals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_common(False)]

    sub.add_parser("list", parents=common, help="show the variant catalog")

    p = sub.add_parser("gen-data", parents=common, help="write a dataset as JSONL")
    p.add_argument("pattern", nargs="?", help="pattern[:bands=N,items=N,seed=N]")
    p.add_argument("--ppm", help="ingest a PPM/PGM file or directory instead")
    p.add_argument("--items", type=int, default=1000)
    p.add_argument("--bands", type=int, default=3)
    p.add_argument("-o", "--out", help="output file")

    p = sub.add_parser("validate", parents=common, help="run the correctness gate")
    p.add_argument("pair")
    p.add_argument("dataset", nargs="?", help="JSONL file, PPM path or pattern spec (default: the entry's suite)")
    p.add_argument("--items", type=int, default=1000, help="items per synthetic pattern")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("bench", parents=common, help="gate, then time a pair")
    p.add_argument("pair")
    p.add_argument("dataset", nargs="?")
    p.add_argument("--items", type=int, default=20)
    p.add_argument("--repeat", type=int)
    p.add_argument("--number", type=int)
    p.add_argument("--skip-gate", action="store_true")
    p.add_argument("--force", action="store_true", help="time a pair whose candidate is known to be wrong")
    p.add_argument("-o", "--out", help="records JSONL path")

    for name, help_ in (("stats", "summarize measurement records"), ("report", "write JSON/CSV/HTML reports")):
        p = sub.add_parser(name, parents=common, help=help_)
        p.add_argument("records", nargs="?")
        p.add_argument("--full-scale", action="store_true", help="use the shipped full-scale bucket table")
        p.add_argument("--getcount-table", action="store_true", help="use the shipped getcount bucket table")
        if name == "report":
            p.add_argument("--formats", default=",".join(FORMATS))
            p.add_argument("--pair", help="pair whose code sizes to include")
            p.add_argument("--backend", default=codesize.DEFAULT_BACKEND.id)
            p.add_argument("-o", "--out", help="output directory")

    p = sub.add_parser("run-all", parents=common, help="gate, time and report a set of pairs")
    p.add_argument("--config", help="JSON campaign config; flags override its keys")
    p.add_argument("--pairs", help="comma-separated pair ids or 'all'")
    p.add_argument("--dataset")
    p.add_argument("--repeat", type=int)
    p.add_argument("--number", type=int)
    p.add_argument("--items", type=int, help="bench items per pair (default 20)")
    p.add_argument("--gate-items", type=int, help="gate items per pattern (default 1000)")
    p.add_argument("--workers", type=int, help="gate worker threads")
    p.add_argument("--formats")
    p.add_argument("--backend", default=codesize.DEFAULT_BACKEND.id)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fail-on-gate", dest="fail_on_gate", action="store_true", default=None)
    g.add_argument("--no-fail-on-gate", dest="fail_on_gate", action="store_false")

    p = sub.add_parser("export-diff", parents=common, help="unified diff of a case study's listings")
    p.add_argument("pair")
    return parser


COMMANDS = {
    "list": cmd_list, "gen-data": cmd_gen_data, "validate": cmd_validate, "bench": cmd_bench,
    "stats": cmd_stats, "report": cmd_report, "run-all": cmd_run_all, "export-diff": cmd_export_diff,
}


def main(argv=None, entries=None) -> int:
    """Run one command and return its exit code.  ``entries`` replaces the catalog (for tests)."""
    try:
        args = build_parser().parse_args(argv)
        out = args.output_dir or os.environ.get(ENV_OUTPUT_DIR) or "varbench-out"
        args.seed_given = args.seed is not None
        args.output_dir_given = args.output_dir is not None
        ctx = Context(tuple(entries) if entries is not None else corpus.catalog(),
                      args.seed or 0, Path(out), bool(args.json))
        return COMMANDS[args.command](ctx, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
