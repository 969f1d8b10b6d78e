import json

import pytest

from varbench import cli, corpus, stats
from varbench.corpus import CASE_STUDY, MICRO, CorpusEntry
from varbench.model import ExecutableUnit, MeasurementRecord, TimingSpec, VariantPair

FAST = TimingSpec(repeat=10, number=1000)


def run(capsys, *argv, entries=None):
    code = cli.main(list(argv), entries=entries)
    out, err = capsys.readouterr()
    return code, out, err


def corrupted_entry():
    base = corpus.entry("getcount/original-vs-sum").pair
    bad = ExecutableUnit("getcount/corrupted", lambda h: [sum(h[i:i + 256]) + 1 for i in range(0, len(h), 256)])
    pair = VariantPair("getcount/original-vs-corrupted", base.baseline, bad, True, FAST, "band-histogram")
    return CorpusEntry(pair, CASE_STUDY, "getcount", "uniform_dense")


def control_entry():
    return CorpusEntry(corpus.control_pair(), MICRO, "control", "none")


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "18 entries" in out
    code, out, _ = run(capsys, "--json", "list")
    assert code == 0 and len(json.loads(out)) >= 12
    code, out, _ = run(capsys, "list", "--json")
    assert code == 0 and json.loads(out)[0]["id"] == "getextrema/original-vs-final"


def test_usage_errors(capsys):
    assert run(capsys, "list", "--bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "validate", "no/such-pair")[0] == 2
    assert run(capsys, "validate", "getcount/original-vs-sum", "no_such_pattern")[0] == 2
    assert run(capsys, "validate", "getcount/original-vs-sum", "coeff_series")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_validate_equivalent_and_flawed(capsys):
    code, out, _ = run(capsys, "validate", "getcount/original-vs-sum", "uniform_dense:items=200")
    assert code == 0 and "passed" in out and "fraction 0.0000" in out
    code, out, _ = run(capsys, "--json", "validate", "getextrema/original-vs-oneliner", "uniform_dense:items=50")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "failed-as-expected" and doc["report"]["fraction"] > 0
    code, out, _ = run(capsys, "validate", "getextrema/original-vs-oneliner", "uniform_dense:items=5")
    assert "failed-as-expected" in out


def test_validate_corrupted_candidate_exits_1(capsys):
    entries = corpus.catalog() + (corrupted_entry(),)
    code, out, _ = run(capsys, "validate", "getcount/original-vs-corrupted", "uniform_dense:items=20",
                       entries=entries)
    assert code == 1 and "unexpected-divergence" in out


def test_validate_from_files(capsys, tmp_path, fixtures_dir):
    assert run(capsys, "--output-dir", str(tmp_path), "gen-data", "single_bin:items=30")[0] == 0
    path = tmp_path / "single_bin-b3-s0-n30.jsonl"
    assert path.exists()
    assert run(capsys, "validate", "getextrema/original-vs-final", str(path))[0] == 0
    assert run(capsys, "validate", "getextrema/original-vs-final", str(fixtures_dir / "ppm"))[0] == 0
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{nope\n")
    code, _, err = run(capsys, "validate", "getextrema/original-vs-final", str(bad))
    assert code == 1 and "line 1" in err


def test_gen_data_ppm(capsys, tmp_path, fixtures_dir):
    out = tmp_path / "ppm.jsonl"
    code, text, _ = run(capsys, "--json", "gen-data", "--ppm", str(fixtures_dir / "ppm"), "-o", str(out))
    assert code == 0 and json.loads(text)["items"] == 3
    assert run(capsys, "gen-data")[0] == 2
    assert run(capsys, "gen-data", "--ppm", str(tmp_path / "missing.ppm"))[0] == 2


def test_bench_writes_records_and_summary(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    code, text, _ = run(capsys, "bench", "getcount/original-vs-sum", "uniform_dense:items=3",
                        "--repeat", "10", "--number", "50", "-o", str(out))
    assert code == 0 and "median=" in text and "min=" in text and "max=" in text
    recs = stats.load_records(out)
    assert len(recs) == 3 and all(r.spec.number == 50 for r in recs)


def test_bench_refuses_flawed_and_gate_failures(capsys, tmp_path):
    code, _, err = run(capsys, "--output-dir", str(tmp_path), "bench", "getextrema/original-vs-oneliner")
    assert code == 1 and "refusing" in err
    entries = corpus.catalog() + (corrupted_entry(),)
    code, _, err = run(capsys, "--output-dir", str(tmp_path), "bench", "getcount/original-vs-corrupted",
                       "uniform_dense:items=3", entries=entries)
    assert code == 1 and "nothing timed" in err
    assert not list(tmp_path.glob("*.jsonl"))
    code, _, _ = run(capsys, "--output-dir", str(tmp_path), "bench", "getcount/original-vs-corrupted",
                     "uniform_dense:items=2", "--skip-gate", "--number", "10", entries=entries)
    assert code == 0


def test_bench_forced_flawed_measurement_failure_keeps_partial(capsys, tmp_path):
    out = tmp_path / "islice.records.jsonl"
    code, _, err = run(capsys, "bench", "getextrema/original-vs-islice", "non_multiple_length:items=2",
                       "--force", "--skip-gate", "--number", "10", "-o", str(out))
    assert code == 1 and "partial" in err
    assert (tmp_path / "islice.records.partial.jsonl").exists()
    assert not out.exists()


def test_bench_control_pair_within_noise(capsys, tmp_path):
    out = tmp_path / "c.jsonl"
    entries = (control_entry(),)
    gs = []
    for _ in range(3):
        assert run(capsys, "bench", "control/identity", "-o", str(out), entries=entries)[0] == 0
        gs.append(stats.load_records(out)[0].g)
    gs.sort()
    assert 0.8 <= gs[1] <= 1.25


def _records(tmp_path):
    # hand-built factors 2.5, 2.9, 40.1 -> buckets {2: 2, 40: 1}
    recs = [MeasurementRecord("getextrema/original-vs-final", f"i{k}", TimingSpec(1, 1), [g * 0.001], [0.001])
            for k, g in enumerate((2.5, 2.9, 40.1))]
    path = tmp_path / "hand.records.jsonl"
    stats.save_records(recs, path)
    return path


def test_report_hand_built_records(capsys, tmp_path):
    path = _records(tmp_path)
    code, _, _ = run(capsys, "report", str(path), "-o", str(tmp_path / "rep"))
    assert code == 0
    csv = (tmp_path / "rep" / "hand.buckets.csv").read_text()
    assert stats.parse_histogram_csv(csv) == {2: 2, 40: 1}
    s = cli.load_stats_json(tmp_path / "rep" / "hand.stats.json")
    assert s.count == 3
    doc = json.loads((tmp_path / "rep" / "hand.stats.json").read_text())
    assert {c["unit_id"] for c in doc["code_sizes"]} == {"getextrema/original", "getextrema/merged"}
    html = (tmp_path / "rep" / "hand.html").read_text()
    assert "Code size" in html and "Size delta" in html
    assert cli.load_html_report(tmp_path / "rep" / "hand.html")["peak_bucket"] == 2


def test_report_full_scale_and_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "--output-dir", str(tmp_path), "report", "--full-scale", "--formats", "html,csv")
    assert code == 0
    assert cli.load_html_report(tmp_path / "full-scale.html")["peak_bucket"] == 40
    assert not (tmp_path / "full-scale.stats.json").exists()
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert run(capsys, "report", str(empty))[0] == 1
    bad = tmp_path / "bad.jsonl"
    bad.write_text(_records(tmp_path).read_text() + '{"pair_id": "x"}\n')
    code, _, err = run(capsys, "report", str(bad))
    assert code == 1 and "line 4" in err
    assert run(capsys, "report", str(tmp_path / "missing.jsonl"))[0] == 2
    assert run(capsys, "report", "--full-scale", "--formats", "pdf")[0] == 2
    assert run(capsys, "report", "--full-scale", "--backend", "llvm")[0] == 2


def test_stats_command(capsys, tmp_path):
    code, out, _ = run(capsys, "--json", "stats", "--full-scale")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 1_431_167 and doc["peak_bucket"] == 40
    code, out, _ = run(capsys, "stats", str(_records(tmp_path)))
    assert code == 0 and "pearson=" in out


def test_export_diff(capsys):
    code, out, _ = run(capsys, "export-diff", "getextrema/original-vs-final")
    assert code == 0 and "break" in out and out.startswith("--- getextrema/original")
    assert run(capsys, "export-diff", "micro/assignment")[0] == 2
    assert run(capsys, "export-diff", "getextrema/original-vs-oneliner")[0] == 2
    src = corpus.listing_source(corpus.entry("getcount/original-vs-sum").pair.baseline)
    assert cli.listing_diff(src, src) == ""


def test_env_var_sets_output_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.ENV_OUTPUT_DIR, str(tmp_path / "env"))
    assert run(capsys, "gen-data", "uniform_dense:items=2")[0] == 0
    assert (tmp_path / "env" / "uniform_dense-b3-s0-n2.jsonl").exists()
    assert run(capsys, "--output-dir", str(tmp_path / "flag"), "gen-data", "uniform_dense:items=2")[0] == 0
    assert (tmp_path / "flag" / "uniform_dense-b3-s0-n2.jsonl").exists()


def test_run_all_unknown_pair_and_config_errors(capsys, tmp_path):
    assert run(capsys, "--output-dir", str(tmp_path), "run-all", "--pairs", "nope")[0] == 2
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"pairs": ["nope"]}))
    assert run(capsys, "run-all", "--config", str(cfg))[0] == 2
    cfg.write_text(json.dumps({"colour": 1}))
    assert run(capsys, "run-all", "--config", str(cfg))[0] == 2


def test_run_all_corrupted_pair_flag_semantics(capsys, tmp_path):
    entries = (corpus.entry("getcount/original-vs-sum"), corrupted_entry())
    base = ["--output-dir", str(tmp_path), "run-all", "--gate-items", "20", "--items", "2", "--number", "20"]
    code, _, _ = run(capsys, *base, entries=entries)
    assert code == 1
    doc = cli.load_campaign(tmp_path / "campaign.json")
    statuses = {e["id"]: e["status"] for e in doc["entries"]}
    assert statuses == {"getcount/original-vs-sum": "expected", "getcount/original-vs-corrupted": "failed"}
    # the remaining pair still ran to completion
    assert doc["entries"][0]["bench"]["count"] == 2
    code, _, _ = run(capsys, *base, "--no-fail-on-gate", entries=entries)
    assert code == 0
    doc = cli.load_campaign(tmp_path / "campaign.json")
    assert doc["entries"][1]["status"] == "failed" and doc["all_expected"] is False


def test_run_all_config_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"pairs": ["getcount/original-vs-sum", "getextrema/original-vs-islice"],
                               "number": 7, "items": 2, "gate_items": 10, "formats": ["json", "csv"],
                               "output_dir": str(tmp_path / "from-config")}))
    code, _, _ = run(capsys, "run-all", "--config", str(cfg), "--number", "11")
    assert code == 0
    out = tmp_path / "from-config"
    doc = cli.load_campaign(out / "campaign.json")
    assert doc["config"]["number"] == 11 and doc["config"]["formats"] == ["json", "csv"]
    pair_dir = out / "pairs" / "getcount__original-vs-sum"
    recs = stats.load_records(pair_dir / "getcount__original-vs-sum.records.jsonl")
    assert len(recs) == 2 and recs[0].spec.number == 11
    assert not list(pair_dir.glob("*.html"))
    flawed = out / "pairs" / "getextrema__original-vs-islice"
    assert stats.load_records(flawed / "getextrema__original-vs-islice.records.jsonl") == []
    gate = json.loads((flawed / "getextrema__original-vs-islice.gate.json").read_text())
    assert gate["fraction"] > 0
