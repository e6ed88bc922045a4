from __future__ import annotations

import json

import pytest

from blockecc.lab.generators import GenSpec, default_corpus, fixture_specs, grid_specs
from blockecc.lab.suite import PROPERTIES, fuzz_radius_conjecture, run_suite


def test_golden_fixtures_have_no_violations():
    specs = [GenSpec.of("fixture", name=n) for n in ("C4L", "HEX", "PYR2", "TT4", "SPIDERZ")]
    props = [p for p in PROPERTIES if p != "cactus-randic"]
    report = run_suite(props, specs)
    assert report.ok, report.to_text()


def test_rd_bounds_on_grid():
    report = run_suite(["rd-bounds"], grid_specs(72))
    assert report.ok
    assert report.properties["rd-bounds"].trials == 36


def test_small_default_run():
    report = run_suite(list(PROPERTIES), default_corpus(60, 3, max_n=20))
    failing = {k for k, v in report.properties.items() if v.violations}
    assert failing <= {"cactus-randic"}, report.to_text()


def test_report_json_is_stable():
    corpus = fixture_specs()
    a = run_suite(["prop-brad", "replacement"], corpus).to_json()
    b = run_suite(["prop-brad", "replacement"], corpus).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert "wallTime" not in a["properties"]["prop-brad"]


def test_unknown_property():
    with pytest.raises(KeyError):
        run_suite(["nope"], fixture_specs())


def test_crash_becomes_violation(monkeypatch):
    def boom(g, spec):
        raise RuntimeError("bad")

    monkeypatch.setitem(PROPERTIES, "boom", boom)
    report = run_suite(["boom"], fixture_specs()[:1])
    assert "RuntimeError: bad" in report.properties["boom"].violations[0].witness


def test_parallel_matches_serial(monkeypatch):
    corpus = default_corpus(40, 9, max_n=15)
    serial = run_suite(["prop-becc", "wedge-inequality"], corpus).to_json()
    monkeypatch.setenv("THREADS", "2")
    parallel = run_suite(["prop-becc", "wedge-inequality"], corpus).to_json()
    assert serial == parallel


def test_fuzz_small():
    result = fuzz_radius_conjecture(200, 7, max_n=20, top=5)
    assert not result["counterexamples"]
    assert len(result["smallestSlacks"]) == 5
    slacks = [r["slackRadius"] for r in result["smallestSlacks"]]
    assert slacks == sorted(slacks)
    assert all(r["n"] % 2 == 0 for r in result["exemptEvenPaths"])


def test_fuzz_empty():
    result = fuzz_radius_conjecture(0, 7)
    assert result["smallestSlacks"] == [] and result["counterexamples"] == []
