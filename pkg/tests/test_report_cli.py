import json

import pytest

from henoncert import (
    IteratedMap,
    LinearMap,
    ProofReport,
    ReportError,
    make_paper_hsets,
    periodic_orbit_consequence,
    verify_covering,
)
from henoncert.cli import main
from henoncert.covering import CoveringConfig
from henoncert.drivers import run_all
from henoncert.hsets import make_hset
from henoncert.report import COVERING_CHAIN, symbolic_dynamics_statement

SMALL = CoveringConfig(body_grid=(3, 3, 3), face_grid=(2, 2))


def _toy_report(passed=True):
    """Report whose covering graph is a/b labelled toy self-coverings."""
    scale = (3.0, 3.0, 0.25) if passed else (1.0, 1.0, 1.0)
    f = IteratedMap(LinearMap.scaling(*scale))
    certs = []
    for i, j in COVERING_CHAIN:
        n0 = make_hset(i, ["0", "0", "0"],
                       [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
        n1 = make_hset(j, ["0", "0", "0"],
                       [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
        certs.append(verify_covering(f, n0, n1, SMALL))
    a, b = make_paper_hsets()
    return ProofReport(
        map_params={"a": "1.76", "b": "0.1", "iterate": 4},
        hset_definitions={"a": a.to_definition(), "b": b.to_definition()},
        covering=certs,
    )


class TestProofReport:
    def test_json_roundtrip(self):
        rep = _toy_report()
        back = ProofReport.from_json(rep.to_json())
        assert back.to_dict() == rep.to_dict()

    def test_verdict_requires_both_certificates(self):
        rep = _toy_report()
        assert rep.covering_passed
        assert not rep.verdict  # no hyperbolicity certificate yet

    def test_covering_edges(self):
        rep = _toy_report()
        assert rep.covering_edges() == sorted(COVERING_CHAIN)

    def test_malformed_report(self):
        with pytest.raises(ReportError):
            ProofReport.from_dict({"nonsense": 1})


class TestConsequences:
    def test_statement_needs_pass(self):
        with pytest.raises(ReportError):
            symbolic_dynamics_statement(_toy_report(passed=False))

    @pytest.mark.parametrize("word", ["a", "ab", "abba"])
    def test_periodic_words(self, word, paper_hsets):
        text = periodic_orbit_consequence(_toy_report(), word, paper_hsets)
        assert f"F^{len(word)}(x) = x" in text

    def test_refuses_on_failed_report(self, paper_hsets):
        with pytest.raises(ReportError):
            periodic_orbit_consequence(_toy_report(passed=False), "ab", paper_hsets)

    def test_rejects_bad_symbols(self, paper_hsets):
        with pytest.raises(ReportError):
            periodic_orbit_consequence(_toy_report(), "abc", paper_hsets)


class TestCLI:
    def test_attractor_sample_single_row(self, tmp_path, capsys):
        out = tmp_path / "orbit.csv"
        rc = main([
            "attractor-sample", "--seed", "0,0,0", "--transient", "0",
            "--count", "1", "--out", str(out),
        ])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "# NON-RIGOROUS SAMPLE"
        assert lines[1] == "x,y,z"
        assert lines[2] == "1.76,0,0"

    def test_attractor_sample_empty(self, tmp_path):
        out = tmp_path / "orbit.csv"
        rc = main(["attractor-sample", "--count", "0", "--out", str(out)])
        assert rc == 0
        assert out.read_text().splitlines() == ["# NON-RIGOROUS SAMPLE", "x,y,z"]

    def test_attractor_sample_divergence(self, tmp_path, capsys):
        out = tmp_path / "orbit.csv"
        rc = main([
            "attractor-sample", "--seed", "100,100,100", "--transient", "0",
            "--count", "30", "--out", str(out),
        ])
        assert rc == 1

    def test_periodic_orbits_without_report(self, tmp_path, capsys):
        rc = main([
            "periodic-orbits", "ab", "--report", str(tmp_path / "missing.json"),
        ])
        assert rc == 1

    def test_periodic_orbits_with_toy_report(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        _toy_report().save(path)
        rc = main(["periodic-orbits", "abba", "--report", str(path)])
        assert rc == 0
        assert "F^4(x) = x" in capsys.readouterr().out

    def test_periodic_orbits_refuses_failed_report(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        _toy_report(passed=False).save(path)
        rc = main(["periodic-orbits", "ab", "--report", str(path)])
        assert rc == 1

    def test_verify_all_small_grids_fails_but_reports(self, tmp_path, capsys):
        # grids this coarse cannot certify anything; exit code must be nonzero
        path = tmp_path / "report.json"
        rc = main([
            "verify-all", "--body-grid", "2,2,2", "--face-grid", "2,2",
            "--hyp-grid", "1,1,1", "--workers", "1", "--report", str(path),
        ])
        assert rc == 1
        rep = json.loads(path.read_text())
        assert rep["verdict"] is False
        assert len(rep["covering"]) == 4

    def test_verify_hyperbolicity_cli_small(self, tmp_path):
        path = tmp_path / "report.json"
        rc = main([
            "verify-hyperbolicity", "--hyp-grid", "6,6,6", "--workers", "1",
            "--report", str(path),
        ])
        rep = json.loads(path.read_text())
        assert rep["hyperbolicity"]["grid"] == [6, 6, 6]
        assert rc in (0, 1)

    def test_hsets_flag(self, tmp_path):
        from henoncert.hsets import save_hsets

        a, b = make_paper_hsets()
        hpath = tmp_path / "hsets.json"
        save_hsets(hpath, {"a": a, "b": b})
        path = tmp_path / "report.json"
        rc = main([
            "verify-symbolic", "--body-grid", "2,2,2", "--face-grid", "2,2",
            "--workers", "1", "--hsets", str(hpath), "--report", str(path),
        ])
        rep = json.loads(path.read_text())
        assert rep["hsets"]["a"]["center"] == ["0.81", "1.0225", "0.975"]
        assert rc in (0, 1)


class TestDriverParallelism:
    def test_workers_do_not_change_results(self):
        r1 = run_all(body_grid=(3, 3, 3), face_grid=(2, 2), hyp_grid=(3, 3, 3),
                     workers=1)
        r2 = run_all(body_grid=(3, 3, 3), face_grid=(2, 2), hyp_grid=(3, 3, 3),
                     workers=2)
        d1, d2 = r1.to_dict(), r2.to_dict()
        _strip_timing(d1), _strip_timing(d2)
        assert d1 == d2


def _strip_timing(d):
    d.pop("total_runtime", None)
    for c in d.get("covering", []):
        c.pop("wall_time", None)
    if d.get("hyperbolicity"):
        d["hyperbolicity"].pop("wall_time", None)
    d.pop("workers", None)
    return d
