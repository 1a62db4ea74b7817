"""Command-line front end."""

import json

import pytest

from eaocws import reference as ref
from eaocws.cli import (
    EXIT_BAD_CERTIFICATE, EXIT_DENSE_CAP, EXIT_NO_CODE, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main,
)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def load(path):
    return json.loads(path.read_text())


class TestSearch:
    def test_trivial_code(self, capsys, tmp_path):
        out = tmp_path / "t.json"
        code, _ = run(capsys, "search", "--n", 3, "--c", 0, "--r", 0, "--d", 1, "--out", out)
        assert code == EXIT_OK
        assert load(out)["parameters"]["K"] == 8

    def test_single_rule_ring6(self, capsys, tmp_path):
        out = tmp_path / "s.json"
        code, _ = run(capsys, "search", "--graph", "ring", "--n", 6, "--c", 3, "--r", 1, "--d", 3,
                      "--mode", "correct-single", "--out", out)
        assert code == EXIT_OK
        assert load(out)["parameters"]["K"] >= 4

    def test_single_rule_code_fails_verification(self, capsys, tmp_path):
        out = tmp_path / "s.json"
        code, res = run(capsys, "search", "--n", 6, "--c", 3, "--r", 1, "--d", 3,
                        "--mode", "correct-single", "--verify", "--out", out)
        assert code == EXIT_VERIFY_FAILED
        assert load(out)["verification"]["status"] == "fail"
        assert "witness" in res.out

    def test_ring5_two_ebits_sound_rule(self, capsys, tmp_path):
        out = tmp_path / "r5.json"
        code, _ = run(capsys, "search", "--graph", "ring", "--n", 5, "--c", 2, "--r", 1, "--d", 3,
                      "--target-k", 4, "--out", out)
        # the sound search proves K = 2 is the best on this layout
        assert code == EXIT_NO_CODE
        doc = load(out)
        assert doc["parameters"]["K"] == 2 and doc["search"]["result"]["optimal"]

    def test_placement_search_reaches_four(self, capsys, tmp_path):
        out = tmp_path / "p.json"
        code, res = run(capsys, "search", "--n", 6, "--c", 3, "--r", 1, "--d", 3, "--placement", "best",
                        "--verify", "--out", out)
        assert code == EXIT_OK
        doc = load(out)
        assert doc["parameters"]["K"] == 4 and doc["verification"]["status"] == "pass"
        assert doc["search"]["placement"] == [1, 2, 3, 4, 6, 5]

    def test_same_seed_same_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            run(capsys, "search", "--n", 6, "--c", 2, "--r", 1, "--d", 3, "--seed", 7, "--out", path)
        assert a.read_bytes() == b.read_bytes()

    def test_verified_certificate_round_trips(self, capsys, tmp_path):
        out = tmp_path / "v.json"
        code, _ = run(capsys, "search", "--n", 6, "--c", 2, "--r", 1, "--d", 3, "--verify", "both", "--out", out)
        assert code == EXIT_OK
        code, _ = run(capsys, "verify", out, "--both")
        assert code == EXIT_OK

    def test_graph_file(self, capsys, tmp_path):
        g = tmp_path / "g.json"
        g.write_text(json.dumps({"vertices": 5, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]}))
        m = tmp_path / "g.txt"
        m.write_text("0 1 0 0 1\n1 0 1 0 0\n0 1 0 1 0\n0 0 1 0 1\n1 0 0 1 0\n")
        outs = []
        for src in (g, m, "ring"):
            out = tmp_path / f"{getattr(src, 'suffix', 'ring')}.out.json"
            assert run(capsys, "search", "--graph", src, "--n", 5, "--d", 3, "--out", out)[0] == EXIT_OK
            outs.append(load(out)["codewords"])
        assert outs[0] == outs[1] == outs[2]

    @pytest.mark.parametrize("argv", [["--n", 3, "--c", 2, "--r", 2, "--d", 3], ["--n", 5, "--d", 0]])
    def test_invalid_parameters(self, capsys, argv):
        code, res = run(capsys, "search", *argv)
        assert code == EXIT_USAGE and "error" in res.err

    def test_budget_exhaustion_is_flagged(self, capsys, tmp_path):
        out = tmp_path / "b.json"
        run(capsys, "search", "--n", 7, "--c", 3, "--r", 1, "--d", 3, "--mode", "correct-single",
            "--max-nodes", 2, "--out", out)
        doc = load(out)
        assert doc["search"]["budget_exhausted"] is True
        assert doc["codewords"]

    def test_json_report(self, capsys):
        code, res = run(capsys, "search", "--n", 4, "--d", 2, "--json")
        report = json.loads(res.out)
        assert report["exit"] == code and report["certificate"]["schema"] == 1


class TestVerify:
    def test_bundled_example(self, capsys, tmp_path):
        path = tmp_path / "example.json"
        path.write_text(ref.example_certificate_path().read_text())
        code, res = run(capsys, "verify", path, "--both")
        assert code == EXIT_VERIFY_FAILED
        assert "XZIIII|III" in res.out
        assert load(path)["verification"]["status"] == "fail"

    def test_bumped_distance(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        run(capsys, "search", "--n", 6, "--c", 3, "--r", 1, "--d", 3, "--placement", "best", "--out", path)
        assert run(capsys, "verify", path, "--symplectic")[0] == EXIT_OK
        doc = load(path)
        doc["parameters"]["d"] = 4
        path.write_text(json.dumps(doc))
        code, res = run(capsys, "verify", path, "--symplectic")
        assert code == EXIT_VERIFY_FAILED and "witness" in res.out

    def test_empty_file(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("")
        code, res = run(capsys, "verify", path)
        assert code == EXIT_BAD_CERTIFICATE and "not valid JSON" in res.err

    def test_dense_cap(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "example.json"
        path.write_text(ref.example_certificate_path().read_text())
        monkeypatch.setenv("EAOCWS_DENSE_CAP", "6")
        assert run(capsys, "verify", path, "--dense")[0] == EXIT_DENSE_CAP

    def test_no_write(self, capsys, tmp_path):
        path = tmp_path / "example.json"
        path.write_text(ref.example_certificate_path().read_text())
        before = path.read_text()
        run(capsys, "verify", path, "--symplectic", "--no-write")
        assert path.read_text() == before


class TestReproduce:
    def test_example(self, capsys):
        code, res = run(capsys, "reproduce", "--example")
        assert code == EXIT_OK
        assert "MISMATCH" not in res.out
        assert res.out.count("match") == 12

    def test_example_json(self, capsys, tmp_path):
        out = tmp_path / "ex.json"
        _, res = run(capsys, "reproduce", "--example", "--json", "--out", out)
        report = json.loads(res.out)
        assert report["ok"] and load(out)["parameters"]["K"] == 4

    def test_table_one_subset(self, capsys):
        _, res = run(capsys, "reproduce", "--table", 1, "--json", "--degeneracy", "single")
        cells = json.loads(res.out)["cells"]
        assert {tuple(c["cell"][:2]) for c in cells} == {(5, 2), (6, 3), (7, 1)}
        assert all(c["found_K"] >= c["reference_K"] for c in cells)

    def test_table_two(self, capsys):
        _, res = run(capsys, "reproduce", "--table", 2, "--json")
        cells = json.loads(res.out)["cells"]
        assert [c["cell"] for c in cells] == [[7, 4, 1, 5], [7, 5, 1, 5]]
        assert all(c["optimal"] or c["budget_exhausted"] for c in cells)

    def test_table_text(self, capsys):
        _, res = run(capsys, "reproduce", "--table", 1, "--cells", "6,2,1")
        assert "(6, 2, 1, 3)" in res.out
