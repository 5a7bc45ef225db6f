import json
import re

import pytest

from eicycle.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from eicycle.constructions import build_k4_minimal, build_k5_32
from eicycle.core import Hypergraph, dump, load
from eicycle.verification import verify


@pytest.fixture
def fixture_file(tmp_path):
    def write(h, name="h.json"):
        path = tmp_path / name
        dump(h, path)
        return str(path)

    return write


class TestConstruct:
    def test_thm9_n20(self, capsys):
        assert main(["construct", "--k", "5", "--n", "20", "--variant", "thm9"]) == EXIT_OK
        out, err = capsys.readouterr()
        assert len(json.loads(out)["edges"]) == 12
        assert "|E| = 12" in err and "8 x (3,2)" in err and "4 x (5)" in err

    def test_k4_n10_cites_constraint(self, capsys):
        assert main(["construct", "--k", "4", "--n", "10"]) == EXIT_USAGE
        assert "n >= 11" in capsys.readouterr().err

    def test_k3_n5(self, capsys):
        assert main(["construct", "--k", "3", "--n", "5"]) == EXIT_OK
        assert len(json.loads(capsys.readouterr().out)["edges"]) == 5

    def test_unknown_variant(self, capsys):
        assert main(["construct", "--k", "4", "--n", "12", "--variant", "nope"]) == EXIT_USAGE
        assert "unknown variant" in capsys.readouterr().err

    def test_writes_file(self, tmp_path):
        path = tmp_path / "out.json"
        assert main(["construct", "--k", "4", "--n", "12", "--out", str(path), "--canonical"]) == EXIT_OK
        assert load(path) == build_k4_minimal(12)


class TestVerify:
    def test_n14_shows_triple(self, fixture_file, capsys):
        assert main(["verify", fixture_file(build_k4_minimal(14))]) == EXIT_OK
        assert "{8,9} x3" in capsys.readouterr().out

    def test_empty_edge_list_fails(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"n": 6, "edges": []}))
        assert main(["verify", str(path)]) == EXIT_FAILED
        assert "EI(H) = C_6: NO" in capsys.readouterr().out

    def test_n18(self, fixture_file):
        assert main(["verify", fixture_file(build_k5_32(18))]) == EXIT_OK

    def test_json_matches_in_memory(self, fixture_file, capsys):
        h = build_k4_minimal(13)
        assert main(["verify", "--json", fixture_file(h)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == json.loads(json.dumps(verify(h).to_dict()))

    def test_n_mismatch(self, fixture_file, capsys):
        assert main(["verify", "--n", "13", fixture_file(build_k4_minimal(12))]) == EXIT_USAGE
        assert "n = 12" in capsys.readouterr().err

    @pytest.mark.parametrize("text, fragment", [
        ("not json", "malformed"),
        ('{"n": 5, "edges": [[1, 9]]}', "malformed"),
        ('{"edges": []}', "malformed"),
    ])
    def test_malformed(self, tmp_path, capsys, text, fragment):
        path = tmp_path / "bad.json"
        path.write_text(text)
        assert main(["verify", str(path)]) == EXIT_USAGE
        assert fragment in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "absent.json")]) == EXIT_USAGE
        assert "cannot read" in capsys.readouterr().err


class TestExport:
    def test_dot_structure(self, fixture_file, capsys):
        assert main(["export", fixture_file(build_k4_minimal(12))]) == EXIT_OK
        dot = capsys.readouterr().out
        assert len(re.findall(r'^  "\d+" \[pos=', dot, re.M)) == 12
        assert len(re.findall(r"^  subgraph \"hyperedge_\d+\"", dot, re.M)) == 9
        assert len(set(re.findall(r'color="(#[0-9a-f]{6})", penwidth=1.5', dot))) == 9

    def test_dot_deterministic(self, fixture_file, tmp_path):
        src = fixture_file(build_k4_minimal(15))
        a, b = tmp_path / "a.dot", tmp_path / "b.dot"
        main(["export", src, "--out", str(a)])
        main(["export", src, "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_json_round_trip(self, fixture_file, tmp_path):
        src = fixture_file(build_k4_minimal(14))
        out = tmp_path / "copy.json"
        assert main(["export", src, "--format", "json", "--out", str(out)]) == EXIT_OK
        assert out.read_text() == open(src).read()
        assert load(out).edges == load(src).edges

    def test_unknown_format(self, fixture_file):
        with pytest.raises(SystemExit) as exc:
            main(["export", fixture_file(build_k4_minimal(12)), "--format", "svg"])
        assert exc.value.code == EXIT_USAGE

    def test_construct_export_verify(self, tmp_path, capsys):
        built, exported = tmp_path / "built.json", tmp_path / "exported.json"
        assert main(["construct", "--k", "5", "--n", "21", "--out", str(built)]) == EXIT_OK
        assert main(["export", str(built), "--format", "json", "--out", str(exported)]) == EXIT_OK
        capsys.readouterr()
        assert main(["verify", "--json", str(exported)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == json.loads(json.dumps(verify(build_k5_32(21)).to_dict()))


class TestLp:
    def test_text(self, capsys):
        assert main(["lp"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "optimum: 3/5" in out and "x32 = 2/5" in out and "x5 = 1/5" in out

    def test_no_x5_json(self, capsys):
        assert main(["lp", "--no-x5", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["optimum"] == "2/3"


class TestSearch:
    def test_exists_with_witness(self, tmp_path, capsys):
        path = tmp_path / "w.json"
        assert main(["search", "--k", "3", "--n", "5", "--max-edges", "5", "--witness", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.startswith("exists")
        assert verify(load(path)).is_cycle

    def test_not_exists(self, capsys):
        assert main(["search", "--k", "4", "--n", "7"]) == EXIT_FAILED
        assert capsys.readouterr().out.startswith("not_exists")

    def test_budget(self, capsys):
        assert main(["search", "--k", "4", "--n", "8", "--budget", "5"]) == EXIT_BUDGET
        assert "budget_exhausted" in capsys.readouterr().out

    def test_minimum(self, capsys):
        assert main(["search", "--k", "3", "--n", "6", "--minimum"]) == EXIT_OK
        assert "minimum |E| = 6" in capsys.readouterr().out

    def test_minimum_none(self, capsys):
        assert main(["search", "--k", "4", "--n", "6", "--minimum"]) == EXIT_FAILED

    def test_bad_parameters(self, capsys):
        assert main(["search", "--k", "6", "--n", "5"]) == EXIT_USAGE
        assert "3 <= k < n" in capsys.readouterr().err


class TestAnalyze:
    def test_census(self, fixture_file, capsys):
        assert main(["analyze", fixture_file(build_k5_32(19))]) == EXIT_OK
        out = capsys.readouterr().out
        assert "(2,2,1)  capacity 2" in out and "(5)  capacity 4" in out
        assert out.strip().endswith("census: 11 x (3,2), 1 x (2,2,1), 1 x (5)")


class TestTransforms:
    def test_insert_vertex(self, fixture_file, tmp_path, capsys):
        h = Hypergraph(6, ((1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (1, 5, 6), (1, 2, 6)))
        src = fixture_file(h)
        results = [main(["insert-vertex", src, "--a", "3", "--b", "4", "--ex", str(x), "--ey", str(y),
                         "--standardize"]) for x, y in ((1, 2), (2, 1))]
        assert sorted(results) == [EXIT_OK, EXIT_FAILED]
        out = capsys.readouterr().out
        assert verify(Hypergraph.from_json(out)).is_cycle

    def test_insert_vertex_rejects_odd(self, fixture_file, capsys):
        h = Hypergraph(5, ((1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)))
        assert main(["insert-vertex", fixture_file(h), "--a", "1", "--b", "2", "--ex", "0", "--ey", "4"]) == EXIT_FAILED
        assert "even" in capsys.readouterr().err

    def test_augment(self, fixture_file, capsys):
        offsets = (0, 1, 2, 6, 21, 24)
        full = Hypergraph.from_edges(31, [[i + d for d in offsets] for i in range(1, 32)])
        h = Hypergraph(31, ((1, 2, 3),) + full.edges[1:])
        assert main(["augment", fixture_file(h), "--small", "1", "2", "3"]) == EXIT_OK
        assert Hypergraph.from_json(capsys.readouterr().out) == full

    def test_augment_rejects(self, fixture_file, capsys):
        assert main(["augment", fixture_file(build_k4_minimal(12)), "--small", "1", "2", "3"]) == EXIT_FAILED
        assert "error:" in capsys.readouterr().err
