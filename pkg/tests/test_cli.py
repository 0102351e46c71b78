import itertools
import json
import subprocess
import sys

import pytest

from connfactor.cli import main
from connfactor.graph import dump_edges, load_graph


@pytest.fixture
def twin(tmp_path):
    prefix = str(tmp_path / "twin")
    assert main(["gen", "--model", "twin-k", "--param", "k=5", "--out", prefix]) == 0
    return prefix + ".graph", prefix + ".f"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_solve_twin(twin, capsys):
    g, f = twin
    assert main(["solve", "--graph", g, "--f", f, "--deterministic"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "STATUS connected"
    assert out[1] == "12 30"
    assert out[-1] == "WITNESS 0 1 7 6"


def test_solve_json(twin, capsys):
    g, f = twin
    assert main(["solve", "--graph", g, "--uniform-f", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "connected" and len(doc["edges"]) == 30


def test_factor_star(tmp_path, capsys):
    g = write(tmp_path, "star.graph", "4 3\n0 1\n0 2\n0 3\n")
    assert main(["factor", "--graph", g, "--uniform-f", "2"]) == 2
    assert capsys.readouterr().out == "STATUS no-factor\n"


def test_factor_found(twin, capsys):
    g, f = twin
    assert main(["factor", "--graph", g, "--f", f]) == 0
    out = capsys.readouterr().out
    assert out.startswith("STATUS factor\n12 30\n")


def test_verify_two_cliques(twin, tmp_path, capsys):
    g, f = twin
    cliques = [e for e in itertools.combinations(range(12), 2) if (e[0] < 6) == (e[1] < 6)]
    fac = write(tmp_path, "two.txt", dump_edges(12, cliques))
    assert main(["verify", "--graph", g, "--f", f, "--factor", fac]) == 3
    out = capsys.readouterr().out
    assert "VIOLATION disconnected: 2 components" in out and "VALID no" in out


def test_verify_solver_output(twin, tmp_path, capsys):
    g, f = twin
    main(["solve", "--graph", g, "--f", f])
    fac = write(tmp_path, "sol.txt", capsys.readouterr().out)
    assert main(["verify", "--graph", g, "--f", f, "--factor", fac]) == 0
    assert "DIAMETER 3" in capsys.readouterr().out


def test_verify_bad_degrees(twin, tmp_path):
    g, f = twin
    fac = write(tmp_path, "bad.txt", "12 1\n0 1\n")
    assert main(["verify", "--graph", g, "--f", f, "--factor", fac]) == 2


def test_no_connected_factor(tmp_path, capsys):
    cliques = [e for e in itertools.combinations(range(12), 2) if (e[0] < 6) == (e[1] < 6)]
    g = write(tmp_path, "two.graph", dump_edges(12, cliques))
    assert main(["solve", "--graph", g, "--uniform-f", "5"]) == 3
    assert capsys.readouterr().out == "STATUS no-connected-factor\n"


def test_dc_factor(twin, capsys):
    g, f = twin
    assert main(["dc-factor", "--graph", g, "--f", f, "--u", "0", "--v", "6"]) == 0
    assert main(["dc-factor", "--graph", g, "--f", f, "--path", "1,0,6,7"]) == 0
    assert "dist(1, 7) = 3" in capsys.readouterr().err


def test_dc_factor_bad_path(twin):
    g, f = twin
    # 2 - 7 is not an edge of the twin instance.
    assert main(["dc-factor", "--graph", g, "--f", f, "--path", "0,2,7,6"]) == 4
    # 2 - 8 is a cross edge, so this one is a valid path.
    assert main(["dc-factor", "--graph", g, "--f", f, "--path", "0,2,8,6"]) == 0


def test_match(tmp_path, capsys):
    g = write(tmp_path, "k3.graph", "3 3\n0 1\n1 2\n0 2\n")
    assert main(["match", "--graph", g]) == 0
    assert load_graph(capsys.readouterr().out).m == 1


def test_oracle(tmp_path, capsys):
    g = write(tmp_path, "k5.graph", dump_edges(5, itertools.combinations(range(5), 2)))
    assert main(["oracle", "--graph", g, "--uniform-f", "2", "--count"]) == 0
    assert capsys.readouterr().out == "FACTORS 12\nCONNECTED 12\n"
    assert main(["oracle", "--graph", g, "--uniform-f", "2"]) == 0
    assert capsys.readouterr().out.startswith("STATUS connected\n5 5\n")


def test_oracle_budget(tmp_path):
    g = write(tmp_path, "k8.graph", dump_edges(8, itertools.combinations(range(8), 2)))
    assert main(["oracle", "--graph", g, "--uniform-f", "3", "--count", "--budget", "50"]) == 5


def test_gen_stdout(capsys):
    assert main(["gen", "--model", "gnp-threshold", "--param", "n=12", "--param", "p=1.0"]) == 0
    assert load_graph(capsys.readouterr().out).m == 66


def test_bench(capsys):
    assert main(["bench", "--sizes", "12", "--seeds", "2"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0].startswith("model,n,m,seed,status")
    assert len(rows) == 3 and all(",connected," in r for r in rows[1:])


@pytest.mark.parametrize("argv", [
    ["solve"],                                             # no graph
    ["solve", "--graph", "/nonexistent", "--uniform-f", "5"],
    ["frobnicate"],
    ["gen", "--model", "twin-k", "--param", "nokey"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_both_f_sources(twin):
    g, f = twin
    assert main(["solve", "--graph", g, "--f", f, "--uniform-f", "5"]) == 1


def test_malformed_graph(tmp_path):
    g = write(tmp_path, "bad.graph", "3 2\n0 1\n0 1\n")
    assert main(["solve", "--graph", g, "--uniform-f", "1"]) == 1


def test_precondition(tmp_path):
    g = write(tmp_path, "k5.graph", dump_edges(5, itertools.combinations(range(5), 2)))
    assert main(["solve", "--graph", g, "--uniform-f", "2"]) == 4
    assert main(["solve", "--graph", g, "--uniform-f", "2", "--fallback-oracle"]) == 0


def test_gen_bad_params():
    assert main(["gen", "--model", "planted-connected", "--param", "n=13", "--param", "f=5"]) == 4


def test_console_entry_point(twin):
    g, f = twin
    proc = subprocess.run([sys.executable, "-m", "connfactor.cli", "solve", "--graph", g, "--f", f],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("STATUS connected")
