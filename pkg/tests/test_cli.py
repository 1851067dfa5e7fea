import json
import subprocess
import sys

import pytest

from hprod.cli import main
from hprod.io import serialize_instance


@pytest.fixture
def doc_path(tmp_path, four_c3):
    p = tmp_path / "four_c3.json"
    p.write_text(serialize_instance(four_c3))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_product_json(capsys, doc_path):
    code, out, _ = run(capsys, "product", doc_path)
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 12 and len(doc["edges"]) == 12
    assert doc["pairs"][5] == [1, 1]


def test_product_edgelist(capsys, doc_path):
    code, out, _ = run(capsys, "product", doc_path, "--format", "edgelist")
    assert code == 0 and out.splitlines()[0] == "12 12"


def test_connect_reports_all_routes(capsys, doc_path):
    code, out, _ = run(capsys, "connect", doc_path)
    doc = json.loads(out)
    assert code == 0
    assert doc["bfs"]["components"] == 4
    assert doc["routes"]["fiber_family"]["components"] == 4
    assert "hypothesis_unmet" in doc["routes"]["main"]


def test_invariant_alpha(capsys, doc_path):
    code, out, _ = run(capsys, "invariant", doc_path, "--which", "alpha")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 4
    assert doc["bounds"][0]["value"] == 4 and doc["bounds"][0]["satisfied"]


def test_invariant_chi_h(capsys, tmp_path):
    g = tmp_path / "c5.txt"
    g.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run(capsys, "invariant", str(g), "--which", "chi_h", "--demands", "2,2,2,2,2")
    assert code == 0 and json.loads(out)["value"] == 5


def test_kappa_and_lambda_on_circ(capsys, tmp_path):
    p = tmp_path / "c4k2.json"
    p.write_text(json.dumps({"kind": "circ", "base": {"order": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]},
                             "family": [{"order": 2, "edges": [[0, 1]]}],
                             "assignment": [["0", 0], ["1", 0], ["2", 0], ["3", 0]]}))
    code, out, _ = run(capsys, "lambda", str(p))
    doc = json.loads(out)
    assert code == 0 and doc["value"] == doc["formula"] == 5
    code, out, _ = run(capsys, "kappa", str(p))
    doc = json.loads(out)
    assert code == 0 and doc["value"] == doc["formula"] == 4


def test_decompose_verb(capsys, tmp_path):
    g = tmp_path / "c6.txt"
    g.write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    code, out, _ = run(capsys, "decompose", str(g), "--k", "2")
    doc = json.loads(out)
    assert code == 0 and doc["result"] == "found"
    k3 = tmp_path / "k3.txt"
    k3.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "decompose", str(k3), "--k", "3")
    doc = json.loads(out)
    assert doc["result"] == "none" and "nodes" in doc["stats"]


def test_verify_ok_and_violation(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "weichsel", "--seeds", "1..5")
    assert code == 0 and len(json.loads(out)) == 5
    code, out, _ = run(capsys, "verify", "--suite", "domination", "--seed", "58")
    doc = json.loads(out)
    assert code == 1 and doc[0]["status"] == "VIOLATION" and "instance" in doc[0]["details"]


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "--seed", "9", "--kind", "circ")
    _, b, _ = run(capsys, "gen", "--seed", "9", "--kind", "circ")
    assert a == b and json.loads(a)["kind"] == "circ"


@pytest.mark.parametrize("argv", [
    [], ["nope"], ["verify", "--suite", "nope"], ["verify"], ["invariant", "missing.json", "--which", "chi"],
    ["gen", "--base-order", "x"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_parse_error_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "otimes", "base": {"order": 2, "edges": [[0, 1]]}, "family": [], "assignment": []}')
    code, out, err = run(capsys, "product", str(p))
    assert code == 2 and out == "" and "family" in err


def test_module_entry_point(doc_path):
    res = subprocess.run([sys.executable, "-m", "hprod", "product", doc_path, "--format", "edgelist"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("12 12")
