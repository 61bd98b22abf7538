import json
import subprocess
import sys

import pytest

from qkflag import cli, qkring


def run(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qbg_dot(capsys):
    code, out, _ = run(["qbg", "--n", "2", "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("digraph") and out.count("->") >= 8
    assert "a_{" in out


def test_qbg_json_parabolic(capsys):
    code, out, _ = run(["qbg", "--n", "3", "--parabolic", "1,3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["parabolic"] == [1, 3] and len(data["vertices"]) == 6


def test_qls_json(capsys):
    code, out, _ = run(["qls", "--n", "2", "--parabolic", "1,2"], capsys)
    data = json.loads(out)
    assert code == 0 and data["count"] == 9
    assert all(isinstance(c, str) for p in data["paths"] for c in p["cuts"])


def test_walks_text(capsys):
    code, out, _ = run(["walks", "--n", "2", "--k", "1", "--format", "text"], capsys)
    assert code == 0 and "4 signed terms" in out


def test_shiftcalc_json(capsys):
    code, out, _ = run(["shiftcalc", "--n", "2"], capsys)
    data = json.loads(out)
    assert code == 0 and all(r["status"] == "pass" for r in data)


def test_ring_gens_and_reduce(tmp_path, capsys):
    code, out, _ = run(["ring", "gens", "--n", "1"], capsys)
    assert code == 0 and len(json.loads(out)["generators"]) == 2
    ideal = qkring.main_ideal(1, cap=2)
    poly = ideal.generators[0] * ideal.ring.x(1)
    f = tmp_path / "poly.json"
    f.write_text(json.dumps(poly.to_json()))
    code, out, _ = run(["ring", "reduce", "--n", "1", "--cap", "2", "--input", str(f)], capsys)
    assert code == 0 and json.loads(out)["member"] is True
    code, out, _ = run(["ring", "reduce", "--n", "1", "--cap", "2", "--input", str(f), "--mode", "modp",
                        "--seed", "4"], capsys)
    data = json.loads(out)
    assert data["member"] is True and data["prime"] == 2**61 - 1


def test_ring_verify(capsys):
    code, out, _ = run(["ring", "verify", "--suite", "rel", "--n", "2"], capsys)
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_groth(capsys):
    code, out, _ = run(["groth", "--w", "21"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["polynomial"]["terms"]) == 2
    code, out, _ = run(["groth", "--w", "2,1,3", "--quantum", "--n", "2"], capsys)
    assert code == 0 and json.loads(out)["quantum"] is True


@pytest.mark.parametrize("suite", ["qbg-li", "ffn1", "tilted-bounds", "walks"])
def test_verify_suite(suite, capsys):
    code, out, _ = run(["verify", "--suite", suite, "--n", "3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass" and data["checks"] > 0


def test_verify_qbg_li_has_about_a_thousand_checks(capsys):
    _, out, _ = run(["verify", "--suite", "qbg-li", "--n", "3"], capsys)
    assert 1000 <= json.loads(out)["checks"] <= 10000


def test_verify_all_order(capsys):
    code, out, _ = run(["verify", "--all", "--n", "1"], capsys)
    data = json.loads(out)
    assert code == 0
    names = [s["suite"] for s in data["suites"]]
    assert names.index("weyl") < names.index("poly") < names.index("qbg-li") < names.index("qls")
    assert names.index("walks") < names.index("ffn1") < names.index("rel") < names.index("groth")


def test_usage_errors(tmp_path, capsys):
    assert run(["bogus"], capsys)[0] == 2
    assert run(["qbg", "--n", "0"], capsys)[0] == 2
    assert run(["qbg", "--n", "2", "--parabolic", "5"], capsys)[0] == 2
    assert run(["ring", "reduce", "--n", "1", "--input", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert run(["groth", "--w", "113"], capsys)[0] == 2
    assert run(["verify", "--n", "2"], capsys)[0] == 2


def test_identity_failure_exit_code(monkeypatch, capsys):
    from qkflag import suites

    def broken(n, **_):
        rep = suites.SuiteReport("broken", {"n": n})
        rep.add("always", False, {"witness": 1})
        return rep

    monkeypatch.setitem(suites.SUITES, "weyl", broken)
    code, out, _ = run(["verify", "--suite", "weyl", "--n", "1"], capsys)
    data = json.loads(out)
    assert code == 3 and data["failures"][0]["counterexample"] == {"witness": 1}


def test_deterministic_modp_output(capsys):
    a = run(["verify", "--suite", "freeness", "--n", "2", "--mode", "modp", "--seed", "5"], capsys)[1]
    b = run(["verify", "--suite", "freeness", "--n", "2", "--mode", "modp", "--seed", "5"], capsys)[1]
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "seconds"}
    assert strip(a) == strip(b)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qkflag", "qbg", "--n", "1", "--format", "text"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "2 edges" in res.stdout
