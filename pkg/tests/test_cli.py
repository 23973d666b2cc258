import io
import json

from finring import parse_and_build, parse_table_dump
from finring.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_text():
    code, out, err = run_cli("analyze", "Z/4")
    assert code == 0 and not err
    assert "2sqrtJU" in out and "order" in out
    assert "jacobson=2" in out


def test_analyze_json_schema():
    code, out, _ = run_cli("analyze", "Z/4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"expr", "order", "characteristic", "counts", "predicates", "witnesses"}
    assert set(payload["counts"]) == {"units", "jacobson", "sqrtJacobson", "nilpotents",
                                      "idempotents", "center"}
    assert payload["expr"] == "Z/4"
    assert payload["order"] == 4
    assert payload["characteristic"] == 4
    assert payload["predicates"]["2sqrtJU"] is True
    assert payload["counts"]["jacobson"] == 2


def test_analyze_matrix_witness():
    code, out, _ = run_cli("analyze", "M(2, Z/2)", "--json")
    payload = json.loads(out)
    assert payload["predicates"]["2sqrtJU"] is False
    assert payload["witnesses"]["2sqrtJU"] == 7


def test_text_and_json_agree():
    _, text, _ = run_cli("analyze", "TE(Z/9)")
    _, js, _ = run_cli("analyze", "TE(Z/9)", "--json")
    payload = json.loads(js)
    for key, value in payload["counts"].items():
        assert f"{key}={value}" in text
    for key, value in payload["predicates"].items():
        want = "yes" if value else "no"
        assert any(line.split()[:2] == [key, want] for line in text.splitlines()), key


def test_analyze_errors_exit_2():
    code, _, err = run_cli("analyze", "Z/1")
    assert code == 2 and "error" in err
    code, _, err = run_cli("analyze", "Z/4", "--max-order", "3")
    assert code == 2
    code, _, err = run_cli("analyze", "M(2, M(2, Z/4))")
    assert code == 2 and "M(2, M(2, Z/4))" in err


def test_table_sets():
    code, out, _ = run_cli("table", "Z/12", "jacobson")
    assert code == 0 and out.strip() == "0 6"
    code, out, _ = run_cli("table", "GF(2, 2)", "nilpotents")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run_cli("table", "UT(2, Z/2)", "units", "--json")
    assert json.loads(out)["indices"] == [5, 7]


def test_table_mul_matches_dump_format():
    code, out, _ = run_cli("table", "Z/4", "mul")
    assert code == 0
    assert out.splitlines() == ["0 0 0 0", "0 1 2 3", "0 2 0 2", "0 3 2 1"]


def test_dump_tables_flag_roundtrips():
    code, out, _ = run_cli("table", "GR(Z/2, C2)", "units", "--dump-tables")
    assert code == 0
    lines = out.splitlines()
    dump = "\n".join(lines[1:]) + "\n"
    ring = parse_table_dump(dump)
    direct = parse_and_build("GR(Z/2, C2)")
    assert ring.order == direct.order and ring.one == direct.one
    assert ring.mul(2, 2) == direct.mul(2, 2) == 1


def test_verify_single_claim():
    code, out, _ = run_cli("verify", "--claims", "C13")
    assert code == 0
    assert "C13" in out and "PASS" in out
    assert "1 passed, 0 failed, 0 skipped" in out


def test_verify_json_schema():
    code, out, _ = run_cli("verify", "--claims", "C6,C13", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [c["id"] for c in payload["claims"]] == ["C6", "C13"]
    assert payload["summary"] == {"passed": 2, "failed": 0, "skipped": 0}
    assert all(c["passed"] for c in payload["claims"])
    assert payload["axioms"] and all(a["passed"] for a in payload["axioms"])


def test_verify_corpus_errors():
    code, _, err = run_cli("verify", "--corpus", "missing.txt")
    assert code == 2 and "missing.txt" in err
    code, _, err = run_cli("verify", "--claims", "C99")
    assert code == 2


def test_verify_custom_corpus(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("Z/4\nZ/9\n# done\n")
    code, out, _ = run_cli("verify", "--corpus", str(path), "--claims", "C7")
    assert code == 0 and "C7" in out


def test_enumerate():
    code, out, _ = run_cli("enumerate", "zmod", "12")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:-1]]
    verdicts = {int(r[0]): r[6] for r in rows}
    assert {n for n, v in verdicts.items() if v == "yes"} == {2, 3, 4, 6, 8, 9, 12}
    assert verdicts[5] == verdicts[7] == verdicts[10] == verdicts[11] == "no"
    code, out, _ = run_cli("enumerate", "zmod", "2")
    assert code == 0 and out.splitlines()[1].split()[0] == "2"


def test_enumerate_json():
    code, out, _ = run_cli("enumerate", "zmod", "36", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["allOk"] is True
    row36 = [r for r in payload["rows"] if r["n"] == 36][0]
    row35 = [r for r in payload["rows"] if r["n"] == 35][0]
    assert row36["predicates"]["2sqrtJU"] is True
    assert row35["predicates"]["2sqrtJU"] is False


def test_global_flags_position_independent():
    a = run_cli("--json", "analyze", "Z/6")
    b = run_cli("analyze", "Z/6", "--json")
    assert a == b


def test_usage_error_exit_2():
    code, _, _ = run_cli("frobnicate")
    assert code == 2
    code, _, _ = run_cli("enumerate", "fields", "10")
    assert code == 2


def test_verify_full_run_json():
    code, out, _ = run_cli("verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"] == {"passed": 19, "failed": 0, "skipped": 2}
    assert len(payload["claims"]) == 19
    assert {s["id"] for s in payload["skipped"]} == {"C-torsion", "C-powerseries"}
    assert payload["notes"]
    assert len(payload["axioms"]) == 47
    assert isinstance(payload["wallTime"], float)
