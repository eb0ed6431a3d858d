"""CLI subcommands: outputs, exit codes, determinism."""

import json

import pytest

from gcrs import buchberger, normal_form, s_polynomial
from gcrs.cli import run

F4SEQ = "q; z^4+z^2*w+z*x^3+z*x*v+x^4+x^2*v+w^2+w*v+v^2"
WITNESSES = "y^2*w*v; y^2*w^2+y^2*w*v; y^2*w*v+y^2*v^2"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check(fixture_file, capsys):
    code, out, _ = invoke(capsys, "check", str(fixture_file))
    assert code == 0
    assert "10 generators over F_2, 27 relations" in out


def test_check_json(fixture_file, capsys):
    code, out, _ = invoke(capsys, "check", str(fixture_file), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == 1
    assert payload["generators"][0] == "z"
    assert payload["relations"] == 27


def test_gb_output_is_a_valid_dump(fixture_file, hs260, capsys):
    code, out, err = invoke(capsys, "gb", str(fixture_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# order weighted-degrevlex, gens: z,y,x,w,v,u,t,s,r,q"
    ring = hs260.ring
    polys = [ring.parse(line) for line in lines[1:]]
    gb = buchberger(list(hs260.relations))
    assert polys == list(gb.polys)
    assert "stats" in err


def test_missing_file(capsys):
    code, _, err = invoke(capsys, "check", "/nonexistent/x.gcr")
    assert code == 2
    assert "error" in err


def test_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.gcr"
    bad.write_text("field 2\ngen z 1\nrel z*\n", encoding="utf-8")
    code, _, err = invoke(capsys, "check", str(bad))
    assert code == 2
    assert "line 3" in err


def test_usage_error(capsys):
    assert run(["bogus-subcommand"]) == 2
    capsys.readouterr()
    assert run([]) == 2
    capsys.readouterr()
    assert run(["hilbert"]) == 2  # missing file and --max-degree
    capsys.readouterr()


def test_hilbert(fixture_file, capsys):
    code, out, _ = invoke(capsys, "hilbert", str(fixture_file), "--max-degree", "4")
    assert code == 0
    assert out.splitlines() == ["0: 1", "1: 3", "2: 6", "3: 10", "4: 14"]


def test_hilbert_json(fixture_file, capsys):
    code, out, _ = invoke(capsys, "hilbert", str(fixture_file),
                          "--max-degree", "4", "--format", "json")
    assert json.loads(out)["counts"] == [1, 3, 6, 10, 14]
    assert code == 0


def test_dim(fixture_file, capsys):
    code, out, _ = invoke(capsys, "dim", str(fixture_file))
    assert code == 0
    assert out.strip() == "3"


def test_ann(fixture_file, capsys):
    code, out, _ = invoke(capsys, "ann", str(fixture_file), "--element", "y^2")
    assert code == 0
    assert "degree 1: x" in out
    assert "degree 1: y" in out
    assert "degree 1: z" in out
    assert "degree 3: u" in out
    assert out.count("degree 5:") == 3
    assert out.count("degree 6:") == 1


def test_ann_mod_out(fixture_file, capsys):
    code, out, _ = invoke(capsys, "ann", str(fixture_file),
                          "--element", "w+x^2", "--mod-out", "q")
    assert code == 0
    assert "annihilator of w+x^2" in out


def test_ann_zero_class_is_usage_error(fixture_file, capsys):
    code, _, err = invoke(capsys, "ann", str(fixture_file), "--element", "z*y")
    assert code == 2
    assert "zero" in err


def test_regtest_displayed_sequence(fixture_file, capsys):
    code, out, _ = invoke(capsys, "regtest", str(fixture_file), "--seq", F4SEQ)
    assert code == 0
    assert out.splitlines()[0] == "REGULAR, degree sequence 8,4"


def test_regtest_failure_has_machine_checkable_witness(fixture_file, hs260, capsys):
    code, out, _ = invoke(capsys, "regtest", str(fixture_file), "--seq", "y^2")
    assert code == 1
    assert "NOT REGULAR" in out
    witness_line = [l for l in out.splitlines() if "witness" in l][0]
    witness_text = witness_line.split("witness", 1)[1].strip()
    ring = hs260.ring
    gb = buchberger(list(hs260.relations))
    witness = ring.parse(witness_text)
    assert normal_form(witness * ring.parse("y^2"), gb).is_zero()
    assert not normal_form(witness, gb).is_zero()


def test_regtest_q_twice(fixture_file, capsys):
    code, out, _ = invoke(capsys, "regtest", str(fixture_file), "--seq", "q; q")
    assert code == 1
    assert "zero_in_quotient" in out


def test_scan(fixture_file, capsys):
    code, out, _ = invoke(capsys, "scan", str(fixture_file),
                          "--witnesses", WITNESSES, "--degrees", "1..3")
    assert code == 0
    assert "1093 classes, 0 unresolved" in out
    assert out.rstrip().endswith("PASS")


def test_scan_unresolved_exit_code(fixture_file, capsys):
    # y^2*w*v annihilates w+v but neither w nor v alone, so a degree-2 scan
    # with it as the only witness leaves classes unresolved
    code, out, _ = invoke(capsys, "scan", str(fixture_file),
                          "--witnesses", "y^2*w*v", "--degrees", "2..2")
    assert code == 1
    assert "unresolved: w" in out
    assert "unresolved: v" in out


def test_scan_bad_degree_range(fixture_file, capsys):
    code, _, err = invoke(capsys, "scan", str(fixture_file),
                          "--witnesses", "y^2*w*v", "--degrees", "x..y")
    assert code == 2


def test_enumeration_cap_exit_code(fixture_file, capsys):
    code, _, err = invoke(capsys, "scan", str(fixture_file),
                          "--witnesses", WITNESSES, "--degrees", "1..3",
                          "--enum-cap", "100")
    assert code == 3
    assert "enumeration needs" in err


def test_degree_cap_exit_code(fixture_file, capsys):
    code, _, err = invoke(capsys, "gb", str(fixture_file), "--degree-cap", "6")
    assert code == 3
    assert "degree" in err


def test_basechange_roundtrip(fixture_file, tmp_path, hs260_f4, capsys):
    out_path = tmp_path / "f4.gcr"
    code, _, _ = invoke(capsys, "basechange", str(fixture_file),
                        "--ext", "2", "-o", str(out_path))
    assert code == 0
    import gcrs
    assert gcrs.parse_presentation(out_path.read_text(encoding="utf-8")) == hs260_f4


def test_basechange_stdout_and_f4_regtest(fixture_file, tmp_path, capsys):
    code, out, _ = invoke(capsys, "basechange", str(fixture_file), "--ext", "2")
    assert code == 0
    assert out.startswith("field 2^2 mod 1+@+@^2")
    f4_path = tmp_path / "hs260_f4.gcr"
    f4_path.write_text(out, encoding="utf-8")
    code, out, _ = invoke(capsys, "regtest", str(f4_path),
                          "--seq", "q; w+x^2+@*v+@*y^2")
    assert code == 0
    assert out.splitlines()[0] == "REGULAR, degree sequence 8,2"


def test_regscan_small_ring(tmp_path, capsys):
    path = tmp_path / "branchy.gcr"
    path.write_text("field 2\ngen a 1\ngen b 1\nrel a^2*b + a*b^2\n",
                    encoding="utf-8")
    code, out, _ = invoke(capsys, "regscan", str(path), "--degree", "1")
    assert code == 0
    assert "none regular (full enumeration of 3 candidates)" in out


def test_search_found_and_exhausted(tmp_path, fixture_file, capsys):
    path = tmp_path / "free.gcr"
    path.write_text("field 2\ngen x 1\n", encoding="utf-8")
    code, out, _ = invoke(capsys, "search", str(path), "--degrees", "1")
    assert code == 0
    assert "found" in out
    code, out, _ = invoke(capsys, "search", str(fixture_file),
                          "--degrees", "8,2", "--seed-first", "q")
    assert code == 1
    assert "exhausted" in out
    assert "fully enumerated" in out


def test_search_budget_flag(fixture_file, capsys):
    code, out, _ = invoke(capsys, "search", str(fixture_file),
                          "--degrees", "8,2", "--seed-first", "q",
                          "--budget", "3")
    assert code == 1
    assert "budget_exhausted" in out


def test_gen_order_permutation_changes_dump_not_verdicts(fixture_file, capsys):
    order = "q,r,s,t,u,v,w,x,y,z"
    code, out1, _ = invoke(capsys, "gb", str(fixture_file), "--gen-order", order)
    assert code == 0
    assert out1.splitlines()[0] == f"# order weighted-degrevlex, gens: {order}"
    code, out2, _ = invoke(capsys, "regtest", str(fixture_file),
                           "--gen-order", order, "--seq", F4SEQ)
    assert code == 0
    assert out2.splitlines()[0] == "REGULAR, degree sequence 8,4"


def test_counterexample(fixture_file, claims_file, capsys):
    code, out, _ = invoke(capsys, "counterexample", str(fixture_file))
    assert code == 0
    lines = out.splitlines()
    assert len([l for l in lines if l.startswith("PASS")]) == 12
    assert not [l for l in lines if l.startswith("FAIL")]
    assert lines[-1].startswith("OVERALL PASS (12/12")
    for needle in ("displayed-sequence-8-4", "annihilator-of-y2",
                   "degree-below-4-obstruction", "extension-sequence-8-2",
                   "no-degree-2-regular-class-mod-q", "disjoint-annihilators-mod-q"):
        assert any(needle in l for l in lines)


def test_counterexample_missing_manifest(tmp_path, capsys):
    path = tmp_path / "lonely.gcr"
    path.write_text("field 2\ngen x 1\n", encoding="utf-8")
    code, _, err = invoke(capsys, "counterexample", str(path))
    assert code == 2
    assert "manifest" in err


@pytest.mark.parametrize("argv", [
    ("gb",),
    ("hilbert", "--max-degree", "5"),
    ("ann", "--element", "y^2"),
    ("dim",),
    ("regtest", "--seq", F4SEQ),
    ("scan", "--witnesses", WITNESSES, "--degrees", "1..2"),
])
def test_stdout_determinism_across_runs_and_jobs(fixture_file, capsys, argv):
    cmd, rest = argv[0], list(argv[1:])
    outputs = set()
    for extra in ([], [], ["--jobs", "2"], ["--jobs", "4"]):
        run([cmd, str(fixture_file)] + rest + extra)
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1


def test_json_determinism(fixture_file, capsys):
    outputs = set()
    for _ in range(2):
        run(["gb", str(fixture_file), "--format", "json"])
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1
    payload = json.loads(outputs.pop())
    assert payload["format_version"] == 1
    assert payload["stats"]["pairs_processed"] > 0
