import io
import os
from contextlib import redirect_stderr, redirect_stdout

from rbhopf import builtin, example54_p1, example54_q
from rbhopf.cli import main
from rbhopf.fileformat import load, save


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_verify_builtin_bialgebra():
    code, out, _ = run("verify", "builtin:example54", "--checks", "bialgebra",
                       "--report", "machine")
    assert code == 0
    assert "check bialgebra pass" in out
    assert out.endswith("status pass\n")


def test_verify_builtin_hopf_group():
    code, out, _ = run("verify", "builtin:sweedler4", "--checks", "hopf",
                       "--report", "machine")
    assert code == 0
    for name in ("associativity", "coassociativity", "unit-counit",
                 "bialgebra", "antipode"):
        assert f"check {name} pass" in out


def test_verify_defaults_run_all_applicable():
    code, out, _ = run("verify", "builtin:grouplike:2", "--report", "machine")
    assert code == 0
    assert "check coassociativity pass" in out
    assert "check associativity" not in out


def test_verify_corrupted_file_exit_2(tmp_path):
    bad = tmp_path / "bad.rbh"
    bad.write_text("rbhopf 1 coalgebra\nfield Q\ndim 2\ncomul 0 0 9 1 1\n")
    code, _, err = run("verify", str(bad))
    assert code == 2
    assert "line 4" in err


def test_verify_missing_file_exit_2():
    code, _, err = run("verify", "/does/not/exist.rbh")
    assert code == 2 and "error" in err


def test_verify_unknown_check_exit_2():
    code, _, err = run("verify", "builtin:example54", "--checks", "hopfness")
    assert code == 2


def test_verify_failing_check_exit_1(tmp_path):
    bad = tmp_path / "bad.rbh"
    bad.write_text("rbhopf 1 coalgebra\nfield Q\ndim 2\ncomul 0 0 1 1 1\n")
    code, out, _ = run("verify", str(bad), "--report", "machine")
    assert code == 1
    assert "check coassociativity fail" in out
    assert "defect coassociativity witness" in out
    assert "status fail" in out


def test_verify_operator_file_is_input_error(tmp_path):
    path = tmp_path / "q.rbh"
    save(example54_q(1), path)
    code, _, err = run("verify", str(path))
    assert code == 2


def test_rb_check_example54_family(tmp_path):
    p1 = tmp_path / "p1.rbh"
    q = tmp_path / "q.rbh"
    save(example54_p1(1, 1), p1)
    save(example54_q(1), q)
    code, out, _ = run("rb-check", "builtin:example54", "--side", "bialgebra",
                       "--operator", str(p1), "--operator", str(q),
                       "--weight", "0", "--weight", "1", "--report", "machine")
    assert code == 0
    assert "check rb-algebra pass" in out and "check rb-coalgebra pass" in out


def test_rb_check_p2_family(tmp_path):
    from rbhopf import example54_p2
    p2 = tmp_path / "p2.rbh"
    q = tmp_path / "q.rbh"
    save(example54_p2(1), p2)
    save(example54_q(2), q)
    code, out, _ = run("rb-check", "builtin:example54", "--side", "bialgebra",
                       "--operator", str(p2), "--operator", str(q),
                       "--weight", "1", "--weight", "2", "--report", "machine")
    assert code == 0 and "status pass" in out


def test_rb_check_failure_exit_1(tmp_path):
    q = tmp_path / "q.rbh"
    save(example54_q(3), q)
    code, out, _ = run("rb-check", "builtin:example54", "--side", "coalgebra",
                       "--operator", str(q), "--weight", "0",
                       "--report", "machine")
    assert code == 1
    assert "defect rb-coalgebra witness 0,2,2 entries 2" in out
    assert "defect-entry 0,2,2 9" in out


def test_rb_check_identity_weight(tmp_path):
    eye = tmp_path / "id.rbh"
    from rbhopf import Mat, QQ
    save(Mat.identity(QQ, 3), eye)
    code, out, _ = run("rb-check", "builtin:example54", "--side", "coalgebra",
                       "--operator", str(eye), "--weight=-1",
                       "--report", "machine")
    assert code == 0
    code, out, _ = run("rb-check", "builtin:example54", "--side", "coalgebra",
                       "--operator", str(eye), "--weight", "0")
    assert code == 1


def test_rb_check_arity_validation(tmp_path):
    q = tmp_path / "q.rbh"
    save(example54_q(1), q)
    code, _, err = run("rb-check", "builtin:example54", "--side", "bialgebra",
                       "--operator", str(q), "--weight", "1")
    assert code == 2


def test_construct_full_pipeline(tmp_path):
    smash = str(tmp_path / "smash.rbh")
    pr = str(tmp_path / "pr.rbh")
    pl = str(tmp_path / "pl.rbh")
    prelie = str(tmp_path / "prelie.rbh")
    assert run("construct", "smash", "--hopf", "builtin:sweedler4",
               "--yd", "adjoint", "-o", smash)[0] == 0
    assert run("construct", "projection-right", "--hopf", "builtin:sweedler4",
               "--yd", "adjoint", "-o", pr)[0] == 0
    assert run("construct", "projection-left", "--hopf", "builtin:sweedler4",
               "--yd", "adjoint", "-o", pl)[0] == 0
    code, out, _ = run("construct", "prelie", "--structure", smash,
                       "--operator", pr, "--weight=-1", "-o", prelie,
                       "--report", "machine")
    assert code == 0 and "check pre-lie pass" in out
    assert run("verify", prelie)[0] == 0
    # the created operators satisfy the rb-check via the CLI as well
    assert run("rb-check", smash, "--side", "coalgebra", "--operator", pl,
               "--weight=-1")[0] == 0


def test_construct_smash_writes_counital_coalgebra(tmp_path):
    out_path = str(tmp_path / "smash.rbh")
    run("construct", "smash", "--hopf", "builtin:group:C3", "--yd", "adjoint",
        "-o", out_path)
    doc = load(out_path)
    assert doc.kind == "coalgebra"
    assert doc.payload.dim == 9
    assert doc.payload.counit is not None


def test_construct_pi_operator(tmp_path):
    pi = str(tmp_path / "pi.rbh")
    hh = str(tmp_path / "hh.rbh")
    code, out, _ = run("construct", "pi-operator", "--hopf", "builtin:group:C2",
                       "-o", pi, "--structure-out", hh, "--report", "machine")
    assert code == 0
    assert "check convolution-matches-projection pass" in out
    assert run("rb-check", hh, "--side", "bialgebra", "--operator", pi,
               "--operator", pi, "--weight=-1", "--weight=-1")[0] == 0


def test_construct_projection_matches_closed_form(tmp_path):
    out_path = str(tmp_path / "pr.rbh")
    code, _, _ = run("construct", "projection-right", "--hopf",
                     "builtin:group:C2", "--yd", "adjoint", "-o", out_path)
    assert code == 0
    from rbhopf import adjoint_yd, projection_right_closed_form
    expected = projection_right_closed_form(adjoint_yd(builtin("group:C2")))
    assert load(out_path).payload == expected


def test_construct_projection_from_module_file(tmp_path):
    from rbhopf import regular_hopf_module
    hm = regular_hopf_module(builtin("sweedler4"))
    mod = tmp_path / "m.rbh"
    save(hm, mod, refs={"hopf": "builtin:sweedler4"})
    out_path = str(tmp_path / "p.rbh")
    code, out, _ = run("construct", "projection-right", "--module", str(mod),
                       "-o", out_path, "--report", "machine")
    assert code == 0
    doc = load(out_path)
    h4 = builtin("sweedler4")
    assert doc.payload == h4.unit.as_column() * h4.counit


def test_construct_prelie_rejects_other_weights(tmp_path):
    q = tmp_path / "q.rbh"
    save(example54_q(3), q)
    code, _, err = run("construct", "prelie", "--structure",
                       "builtin:example54", "--operator", str(q),
                       "--weight", "3", "-o", str(tmp_path / "x.rbh"))
    assert code == 2


def test_search_writes_and_reverifies(tmp_path):
    out_dir = str(tmp_path / "ops")
    code, out, _ = run("search", "builtin:grouplike:2", "--field", "Fp:2",
                       "--side", "coalgebra", "--weight", "1",
                       "--out-dir", out_dir, "--report", "machine")
    assert code == 0
    assert "scanned 16" in out and "found 12" in out
    assert "check reload-and-reverify pass" in out
    files = sorted(os.listdir(out_dir))
    assert len(files) == 12 and files[0] == "op_0000.rbh"
    assert load(os.path.join(out_dir, files[0])).payload.is_zero()


def test_search_dim1_via_cli(tmp_path):
    out_dir = str(tmp_path / "ops")
    code, out, _ = run("search", "builtin:grouplike:1", "--field", "Fp:2",
                       "--side", "coalgebra", "--weight", "1",
                       "--out-dir", out_dir, "--report", "machine")
    assert code == 0
    assert "scanned 2" in out and "found 2" in out  # the zero map and id


def test_search_budget_exit_3():
    code, _, err = run("search", "builtin:grouplike:2", "--field", "Fp:3",
                       "--side", "coalgebra", "--weight", "0", "--budget", "8")
    assert code == 3


def test_search_rejects_rationals():
    code, _, err = run("search", "builtin:grouplike:2", "--side", "coalgebra",
                       "--weight", "1")
    assert code == 2


def test_field_flag_only_for_builtins(tmp_path):
    path = tmp_path / "s.rbh"
    save(builtin("group:C2"), path)
    code, _, err = run("verify", str(path), "--field", "Fp:2")
    assert code == 2


def test_verify_module_file_defaults(tmp_path):
    from rbhopf import regular_hopf_module
    hm = regular_hopf_module(builtin("group:C2"))
    mod = tmp_path / "m.rbh"
    save(hm, mod, refs={"hopf": "builtin:group:C2"})
    code, out, _ = run("verify", str(mod), "--report", "machine")
    assert code == 0
    for name in ("hopf-module", "hopf-module-algebra", "hopf-module-coalgebra"):
        assert f"check {name} pass" in out


def test_machine_report_deterministic():
    a = run("verify", "builtin:sweedler4", "--report", "machine")
    b = run("verify", "builtin:sweedler4", "--report", "machine")
    assert a == b


def test_human_report_has_status_line():
    code, out, _ = run("verify", "builtin:group:C2")
    assert code == 0
    assert "[PASS]" in out and "OK (" in out


def test_usage_error_exit_2():
    assert run("verify")[0] == 2
    assert run("frobnicate")[0] == 2


def test_builtin_list_modes():
    code, out, _ = run("builtin-list", "--report", "machine")
    assert code == 0
    assert "builtin sweedler4 hopf 4" in out
    assert "builtin-family grouplike:<n> coalgebra" in out
