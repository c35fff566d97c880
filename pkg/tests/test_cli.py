"""End-to-end CLI behaviour: commands, exit codes, determinism."""

import json

import pytest

from bcspec.cli import main

EX_OP = {
    "n": 2,
    "t1": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
    "t2": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
}


@pytest.fixture
def op_file(tmp_path):
    path = tmp_path / "op.json"
    path.write_text(json.dumps(EX_OP))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestDecompose:
    def test_scalar_e1(self, capsys):
        code, out, _ = run_cli(capsys, "decompose", "--input", '{"cart":[0.5,0,0,0.5]}')
        assert code == 0
        report = json.loads(out)
        assert report["class"] == "InI1"
        assert report["scalar"]["idem"] == [1.0, 0.0, 0.0, 0.0]
        assert report["inverse"] is None

    def test_scalar_inverse_present(self, capsys):
        code, out, _ = run_cli(capsys, "decompose", "--input", '{"real":[1,0,0,0]}')
        report = json.loads(out)
        assert code == 0
        assert report["class"] == "NonSingular"
        assert report["inverse"]["idem"] == [1.0, 0.0, 1.0, 0.0]
        assert report["inverse_residual"] <= 1e-14

    def test_scalar_product_check(self, capsys):
        # z1 = 1, z2 = 1: components (1-i, 1+i), invertible
        code, out, _ = run_cli(capsys, "decompose", "--input", '{"cart":[1,0,1,0]}')
        report = json.loads(out)
        assert code == 0
        assert report["inverse"] is not None
        assert report["inverse_residual"] <= 1e-12

    def test_scalar_z2_imaginary_is_singular(self, capsys):
        # z1 = 1, z2 = i: components (2, 0), a zero divisor
        code, out, _ = run_cli(capsys, "decompose", "--input", '{"cart":[1,0,0,1]}')
        report = json.loads(out)
        assert code == 0
        assert report["class"] == "InI1"
        assert report["inverse"] is None

    def test_matrix_input(self, capsys, op_file):
        code, out, _ = run_cli(capsys, "decompose", "--input", op_file)
        report = json.loads(out)
        assert code == 0
        assert report["kind"] == "matrix"
        assert report["shape"] == [2, 2]
        assert report["operator_singular"] is True
        assert report["entry_classes"][0][0] == "NonSingular"
        assert report["entry_classes"][1][1] == "InI2"


class TestSpectrum:
    def test_worked_example(self, capsys, op_file):
        code, out, _ = run_cli(capsys, "spectrum", "--input", op_file)
        report = json.loads(out)
        assert code == 0
        u1 = {tuple(e["value"]) for e in report["upsilon1"]}
        u2 = {tuple(e["value"]) for e in report["upsilon2"]}
        assert u1 == {(0.0, 0.0), (1.0, 0.0)}
        assert u2 == {(1.0, 0.0)}
        assert report["modified_spectrum"] == "({0, 1} xe C1) U (C1 xe {1})"
        dims = {tuple(e["value"]): e["dimension"] for e in report["eigenspaces"]}
        assert dims[(1.0, 0.0)] == 3 and dims[(0.0, 0.0)] == 1

    def test_identity(self, capsys):
        op = {"t1": [[[1, 0]]], "t2": [[[1, 0]]]}
        code, out, _ = run_cli(capsys, "spectrum", "--input", json.dumps(op))
        report = json.loads(out)
        assert code == 0
        assert report["upsilon1"] == [{"value": [1.0, 0.0], "multiplicity": 1}]
        assert report["upsilon2"] == [{"value": [1.0, 0.0], "multiplicity": 1}]


class TestModified:
    def test_member(self, capsys, op_file):
        code, out, _ = run_cli(
            capsys, "modified", "--input", op_file, "--kappa", '{"idem":[1,0,2,0]}'
        )
        report = json.loads(out)
        assert code == 0
        assert report["is_modified_eigenvalue"] is True
        assert report["case"] == "OnlyMinus"
        assert report["dimension"] == 1
        assert report["vector_classes"] == ["SingularNonzero"]
        assert report["all_eigenvectors_singular"] is True
        assert report["max_residual"] <= 1e-12

    def test_non_member_is_a_verdict_not_an_error(self, capsys, op_file):
        code, out, _ = run_cli(
            capsys, "modified", "--input", op_file, "--kappa", '{"idem":[7,0,9,0]}'
        )
        report = json.loads(out)
        assert code == 0
        assert report["is_modified_eigenvalue"] is False
        assert report["case"] is None


class TestEigenspace:
    def test_lambda_one(self, capsys, op_file):
        code, out, _ = run_cli(capsys, "eigenspace", "--input", op_file, "--lam", "[1,0]")
        report = json.loads(out)
        assert code == 0
        assert report["is_eigenvalue"] is True
        assert report["dimension"] == 3

    def test_kappa_form(self, capsys, op_file):
        code, out, _ = run_cli(
            capsys, "eigenspace", "--input", op_file, "--kappa", '{"idem":[0,0,1,0]}'
        )
        report = json.loads(out)
        assert code == 0
        assert report["case"] == "Both"
        assert report["dimension"] == 3

    def test_non_eigenvalue_is_a_verdict(self, capsys, op_file):
        code, out, _ = run_cli(capsys, "eigenspace", "--input", op_file, "--lam", "[4,0]")
        report = json.loads(out)
        assert code == 0
        assert report["is_eigenvalue"] is False
        assert report["verdict"] == "not a modified eigenvalue"

    def test_requires_exactly_one_selector(self, capsys, op_file):
        code, _, err = run_cli(capsys, "eigenspace", "--input", op_file)
        assert code == 2 and "exactly one" in err
        code, _, _ = run_cli(
            capsys, "eigenspace", "--input", op_file, "--lam", "[1,0]", "--kappa", '{"idem":[1,0,1,0]}'
        )
        assert code == 2


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--trials", "8", "--format", "json")
        report = json.loads(out)
        assert code == 0
        assert report["passed"] is True
        assert len(report["suites"]) >= 10
        assert all(s["failures"] == 0 for s in report["suites"])

    def test_fault_injection_fails_the_kernel_suite(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--trials", "8", "--inject-kernel-fault"
        )
        report = json.loads(out)
        assert code == 1
        assert report["passed"] is False
        kernel = next(s for s in report["suites"] if s["name"] == "kernel_image")
        assert kernel["failures"] > 0
        others = [s for s in report["suites"] if s["name"] != "kernel_image"]
        assert all(s["failures"] == 0 for s in others)

    def test_minimal_run_is_fast(self, capsys):
        import time

        start = time.perf_counter()
        code, out, _ = run_cli(capsys, "verify", "--trials", "1", "--n-min", "1", "--n-max", "1")
        elapsed = time.perf_counter() - start
        assert code == 0
        assert elapsed < 1.0

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "--trials", "5", "--seed", "99")
        _, second, _ = run_cli(capsys, "verify", "--trials", "5", "--seed", "99")
        assert first == second


class TestExploreSum:
    def test_overlapping_pair(self, capsys, op_file):
        code, out, _ = run_cli(
            capsys,
            "explore-sum",
            "--input", op_file,
            "--kappa", '{"idem":[1,0,2,0]}',
            "--kappa2", '{"idem":[1,0,3,0]}',
        )
        report = json.loads(out)
        assert code == 0
        assert report["intersection_dim"] == 1
        assert report["is_direct"] is False
        assert "computed finding" in report["note"]

    def test_direct_pair(self, capsys, op_file):
        code, out, _ = run_cli(
            capsys,
            "explore-sum",
            "--input", op_file,
            "--kappa", '{"idem":[1,0,2,0]}',
            "--kappa2", '{"idem":[7,0,1,0]}',
        )
        report = json.loads(out)
        assert code == 0
        assert report["is_direct"] is True

    def test_search_mode_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "explore-sum", "--search", "--trials", "6", "--seed", "3", "--n-min", "2", "--n-max", "3"
        )
        report = json.loads(out)
        assert code == 0
        assert report["mode"] == "search"
        assert report["direct_count"] + report["non_direct_count"] <= report["trials"]
        for w in report["witnesses"]:
            assert {"kappa", "kappa_prime", "sum_dim", "intersection_dim"} <= set(w)

    def test_non_member_kappa_is_parse_level_error(self, capsys, op_file):
        code, _, err = run_cli(
            capsys,
            "explore-sum",
            "--input", op_file,
            "--kappa", '{"idem":[7,0,9,0]}',
            "--kappa2", '{"idem":[1,0,3,0]}',
        )
        assert code == 2
        assert "not a modified eigenvalue" in err


class TestErrorHandling:
    def test_bad_json_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "decompose", "--input", "{broken")
        assert code == 2 and "error:" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--input", "no_such_file.json")
        assert code == 2 and "not found" in err

    def test_malformed_operator_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "spectrum", "--input", '{"t1": [[[1,0]]]}')
        assert code == 2

    def test_env_tolerance_override(self, capsys, monkeypatch):
        # plus component at 1e-5: singular at tol 1e-4, invertible at 1e-10
        monkeypatch.setenv("BCSPEC_TOL", "1e-4")
        code, out, _ = run_cli(capsys, "decompose", "--input", '{"idem":[1,0,1e-5,0]}')
        report = json.loads(out)
        assert code == 0
        assert report["tol"] == 1e-4
        assert report["class"] == "InI1"
        monkeypatch.setenv("BCSPEC_TOL", "bogus")
        code, _, err = run_cli(capsys, "decompose", "--input", '{"idem":[1,0,1e-5,0]}')
        assert code == 2 and "BCSPEC_TOL" in err

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BCSPEC_TOL", "1e-4")
        code, out, _ = run_cli(
            capsys, "decompose", "--input", '{"idem":[1,0,1e-5,0]}', "--tol", "1e-10"
        )
        report = json.loads(out)
        assert report["tol"] == 1e-10
        assert report["class"] == "NonSingular"


class TestOutputModes:
    def test_output_file(self, tmp_path, capsys, op_file):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "spectrum", "--input", op_file, "--output", str(target)
        )
        assert code == 0 and out == ""
        report = json.loads(target.read_text())
        assert report["command"] == "spectrum"

    def test_text_format(self, capsys, op_file):
        code, out, _ = run_cli(capsys, "spectrum", "--input", op_file, "--format", "text")
        assert code == 0
        assert "modified_spectrum: ({0, 1} xe C1) U (C1 xe {1})" in out

    def test_byte_identical_reports(self, capsys, op_file):
        _, first, _ = run_cli(capsys, "spectrum", "--input", op_file)
        _, second, _ = run_cli(capsys, "spectrum", "--input", op_file)
        assert first == second
