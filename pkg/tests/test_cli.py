"""CLI surface: output formats, JSON round trips, exit codes."""

import json

import pytest

from pqcalc.cli import main
from pqcalc.scalars import rat


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


class TestBracketCommand:
    def test_exact_integer(self, capsys):
        code, out, _ = run_cli(capsys, "bracket", "3", "--p", "2", "--q", "1")
        assert code == 0
        assert out == "7"

    def test_zero(self, capsys):
        code, out, _ = run_cli(capsys, "bracket", "0", "--p", "3/2", "--q", "1/2")
        assert (code, out) == (0, "0")

    def test_negative_index(self, capsys):
        code, out, _ = run_cli(capsys, "bracket", "-2", "--p", "2", "--q", "1/2")
        assert (code, out) == (0, "-5/2")

    def test_real_exponent_json(self, capsys):
        code, out, _ = run_cli(capsys, "bracket", "2.5", "--p", "2", "--q", "1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == pytest.approx(2**2.5 - 1)

    def test_exact_json_uses_rational_strings(self, capsys):
        code, out, _ = run_cli(capsys, "bracket", "3", "--p", "2", "--q", "1", "--json")
        assert json.loads(out) == {"value": "7"}

    def test_parse_error_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "bracket", "abc", "--p", "2", "--q", "1")
        assert code == 2
        assert "error" in err

    def test_invalid_params_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "bracket", "3", "--p", "2", "--q", "2")
        assert code == 2


class TestDeriveCommand:
    def test_polynomial(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "0,0,1", "--p", "2", "--q", "1")
        assert (code, out) == (0, "0,3")

    def test_constant(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "5")
        assert (code, out) == (0, "0")

    def test_power_expression_k_fold(self, capsys):
        code, out, _ = run_cli(
            capsys, "derive", "pqpow(a=1, n=3)", "--k", "2", "--p", "2", "--q", "1/2"
        )
        assert code == 0
        assert out == "105/4 * pqpow(a=1, n=1, gamma=4)"

    def test_power_expression_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "derive", "pqpow(a=1, n=3)", "--k", "2", "--p", "2", "--q", "1/2", "--json"
        )
        payload = json.loads(out)
        assert rat(payload["coeff"]) == rat("105/4")
        assert payload["expr"] == "pqpow(a=1, n=1, gamma=4)"

    def test_reversed_expression(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "pqpowrev(a=1, n=2)", "--p", "3", "--q", "2")
        assert code == 0
        assert out.startswith("-5 * pqpowrev(")


class TestTaylorCommand:
    def test_expansion_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "taylor", "0,0,1", "1", "--p", "2", "--q", "1/2", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "a": "1",
            "orientation": "x-a",
            "coeffs": ["1", "5/4", "1/2"],
            "exact": True,
        }

    def test_constant_single_coefficient(self, capsys):
        code, out, _ = run_cli(capsys, "taylor", "7/3", "2", "--json")
        payload = json.loads(out)
        assert payload["coeffs"] == ["7/3"]
        assert payload["exact"] is True

    def test_reversed_orientation(self, capsys):
        code, out, _ = run_cli(capsys, "taylor", "0,1", "1", "--reversed", "--json")
        payload = json.loads(out)
        assert payload["orientation"] == "a-x"
        assert payload["exact"] is True


class TestIntegrateCommand:
    def test_linear_jackson(self, capsys):
        code, out, _ = run_cli(
            capsys, "integrate", "poly:0,1", "0", "1", "--p", "1", "--q", "1/2", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["status"] == "converged"
        assert payload["value"] == pytest.approx(2 / 3, abs=1e-9)

    def test_zero_polynomial(self, capsys):
        code, out, _ = run_cli(capsys, "integrate", "poly:0", "0", "5", "--json")
        payload = json.loads(out)
        assert payload["value"] == 0.0

    def test_reciprocal_divergence(self, capsys):
        code, out, _ = run_cli(
            capsys, "integrate", "recip", "0", "1", "--p", "2", "--q", "1", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["status"] == "divergent"

    def test_improper_mode(self, capsys):
        code, out, _ = run_cli(capsys, "integrate", "poly:0,1", "--improper", "--json")
        payload = json.loads(out)
        assert payload["status"] == "divergent"  # x grows on the upper lattice

    def test_to_infinity_mode(self, capsys):
        code, out, _ = run_cli(capsys, "integrate", "powneg:3", "1", "--to-inf", "--json")
        payload = json.loads(out)
        assert payload["status"] == "converged"
        assert payload["value"] == pytest.approx(1 / 6, abs=1e-9)

    def test_json_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "integrate", "poly:1,2", "0", "2", "--json")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload

    def test_missing_bounds_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "integrate", "poly:0,1", "1")
        assert code == 2

    def test_bad_interval_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "integrate", "poly:0,1", "2", "1")
        assert code == 2

    def test_unknown_spec_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "integrate", "tan", "0", "1")
        assert code == 2

    def test_policy_flags(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "integrate", "poly:0,1", "0", "1",
            "--max-terms", "5", "--tail-tol", "1e-12", "--json",
        )
        payload = json.loads(out)
        assert payload["status"] == "max_terms"
        assert payload["terms"] == 5


class TestIdentitiesCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run_cli(capsys, "identities", "--seed", "0", "--trials", "3")
        assert code == 0
        assert "overall: PASS" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "identities", "--seed", "1", "--trials", "2", "--only", "qbin", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["passed"] is True
        assert payload["results"][0]["label"] == "qbin"

    def test_forced_failure_exits_one(self, capsys):
        code, out, _ = run_cli(
            capsys, "identities", "--trials", "2", "--only", "linearity", "--self-test-fail"
        )
        assert code == 1
        assert "FAIL" in out

    def test_only_prefix_match_heine(self, capsys):
        code, out, _ = run_cli(capsys, "identities", "--only", "heine", "--trials", "2")
        assert code == 0
        assert "heine-coefficients" in out
        assert "MATCH" in out
        assert "MISMATCH" in out

    def test_unknown_label_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "identities", "--only", "nope")
        assert code == 2
        assert "no identity label" in err
