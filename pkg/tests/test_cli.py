"""
Command-line tests against the problem files in data/.

Run with: pytest tests/test_cli.py -v
"""

import pytest
from typer.testing import CliRunner

from cohere.main import app
from tests.conftest import DATA_DIR


@pytest.fixture
def runner():
    return CliRunner()


def machine(runner, *args):
    """Invoke with machine output and return (exit code, key/value dict)."""
    result = runner.invoke(app, ["--format", "machine", *map(str, args)])
    fields = dict(
        line.split("=", 1) for line in result.output.splitlines() if "=" in line
    )
    return result.exit_code, fields


# ============== ROOT OPTIONS ==============

class TestRoot:
    """Version, format and help."""

    def test_version(self, runner):
        """CLI-1: --version prints the version."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_unknown_format(self, runner):
        """CLI-2: only human and machine formats exist."""
        result = runner.invoke(app, ["--format", "xml", "rules", "list"])
        assert result.exit_code == 2

    def test_options_without_command(self, runner):
        """CLI-29: root options alone print the help and exit 0."""
        result = runner.invoke(app, ["--format", "machine"])
        assert result.exit_code == 0
        assert "coherence" in result.output

    def test_max_atoms_does_not_persist(self, runner):
        """CLI-30: --max-atoms applies to its own invocation only."""
        path = str(DATA_DIR / "three_uniform.json")
        limited = runner.invoke(app, ["--max-atoms", "2", "coherence", "check", path])
        assert limited.exit_code == 2
        assert runner.invoke(app, ["coherence", "check", path]).exit_code == 0


# ============== COHERENCE ==============

class TestCoherenceCommands:
    """coherence check / extend."""

    def test_check_coherent(self, runner):
        """CLI-3: the uniform three-event file is coherent."""
        code, fields = machine(runner, "coherence", "check", DATA_DIR / "three_uniform.json")
        assert code == 0
        assert fields["verdict"] == "coherent"
        assert fields["levels"] == "1"

    def test_check_incoherent(self, runner):
        """CLI-4: 0.7 / 0.7 exits 1 with stakes."""
        code, fields = machine(runner, "coherence", "check", DATA_DIR / "incoherent_pair.json")
        assert code == 1
        assert fields["verdict"] == "incoherent"
        assert "stake.a_h" in fields

    def test_check_subsets(self, runner):
        """CLI-5: the sub-family oracle accepts the two-event file with both compounds."""
        code, fields = machine(
            runner, "coherence", "check", "--subsets", DATA_DIR / "two_events.json"
        )
        assert code == 0
        assert fields["verdict"] == "coherent"
        _, recursive = machine(runner, "coherence", "check", DATA_DIR / "two_events.json")
        assert recursive["verdict"] == "coherent"

    def test_check_subsets_limit(self, runner):
        """CLI-31: seven quantities exceed the oracle's default limit of six."""
        result = runner.invoke(
            app, ["coherence", "check", "--subsets", str(DATA_DIR / "shared_antecedent.json")]
        )
        assert result.exit_code == 2
        assert "limit of 6" in result.output

    def test_check_malformed(self, runner):
        """CLI-6: a zero denominator exits 2."""
        result = runner.invoke(app, ["coherence", "check", str(DATA_DIR / "malformed.json")])
        assert result.exit_code == 2
        assert "Error" in result.output

    def test_extend_pair(self, runner):
        """CLI-7: the file's query extends to the conjunction, matching Frechet."""
        code, fields = machine(runner, "coherence", "extend", DATA_DIR / "pair_marginals.json")
        assert code == 0
        assert fields["verdict"] == "[1/10, 1/2]"
        assert fields["closed_form.frechet_two"] == "[1/10, 1/2]"
        assert fields["closed_form.agrees"] == "yes"

    def test_extend_boole(self, runner):
        """CLI-8: C|AB is unconstrained by C|A and C|B."""
        code, fields = machine(runner, "coherence", "extend", DATA_DIR / "boole.json")
        assert code == 0
        assert fields["verdict"] == "[0, 1]"
        assert fields["target"] == "c_ab"

    def test_extend_prefix(self, runner):
        """CLI-9: the decimal prefix extends to [0, 1/4] by both routes."""
        code, fields = machine(runner, "coherence", "extend", DATA_DIR / "three_prefix.json")
        assert code == 0
        assert fields["verdict"] == "[0, 1/4]"
        assert fields["closed_form.agrees"] == "yes"

    def test_extend_option_overrides(self, runner):
        """CLI-10: --on with --op or extends to the disjunction."""
        code, fields = machine(
            runner,
            "coherence",
            "extend",
            DATA_DIR / "pair_marginals.json",
            "--on",
            "a_h,b_k",
            "--op",
            "or",
        )
        assert code == 0
        assert fields["verdict"] == "[3/5, 1]"
        assert fields["closed_form.frechet_or"] == "[3/5, 1]"

    def test_extend_conditional_frechet(self, runner):
        """CLI-32: three conditional marginals extend by the n-ary Frechet bounds."""
        code, fields = machine(runner, "coherence", "extend", DATA_DIR / "three_marginals.json")
        assert code == 0
        assert fields["verdict"] == "[7/10, 9/10]"
        assert fields["source"] == "closed_form"
        assert fields["closed_form.frechet_and"] == "[7/10, 9/10]"
        assert set(fields["free"].split()) == {"x{e1,e2}", "x{e1,e3}", "x{e2,e3}"}

    def test_extend_conditional_step(self, runner):
        """CLI-33: x{e1,e2} = 3/5 and x3 = 1/2 extend by the step bounds."""
        code, fields = machine(runner, "coherence", "extend", DATA_DIR / "three_step.json")
        assert code == 0
        assert fields["verdict"] == "[1/10, 1/2]"
        assert fields["closed_form.step"] == "[1/10, 1/2]"
        assert set(fields["free"].split()) == {"x{e1}", "x{e2}", "x{e1,e3}", "x{e2,e3}"}

    def test_extend_unknown_target(self, runner):
        """CLI-11: an unknown target exits 2."""
        result = runner.invoke(
            app, ["coherence", "extend", str(DATA_DIR / "pair_marginals.json"), "--target", "zz"]
        )
        assert result.exit_code == 2


# ============== TABLES ==============

class TestTableCommand:
    """table with and / or / qc / iterated."""

    def test_three_event_conjunction(self, runner):
        """CLI-12: three events give 27 rows with x{2,3} on C9."""
        code, fields = machine(runner, "table", DATA_DIR / "three_uniform.json", "--op", "and")
        assert code == 0
        assert fields["rows"] == "27"
        assert fields["C_9.TVV"] == "x{2,3}"

    def test_quasi_conjunction_from_query(self, runner):
        """CLI-13: the file's qc query prints the quasi conjunction."""
        result = runner.invoke(app, ["table", str(DATA_DIR / "two_events.json")])
        assert result.exit_code == 0
        assert "QC(a_h,b_k)" in result.output

    def test_iterated(self, runner):
        """CLI-14: the iterated quantity needs instantiated conjunctions."""
        code, fields = machine(runner, "table", DATA_DIR / "two_events.json", "--op", "iterated")
        assert code == 0
        assert fields["rows"] == "9"

    def test_unknown_op(self, runner):
        """CLI-15: unknown operations exit 2."""
        result = runner.invoke(app, ["table", str(DATA_DIR / "pair_marginals.json"), "--op", "xor"])
        assert result.exit_code == 2


# ============== ENTAILMENT ==============

class TestEntailCommand:
    """entail and rules."""

    def test_catalog_rule(self, runner):
        """CLI-16: And is p-valid."""
        code, fields = machine(runner, "entail", "And")
        assert code == 0
        assert fields["verdict"] == "p-valid"
        assert fields["witness"] == "{b_a, c_a}"

    def test_invalid_rule(self, runner):
        """CLI-17: Transitivity is not p-valid and exits 1."""
        code, fields = machine(runner, "entail", "Transitivity")
        assert code == 1
        assert fields["lp_lower_bound"] == "0"

    @pytest.mark.parametrize("name", ["adams_rule5.json", "weak_transitivity_b.json"])
    def test_problem_file(self, runner, name):
        """CLI-18: entail queries in files are p-valid."""
        code, fields = machine(runner, "entail", DATA_DIR / name)
        assert code == 0
        assert fields["verdict"] == "p-valid"

    def test_all(self, runner):
        """CLI-19: the whole catalog matches its expected verdicts."""
        code, fields = machine(runner, "entail", "--all")
        assert code == 0
        assert fields["verdict"] == "13/13 expected verdicts"

    def test_unknown_rule(self, runner):
        """CLI-20: unknown rule names exit 2."""
        result = runner.invoke(app, ["entail", "ModusTollens"])
        assert result.exit_code == 2

    def test_rules_list(self, runner):
        """CLI-21: the catalog lists thirteen rules."""
        result = runner.invoke(app, ["rules", "list"])
        assert result.exit_code == 0
        assert "13 rule(s)" in result.output

    def test_rules_run_with_conditions(self, runner):
        """CLI-22: --conditions adds both conjunction checks per rule."""
        code, fields = machine(runner, "rules", "run", "--only", "Cut,Transitivity", "-c")
        assert code == 0
        assert fields["Cut.condition_ii"] == "True"
        assert fields["Transitivity.condition_iii"] == "False"


# ============== BOUNDS ==============

class TestBoundsCommand:
    """Closed forms on the command line."""

    def test_frechet_and(self, runner):
        """CLI-23: three 0.9 marginals give [7/10, 9/10]."""
        code, fields = machine(runner, "bounds", "frechet-and", "0.9", "0.9", "0.9")
        assert code == 0
        assert fields["verdict"] == "[7/10, 9/10]"

    def test_step(self, runner):
        """CLI-24: (3/5, 1/2) gives [1/10, 1/2]."""
        code, fields = machine(runner, "bounds", "step", "0.6", "1/2")
        assert fields["lo"] == "1/10"
        assert fields["hi"] == "1/2"

    def test_reverse_membership(self, runner):
        """CLI-25: (2/5, 7/10, 3/5) lies in the reverse region; (2/5, 7/10, 4/5) does not."""
        assert machine(runner, "bounds", "reverse", "0.4", "0.7", "0.6")[1]["verdict"] == "inside"
        code, fields = machine(runner, "bounds", "reverse", "0.4", "0.7", "0.8")
        assert code == 1
        assert fields["verdict"] == "outside"

    def test_sigma_prime_outside(self, runner):
        """CLI-26: a negative Sigma' weight exits 1."""
        args = ["0.5"] * 3 + ["0"] * 4
        code, fields = machine(runner, "bounds", "sigma-prime", *args)
        assert code == 1
        assert fields["inside"] == "no"

    def test_wrong_arity(self, runner):
        """CLI-27: lambda takes three numbers."""
        result = runner.invoke(app, ["bounds", "lambda", "0.5"])
        assert result.exit_code == 2

    def test_lambda_outside(self, runner):
        """CLI-28: a triple outside the step region is an input error."""
        result = runner.invoke(app, ["bounds", "lambda", "0.6", "0.5", "0.6"])
        assert result.exit_code == 2
