"""
Integration tests for the palinword command.
"""

import logging
from fractions import Fraction

import pytest

from palinword import __version__
from palinword.bispecial import RATIO_BOUND
from palinword.cli.main import build_config, build_parser, main
from palinword.generators import parse_certificate, strip_elapsed
from palinword.utils.errors import (
    LemmaInapplicableError,
    RatioBoundError,
    SearchBudgetError,
    UsageError,
)
from palinword.utils.types import ExitCode

from ..fixtures_global.basic_fixtures import (
    create_test_constraints_file,
    create_test_morphism_file,
)


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop the stderr handler installed by main()."""
    yield
    package_logger = logging.getLogger("palinword")
    for handler in list(package_logger.handlers):
        if getattr(handler, "_palinword", False):
            package_logger.removeHandler(handler)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestParser:
    """Test argument parsing."""

    def test_version(self, capsys):
        """Test --version."""
        with pytest.raises(SystemExit) as e:
            main(["--version"])
        assert e.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_missing_word(self, capsys):
        """Test the usage exit code of argparse errors."""
        with pytest.raises(SystemExit) as e:
            main(["census"])
        assert e.value.code == ExitCode.USAGE

    def test_invalid_budget(self, capsys):
        """Test that a non-positive budget is a usage error."""
        with pytest.raises(SystemExit) as e:
            main(["census", "--word", "0", "--budget", "0"])
        assert e.value.code == ExitCode.USAGE

    def test_build_config(self, clean_environ):
        """Test that flags override the environment."""
        args = build_parser().parse_args(
            ["backtrack", "--preset", "pal-3", "--target", "4", "--budget", "99",
             "--jobs", "2", "--split-depth", "3", "--no-symmetry", "--long"]
        )
        config = build_config(args, {"PALINWORD_BUDGET": "5"})
        assert config.budget.nodes == 99
        assert config.jobs == 2
        assert config.long_mode is True
        policy = config.policy()
        assert policy.split_depth == 3
        assert policy.symmetry is False
        assert policy.jobs == 2


class TestCensus:
    """Test the census command."""

    def test_word(self, capsys):
        """Test the palindromes of a literal word."""
        code, out = run(capsys, "census", "--word", "0110", "--expect", "5")
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["command"] == "census"
        assert fields["result.palindromes"] == "5"
        assert fields["inputs.word"] == "0110"

    def test_wrong_expectation(self, capsys):
        """Test a refuted expectation."""
        code, _ = run(capsys, "census", "--word", "0110", "--expect", "6")
        assert code == ExitCode.REFUTED

    def test_source_and_list(self, capsys):
        """Test a source prefix and the palindrome listing."""
        code, out = run(
            capsys, "census", "--source", "periodic-012", "--length", "99", "--list"
        )
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["result.palindromes"] == "4"
        assert fields["result.palindrome_list"] == "ε, 0, 1, 2"

    def test_check_only(self, capsys):
        """Test that --check-only stops after parsing."""
        code, out = run(capsys, "census", "--word", "0110", "--check-only")
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["result.check_only"] == "yes"
        assert "result.palindromes" not in fields

    def test_bad_word(self, capsys):
        """Test that words are digit strings."""
        code, _ = run(capsys, "census", "--word", "abc")
        assert code == ExitCode.USAGE


class TestCertificates:
    """Test certificate output."""

    def test_replay_is_identical(self, capsys):
        """Test that two runs differ only in elapsed time."""
        _, first = run(capsys, "max-exponent", "--source", "t", "--length", "500")
        _, second = run(capsys, "max-exponent", "--source", "t", "--length", "500")
        assert strip_elapsed(first) == strip_elapsed(second)
        assert parse_certificate(first)["result.exponent"] == "2"

    def test_output_file(self, capsys, temp_dir):
        """Test that --output receives the printed certificate."""
        target = temp_dir / "cert.rst"
        _, out = run(capsys, "census", "--word", "012", "--output", str(target))
        assert target.read_text(encoding="utf-8") == out

    def test_config_inputs(self, capsys):
        """Test that the run configuration is recorded."""
        _, out = run(capsys, "census", "--word", "0", "--budget", "1234")
        assert "budget=1234" in parse_certificate(out)["inputs.config"]


class TestMaxExponent:
    """Test the max-exponent command."""

    def test_free(self, capsys):
        """Test a word that respects the threshold."""
        code, out = run(capsys, "max-exponent", "--word", "0101", "--threshold", "2+")
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["result.exponent"] == "2"
        assert fields["result.free"] == "yes"

    def test_not_free(self, capsys):
        """Test a word with an overlap."""
        code, out = run(capsys, "max-exponent", "--word", "01010", "--threshold", "2+")
        assert code == ExitCode.REFUTED
        assert parse_certificate(out)["result.exponent"] == "5/2"


class TestBacktrackCommand:
    """Test the backtrack command."""

    def test_exhausted(self, capsys):
        """Test an exhausted search matching its expectation."""
        code, out = run(capsys, "backtrack", "--preset", "pal-3", "--target", "5")
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["result.outcome"] == "EXHAUSTED"
        assert fields["result.longest_length"] == "2"

    def test_unexpected_outcome(self, capsys):
        """Test that an exhausted search refutes --expect reached."""
        code, _ = run(
            capsys, "backtrack", "--preset", "pal-3", "--target", "5",
            "--expect", "reached",
        )
        assert code == ExitCode.REFUTED

    def test_budget(self, capsys):
        """Test that a spent budget is inconclusive."""
        code, out = run(
            capsys, "backtrack", "--preset", "16-good", "--target", "60",
            "--budget", "10",
        )
        assert code == ExitCode.INCONCLUSIVE
        assert parse_certificate(out)["result.outcome"] == "BUDGET"

    def test_constraints_file(self, capsys, temp_dir):
        """Test a constraint file with a command-line override."""
        path = create_test_constraints_file(
            temp_dir, "bin.constraints", "alphabet = 2\nsquare_free = yes\n"
        )
        code, out = run(
            capsys, "backtrack", "--constraints", str(path), "--target", "10"
        )
        assert code == ExitCode.VERIFIED
        assert parse_certificate(out)["result.witness"] == "010"

    def test_needs_constraints(self, capsys):
        """Test that a constraint source is required."""
        code, _ = run(capsys, "backtrack", "--target", "5")
        assert code == ExitCode.USAGE

    def test_resume(self, capsys, temp_dir):
        """Test resuming from a checkpoint written at budget exhaustion."""
        checkpoint = str(temp_dir / "cp.json")
        code, _ = run(
            capsys, "backtrack", "--preset", "pal-5", "--target", "30",
            "--budget", "10", "--checkpoint", checkpoint,
        )
        assert code == ExitCode.INCONCLUSIVE
        code, out = run(
            capsys, "backtrack", "--preset", "pal-5", "--target", "30",
            "--resume", checkpoint, "--expect", "reached",
        )
        assert code == ExitCode.VERIFIED
        assert parse_certificate(out)["result.outcome"] == "REACHED"


class TestVerifyMorphismCommand:
    """Test the verify-morphism command."""

    def test_builtin(self, capsys):
        """Test a built-in morphism with its recorded thresholds."""
        code, out = run(
            capsys, "verify-morphism", "mrs-4", "--max-length", "6",
            "--census-length", "40",
        )
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["inputs.alpha"] == "7/4+"
        assert fields["result.transfer_result"] == "pass"
        assert fields["result.outcome"] == "PASS"

    def test_file(self, capsys, temp_dir):
        """Test a morphism read from a file."""
        path = create_test_morphism_file(
            temp_dir, "four.morphism", ["0012", "0112", "0122"]
        )
        code, out = run(
            capsys, "verify-morphism", str(path), "--alpha", "7/4+",
            "--beta", "2+", "--max-length", "5",
        )
        assert code == ExitCode.VERIFIED
        assert parse_certificate(out)["inputs.morphism"] == "four"

    def test_not_uniform(self, capsys):
        """Test the exit code of an inapplicable transfer."""
        code, _ = run(
            capsys, "verify-morphism", "f", "--alpha", "3", "--beta", "10/3+"
        )
        assert code == ExitCode.INAPPLICABLE

    def test_unknown(self, capsys):
        """Test an unknown morphism."""
        code, _ = run(capsys, "verify-morphism", "nope", "--alpha", "2", "--beta", "3")
        assert code == ExitCode.USAGE


class TestOtherCommands:
    """Test bispecial, critical-exponent and reproduce."""

    def test_periodic_critical_exponent(self, capsys):
        """Test that periodic words are refused."""
        code, _ = run(capsys, "critical-exponent", "--source", "periodic-012")
        assert code == ExitCode.USAGE

    def test_critical_exponent(self, capsys):
        """Test the Thue-Morse word."""
        code, out = run(
            capsys, "critical-exponent", "--source", "thue-morse",
            "--max-length", "12", "--expect", "2",
        )
        assert code == ExitCode.VERIFIED
        assert parse_certificate(out)["result.exponent"] == "2"

    def test_bispecial_families(self, capsys):
        """Test the family sweep through the command line."""
        code, out = run(
            capsys, "bispecial", "--length", "2000", "--max-length", "6",
            "--families", "3",
        )
        assert code == ExitCode.VERIFIED
        fields = parse_certificate(out)
        assert fields["result.family_max_ratio"] == "19/22"
        assert int(fields["result.bispecial"]) > 0

    def test_reproduce_periodic(self, capsys):
        """Test the claims table of a single claim."""
        code, out = run(capsys, "reproduce", "periodic")
        assert code == ExitCode.VERIFIED
        assert out.splitlines()[0].split() == [
            "label", "palindromes", "exponent", "kind", "outcome"
        ]
        assert parse_certificate(out[out.index(":format:"):])[
            "result.periodic.status"
        ] == "verified"

    def test_reproduce_check_only(self, capsys):
        """Test that table1 expands to the table labels."""
        code, out = run(capsys, "reproduce", "table1", "--check-only")
        assert code == ExitCode.VERIFIED
        claims = parse_certificate(out)["inputs.claims"]
        assert claims.startswith("3.a, 3.b")
        assert claims.endswith("periodic")


class TestErrorExitCodes:
    """Test the mapping from exceptions to exit codes."""

    @pytest.mark.parametrize(
        "error, expected",
        [
            (LemmaInapplicableError("not uniform"), ExitCode.INAPPLICABLE),
            (RatioBoundError("1", 0, Fraction(2), RATIO_BOUND), ExitCode.REFUTED),
            (UsageError("bad flag"), ExitCode.USAGE),
            (SearchBudgetError("budget"), ExitCode.INCONCLUSIVE),
            (ValueError("bad letter"), ExitCode.USAGE),
        ],
    )
    def test_exception_mapping(self, mocker, capsys, error, expected):
        """Test that a failing command exits with the mapped code."""
        failing = mocker.Mock(side_effect=error)
        mocker.patch.dict("palinword.cli.commands.COMMANDS", {"census": failing})
        code, out = run(capsys, "census", "--word", "0")
        assert code == expected
        assert out == ""
        failing.assert_called_once()
