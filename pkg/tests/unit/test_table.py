"""
Tests for the claims table.
"""

from palinword.generators import HEADERS, ClaimRow, render_claims_table


class TestClaimsTable:
    """Test plain-text table rendering."""

    def test_layout(self):
        """Test header, rule and padded rows."""
        rows = [
            ClaimRow("3.a", "4", "5/2+", "morphism", "confirmed"),
            ClaimRow("lp.a", "20", "2+", "backtrack", "skipped"),
        ]
        lines = render_claims_table(rows).splitlines()
        assert len(lines) == 4
        assert lines[0].split() == list(HEADERS)
        assert set(lines[1].replace(" ", "")) == {"-"}
        assert lines[2].split()[:2] == ["3.a", "4"]
        assert lines[3].split() == ["lp.a", "20", "2+", "backtrack", "skipped"]

    def test_no_trailing_blanks(self):
        """Test that rows end at their last cell."""
        text = render_claims_table([ClaimRow("8", "", "", "", "")])
        assert all(line == line.rstrip() for line in text.splitlines())

    def test_columns_align(self):
        """Test that every column starts at the same offset."""
        rows = [
            ClaimRow("periodic", "3", "∞", "word", "confirmed"),
            ClaimRow("5", "16", "7/4+", "backtrack", "confirmed"),
        ]
        lines = render_claims_table(rows).splitlines()
        offset = lines[0].index("palindromes")
        assert lines[2][offset:].startswith("3")
        assert lines[3][offset:].startswith("16")
