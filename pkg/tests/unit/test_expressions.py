"""
Tests for word expressions.
"""

import pytest

from palinword.morphisms import evaluate


class TestEvaluate:
    """Test expressions over named morphisms."""

    def test_letters_and_images(self, morphisms):
        """Test concatenation of letters and images."""
        assert evaluate("12 h(1) 012", morphisms) == "1231012"
        assert evaluate("12h(1)012", morphisms) == "1231012"
        assert evaluate("ε", morphisms) == ""

    def test_powers(self, morphisms):
        """Test iterated images."""
        h = morphisms["h"]
        assert evaluate("h^2(0)", morphisms) == h(h("0"))
        assert evaluate("h^0(0123)", morphisms) == "0123"

    def test_nested(self, morphisms):
        """Test images of images."""
        g, h = morphisms["g"], morphisms["h"]
        assert evaluate("g(h(31))", morphisms) == g(h("31"))
        assert evaluate("012g(1)0102", morphisms) == "012" + g("1") + "0102"

    @pytest.mark.parametrize("expr", ["x(0)", "h(0", "h^(0)", "h0", "0)", "0+1"])
    def test_errors(self, morphisms, expr):
        """Test malformed expressions."""
        with pytest.raises(ValueError):
            evaluate(expr, morphisms)
