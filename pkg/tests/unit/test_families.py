"""
Tests for bispecial families, their ratios and closed forms.
"""

from fractions import Fraction

import pytest

from palinword.bispecial import (
    FAMILY_SEEDS,
    RATIO_BOUND,
    FamilyTower,
    closed_form_core,
    family_ratio_bound,
    family_seed,
    sweep_families,
    tail_bound,
    weighted_lengths,
    weighted_lengths_closed_form,
)
from palinword.morphisms import evaluate, parikh_matrix
from palinword.utils.errors import RatioBoundError

from ..fixtures_global.data_fixtures import CASE_1_STEP_2, CASE_15_RATIOS


class TestFamilySeeds:
    """Test the family table."""

    def test_labels(self):
        """Test lookup by label."""
        assert len(FAMILY_SEEDS) == 18
        assert family_seed("case-15") is family_seed("15")
        with pytest.raises(ValueError):
            family_seed("19")

    @pytest.mark.parametrize("seed", FAMILY_SEEDS, ids=lambda s: f"family-{s.label}")
    def test_base_word_matches_chain(self, seed):
        """Test that the base step core equals the tabulated word."""
        assert FamilyTower(seed).base_matches()


class TestFamilyRatios:
    """Test exact ratios in g(h^ω(0))."""

    def test_case_15(self):
        """Test the first four ratios of family 15."""
        assert family_ratio_bound("15", 3) == CASE_15_RATIOS
        assert family_ratio_bound("case-15", 0) == [RATIO_BOUND]

    def test_case_1_lengths(self):
        """Test |W| and |R| of family 1 at step 2."""
        members = FamilyTower(family_seed("1")).members(2)
        member = next(m for m in members if m.step == 2)
        assert (member.w_length, member.r_length) == CASE_1_STEP_2

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_case_1_closed_form(self, n):
        """Test |W| and |R| of family 1 at step 2 + 3n against the sums."""
        w = (
            5
            + 11 * sum(6**j for j in range(3 * n + 2))
            + 44 * sum(6 ** (3 * j) for j in range(n + 1))
            + sum(99 * 6 ** (3 * j + 2) - 9 for j in range(n)) // 5
        )
        r = 33 * 6 ** (3 * n + 1)
        step = 2 + 3 * n
        members = FamilyTower(family_seed("1")).members(step)
        member = next(m for m in members if m.step == step)
        assert (member.w_length, member.r_length) == (w, r)
        assert member.ratio == Fraction(w, r) < RATIO_BOUND

    def test_g_level_word(self, morphisms):
        """Test the word behind the base member of family 15."""
        tower = FamilyTower(family_seed("15"))
        word = tower.g_level_word(tower.word_chain()[0])
        assert word == evaluate("12 g(31) 01", morphisms)
        assert len(word) == tower.members(0)[0].w_length

    def test_sweep(self):
        """Test that every ratio respects the bound and the bound is reached."""
        members = sweep_families(12)
        assert max(m.ratio for m in members) == RATIO_BOUND
        assert {m.family for m in members} == {s.label for s in FAMILY_SEEDS}

    def test_bound_violation(self):
        """Test the error for a bound below the ratios."""
        with pytest.raises(RatioBoundError) as info:
            family_ratio_bound("15", 2, bound=Fraction(1, 2))
        assert info.value.family == "15"
        assert info.value.n == 0
        with pytest.raises(RatioBoundError):
            sweep_families(2, bound=Fraction(1, 2))
        assert sweep_families(1, bound=None)


class TestClosedForms:
    """Test closed forms against the towers."""

    @pytest.mark.parametrize("family", ["1", "15"])
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_core_vectors(self, family, n):
        """Test the core Parikh vector at step 1 + 3n."""
        tower = FamilyTower(family_seed(family))
        _, _, core = tower.steps(1 + 3 * n)[-1]
        assert closed_form_core(family, n, tower.M) == core

    def test_closed_form_families(self):
        """Test families without a closed form."""
        tower = FamilyTower(family_seed("2"))
        with pytest.raises(ValueError):
            closed_form_core("2", 1, tower.M)
        with pytest.raises(ValueError):
            tail_bound("2", 4)
        with pytest.raises(ValueError):
            tail_bound("1", 0)

    @pytest.mark.parametrize("j", range(6))
    def test_weighted_lengths(self, j):
        """Test (1,1,1) N M^j against its closed form."""
        assert weighted_lengths(j) == weighted_lengths_closed_form(j)

    def test_weights_of_g(self):
        """Test the image lengths of g."""
        tower = FamilyTower(family_seed("1"))
        assert list(tower.weights) == [7, 4, 7, 11]
        assert tower.M == parikh_matrix(tower.h)

    @pytest.mark.parametrize("family", ["1", "15"])
    def test_tail_bounds(self, family):
        """Test that ratios stay under the tail bounds, which decrease."""
        members = FamilyTower(family_seed(family)).members(12)
        for member in members:
            if member.step >= 4:
                assert member.ratio <= tail_bound(family, member.step)
        assert tail_bound(family, 4) > tail_bound(family, 7) > tail_bound(family, 10)
