import random
from fractions import Fraction

import pytest

from conftest import exhaustive_gamma
from unilap.bounds import (
    analyze,
    ceil_div,
    compass_bounds,
    domination_number,
    lollipop_exact_count,
    main_lower_bound,
    refined_lollipop_bound,
)
from unilap.errors import InvalidParameterError, NotUnicyclicError, SizeCapExceededError
from unilap.graphs import CompassParams, make_compass, make_cycle, make_lollipop, make_path
from unilap.harness import random_connected_graph, random_tree
from unilap.spectra import count_interval


class TestBoundFormulas:
    def test_main_bound_values(self):
        assert main_lower_bound(8, 8) == 4
        assert main_lower_bound(10, 8) == 5
        assert main_lower_bound(3, 3) == 1

    def test_main_bound_rejects(self):
        with pytest.raises(InvalidParameterError):
            main_lower_bound(0, 3)
        with pytest.raises(InvalidParameterError):
            main_lower_bound(3, 2)

    def test_refined_values(self):
        assert refined_lollipop_bound(6, 8) == 4
        assert refined_lollipop_bound(6, 6) == 2
        assert refined_lollipop_bound(3, 3) == 2

    def test_lollipop_exact_count(self):
        assert lollipop_exact_count(5, 3) == 2
        assert count_interval(make_lollipop(5, 3), 0, 1).count == 2
        assert lollipop_exact_count(10, 8) == 4
        assert count_interval(make_lollipop(10, 8), 0, 1).count == 4
        assert lollipop_exact_count(12, 8) is None
        with pytest.raises(InvalidParameterError):
            lollipop_exact_count(5, 5)

    def test_compass_bounds(self):
        assert compass_bounds(CompassParams(14, 8, 4, 3)) == (5, None)
        assert compass_bounds(CompassParams(12, 6, 3, 1)) == (3, 4)
        assert compass_bounds(CompassParams(8, 3, 1, 1)) == (2, None)


class TestDomination:
    def test_small_known_values(self):
        assert domination_number(make_path(3)) == 1
        assert domination_number(make_cycle(6)) == 2
        assert domination_number(make_path(4)) == 2

    def test_matches_exhaustive_oracle(self):
        rng = random.Random(17)
        for _ in range(30):
            n = rng.randrange(2, 9)
            g = random_connected_graph(rng, n, rng.randrange(0, 4))
            assert domination_number(g) == exhaustive_gamma(g)

    def test_cap_enforced(self):
        with pytest.raises(SizeCapExceededError):
            domination_number(make_path(40))
        assert domination_number(make_path(40), cap=40) == 14

    def test_cycle_formula(self):
        for n in range(3, 25):
            assert domination_number(make_cycle(n)) == ceil_div(n, 3)


class TestAnalyze:
    def test_lollipop_report(self):
        rep = analyze(make_lollipop(12, 8))
        assert rep.count01 == 4
        assert rep.main_bound == 4
        assert rep.girth == 8 and rep.diameter == 8
        assert rep.core.kind == "lollipop"
        assert rep.all_ok

    def test_compass_report(self):
        rep = analyze(make_compass(CompassParams(14, 8, 4, 3)))
        assert rep.count01 == 5
        assert rep.main_bound == 5
        assert rep.alpha == 0
        assert rep.verdicts["chain"]
        assert rep.all_ok

    def test_cycle_report(self):
        rep = analyze(make_cycle(6))
        assert rep.count01 == 1
        assert rep.main_bound == 1
        assert rep.gamma == 2
        assert rep.core.kind == "cycle"
        # the tree-only chain fails on C_6: (d+1)/3 = 4/3 exceeds count01
        assert Fraction(rep.diameter + 1, 3) > rep.count01

    def test_strengthened_bound_reported_for_either_tail(self):
        # t=2, s=1 orientation: the swapped labeling satisfies the
        # strengthened hypotheses, so analyze must still report it
        rep = analyze(make_compass(CompassParams(12, 6, 3, 2)))
        assert rep.refined_bound == 4
        assert rep.count01 >= 4

    def test_rejects_non_unicyclic(self):
        with pytest.raises(NotUnicyclicError):
            analyze(make_path(5))

    def test_chain_verdict_only_for_large_girth(self):
        rep7 = analyze(make_cycle(7))
        assert "chain" in rep7.verdicts and rep7.verdicts["chain"]
        rep6 = analyze(make_cycle(6))
        assert "chain" not in rep6.verdicts

    def test_gamma_skipped_above_cap(self):
        rep = analyze(make_cycle(40), gamma_cap=20)
        assert rep.gamma is None
        assert "hedetniemi" not in rep.verdicts
        assert rep.verdicts["main_bound"]


class TestInequalitySpotChecks:
    def test_cycle_display_bound(self):
        for n in range(3, 61):
            count = 2 * ceil_div(n, 6) - 1
            assert count >= main_lower_bound(n // 2, n)

    def test_tree_chain_on_random_trees(self):
        rng = random.Random(23)
        for _ in range(25):
            g = random_tree(rng, rng.randrange(2, 15))
            from unilap.graphs import diameter_and_path

            d, _ = diameter_and_path(g)
            c = count_interval(g, 0, 1).count
            assert ceil_div(d + 1, 3) <= c <= domination_number(g)
