import pytest

from ffkit import (
    OrderMismatchError,
    ScaleLimitError,
    check_axioms,
    complete_tables,
    construct_field,
    match_against_field,
    match_against_tables,
)
from ffkit.table_oracle import TableSolution

FIGURE_F3_ADD = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
FIGURE_F3_MUL = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]

FIGURE_F4_ADD = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
FIGURE_F4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


class TestCompleteTables:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
    def test_unique_solution_class(self, q):
        assert len(complete_tables(q)) == 1

    def test_no_field_of_order_six(self):
        assert complete_tables(6) == []

    def test_q3_matches_figure(self):
        (sol,) = complete_tables(3)
        assert match_against_tables(sol, FIGURE_F3_ADD, FIGURE_F3_MUL)

    def test_q4_matches_figure_and_has_characteristic_2(self):
        (sol,) = complete_tables(4)
        assert match_against_tables(sol, FIGURE_F4_ADD, FIGURE_F4_MUL)
        assert sol.add[1][1] == 0  # 1+1 = 0 regardless of relabeling

    def test_solutions_pass_axiom_scan(self):
        for q in (2, 3, 4, 5, 7):
            for sol in complete_tables(q):
                assert check_axioms(sol.add, sol.mul) == []

    def test_guards(self):
        with pytest.raises(ScaleLimitError):
            complete_tables(8)
        with pytest.raises(ValueError):
            complete_tables(1)


class TestAxiomChecker:
    def test_accepts_z5(self):
        add = [[(i + j) % 5 for j in range(5)] for i in range(5)]
        mul = [[(i * j) % 5 for j in range(5)] for i in range(5)]
        assert check_axioms(add, mul) == []

    def test_rejects_z4_ring(self):
        add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
        mul = [[(i * j) % 4 for j in range(4)] for i in range(4)]
        violations = check_axioms(add, mul)
        assert violations
        assert any("zero divisors" in v or "inverse" in v for v in violations)

    def test_rejects_tampered_field_table(self):
        (sol,) = complete_tables(4)
        add = [list(row) for row in sol.add]
        add[2][3], add[2][2] = add[2][2], add[2][3]
        assert check_axioms(add, sol.mul)

    def test_rejects_broken_distributivity(self):
        add = [[(i + j) % 3 for j in range(3)] for i in range(3)]
        mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
        assert any("distributive" in v or "inverse" in v or "commutative" in v
                   for v in check_axioms(add, mul))


class TestMatching:
    def test_against_constructed_fields(self):
        for q, (p, r) in [(2, (2, 1)), (3, (3, 1)), (4, (2, 2)), (5, (5, 1)),
                          (7, (7, 1))]:
            (sol,) = complete_tables(q)
            assert match_against_field(sol, construct_field(p, r))

    def test_q4_does_not_match_z4(self):
        (sol,) = complete_tables(4)
        z4_add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
        z4_mul = [[(i * j) % 4 for j in range(4)] for i in range(4)]
        assert not match_against_tables(sol, z4_add, z4_mul)

    def test_relabeled_tables_still_match(self):
        (sol,) = complete_tables(4)
        # swap the two non-identity symbols; must still match
        pi = [0, 1, 3, 2]
        add = [[pi[sol.add[pi.index(i)][pi.index(j)]] for j in range(4)]
               for i in range(4)]
        mul = [[pi[sol.mul[pi.index(i)][pi.index(j)]] for j in range(4)]
               for i in range(4)]
        assert match_against_tables(sol, add, mul)

    def test_order_mismatch(self):
        (sol,) = complete_tables(3)
        with pytest.raises(OrderMismatchError):
            match_against_field(sol, construct_field(2, 2))
        with pytest.raises(OrderMismatchError):
            match_against_tables(sol, FIGURE_F4_ADD, FIGURE_F4_MUL)


class TestDeterminism:
    def test_canonical_output_is_stable(self):
        first = complete_tables(4)
        second = complete_tables(4)
        assert first == second
        assert isinstance(first[0], TableSolution)
