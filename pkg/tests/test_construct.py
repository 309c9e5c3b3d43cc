import pytest

from xorwire import construct
from xorwire.construct import (
    UnknownInThisWork,
    UnsupportedFormula,
    even_indicator,
    extend_degree,
    formula,
    mu2,
    mu2_star,
    mu3,
    mu3_star,
    nu_pairs,
    nu_star,
    w3,
    w6,
)
from xorwire.gf2core import ClassSpec, WiringMatrix, block_diag, is_member, weight
from xorwire.solver import solve
from xorwire.wiregraph import EdgeView, components, is_complete_subgraph

W3 = WiringMatrix.from_rows(construct.W3_ROWS)


def ceil_div(a, b):
    return -(-a // b)


def test_printed_matrices():
    assert w3().matrix.rows()[1] == [1, 1, 0]
    assert w6().matrix.rows()[3] == [0, 1, 1, 1, 1, 1]
    assert is_member(w3().matrix, ClassSpec(3, 2, True))
    assert is_member(w6().matrix, ClassSpec(6, 3, True))
    assert (w3().claimed_value, w6().claimed_value) == (2, 4)


def test_even_indicator():
    assert even_indicator(4).to_list() == [0, 1, 0, 1]
    assert even_indicator(0).length == 0
    for n in range(20):
        assert weight(even_indicator(n)) == n // 2


class TestNuFamilies:
    def test_nu_pairs_nine(self):
        con = nu_pairs(9)
        parts = components(EdgeView(con.matrix))
        assert sorted(len(p) for p in parts) == [1, 2, 2, 2, 2]
        assert con.claimed_value == 5
        assert solve(con.matrix, con.initial).value == 5

    def test_nu_pairs_small(self):
        assert nu_pairs(2).matrix == WiringMatrix.ones(2) and nu_pairs(2).claimed_value == 1
        assert nu_pairs(1).matrix == WiringMatrix.identity(1) and nu_pairs(1).claimed_value == 1

    def test_nu_star_9_3_topology(self):
        con = nu_star(9, 3)
        view = EdgeView(con.matrix)
        for box in ({1, 2}, {3, 4}, {5, 6}, {7, 8, 9}):
            assert is_complete_subgraph(view, box)
        # every C2 vertex also hits the same target in the C3
        assert all(con.matrix.entry(9, j) for j in range(1, 7))
        assert con.claimed_value == 5 == solve(con.matrix, con.initial).value

    def test_nu_star_10_3(self):
        con = nu_star(10, 3)
        assert con.claimed_value == 6 == solve(con.matrix, con.initial).value
        # diag(1_3, W3, 1_2, 1_2) with rows 3..m filled: only row 3 here
        assert con.matrix.rows()[2] == [1] * 10

    def test_nu_star_6_5(self):
        con = nu_star(6, 5)
        assert con.matrix.rows() == [
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ]
        assert con.claimed_value == 4 == solve(con.matrix, con.initial).value

    def test_nu_star_odd_n_even_m_initial(self):
        # with the plain even indicator the three unpaired bulbs can all be lit
        con = nu_star(11, 4)
        assert solve(con.matrix, even_indicator(11)).value == 7
        assert con.initial.to_list() == even_indicator(11).to_list()[:-1] + [1]
        assert solve(con.matrix, con.initial).value == 6

    @pytest.mark.parametrize("n", range(2, 13))
    def test_nu_star_all_m(self, n):
        for m in range(2, n + 1):
            con = nu_star(n, m)
            assert is_member(con.matrix, ClassSpec(n, m, True))
            assert solve(con.matrix, con.initial).value == con.claimed_value == formula("nu*", n, m)

    def test_nu_star_range(self):
        with pytest.raises(ValueError):
            nu_star(3, 4)


class TestMuFamilies:
    def test_mu2_examples(self):
        assert mu2(3).matrix == W3 and mu2(3).claimed_value == 2
        assert mu2(7).matrix == block_diag([W3, W3, WiringMatrix.identity(1)])
        assert mu2(7).claimed_value == 5
        assert mu2(0).matrix.n == 0 and mu2(0).claimed_value == 0

    def test_mu2_star_2008(self):
        con = mu2_star(2008)
        sizes = [len(p) for p in components(EdgeView(con.matrix))]
        assert sizes.count(3) == 668 and sizes.count(2) == 2 and len(sizes) == 670
        assert con.claimed_value == 1340
        assert solve(con.matrix).value == 1340

    def test_mu2_star_small(self):
        assert mu2_star(4).claimed_value == 4 == solve(mu2_star(4).matrix).value
        assert mu2_star(3).matrix == W3
        with pytest.raises(ValueError):
            mu2_star(1)

    def test_extend_degree_figure(self):
        con = extend_degree(mu2_star(6), 3)
        W = con.matrix
        assert is_member(W, ClassSpec(9, 3, True))
        rows = W.rows()
        assert rows[6] == [1, 0, 0, 1, 0, 0, 1, 0, 0]
        assert rows[7] == [0, 1, 0, 0, 1, 0, 0, 1, 0]
        assert rows[8] == [0, 0, 1, 0, 0, 1, 0, 0, 1]
        for j in range(1, 4):
            assert W.column(6 + j) == W.column(j)
        assert con.claimed_value == 7 == solve(W).value

    def test_extend_degree_bounds(self):
        with pytest.raises(ValueError):
            extend_degree(mu2_star(3), 4)
        with pytest.raises(ValueError):
            extend_degree(mu2_star(3), 0)

    def test_mu3_star_examples(self):
        assert mu3_star(6).matrix == w6().matrix and mu3_star(6).claimed_value == 4
        assert mu3_star(9).claimed_value == 7
        assert mu3_star(3).matrix == WiringMatrix.ones(3) and mu3_star(3).claimed_value == 3

    def test_mu3_reuses_mu2(self):
        for n in range(10):
            assert mu3(n).matrix == mu2(n).matrix and mu3(n).spec == ClassSpec(n, 3)

    @pytest.mark.parametrize("n", range(3, 31))
    def test_mu3_star_values(self, n):
        con = mu3_star(n)
        assert is_member(con.matrix, ClassSpec(n, 3, True))
        assert solve(con.matrix).value == con.claimed_value


class TestFormula:
    def test_examples(self):
        assert formula("mu*", 2008, 2) == 1340
        assert formula("nu*", 10, 3) == 6
        assert formula("mu*", 9, 3) == 7
        with pytest.raises(UnknownInThisWork):
            formula("mu", 4, 4)

    def test_errors(self):
        with pytest.raises(UnsupportedFormula):
            formula("lambda", 3, 2)
        with pytest.raises(UnsupportedFormula):
            formula("nu*", 2, 3)

    def test_mu3_star_exceptions(self):
        assert [formula("mu*", n, 3) for n in range(3, 13)] == [3, 3, 4, 4, 5, 6, 7, 7, 8, 8]

    def test_degree_one(self):
        assert formula("mu", 7, 1) == formula("nu", 7, 1) == 7

    def test_mu_star_least_even(self):
        for n in range(2, 1001):
            mu = formula("mu", n, 2)
            star = formula("mu*", n, 2)
            assert star % 2 == 0 and star >= mu and star - 2 < mu

    def test_sublinear(self):
        for kind in construct.KINDS:
            for m in (2, 3):
                lo = m if kind.endswith("*") else 0
                vals = {n: formula(kind, n, m) for n in range(lo, 401)}
                for n1 in range(lo, 201):
                    for n2 in range(lo, 201):
                        assert vals[n1 + n2] <= vals[n1] + vals[n2]

    def test_lemma_alternative(self):
        for m in (2, 3):
            for n in range(0, 201):
                big = formula("mu", n + m, m)
                assert big == formula("mu", n + m, m - 1) or big >= formula("mu", n, m) + ceil_div(m, 2)


def test_build_dispatch():
    assert construct.build("w6").matrix == w6().matrix
    assert construct.build("nu-star", 9, 3).matrix == nu_star(9, 3).matrix
    with pytest.raises(ValueError):
        construct.build("nu-star", 9)
    with pytest.raises(ValueError):
        construct.build("bogus", 3)
