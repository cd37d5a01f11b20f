import pytest

from runwords import core
from runwords.poly import IntPoly, pk_fraction, tk_fraction
from runwords.series import (
    check_functional_equation,
    expand,
    expand_bivariate,
    expand_bivariate_closed_form,
)
from runwords.verify import TABLE1_K2, TABLE1_K3


class TestExpand:
    def test_geometric(self):
        s = expand(IntPoly([0, 1]), IntPoly([1, -1]), 3)
        assert s.coeffs == (0, 1, 1, 1)

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError, match="constant term"):
            expand(IntPoly([1]), IntPoly([2, 1]), 5)
        with pytest.raises(ValueError, match="constant term"):
            expand(IntPoly([1]), IntPoly([0, 1]), 5)

    def test_convolution_identity(self):
        num, den = tk_fraction(3)
        s = expand(num, den, 60)
        for n in range(61):
            conv = sum(den[j] * s[n - j] for j in range(min(n, den.degree) + 1))
            assert conv == num[n]

    def test_ones_series_values(self):
        assert expand(*pk_fraction(2), 4)[4] == 10
        assert expand(*pk_fraction(3), 4)[4] == 22

    def test_bits_series_values(self):
        assert expand(*tk_fraction(2), 4)[4] == 4 * 8
        assert expand(*tk_fraction(3), 4)[4] == 4 * 13

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_against_recurrences(self, k):
        pk = expand(*pk_fraction(k), 100)
        tk = expand(*tk_fraction(k), 100)
        for n in range(101):
            assert pk[n] == core.popularity(n, k)
            assert tk[n] == n * core.count_words(n, k)


class TestBivariate:
    def test_table_cells(self):
        t2 = expand_bivariate(2, 9)
        assert t2[4, 2] == 3
        assert t2[9, 5] == 1
        t3 = expand_bivariate(3, 9)
        assert t3[7, 5] == 3
        assert t3[4, 3] == 2

    def test_constant_column(self):
        t = expand_bivariate(4, 20)
        assert all(t[n, 0] == 1 for n in range(21))

    def test_matches_reference_triangles(self):
        for k, reference in ((2, TABLE1_K2), (3, TABLE1_K3)):
            t = expand_bivariate(k, 9)
            for m, row in enumerate(reference):
                for i, expected in enumerate(row):
                    assert t[i + 1, m] == expected, (k, m, i + 1)

    def test_matches_distribution_dp(self):
        for k in (2, 3, 4):
            t = expand_bivariate(k, 15)
            for n in range(16):
                dist = core.ones_distribution(n, k)
                assert all(t[n, m] == dist[m] for m in range(len(dist.counts)))

    def test_index_bound(self):
        t = expand_bivariate(3, 12)
        for n in range(13):
            assert len(t.table[n]) <= core.max_ones(n, 3) + 1


class TestFunctionalEquation:
    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_closed_form_matches_fixed_point(self, k):
        assert check_functional_equation(k, 30)

    def test_trivial_constant_term(self):
        assert check_functional_equation(2, 0)

    def test_closed_form_cells(self):
        t = expand_bivariate_closed_form(2, 9)
        assert t[4, 2] == 3
        assert t[0, 0] == 1


class TestDerivativeIdentities:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_bits_series_is_x_ddx_of_counts(self, k):
        # coefficients of F(x, 1) are the word counts; termwise x*d/dx
        # multiplies the n-th one by n, which must give the bits series
        tk = expand(*tk_fraction(k), 60)
        counts = [core.count_words(n, k) for n in range(61)]
        assert all(tk[n] == n * counts[n] for n in range(61))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_ones_series_is_dy_at_one(self, k):
        # d/dy at y=1 turns the bivariate table into sum_m m * a_{n,m}
        pk = expand(*pk_fraction(k), 40)
        t = expand_bivariate(k, 40)
        for n in range(41):
            assert pk[n] == sum(m * c for m, c in enumerate(t.table[n]))
