from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from selim.bounds import (PER_BLOCK, BlockStructure, DegreeMatrix, SimplexBlockSystem,
                          det_identity_minus_va, expand_rows, mbezout_generating_function,
                          mbezout_permanent, mbezout_product, mixed_volume_permanent, tmne_bound,
                          tmne_degree_matrix, tmne_series_denominator)
from selim.errors import DimensionError, DomainError
from selim.exact import ExactMatrix, det_cofactor, permanent_bruteforce
from selim.poly import SparsePolynomial
from selim.polygon import ConvexPolygon, mixed_area_2d

from conftest import all_ones_minus_identity


def expanded_product_oracle(d_rows, blocks):
    """Multiply the linear forms out in full and read off the coefficient."""
    S = len(blocks)
    names = tuple(f"x{j}" for j in range(S))
    gens = SparsePolynomial.gens(names)
    acc = SparsePolynomial.constant(names, 1)
    for row in d_rows:
        form = SparsePolynomial(names)
        for j, v in enumerate(row):
            form = form + gens[j].scale(v)
        acc = acc * form
    return acc.coeff(tuple(blocks))


def derangements(n):
    a, b = 1, 0  # D(0), D(1)
    for k in range(2, n + 1):
        a, b = b, (k - 1) * (a + b)
    return b if n >= 1 else a


@st.composite
def semi_mixed(draw, max_s=4, max_n=3, max_entry=4):
    S = draw(st.integers(1, max_s))
    blocks = draw(st.lists(st.integers(1, max_n), min_size=S, max_size=S))
    a = draw(st.lists(st.lists(st.integers(0, max_entry), min_size=S, max_size=S),
                      min_size=S, max_size=S))
    return a, blocks


class TestMBezout:
    def test_tmne3_degrees(self):
        d = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        assert mbezout_product(d, [1, 1, 1]) == 2

    def test_single_block_is_bezout(self):
        # N equations of degrees d_i in one block of N variables: product of degrees
        assert mbezout_product([[2], [3], [4]], [3]) == 24

    def test_zero_column(self):
        assert mbezout_product([[1, 0], [1, 0]], [1, 1]) == 0

    def test_semi_mixed_example(self):
        blocks = [2, 1]
        a = DegreeMatrix(((1, 2), (3, 1)), PER_BLOCK)
        assert mbezout_product(a, blocks) == 13 == expanded_product_oracle(
            expand_rows(a, blocks).entries, blocks)
        assert mbezout_generating_function(a, blocks) == 13

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            mbezout_product([[1, 1], [1, 1]], [1, 1, 1])
        with pytest.raises(DomainError):
            mbezout_product([[-1]], [1])
        with pytest.raises(DimensionError):
            DegreeMatrix(())
        with pytest.raises(DomainError):
            BlockStructure((0,))

    def test_generating_function_needs_per_block(self):
        with pytest.raises(DomainError):
            mbezout_generating_function(DegreeMatrix(((1,),)), [1])

    @given(semi_mixed(max_s=3, max_n=2, max_entry=3))
    def test_product_matches_full_expansion(self, data):
        a, blocks = data
        rows = expand_rows(DegreeMatrix(tuple(map(tuple, a)), PER_BLOCK), blocks).entries
        assert mbezout_product(rows, blocks) == expanded_product_oracle(rows, blocks)

    @given(semi_mixed())
    def test_macmahon(self, data):
        a, blocks = data
        pb = DegreeMatrix(tuple(map(tuple, a)), PER_BLOCK)
        assert mbezout_product(pb, blocks) == mbezout_generating_function(pb, blocks)

    @given(semi_mixed(max_entry=3))
    def test_permanent_route(self, data):
        a, blocks = data
        pb = DegreeMatrix(tuple(map(tuple, a)), PER_BLOCK)
        assert mbezout_permanent(pb, blocks) == mbezout_product(pb, blocks)

    @given(semi_mixed(max_s=3), st.data())
    def test_monotone_in_degrees(self, data, more):
        a, blocks = data
        i = more.draw(st.integers(0, len(a) - 1))
        j = more.draw(st.integers(0, len(a) - 1))
        bigger = [list(r) for r in a]
        bigger[i][j] += 1
        pb = DegreeMatrix(tuple(map(tuple, a)), PER_BLOCK)
        pb2 = DegreeMatrix(tuple(map(tuple, bigger)), PER_BLOCK)
        assert mbezout_product(pb2, blocks) >= mbezout_product(pb, blocks)


class TestDeterminantPolynomial:
    @given(st.integers(1, 4).flatmap(lambda s: st.lists(
        st.lists(st.integers(0, 4), min_size=s, max_size=s), min_size=s, max_size=s)),
        st.data())
    def test_matches_direct_determinant(self, a, data):
        S = len(a)
        xs = data.draw(st.lists(st.integers(-3, 3), min_size=S, max_size=S))
        direct = det_cofactor(ExactMatrix.from_rows(
            [[int(i == j) - xs[i] * a[i][j] for j in range(S)] for i in range(S)]))
        assert det_identity_minus_va(a)(*xs) == direct


class TestTMNE:
    def test_series_denominator_s3(self):
        p = tmne_series_denominator(3)
        assert str(p) == "-2*x1*x2*x3 - x1*x2 - x1*x3 - x2*x3 + 1"

    @pytest.mark.parametrize("S", range(1, 9))
    def test_derangement_ladder(self, S):
        assert tmne_bound(S) == derangements(S)
        if S <= 8:
            assert tmne_bound(S) == permanent_bruteforce(
                ExactMatrix.from_rows(all_ones_minus_identity(S)))

    @pytest.mark.parametrize("S", range(2, 6))
    def test_matches_product_of_forms(self, S):
        a = tmne_degree_matrix(S)
        assert tmne_bound(S) == mbezout_product(a, [1] * S) == mbezout_generating_function(a, [1] * S)

    def test_rejects_bad_player_count(self):
        with pytest.raises(DomainError):
            tmne_bound(0)


class TestMixedVolume:
    def test_unit_simplex_volume(self):
        system = SimplexBlockSystem.unit_simplices([[1], [1], [1]], [3])
        assert mixed_volume_permanent(system) == 1

    def test_rectangles(self):
        system = SimplexBlockSystem.unit_simplices([[1, 2], [3, 1]], [1, 1])
        assert mixed_volume_permanent(system) == 7

    def test_custom_volumes(self):
        system = SimplexBlockSystem(BlockStructure((1, 1)), [[1, 1], [1, 1]], (2, Fraction(1, 3)))
        assert mixed_volume_permanent(system) == Fraction(4, 3)

    def test_volume_validation(self):
        with pytest.raises(DomainError):
            SimplexBlockSystem(BlockStructure((1,)), [[1]], (0,))
        with pytest.raises(DimensionError):
            SimplexBlockSystem(BlockStructure((1,)), [[1]], (1, 1))

    @given(st.lists(st.lists(st.integers(0, 5), min_size=2, max_size=2), min_size=2, max_size=2))
    def test_rectangles_match_mixed_area(self, a):
        # two one-dimensional blocks: Q_i is the box a_i1 x a_i2
        mv = mixed_volume_permanent(SimplexBlockSystem.unit_simplices(a, [1, 1]))
        assert mv == mixed_area_2d(ConvexPolygon.hull([(0, 0), (a[0][0], 0), (0, a[0][1]), (a[0][0], a[0][1])]),
                                   ConvexPolygon.hull([(0, 0), (a[1][0], 0), (0, a[1][1]), (a[1][0], a[1][1])]))

    @given(st.integers(0, 5), st.integers(0, 5))
    def test_scaled_triangles_match_mixed_area(self, s, t):
        # one two-dimensional block: Q_i = a_i * unit triangle
        mv = mixed_volume_permanent(SimplexBlockSystem.unit_simplices([[s], [t]], [2]))
        tri = lambda k: ConvexPolygon.hull([(0, 0), (k, 0), (0, k)])
        assert mv == mixed_area_2d(tri(s), tri(t)) == s * t

    @given(semi_mixed(max_s=3, max_n=2, max_entry=3))
    def test_scales_with_block_volumes(self, data):
        a, blocks = data
        rows = expand_rows(DegreeMatrix(tuple(map(tuple, a)), PER_BLOCK), blocks).entries
        unit = SimplexBlockSystem.unit_simplices(rows, blocks)
        doubled = SimplexBlockSystem(unit.blocks, unit.scale_matrix,
                                     tuple(2 * v for v in unit.block_volumes))
        assert mixed_volume_permanent(doubled) == 2 ** len(blocks) * mixed_volume_permanent(unit)
        # unit simplices carry the 1/n_j! factors, so the mixed volume is the m-Bezout number
        assert mixed_volume_permanent(unit) == mbezout_product(rows, blocks)
