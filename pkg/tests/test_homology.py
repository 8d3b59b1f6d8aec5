from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from krizmodel import perm as P
from krizmodel.action import act, action_matrix
from krizmodel.chars import decompose, irreducible_character
from krizmodel.exterior import Element, Monomial, multiply, normalize, total_degree
from krizmodel.homology import (KrizComplex, cp1_expected_poincare, differential,
                                differential_test_vectors, gamma_cocycle, poincare_string, poly_mul)
from krizmodel.linalg import (SparseRationalMatrix, Subspace, image, kernel, rank_exact, rref, span,
                              subspace_trace)

from conftest import RINGS
from strategies import permutations_of, raw_terms


def dense_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        p = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if p is None:
            col += 1
            continue
        m[rank], m[p] = m[p], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# exact linear algebra

@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=7))
def test_rank_matches_dense_oracle(rows):
    entries = [(r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row) if v]
    m = SparseRationalMatrix.from_entries(len(rows), 5, entries)
    assert rank_exact(m) == dense_rank(rows)
    ker = kernel(m)
    assert ker.dim == 5 - dense_rank(rows)
    for v in ker.basis:
        assert not m.apply(v)


def test_rank_examples():
    assert rank_exact(SparseRationalMatrix(3, 4, [{} for _ in range(4)])) == 0
    assert rank_exact(SparseRationalMatrix.identity(6)) == 6


def test_rref_pivots():
    rows, piv = rref([{0: 2, 1: 4}, {0: 1, 1: 2}, {1: 3, 2: 1}])
    assert piv == [0, 1]
    assert rows[0] == {0: 1, 2: Fraction(-2, 3)} and rows[1] == {1: 1, 2: Fraction(1, 3)}


def test_subspace_coordinates_and_invariance():
    s = span([{0: 1, 1: 1}], 3)
    assert s.coordinates({0: 2, 1: 2}) == [2]
    with pytest.raises(ValueError, match="not invariant"):
        s.coordinates({0: 1})


def test_subspace_trace_full_and_zero():
    mat = SparseRationalMatrix.from_entries(2, 2, [(0, 1, 1), (1, 0, 1), (1, 1, 3)])
    full = Subspace([{0: 1}, {1: 1}], [0, 1], 2)
    assert subspace_trace(full, mat.apply) == mat.trace() == 3
    assert subspace_trace(Subspace([], [], 2), mat.apply) == 0


# ---------------------------------------------------------------------------
# differential

def test_d_single_edge(cp1):
    g = Element.basis(cp1, Monomial((0, 0), ((1, 2),)))
    assert differential(g) == Element(cp1, 2, {Monomial((1, 0), ()): 1, Monomial((0, 1), ()): 1})


def test_d_single_edge_cp2(cp2):
    g = Element.basis(cp2, Monomial((0, 0), ((1, 2),)))
    want = {Monomial((2, 0), ()): 1, Monomial((1, 1), ()): 1, Monomial((0, 2), ()): 1}
    assert differential(g) == Element(cp2, 2, want)


def test_d_kills_marks(ring):
    assert not differential(Element.basis(ring, Monomial((ring.fundamental, 0, 0), ())))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_d_squared_zero(ring, n):
    K = KrizComplex(ring, n)
    for q, k in K.cells():
        if q >= 2:
            assert (K.d_matrix(q - 1, k + 1) @ K.d_matrix(q, k)).is_zero()


@pytest.mark.parametrize("name", sorted(RINGS))
@given(data=st.data())
def test_leibniz(name, data):
    ring = RINGS[name]
    n = 4
    a = normalize(ring, n, data.draw(raw_terms(ring, n, 1, 2)))
    b = normalize(ring, n, data.draw(raw_terms(ring, n, 2, 2)))
    if not a:
        return
    degs = {total_degree(ring, m) % 2 for m in a.terms}
    if len(degs) != 1:
        return
    sign = -1 if degs.pop() else 1
    lhs = differential(multiply(a, b))
    rhs = multiply(differential(a), b) + sign * multiply(a, differential(b))
    assert lhs == rhs


@pytest.mark.parametrize("name", sorted(RINGS))
@given(data=st.data())
def test_d_equivariant(name, data):
    ring = RINGS[name]
    n = data.draw(st.integers(2, 5))
    e = normalize(ring, n, data.draw(raw_terms(ring, n)))
    s = data.draw(permutations_of(n))
    assert act(s, differential(e)) == differential(act(s, e))


def test_d_matrix_commutes_with_action_matrices(curve2):
    K = KrizComplex(curve2, 4)
    src, tgt = K.basis(2, 3), K.basis(1, 4)
    s = (3, 1, 4, 2)
    lhs = action_matrix(curve2, s, tgt) @ K.d_matrix(2, 3)
    rhs = K.d_matrix(2, 3) @ action_matrix(curve2, s, src)
    assert lhs.to_dense() == rhs.to_dense()


def test_cp1_n4_rank(cp1):
    K = KrizComplex(cp1, 4)
    assert K.rank(1, 1) == 4 == 6 - irreducible_character((2, 2))((1, 1, 1, 1))


@pytest.mark.parametrize("n", [3, 4])
def test_test_vectors(ring, n):
    for name, ok, detail in differential_test_vectors(ring, n):
        assert ok, (name, detail)


def test_odd_lemma_sign(curve2):
    report = dict((name, detail) for name, _, detail in differential_test_vectors(curve2, 4))
    assert "sign -1" in report["G_1234"]


# ---------------------------------------------------------------------------
# Betti tables

def euler_from(table):
    return sum((-1) ** k * v for (q, k), v in table.items())


@pytest.mark.parametrize("name, n", [("cp1", 2), ("cp1", 3), ("cp1", 4), ("cp2", 2), ("cp2", 3),
                                     ("curve2", 2), ("curve2", 3)])
def test_euler_characteristic(name, n):
    ring = RINGS[name]
    chi_x = sum((-1) ** d for d in ring.degrees)
    K = KrizComplex(ring, n)
    expected = prod(chi_x - a for a in range(n))
    assert euler_from(K.dims) == euler_from(K.betti_table()) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cp1_poincare(cp1, n):
    assert KrizComplex(cp1, n).betti_table() == cp1_expected_poincare(n)


def test_poincare_strings(cp1):
    assert poincare_string(KrizComplex(cp1, 4).betti_table()) == "1 + 2*s*t + s*t^3 + 2*s^2*t^4"
    assert poincare_string(KrizComplex(cp1, 2).betti_table()) == "1 + t^2"
    assert poincare_string({}) == "0"


def test_poly_mul():
    assert poly_mul({(0, 0): 1, (1, 1): 2}, {(0, 0): 1, (1, 1): 3}) == {(0, 0): 1, (1, 1): 5, (2, 2): 6}


@pytest.mark.parametrize("n", [1, 2])
def test_small_n_is_product(cp2, n):
    table = KrizComplex(cp2, n).betti_table()
    if n == 1:
        assert table == {(0, 0): 1, (0, 2): 1, (0, 4): 1}
    else:
        assert sum(table.values()) == 9 - 3


# ---------------------------------------------------------------------------
# cohomology characters

@pytest.mark.parametrize("n", [4, 5])
def test_h11_character(cp1, n):
    assert decompose(KrizComplex(cp1, n).cohomology_character(1, 1)) == [((n - 2, 2), 1)]


def test_h13_n3(cp1):
    assert decompose(KrizComplex(cp1, 3).cohomology_character(1, 3)) == [((3,), 1)]


def test_h22_n5(cp1):
    assert decompose(KrizComplex(cp1, 5).cohomology_character(2, 2)) == [((3, 1, 1), 1)]


def test_kernel_trace_transposition(cp1):
    K = KrizComplex(cp1, 4)
    ker = kernel(K.d_matrix(1, 1))
    cache = {}
    tr = subspace_trace(ker, lambda v: K.action_vector((2, 1, 3, 4), 1, 1, v, cache))
    assert tr == irreducible_character((2, 2))((2, 1, 1)) == 0


def test_cohomology_degree_is_betti(curve2):
    K = KrizComplex(curve2, 3)
    for (q, k), b in K.betti_table().items():
        assert K.cohomology_character(q, k)((1, 1, 1)) == b


def test_image_subspace_dim(cp1):
    K = KrizComplex(cp1, 4)
    assert image(K.d_matrix(2, 2)).dim == K.rank(2, 2)


def test_gamma_cocycle_not_exact(cp1):
    n = 4
    K = KrizComplex(cp1, n)
    gamma = gamma_cocycle(cp1, n)
    assert not differential(gamma)
    im = image(K.d_matrix(2, 2))
    with pytest.raises(ValueError):
        im.coordinates(K.coords(gamma, 1, 3))


def test_gamma_invariant(cp1):
    gamma = gamma_cocycle(cp1, 5)
    for s in [P.coxeter(i, 5) for i in range(1, 5)]:
        assert act(s, gamma) == gamma
