from itertools import product

import pytest
from hypothesis import given, strategies as st

from krizmodel.ring import (RingAxiomError, RingSpecError, cp_ring, curve_ring,
                            diagonal_class, dual_basis, format_ring, load_ring, mul, parse_ring,
                            preset_ring, pullback, tensor_mul)

CP1_SPEC = """
ring CP1
topdeg 2
basis 1:0 w:2
fundamental w
mul w*w = 0
"""

CP2_SPEC = """
ring CP2   # projective plane
topdeg 4
basis 1:0 h:2 w:4
fundamental w
mul h*h = 1*w
"""


def brute_force_axioms(ring):
    """Independent re-check of unit, commutativity, associativity, pairing."""
    B, degs = ring.size, ring.degrees
    for i in range(B):
        assert mul(ring, {0: 1}, {i: 1}) == {i: 1} == mul(ring, {i: 1}, {0: 1})
    for i, j in product(range(B), repeat=2):
        s = (-1) ** (degs[i] * degs[j])
        assert mul(ring, {i: 1}, {j: 1}) == {k: s * c for k, c in mul(ring, {j: 1}, {i: 1}).items()}
    for i, j, k in product(range(B), repeat=3):
        assert mul(ring, mul(ring, {i: 1}, {j: 1}), {k: 1}) == mul(ring, {i: 1}, mul(ring, {j: 1}, {k: 1}))
    for i in range(B):
        partners = [j for j in range(B) if ring.product(i, j).get(ring.fundamental)]
        assert partners, f"{ring.symbols[i]} pairs trivially"


def test_parse_cp1():
    r = parse_ring(CP1_SPEC)
    assert (r.size, r.top_degree, r.symbols) == (2, 2, ("1", "w"))


def test_parse_cp2_axioms_brute_force():
    r = parse_ring(CP2_SPEC)
    assert (r.size, r.top_degree) == (3, 4)
    brute_force_axioms(r)


def test_inconsistent_commutativity_rejected():
    text = CP2_SPEC.replace("mul h*h = 1*w", "mul h*h = 2*w") + "mul a*b = 1*w\n"
    text = text.replace("basis 1:0 h:2 w:4", "basis 1:0 a:1 b:1 h:2 w:4")
    text += "mul b*a = 1*w\n"  # should be -w
    with pytest.raises(RingAxiomError, match="graded commutativity"):
        parse_ring(text)


def test_degenerate_pairing_named():
    text = "ring bad\ntopdeg 4\nbasis 1:0 h:2 w:4\nfundamental w\nmul h*h = 0\n"
    with pytest.raises(RingAxiomError, match="pairing degenerate at degree 2"):
        parse_ring(text)


@pytest.mark.parametrize("text, lineno", [
    ("ring x\nbasis 1:0 w:two\n", 2),
    ("ring x\ntopdeg 2\nbasis 1:0 w:2\nmul w = 0\n", 4),
    ("ring x\nbogus line\n", 2),
    ("basis 1:0 w:2\nmul w*w = ?*w\n", 2),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(RingSpecError) as info:
        parse_ring(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_bare_symbol_terms():
    r = parse_ring(CP2_SPEC.replace("1*w", "w"))
    assert mul(r, {1: 1}, {1: 1}) == {2: 1}


@pytest.mark.parametrize("a, b, expected", [((1,), (1,), {2: 1}), ((1,), (2,), {})])
def test_mul_cp2(cp2, a, b, expected):
    assert mul(cp2, {a[0]: 1}, {b[0]: 1}) == expected


def test_mul_curve_graded_commutative(curve2):
    a1, b1, w = curve2.index("a1"), curve2.index("b1"), curve2.fundamental
    assert mul(curve2, {a1: 1}, {b1: 1}) == {w: 1}
    assert mul(curve2, {b1: 1}, {a1: 1}) == {w: -1}
    assert mul(curve2, {a1: 1}, {curve2.index("b2"): 1}) == {}


@pytest.mark.parametrize("factory, param", [(cp_ring, 1), (cp_ring, 2), (cp_ring, 3),
                                            (curve_ring, 0), (curve_ring, 1), (curve_ring, 2)])
def test_dual_basis_defining_relation(factory, param):
    r = factory(param)
    ys = dual_basis(r)
    for i in range(r.size):
        for j in range(r.size):
            assert mul(r, {i: 1}, ys[j]).get(r.fundamental, 0) == (i == j)


def test_dual_basis_examples(cp1, cp2, curve2):
    assert dual_basis(cp1) == [{1: 1}, {0: 1}]
    assert dual_basis(cp2) == [{2: 1}, {1: 1}, {0: 1}]
    a1, b1 = curve2.index("a1"), curve2.index("b1")
    assert dual_basis(curve2)[a1] == {b1: 1}
    assert dual_basis(curve2)[b1] == {a1: -1}


def test_double_dual_up_to_sign(ring):
    ys = dual_basis(ring)
    for i in range(ring.size):
        (j, c), = ys[i].items()
        (k, c2), = ys[j].items()
        assert k == i and abs(c * c2) == 1


def test_diagonal_examples(cp1, cp2):
    assert diagonal_class(cp1, 2, 1, 2) == {(1, 0): 1, (0, 1): 1}
    assert diagonal_class(cp2, 2, 1, 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert diagonal_class(cp1, 3, 1, 3) == {(1, 0, 0): 1, (0, 0, 1): 1}


@pytest.mark.parametrize("i, j", [(1, 1), (0, 2), (1, 4)])
def test_diagonal_index_errors(cp1, i, j):
    with pytest.raises(IndexError):
        diagonal_class(cp1, 3, i, j)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_diagonal_term_count_cp(m):
    assert len(cp_ring(m).diagonal) == m + 1


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_diagonal_term_count_curve(g):
    assert len(curve_ring(g).diagonal) == 2 * g + 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_absorption(ring, n):
    for x in range(ring.size):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                delta = diagonal_class(ring, n, i, j)
                left = tensor_mul(ring, pullback(ring, n, i, {x: 1}), delta)
                right = tensor_mul(ring, pullback(ring, n, j, {x: 1}), delta)
                assert left == right


def test_unsigned_diagonal_rejected_for_odd_classes():
    r = curve_ring(1)
    with pytest.raises(RingAxiomError, match="diagonal sign convention"):
        type(r)(r.name, r.symbols, r.degrees, r.top_degree, r.fundamental, r.table, "plain")


def test_unsigned_diagonal_fine_for_even_rings(cp2):
    r = type(cp2)(cp2.name, cp2.symbols, cp2.degrees, cp2.top_degree, cp2.fundamental, cp2.table, "plain")
    assert r.diagonal == cp2.diagonal


def test_presets():
    assert cp_ring(3).degrees == (0, 2, 4, 6)
    assert curve_ring(2).size == 6 and curve_ring(2).betti() == (1, 4, 1)
    assert preset_ring("cp", "1").symbols == ("1", "w")
    with pytest.raises(ValueError, match="unknown preset"):
        preset_ring("sphere", 2)


@pytest.mark.parametrize("source", ["cp:1", "cp:2", "cp:3", "curve:1", "curve:2"])
def test_format_parse_roundtrip(source):
    r = load_ring(source)
    r2 = parse_ring(format_ring(r))
    assert (r2.symbols, r2.degrees, r2.table, r2.fundamental) == (r.symbols, r.degrees, r.table, r.fundamental)


def test_load_ring_from_file(tmp_path):
    path = tmp_path / "cp2.ring"
    path.write_text(CP2_SPEC)
    assert load_ring(str(path)).name == "CP2"


@given(st.data())
def test_mul_bilinear_and_homogeneous(data):
    r = curve_ring(2)
    coefs = st.integers(-4, 4)
    elem = st.dictionaries(st.integers(0, r.size - 1), coefs.filter(bool), max_size=3)
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    s = {}
    for k, v in list(b.items()) + list(c.items()):
        s[k] = s.get(k, 0) + v
    s = {k: v for k, v in s.items() if v}
    lhs = mul(r, a, s)
    rhs = mul(r, a, b)
    for k, v in mul(r, a, c).items():
        rhs[k] = rhs.get(k, 0) + v
    assert lhs == {k: v for k, v in rhs.items() if v}
    deg = data.draw(st.integers(0, 2))
    ha = {k: v for k, v in a.items() if r.degrees[k] == deg}
    hb = {k: v for k, v in b.items() if r.degrees[k] == 1}
    assert all(r.degrees[k] == deg + 1 for k in mul(r, ha, hb))
