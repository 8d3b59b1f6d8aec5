"""Arnold algebra, the acyclic subcomplexes E^Top, E^Top(A, beta), E(w) and SE."""
from __future__ import annotations

from itertools import combinations, product

from .exterior import Element, Monomial, forests, multiply, normalize, reduce_word, total_degree
from .homology import KrizComplex, d_raw
from .linalg import SparseRationalMatrix, rank_exact
from .ring import add_into


# ---------------------------------------------------------------------------
# Arnold algebra (edge words only, generators of degree 1)

def arnold_basis(n, q):
    return sorted(forests(n, q), key=lambda e: (tuple(j for _, j in e), tuple(i for i, _ in e)))


def arnold_normalize(terms):
    out = {}
    for word, c in terms:
        oriented = tuple((a, b) if a < b else (b, a) for a, b in word)
        for c1, edges in reduce_word(oriented):
            add_into(out, edges, c * c1)
    return out


def arnold_del(edges):
    """``del`` with ``del G_ij = 1`` as a degree -1 derivation."""
    return arnold_normalize([(edges[:a] + edges[a + 1:], -1 if a & 1 else 1)
                             for a in range(len(edges))])


def arnold_h(edges):
    return arnold_normalize([(((1, 2),) + tuple(edges), 1)])


def arnold_boundary(n, q):
    src, tgt = arnold_basis(n, q), arnold_basis(n, q - 1) if q else []
    idx = {e: i for i, e in enumerate(tgt)}
    entries = [(idx[e], c, v) for c, s in enumerate(src) for e, v in arnold_del(s).items()]
    return SparseRationalMatrix.from_entries(len(tgt), len(src), entries)


def homotopy_check(n):
    """``del h + h del = id`` on every basis element of A*(n)."""
    for q in range(n):
        for edges in arnold_basis(n, q):
            total = {}
            for e, c in arnold_del(edges).items():
                for e2, c2 in arnold_h(e).items():
                    add_into(total, e2, c * c2)
            for e, c in arnold_h(edges).items():
                for e2, c2 in arnold_del(e).items():
                    add_into(total, e2, c * c2)
            if total != {tuple(edges): 1}:
                return False
    return True


# ---------------------------------------------------------------------------
# E^Top and the chain isomorphism f

def f_monomial(ring, n, edges):
    J = {j for _, j in edges}
    return Monomial(tuple(0 if v in J else ring.fundamental for v in range(1, n + 1)), tuple(edges))


def top_iso_f(ring, n, q):
    """Matrix of f: A^q(n) -> E_q^{2mn-q}; checks bijectivity and d f = f del.

    Returns ``(f_matrix, commutes)``.
    """
    K = KrizComplex(ring, n)
    k = ring.top_degree * n - q
    src = arnold_basis(n, q)
    tgt = K.index(q, k)
    images = [f_monomial(ring, n, e) for e in src]
    if sorted(images, key=Monomial.sort_key) != K.basis(q, k):
        raise AssertionError("f is not a bijection onto the E^Top basis")
    fmat = SparseRationalMatrix.from_entries(len(tgt), len(src), [(tgt[m], c, 1) for c, m in enumerate(images)])
    commutes = True
    for e, m in zip(src, images):
        lhs = normalize(ring, n, d_raw(ring, m))
        rhs = {}
        for e2, c in arnold_del(e).items():
            add_into(rhs, f_monomial(ring, n, e2), c)
        if lhs.terms != rhs:
            commutes = False
    return fmat, commutes


def _subcomplex_betti(K, cells):
    """Betti numbers of a d-stable subcomplex given by per-cell basis lists.

    ``cells`` maps (q, k) to a list of canonical monomials.
    """
    ranks = {}
    for (q, k), basis in cells.items():
        if q == 0 or not basis:
            ranks[(q, k)] = 0
            continue
        tgt_basis = cells.get((q - 1, k + 1), [])
        idx = {m: i for i, m in enumerate(tgt_basis)}
        entries = []
        for c, mono in enumerate(basis):
            img = normalize(K.ring, K.n, d_raw(K.ring, mono))
            for m, v in img.terms.items():
                if m not in idx:
                    raise AssertionError("subspace is not closed under d")
                entries.append((idx[m], c, v))
        ranks[(q, k)] = rank_exact(SparseRationalMatrix.from_entries(len(tgt_basis), len(basis), entries))
    out = {}
    for (q, k), basis in cells.items():
        b = len(basis) - ranks[(q, k)] - ranks.get((q + 1, k - 1), 0)
        if b:
            out[(q, k)] = b
    return out


def top_betti(ring, n):
    K = KrizComplex(ring, n)
    cells = {(q, ring.top_degree * n - q): K.basis(q, ring.top_degree * n - q) for q in range(n)}
    return _subcomplex_betti(K, cells)


# ---------------------------------------------------------------------------
# E^Top(A, beta) cells

def top_cell_basis(ring, n, A, beta, q):
    """Monomials prod_{A \\ J} p_i(w) p(beta) G_IJ with I, J inside A and |J| = q."""
    A = tuple(sorted(A))
    comp = [v for v in range(1, n + 1) if v not in A]
    if len(A) < 2 or len(beta) != len(comp):
        raise ValueError("need |A| >= 2 and one mark of beta per position outside A")
    if any(h == ring.fundamental for h in beta):
        raise ValueError("marks of beta must differ from w")
    out = []
    for local in forests(len(A), q):
        edges = tuple((A[i - 1], A[j - 1]) for i, j in local)
        J = {j for _, j in edges}
        marks = [0] * n
        for v in A:
            if v not in J:
                marks[v - 1] = ring.fundamental
        for v, h in zip(comp, beta):
            marks[v - 1] = h
        el = normalize(ring, n, [(1, tuple(marks), edges)])
        (mono, c), = el.terms.items()
        assert c == 1
        out.append(mono)
    return sorted(out, key=Monomial.sort_key)


def top_cell_betti(ring, n, A, beta):
    K = KrizComplex(ring, n)
    base = ring.top_degree * len(A) + sum(ring.degrees[h] for h in beta)
    cells = {(q, base - q): top_cell_basis(ring, n, A, beta, q) for q in range(len(A))}
    return _subcomplex_betti(K, cells)


def all_top_cells(ring, n):
    non_w = [h for h in range(ring.size) if h != ring.fundamental]
    for a in range(2, n + 1):
        for A in combinations(range(1, n + 1), a):
            for beta in product(non_w, repeat=n - a):
                yield A, beta


# ---------------------------------------------------------------------------
# E(w) and the quotient SE

def w_classify(ring, mono):
    """``(A, beta)`` of a canonical monomial in E(w), or None."""
    J = {j for _, j in mono.edges}
    A = {v for v, h in enumerate(mono.marks, 1) if h == ring.fundamental} | J
    if len(A) < 2 or any(i not in A for i, _ in mono.edges):
        return None
    beta = tuple(h for v, h in enumerate(mono.marks, 1) if v not in A)
    return tuple(sorted(A)), beta


def is_w_member(ring, mono):
    return w_classify(ring, mono) is not None


def w_subcomplex(ring, n):
    """Per-cell member lists, checked against the union of all (A, beta) slices."""
    K = KrizComplex(ring, n)
    members = {cell: [m for m in K.basis(*cell) if is_w_member(ring, m)] for cell in K.cells()}
    seen = {}
    for A, beta in all_top_cells(ring, n):
        for q in range(len(A)):
            for m in top_cell_basis(ring, n, A, beta, q):
                if m in seen:
                    raise AssertionError("classifier collision: slices overlap")
                seen[m] = (A, beta)
                if w_classify(ring, m) != (A, beta):
                    raise AssertionError("classifier disagrees with slice construction")
    flat = {m for ms in members.values() for m in ms}
    if flat != set(seen):
        raise AssertionError("E(w) members differ from the union of slices")
    return members


def w_betti(ring, n):
    return _subcomplex_betti(KrizComplex(ring, n), w_subcomplex(ring, n))


def se_betti(ring, n):
    """Betti table of the quotient E / E(w) with the projected differential."""
    K = KrizComplex(ring, n)
    cells = {cell: [m for m in K.basis(*cell) if not is_w_member(ring, m)] for cell in K.cells()}
    ranks = {}
    for (q, k), basis in cells.items():
        if q == 0 or not basis:
            ranks[(q, k)] = 0
            continue
        idx = {m: i for i, m in enumerate(cells.get((q - 1, k + 1), []))}
        entries = []
        for c, mono in enumerate(basis):
            for m, v in normalize(ring, n, d_raw(ring, mono)).terms.items():
                if m in idx:
                    entries.append((idx[m], c, v))
        ranks[(q, k)] = rank_exact(SparseRationalMatrix.from_entries(len(idx), len(basis), entries))
    out = {}
    for (q, k), basis in cells.items():
        b = len(basis) - ranks[(q, k)] - ranks.get((q + 1, k - 1), 0)
        if b:
            out[(q, k)] = b
    return out


# ---------------------------------------------------------------------------
# multiplicative closure

def generator_elements(ring, n):
    """Algebra generators: pulled-back ring classes and the G_ij."""
    gens = []
    for i in range(1, n + 1):
        for h in range(1, ring.size):
            marks = [0] * n
            marks[i - 1] = h
            gens.append(Element.basis(ring, Monomial(tuple(marks), ())))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(Element.basis(ring, Monomial((0,) * n, ((i, j),))))
    return gens


def top_is_ideal(ring, n):
    """E^Top times any generator stays on the line k + q = 2mn."""
    K = KrizComplex(ring, n)
    top = ring.top_degree * n
    for gen in generator_elements(ring, n):
        for q in range(n):
            for mono in K.basis(q, top - q):
                for m in multiply(Element.basis(ring, mono), gen).terms:
                    if total_degree(ring, m) + m.q != top:
                        return False
    return True


def w_is_subalgebra(ring, n):
    K = KrizComplex(ring, n)
    members = [m for cell in K.cells() for m in K.basis(*cell) if is_w_member(ring, m)]
    for a in members:
        for b in members:
            for m in multiply(Element.basis(ring, a), Element.basis(ring, b)).terms:
                if not is_w_member(ring, m):
                    return False
    return True


def w_ideal_witness(ring, n):
    """A member of E(w) and a generator whose product leaves E(w), or None."""
    K = KrizComplex(ring, n)
    members = [m for cell in K.cells() for m in K.basis(*cell) if is_w_member(ring, m)]
    for a in members:
        for g in generator_elements(ring, n):
            prod_ = multiply(Element.basis(ring, a), g)
            if any(not is_w_member(ring, m) for m in prod_.terms):
                return a, g, prod_
    return None
