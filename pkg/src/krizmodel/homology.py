"""Differentials, Betti tables, Poincaré polynomials and cohomology characters."""
from __future__ import annotations


from . import perm as P
from .action import act_monomial
from .chars import Character, partitions
from .exterior import Monomial, bigraded_dims, enumerate_basis, normalize
from .linalg import SparseRationalMatrix, image, kernel, rank_exact, subspace_trace
from .ring import add_into, diagonal_class, tensor_mul


def d_raw(ring, mono):
    """Raw terms of ``d`` on a canonical monomial.

    ``d`` is the derivation with ``d(x) = 0`` and ``d(G_ij) = p_ij^*(Delta)``,
    so a leading ``(-1)^{|x_H|}`` appears when passing the tensor word.
    """
    n = mono.n
    lead = -1 if sum(ring.degrees[h] for h in mono.marks) & 1 else 1
    raw = []
    for a, (i, j) in enumerate(mono.edges):
        sign = lead * (-1 if a & 1 else 1)
        rest = mono.edges[:a] + mono.edges[a + 1:]
        prod_ = tensor_mul(ring, {mono.marks: 1}, diagonal_class(ring, n, i, j))
        for word, c in prod_.items():
            raw.append((sign * c, word, rest))
    return raw


def differential(element):
    raw = []
    for mono, c in element.terms.items():
        raw.extend((c * s, w, g) for s, w, g in d_raw(element.ring, mono))
    return normalize(element.ring, element.n, raw)


class KrizComplex:
    """Cached bases, differentials and ranks of E(X, n)."""

    def __init__(self, ring, n):
        self.ring, self.n = ring, n
        self.dims = bigraded_dims(ring, n)
        self._basis, self._index, self._dmat, self._rank = {}, {}, {}, {}

    def cells(self):
        return sorted(self.dims)

    def basis(self, q, k):
        if (q, k) not in self._basis:
            b = enumerate_basis(self.ring, self.n, q, k)
            self._basis[(q, k)] = b
            self._index[(q, k)] = {m: i for i, m in enumerate(b)}
        return self._basis[(q, k)]

    def index(self, q, k):
        self.basis(q, k)
        return self._index[(q, k)]

    def coords(self, element, q, k):
        idx = self.index(q, k)
        return {idx[m]: c for m, c in element.terms.items()}

    def d_matrix(self, q, k):
        """Matrix of ``d: E_q^k -> E_{q-1}^{k+1}``."""
        if (q, k) not in self._dmat:
            src = self.basis(q, k)
            tgt = self.index(q - 1, k + 1) if q >= 1 else {}
            entries = []
            for c, mono in enumerate(src):
                img = normalize(self.ring, self.n, d_raw(self.ring, mono))
                for m, v in img.terms.items():
                    entries.append((tgt[m], c, v))
            self._dmat[(q, k)] = SparseRationalMatrix.from_entries(len(tgt), len(src), entries)
        return self._dmat[(q, k)]

    def rank(self, q, k):
        if (q, k) not in self._rank:
            self._rank[(q, k)] = 0 if q == 0 else rank_exact(self.d_matrix(q, k))
        return self._rank[(q, k)]

    def betti(self, q, k):
        if (q, k) not in self.dims:
            return 0
        return self.dims[(q, k)] - self.rank(q, k) - self.rank(q + 1, k - 1)

    def betti_table(self):
        out = {}
        for q, k in self.cells():
            b = self.betti(q, k)
            if b:
                out[(q, k)] = b
        return out

    # --- equivariant data ---------------------------------------------------

    def action_vector(self, sigma, q, k, vec, cache):
        """Image of a coordinate vector of ``E_q^k`` under ``sigma``."""
        basis, idx = self.basis(q, k), self.index(q, k)
        out = {}
        for i, a in vec.items():
            key = (sigma, q, k, i)
            if key not in cache:
                img = act_monomial(self.ring, sigma, basis[i])
                cache[key] = {idx[m]: c for m, c in img.terms.items()}
            for j, c in cache[key].items():
                add_into(out, j, a * c)
        return out

    def cohomology_character(self, q, k):
        """Character of ``H_q^k`` as trace on ker minus trace on im."""
        ker = kernel(self.d_matrix(q, k)) if q >= 1 else _full(len(self.basis(q, k)))
        im = image(self.d_matrix(q + 1, k - 1)) if (q + 1, k - 1) in self.dims else _full(0, len(self.basis(q, k)))
        cache = {}
        vals = {}
        for ct in partitions(self.n):
            rep = P.block_cycle_rep(ct)
            fn = lambda v, rep=rep: self.action_vector(rep, q, k, v, cache)
            vals[ct] = subspace_trace(ker, fn) - subspace_trace(im, fn)
        return Character.from_dict(self.n, vals)


def _full(dim, ambient=None):
    from .linalg import Subspace
    if ambient is None:
        return Subspace([{i: 1} for i in range(dim)], list(range(dim)), dim)
    return Subspace([], [], ambient)


# ---------------------------------------------------------------------------
# module-level conveniences

def differential_matrix(ring, n, q, k):
    return KrizComplex(ring, n).d_matrix(q, k)


def betti_table(ring, n):
    return KrizComplex(ring, n).betti_table()


def cohomology_character(ring, n, q, k):
    return KrizComplex(ring, n).cohomology_character(q, k)


def poincare_string(table):
    """Canonical ``s,t`` polynomial with terms sorted by (q, k)."""
    terms = []
    for (q, k) in sorted(table):
        c = table[(q, k)]
        if not c:
            continue
        factors = []
        if q:
            factors.append("s" if q == 1 else f"s^{q}")
        if k:
            factors.append("t" if k == 1 else f"t^{k}")
        if not factors:
            terms.append(str(c))
        else:
            terms.append("*".join(([str(c)] if c != 1 else []) + factors))
    return " + ".join(terms) if terms else "0"


def poly_mul(a, b):
    out = {}
    for (q1, k1), c1 in a.items():
        for (q2, k2), c2 in b.items():
            add_into(out, (q1 + q2, k1 + k2), c1 * c2)
    return out


def cp1_expected_poincare(n):
    """Known two-variable Poincaré polynomial of F(CP^1, n) as a table."""
    if n == 1:
        return {(0, 0): 1, (0, 2): 1}
    if n == 2:
        return {(0, 0): 1, (0, 2): 1}
    poly = {(0, 0): 1, (1, 3): 1}
    for j in range(2, n - 1):
        poly = poly_mul(poly, {(0, 0): 1, (1, 1): j})
    return poly


def table_tsv(table):
    return "\n".join(f"{q}\t{k}\t{v}" for (q, k), v in sorted(table.items()))


# ---------------------------------------------------------------------------
# explicit differential images

def _edge_sum(ring, n, coeffs):
    raw = [(c, (0,) * n, (e,)) for e, c in coeffs.items()]
    return normalize(ring, n, raw)


def _format_words(ring, words):
    from .exterior import format_monomial
    return " + ".join(f"{c}*{format_monomial(ring, Monomial(w, ()))}" for w, c in sorted(words.items())) or "0"


def _q0_projection(element, allowed):
    return {m.marks: c for m, c in element.terms.items() if m.q == 0 and allowed(m.marks)}


def differential_test_vectors(ring, n):
    """Evaluate d on standard test vectors; list of ``(name, ok, detail)``."""
    w = ring.fundamental
    report = []

    def single_w(word):
        return sum(1 for h in word if h) == 1 and w in word

    def p_w(i):
        word = [0] * n
        word[i - 1] = w
        return tuple(word)

    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    Gn = _edge_sum(ring, n, {e: 1 for e in pairs})
    got = _q0_projection(differential(Gn), single_w)
    want = {p_w(i): n - 1 for i in range(1, n + 1)}
    report.append(("G^n", got == want, _format_words(ring, got)))

    if n >= 3:
        G12 = {}
        for k in range(3, n + 1):
            G12[(1, k)] = 1
            G12[(2, k)] = -1
        got = _q0_projection(differential(_edge_sum(ring, n, G12)), single_w)
        want = {p_w(1): n - 2, p_w(2): -(n - 2)}
        report.append(("G^n_12", got == want, _format_words(ring, got)))

    if n >= 4:
        report.append(_four_term_projection(ring, n))

    if n >= 3 and ring.top_degree == 2 and ring.size == 2:
        gamma = gamma_cocycle(ring, n)
        dg = differential(gamma)
        report.append(("gamma", not dg, f"d(gamma) has {len(dg)} terms"))
    return report


def _four_term_projection(ring, n):
    """Projection of d(G_1234) onto words x@i y@j, i < j."""
    degs = ring.degrees
    cands = [t for t in range(ring.size) if 0 < degs[t] < ring.top_degree]
    if not cands:
        return ("G_1234", True, "no classes x, y of positive degree with xy = w; skipped")
    x = cands[0]
    y = ring.dual[x]  # x * y = w
    G = _edge_sum(ring, n, {(1, 4): 1, (1, 3): -1, (2, 3): 1, (2, 4): -1})
    dG = differential(G)

    def in_block(word):
        nz = [(v, h) for v, h in enumerate(word, 1) if h]
        return (len(nz) == 2 and nz[0][1] == x and nz[1][1] in y)

    got = _q0_projection(dG, in_block)
    eps = -1 if degs[x] & 1 else 1
    want = {}
    for (i, j), c in {(1, 4): 1, (1, 3): -1, (2, 3): 1, (2, 4): -1}.items():
        for s, cs in y.items():
            word = [0] * n
            word[i - 1], word[j - 1] = x, s
            add_into(want, tuple(word), eps * c * cs)
    return ("G_1234", got == want, f"x={ring.symbols[x]}, sign {eps}: {_format_words(ring, got)}")


def gamma_cocycle(ring, n):
    """The element ``2(n-2) sum p_i(w) G_ij - sum_{k != i,j} p_k(w) G_ij``."""
    w = ring.fundamental
    raw = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            word = [0] * n
            word[i - 1] = w
            raw.append((2 * (n - 2), tuple(word), ((i, j),)))
            for k in range(1, n + 1):
                if k not in (i, j):
                    word = [0] * n
                    word[k - 1] = w
                    raw.append((-1, tuple(word), ((i, j),)))
    return normalize(ring, n, raw)
