"""The model algebra E(X, n) on its canonical basis of marked monotonic forests.

A canonical monomial is the tensor word of ring-basis marks (one per vertex,
vertices 1-based) written to the left of a word of exterior generators
``G_ij``.  In canonical form every edge has ``i < j``, second indices are
strictly increasing, and only component minima carry non-unit marks.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple

from .ring import add_into, tensor_mul


class Monomial(NamedTuple):
    marks: tuple  # ring-basis index per vertex
    edges: tuple  # ((i, j), ...) sorted by j

    @property
    def n(self):
        return len(self.marks)

    @property
    def q(self):
        return len(self.edges)

    def sort_key(self):
        return (tuple(j for _, j in self.edges), tuple(i for i, _ in self.edges), self.marks)


def total_degree(ring, mono):
    return sum(ring.degrees[h] for h in mono.marks) + mono.q * (ring.top_degree - 1)


def mark_degree(ring, mono):
    return sum(ring.degrees[h] for h in mono.marks)


class Element:
    """Finite rational combination of canonical monomials of E(X, n)."""

    __slots__ = ("ring", "n", "terms")

    def __init__(self, ring, n, terms=None):
        self.ring = ring
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, ring, mono):
        return cls(ring, mono.n, {mono: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            add_into(out, m, c)
        return Element(self.ring, self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return Element(self.ring, self.n, {m: scalar * c for m, c in self.terms.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, mono):
        return self.terms.get(mono, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{format_monomial(self.ring, m)}]" for m, c in self.sorted_terms())


# ---------------------------------------------------------------------------
# rewriting of generator words

def _sort_edges(edges):
    """Sort odd generators by (j, i); return (sign, sorted tuple)."""
    edges = list(edges)
    sign = 1
    # insertion sort, counting adjacent transpositions
    for a in range(1, len(edges)):
        cur = edges[a]
        key = (cur[1], cur[0])
        b = a - 1
        while b >= 0 and (edges[b][1], edges[b][0]) > key:
            edges[b + 1] = edges[b]
            sign = -sign
            b -= 1
        edges[b + 1] = cur
    return sign, tuple(edges)


def has_cycle(edges):
    parent = {}

    def find(v):
        while parent.get(v, v) != v:
            parent[v] = parent.get(parent[v], parent[v])
            v = parent[v]
        return v

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return True
        parent[max(ri, rj)] = min(ri, rj)
    return False


@lru_cache(maxsize=None)
def reduce_word(edges, strategy="left", shortcut=True):
    """Normal form of an oriented generator word in the Arnold relations.

    Returns a tuple of ``(coefficient, canonical_edges)`` pairs.  ``strategy``
    picks the leftmost or rightmost shared second index to rewrite first.
    """
    if shortcut and has_cycle(edges):
        return ()
    out = {}
    work = [(1, edges)]
    while work:
        coef, word = work.pop()
        sign, word = _sort_edges(word)
        coef *= sign
        clash = None
        positions = range(len(word) - 1)
        if strategy == "right":
            positions = reversed(positions)
        dead = False
        for p in positions:
            (i, k), (j, k2) = word[p], word[p + 1]
            if k == k2:
                if i == j:
                    dead = True  # G^2 = 0
                    break
                if clash is None:
                    clash = p
                    if strategy == "left":
                        break
        if not dead and clash is None:
            # a repeated edge may sit non-adjacent only if j differs, impossible
            add_into(out, word, coef)
            continue
        if dead:
            continue
        p = clash
        (i, k), (j, _) = word[p], word[p + 1]  # i < j < k
        head, tail = word[:p], word[p + 2:]
        work.append((coef, head + ((i, j), (j, k)) + tail))
        work.append((-coef, head + ((i, j), (i, k)) + tail))
    return tuple((c, w) for w, c in sorted(out.items()))


def components(n, edges):
    """Vertex sets of the graph components, each sorted, listed by minimum."""
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return [tuple(g) for _, g in sorted(groups.items())]


def fold_marks(ring, marks, comps, order="left"):
    """Move every mark to its component minimum with Koszul signs.

    Returns a list of ``(coefficient, marks)`` pairs.
    """
    degs = ring.degrees
    words = [(1, list(marks))]
    for comp in comps:
        root = comp[0]
        others = comp[1:] if order == "left" else comp[:0:-1]
        for v in others:
            nxt = []
            for coef, word in words:
                x = word[v - 1]
                if x == 0:
                    nxt.append((coef, word))
                    continue
                sign = coef
                if degs[x] & 1:
                    between = sum(degs[word[l - 1]] for l in range(root + 1, v))
                    if between & 1:
                        sign = -sign
                prod_ = ring.product(word[root - 1], x)
                for k, c in prod_.items():
                    w2 = list(word)
                    w2[root - 1] = k
                    w2[v - 1] = 0
                    nxt.append((sign * c, w2))
            words = nxt
            if not words:
                return []
    out = {}
    for c, w in words:
        add_into(out, tuple(w), c)
    return [(c, w) for w, c in out.items()]


def normalize(ring, n, raw, strategy="left", shortcut=True):
    """Canonical-basis form of a raw expression.

    ``raw`` is an iterable of ``(coefficient, marks, generators)`` where
    ``marks`` is a length-``n`` tuple of ring-basis indices and
    ``generators`` a sequence of ``(a, b)`` pairs in any orientation.
    """
    out = {}
    fold_order = "left" if strategy == "left" else "right"
    for coef, marks, gens in raw:
        if len(marks) != n:
            raise IndexError(f"tensor word has length {len(marks)}, expected {n}")
        oriented = []
        for a, b in gens:
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise IndexError(f"generator G({a},{b}) out of range for n={n}")
            oriented.append((a, b) if a < b else (b, a))
        words = reduce_word(tuple(oriented), strategy, shortcut)
        if not words:
            continue
        comps = components(n, oriented)
        folded = fold_marks(ring, marks, comps, fold_order)
        for c1, edges in words:
            for c2, w in folded:
                add_into(out, Monomial(w, edges), coef * c1 * c2)
    return Element(ring, n, out)


def multiply(a, b):
    """Product of two elements in E(X, n)."""
    ring, n = a.ring, a.n
    degs = ring.degrees
    raw = []
    for ma, ca in a.terms.items():
        qa = ma.q
        for mb, cb in b.terms.items():
            # x_A G_A x_B G_B = (-1)^{|G_A||x_B|} (x_A x_B) G_A G_B
            sign = -1 if (qa & 1) and (sum(degs[h] for h in mb.marks) & 1) else 1
            for w, c in tensor_mul(ring, {ma.marks: 1}, {mb.marks: 1}).items():
                raw.append((sign * ca * cb * c, w, ma.edges + mb.edges))
    return normalize(ring, n, raw)


# ---------------------------------------------------------------------------
# enumeration

def forests(n, q):
    """Monotonic forests with ``q`` edges, as canonical edge tuples."""
    out = []
    for J in combinations(range(2, n + 1), q):
        for I in product(*[range(1, j) for j in J]):
            out.append(tuple(zip(I, J)))
    return out


def _mark_assignments(ring, slots, budget):
    """All ways to put ring-basis marks on ``slots`` with total degree ``budget``."""
    degs = ring.degrees
    if not slots:
        return [()] if budget == 0 else []
    out = []
    for h in range(ring.size):
        if degs[h] <= budget:
            for rest in _mark_assignments(ring, slots[1:], budget - degs[h]):
                out.append((h,) + rest)
    return out


def enumerate_basis(ring, n, q, k):
    """Canonical basis of ``E_q^k``, in (J, I, marks) lexicographic order."""
    if q < 0 or q > n - 1:
        return []
    budget = k - q * (ring.top_degree - 1)
    if budget < 0:
        return []
    out = []
    for edges in forests(n, q):
        J = {j for _, j in edges}
        roots = [v for v in range(1, n + 1) if v not in J]
        for assign in _mark_assignments(ring, roots, budget):
            marks = [0] * n
            for v, h in zip(roots, assign):
                marks[v - 1] = h
            out.append(Monomial(tuple(marks), edges))
    out.sort(key=Monomial.sort_key)
    return out


def stirling1(n, k):
    """Unsigned Stirling numbers of the first kind."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for a in range(1, n + 1):
        for b in range(1, a + 1):
            table[a][b] = table[a - 1][b - 1] + (a - 1) * table[a - 1][b]
    return table[n][k]


def _mark_poly_power(ring, e):
    poly = {0: 1}
    for _ in range(e):
        nxt = {}
        for d, c in poly.items():
            for dd in ring.degrees:
                nxt[d + dd] = nxt.get(d + dd, 0) + c
        poly = nxt
    return poly


def bigraded_dims(ring, n):
    """``{(q, k): dim E_q^k}`` over the nonzero cells."""
    out = {}
    odd = ring.top_degree - 1
    for q in range(n):
        forests_count = stirling1(n, n - q)
        for d, c in _mark_poly_power(ring, n - q).items():
            out[(q, q * odd + d)] = forests_count * c
    return out


def trapezoid(ring, n):
    """Corner vertices ``(k, q)`` of the support region."""
    m = ring.complex_dim
    return [(0, 0), (2 * m * n, 0), ((n - 1) * (2 * m - 1), n - 1), (n * (2 * m - 1) + 1, n - 1)]


def in_trapezoid(ring, n, q, k):
    m = ring.complex_dim
    if not 0 <= q <= n - 1:
        return False
    return q * (2 * m - 1) <= k <= 2 * m * n - q


# ---------------------------------------------------------------------------
# types

class TypeSignature(NamedTuple):
    sizes: tuple  # lambda_1 >= ... >= lambda_t
    marks: tuple  # ring-basis index per component

    @property
    def n(self):
        return sum(self.sizes)

    @property
    def q(self):
        return sum(s - 1 for s in self.sizes)

    def mark_degree(self, ring):
        return sum(ring.degrees[h] for h in self.marks)


def canonical_signature(pairs):
    pairs = sorted(pairs, key=lambda p: (p[0], p[1]), reverse=True)
    return TypeSignature(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def type_of(mono):
    comps = components(mono.n, mono.edges)
    return canonical_signature([(len(c), mono.marks[c[0] - 1]) for c in comps])


def type_generator(sig):
    """Concatenated bamboos with each mark on its bamboo's first vertex."""
    marks, edges = [], []
    start = 1
    for size, h in zip(sig.sizes, sig.marks):
        marks.extend([h] + [0] * (size - 1))
        edges.extend((v, v + 1) for v in range(start, start + size - 1))
        start += size
    return Monomial(tuple(marks), tuple(edges))


def _partitions_with_parts(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions_with_parts(n - p, p):
            yield (p,) + rest


def enumerate_types(ring, n, q, k):
    """All type signatures with ``|L| = q`` and mark degree ``k - q(2m-1)``."""
    budget = k - q * (ring.top_degree - 1)
    if budget < 0:
        return []
    out = []
    for sizes in _partitions_with_parts(n):
        if n - len(sizes) != q:
            continue
        # group equal sizes; marks non-increasing inside each group
        for marks in _marks_for_sizes(ring, sizes, budget):
            out.append(TypeSignature(sizes, marks))
    out.sort()
    return out


def _marks_for_sizes(ring, sizes, budget):
    degs = ring.degrees
    results = []

    def rec(pos, prev_size, prev_mark, left, acc):
        if pos == len(sizes):
            if left == 0:
                results.append(tuple(acc))
            return
        top = prev_mark if sizes[pos] == prev_size else ring.size - 1
        for h in range(top, -1, -1):
            if degs[h] <= left:
                acc.append(h)
                rec(pos + 1, sizes[pos], h, left - degs[h], acc)
                acc.pop()

    rec(0, None, None, budget, [])
    return results


def all_types(ring, n):
    out = []
    for (q, k) in sorted(bigraded_dims(ring, n)):
        out.extend(enumerate_types(ring, n, q, k))
    return out


def type_block_basis(ring, n, sig):
    """Canonical monomials of the given type."""
    q = sig.q
    k = q * (ring.top_degree - 1) + sig.mark_degree(ring)
    return [m for m in enumerate_basis(ring, n, q, k) if type_of(m) == sig]


def type_block_dim(sig):
    """Count of monomials of a type: set partitions times monotonic trees."""
    from math import factorial
    n = sig.n
    count = factorial(n)
    groups = {}
    for size, h in zip(sig.sizes, sig.marks):
        count //= factorial(size)
        count *= factorial(size - 1)  # monotonic trees on `size` labelled vertices
        groups[(size, h)] = groups.get((size, h), 0) + 1
    for mult in groups.values():
        count //= factorial(mult)
    return count


# ---------------------------------------------------------------------------
# duality

def duality_phi(element, q, k):
    """Replace each component-root mark by its Poincaré dual."""
    ring, n = element.ring, element.n
    m = ring.complex_dim
    target = 2 * m * n + 2 * q * (m - 1) - k
    out = {}
    for mono, coef in element.terms.items():
        if mono.q != q or total_degree(ring, mono) != k:
            raise ValueError("duality_phi needs an element homogeneous of bidegree (q, k)")
        J = {j for _, j in mono.edges}
        words = [((), coef)]
        for v, h in enumerate(mono.marks, 1):
            if v in J:
                words = [(w + (0,), c) for w, c in words]
            else:
                words = [(w + (s,), c * cs) for w, c in words for s, cs in ring.dual[h].items()]
        for w, c in words:
            add_into(out, Monomial(w, mono.edges), c)
    result = Element(ring, n, out)
    for mono in result.terms:
        assert total_degree(ring, mono) == target
    return result


# ---------------------------------------------------------------------------
# text syntax  ``x@v ... G(i,j) ...``

def format_monomial(ring, mono):
    parts = [f"{ring.symbols[h]}@{v}" for v, h in enumerate(mono.marks, 1) if h]
    parts += [f"G({i},{j})" for i, j in mono.edges]
    return " ".join(parts) if parts else "1"


def parse_monomial(ring, n, text):
    """Parse ``w@1 G(1,2) G(2,3)`` into a raw term ``(1, marks, gens)``."""
    import re
    marks = [0] * n
    gens = []
    for tok in re.findall(r"G\(\s*\d+\s*,\s*\d+\s*\)|\S+", text.strip()):
        if tok.startswith("G("):
            a, b = (int(x) for x in tok[2:-1].split(","))
            gens.append((a, b))
        elif tok == "1":
            continue
        else:
            sym, sep, v = tok.partition("@")
            if not sep:
                raise ValueError(f"bad monomial token {tok!r}")
            v = int(v)
            if not 1 <= v <= n:
                raise IndexError(f"slot {v} out of range for n={n}")
            if marks[v - 1]:
                raise ValueError(f"slot {v} marked twice")
            marks[v - 1] = ring.index(sym)
    return (1, tuple(marks), tuple(gens))


def format_element(element):
    from .ring import format_rational
    ring = element.ring
    return "\n".join(f"{format_rational(c)} * {format_monomial(ring, m)}"
                     for m, c in element.sorted_terms())


def parse_element(ring, n, text):
    from fractions import Fraction
    raw = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        coef, sep, mono = line.partition("*")
        if not sep:
            coef, mono = "1", line
        c, m, g = parse_monomial(ring, n, mono)
        raw.append((Fraction(coef.strip()), m, g))
    return normalize(ring, n, raw)
