"""Finite graded-commutative algebras with Poincaré duality.

A ring is stored on an ordered basis ``x_1 = 1, ..., x_B = w`` with
non-decreasing degrees.  Ring elements are plain ``dict`` objects mapping
basis indices (0-based) to exact rationals; tensor elements map ``n``-tuples
of basis indices to rationals.  Zero coefficients are never stored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

RingElement = dict  # {basis index: coefficient}
TensorElement = dict  # {tuple of basis indices: coefficient}


class RingSpecError(ValueError):
    """Malformed ring-spec text (carries the offending line number)."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class RingAxiomError(ValueError):
    """A ring failed one of the graded Poincaré-duality algebra axioms."""


def as_rational(value):
    """Exact rational, demoted to ``int`` when integral."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def add_into(target, key, coef):
    new = target.get(key, 0) + coef
    if new:
        target[key] = new
    else:
        target.pop(key, None)


def koszul(d1, d2):
    return -1 if (d1 & 1) and (d2 & 1) else 1


@dataclass(frozen=True, eq=False)
class GradedRing:
    name: str
    symbols: tuple
    degrees: tuple
    top_degree: int
    fundamental: int
    table: dict  # {(i, j): {k: coef}}, only nonzero products
    convention: str = "koszul"
    dual: tuple = field(init=False, repr=False)
    diagonal: tuple = field(init=False, repr=False)

    def __post_init__(self):
        validate_ring(self)
        object.__setattr__(self, "dual", tuple(_dual_basis(self)))
        object.__setattr__(self, "diagonal", tuple(_diagonal_terms(self)))
        check_diagonal(self)

    @property
    def size(self):
        return len(self.symbols)

    @property
    def complex_dim(self):
        return self.top_degree // 2

    @property
    def unit(self):
        return 0

    def index(self, symbol):
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise KeyError(f"unknown basis symbol {symbol!r} in ring {self.name}") from None

    def betti(self):
        out = [0] * (self.top_degree + 1)
        for d in self.degrees:
            out[d] += 1
        return tuple(out)

    def product(self, i, j):
        """Product of basis elements ``x_i * x_j`` as a ring element."""
        return self.table.get((i, j), {})

    def __repr__(self):
        return f"GradedRing({self.name!r}, B={self.size}, D={self.top_degree})"


def mul(ring, a, b):
    """Bilinear product of two ring elements."""
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            for k, c in ring.product(i, j).items():
                add_into(out, k, ca * cb * c)
    return out


def basis_element(ring, i):
    return {i: 1}


def pairing(ring, i, j):
    """Coefficient of the fundamental class in ``x_i * x_j``."""
    return ring.product(i, j).get(ring.fundamental, 0)


def _build_table(symbols, degrees, listed):
    """Fill unit products and graded-commutative partners of listed products."""
    table = {}
    for i in range(len(symbols)):
        table[(0, i)] = {i: 1}
        table[(i, 0)] = {i: 1}
    for (i, j), val in listed.items():
        if i == 0 or j == 0:
            other = j if i == 0 else i
            if val != {other: 1}:
                raise RingAxiomError(
                    f"unit axiom fails: {symbols[i]}*{symbols[j]} must equal {symbols[other]}")
            continue
        sign = koszul(degrees[i], degrees[j])
        partner = listed.get((j, i))
        if partner is not None and partner != {k: sign * c for k, c in val.items()}:
            raise RingAxiomError(
                f"graded commutativity fails for {symbols[i]}*{symbols[j]}: listed products "
                f"disagree with the sign (-1)^({degrees[i]}*{degrees[j]})")
        table[(i, j)] = val
        table[(j, i)] = {k: sign * c for k, c in val.items()}
    return {key: val for key, val in table.items() if val}


def make_ring(name, basis, products, top_degree=None, fundamental=None, convention="koszul"):
    """Build and validate a ring.

    ``basis`` is a list of ``(symbol, degree)``; ``products`` maps
    ``(symbol_a, symbol_b)`` to ``{symbol: coefficient}``.  Unlisted
    products are zero; unit and graded-commutative completions are added.
    """
    symbols = tuple(s for s, _ in basis)
    degrees = tuple(int(d) for _, d in basis)
    if len(set(symbols)) != len(symbols):
        raise RingAxiomError("duplicate basis symbol")
    if top_degree is None:
        top_degree = max(degrees)
    if fundamental is None:
        fundamental = symbols[-1]
    if fundamental not in symbols:
        raise RingAxiomError(f"fundamental class {fundamental!r} is not a basis symbol")
    idx = {s: i for i, s in enumerate(symbols)}
    listed = {}
    for (a, b), val in products.items():
        for s in (a, b, *val):
            if s not in idx:
                raise RingAxiomError(f"unknown basis symbol {s!r} in product {a}*{b}")
        listed[(idx[a], idx[b])] = {idx[s]: as_rational(c) for s, c in val.items()}
    table = _build_table(symbols, degrees, listed)
    return GradedRing(name, symbols, degrees, int(top_degree), idx[fundamental], table, convention)


def validate_ring(ring):
    """Check every axiom; raise :class:`RingAxiomError` naming the first failure."""
    syms, degs, D = ring.symbols, ring.degrees, ring.top_degree
    B = len(syms)
    if B == 0 or syms[0] != "1" or degs[0] != 0:
        raise RingAxiomError("unit axiom fails: first basis symbol must be '1' of degree 0")
    if degs.count(0) != 1:
        raise RingAxiomError("unit axiom fails: degree-0 component must be one-dimensional")
    if any(d < 0 for d in degs):
        raise RingAxiomError("degrees must be nonnegative")
    if list(degs) != sorted(degs):
        raise RingAxiomError("basis degrees must be non-decreasing")
    if D <= 0 or D % 2:
        raise RingAxiomError(f"top degree must be even and positive, got {D}")
    if degs[ring.fundamental] != D:
        raise RingAxiomError("fundamental class must have the top degree")
    if max(degs) != D or degs.count(D) != 1:
        raise RingAxiomError("the top-degree component must be spanned by the fundamental class")
    for (i, j), val in ring.table.items():
        for k, c in val.items():
            if degs[k] != degs[i] + degs[j]:
                raise RingAxiomError(
                    f"degree additivity fails for {syms[i]}*{syms[j]} -> {syms[k]}")
    for i in range(B):
        if ring.product(0, i) != {i: 1} or ring.product(i, 0) != {i: 1}:
            raise RingAxiomError(f"unit axiom fails at {syms[i]}")
    for i, j in product(range(B), repeat=2):
        sign = koszul(degs[i], degs[j])
        lhs = ring.product(i, j)
        rhs = {k: sign * c for k, c in ring.product(j, i).items()}
        if lhs != rhs:
            raise RingAxiomError(f"graded commutativity fails for {syms[i]}*{syms[j]}")
    for i, j, k in product(range(B), repeat=3):
        if degs[i] + degs[j] + degs[k] > D:
            continue
        left = mul(ring, ring.product(i, j), {k: 1})
        right = mul(ring, {i: 1}, ring.product(j, k))
        if left != right:
            raise RingAxiomError(f"associativity fails on ({syms[i]}, {syms[j]}, {syms[k]})")
    for d in range(D + 1):
        rows = [i for i in range(B) if degs[i] == d]
        cols = [j for j in range(B) if degs[j] == D - d]
        if len(rows) != len(cols):
            raise RingAxiomError(f"pairing degenerate at degree {d}")
        if rows and _invert([[pairing(ring, i, j) for j in cols] for i in rows]) is None:
            raise RingAxiomError(f"pairing degenerate at degree {d}")


def _invert(matrix):
    """Exact inverse of a small square matrix, or ``None`` if singular."""
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(size)]
           for r, row in enumerate(matrix)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[as_rational(x) for x in row[size:]] for row in aug]


def _dual_basis(ring):
    B, D, degs = ring.size, ring.top_degree, ring.degrees
    dual = [None] * B
    for d in range(D + 1):
        rows = [i for i in range(B) if degs[i] == d]
        cols = [j for j in range(B) if degs[j] == D - d]
        if not rows:
            continue
        P = [[pairing(ring, i, j) for j in cols] for i in rows]
        # y^i = sum_j C[i][j] x_j with x_i' y^i = delta w  <=>  C P^T = I
        PT = [[P[r][c] for r in range(len(rows))] for c in range(len(cols))]
        inv = _invert(PT)
        if inv is None:
            raise RingAxiomError(f"singular pairing at degree {d}")
        for a, i in enumerate(rows):
            dual[i] = {cols[b]: inv[a][b] for b in range(len(cols)) if inv[a][b]}
    return dual


def dual_basis(ring):
    """Poincaré dual basis ``y^1, ..., y^B`` with ``x_i y^j = delta_ij w``."""
    return list(ring.dual)


def _diagonal_terms(ring):
    """Terms ``(coef, left, right)`` of the diagonal class in H (x) H."""
    out = {}
    for t in range(ring.size):
        sign = (-1) ** ring.degrees[t] if ring.convention == "koszul" else 1
        for s, c in ring.dual[t].items():
            add_into(out, (t, s), sign * c)
    return [(c, a, b) for (a, b), c in sorted(out.items())]


def tensor_mul(ring, A, B):
    """Product in H^{(x)n} with Koszul signs."""
    degs = ring.degrees
    out = {}
    for wa, ca in A.items():
        for wb, cb in B.items():
            sign = 1
            odd_a = 0  # parity of sum of degrees of a_l for l > current slot
            # sign = (-1)^{sum_{i>j} |a_i||b_j|}
            for l in range(len(wa) - 1, -1, -1):
                if degs[wb[l]] & 1 and odd_a:
                    sign = -sign
                odd_a ^= degs[wa[l]] & 1
            terms = [((), sign * ca * cb)]
            for a, b in zip(wa, wb):
                prod_ab = ring.product(a, b)
                if not prod_ab:
                    terms = []
                    break
                terms = [(w + (k,), c * ck) for w, c in terms for k, ck in prod_ab.items()]
            for w, c in terms:
                add_into(out, w, c)
    return out


def diagonal_class(ring, n, i, j):
    """``p_ij^*(Delta)`` in ``H^{(x)n}`` (slots 1-based, units elsewhere)."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise IndexError(f"invalid slot pair ({i}, {j}) for n={n}")
    out = {}
    for c, a, b in ring.diagonal:
        word = [0] * n
        if i < j:
            word[i - 1], word[j - 1] = a, b
            sign = 1
        else:
            word[i - 1], word[j - 1] = a, b
            sign = koszul(ring.degrees[a], ring.degrees[b])
        add_into(out, tuple(word), sign * c)
    return out


def pullback(ring, n, i, element):
    """``p_i^*(x)`` as a tensor element."""
    out = {}
    for k, c in element.items():
        word = [0] * n
        word[i - 1] = k
        add_into(out, tuple(word), c)
    return out


def check_diagonal(ring):
    """Absorption and graded symmetry of Delta; raises on failure."""
    degs = ring.degrees
    delta = diagonal_class(ring, 2, 1, 2)
    swapped = {}
    for (a, b), c in delta.items():
        add_into(swapped, (b, a), koszul(degs[a], degs[b]) * c)
    if swapped != delta:
        raise RingAxiomError(
            f"diagonal sign convention {ring.convention!r} fails graded symmetry")
    for x in range(ring.size):
        left = tensor_mul(ring, pullback(ring, 2, 1, {x: 1}), delta)
        right = tensor_mul(ring, pullback(ring, 2, 2, {x: 1}), delta)
        if left != right:
            raise RingAxiomError(
                f"diagonal sign convention {ring.convention!r} fails absorption "
                f"at {ring.symbols[x]}")


# ---------------------------------------------------------------------------
# presets and the ring-spec text format

def cp_ring(m):
    if m < 1:
        raise ValueError("CP^m needs m >= 1")
    basis = [("1", 0)] + [(f"h{e}" if e > 1 else "h", 2 * e) for e in range(1, m)] + [("w", 2 * m)]
    syms = [s for s, _ in basis]
    products = {}
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a + b <= m:
                products[(syms[a], syms[b])] = {syms[a + b]: 1}
    return make_ring(f"CP{m}", basis, products)


def curve_ring(g):
    if g < 0:
        raise ValueError("genus must be >= 0")
    basis = [("1", 0)] + [(f"a{i}", 1) for i in range(1, g + 1)] \
        + [(f"b{i}", 1) for i in range(1, g + 1)] + [("w", 2)]
    products = {(f"a{i}", f"b{i}"): {"w": 1} for i in range(1, g + 1)}
    return make_ring(f"curve{g}", basis, products)


PRESETS = {"cp": cp_ring, "curve": curve_ring}


def preset_ring(name, param):
    try:
        factory = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r} (known: {', '.join(PRESETS)})") from None
    return factory(int(param))


_TERM = re.compile(r"^\s*([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*\s*)?(\w+)\s*$")


def _parse_rhs(rhs, lineno):
    rhs = rhs.strip()
    if rhs == "0":
        return {}
    # split on +/- that start a new term
    pieces = re.findall(r"[+-]?\s*[^+-]+", rhs)
    out = {}
    for piece in pieces:
        m = _TERM.match(piece)
        if not m:
            raise RingSpecError(f"cannot parse product term {piece.strip()!r}", lineno)
        sign, num, sym = m.groups()
        c = Fraction(num or 1) * (-1 if sign == "-" else 1)
        out[sym] = out.get(sym, 0) + c
    return out


def parse_ring(text, convention="koszul"):
    """Parse a ring-spec document into a validated :class:`GradedRing`."""
    name, topdeg, basis, fundamental = None, None, None, None
    products = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "ring":
            if not rest:
                raise RingSpecError("ring needs a name", lineno)
            name = rest
        elif key == "topdeg":
            try:
                topdeg = int(rest)
            except ValueError:
                raise RingSpecError(f"bad top degree {rest!r}", lineno) from None
        elif key == "basis":
            basis = []
            for tok in rest.split():
                sym, sep, deg = tok.partition(":")
                if not sep or not deg.lstrip("-").isdigit() or not sym:
                    raise RingSpecError(f"bad basis entry {tok!r}", lineno)
                basis.append((sym, int(deg)))
        elif key == "fundamental":
            fundamental = rest
        elif key == "mul":
            lhs, sep, rhs = rest.partition("=")
            a, star, b = lhs.strip().partition("*")
            if not sep or not star or not a.strip() or not b.strip():
                raise RingSpecError(f"bad product line {rest!r}", lineno)
            products[(a.strip(), b.strip())] = _parse_rhs(rhs, lineno)
        else:
            raise RingSpecError(f"unknown directive {key!r}", lineno)
    if basis is None:
        raise RingSpecError("missing basis line")
    if name is None:
        name = "ring"
    if topdeg is None:
        topdeg = max(d for _, d in basis)
    return make_ring(name, basis, products, topdeg, fundamental, convention)


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_ring(ring):
    """Serialize a ring to the ring-spec text format."""
    lines = [f"ring {ring.name}", f"topdeg {ring.top_degree}",
             "basis " + " ".join(f"{s}:{d}" for s, d in zip(ring.symbols, ring.degrees)),
             f"fundamental {ring.symbols[ring.fundamental]}"]
    for (i, j), val in sorted(ring.table.items()):
        if i == 0 or j == 0:
            continue
        terms = " + ".join(f"{format_rational(c)}*{ring.symbols[k]}" for k, c in sorted(val.items()))
        lines.append(f"mul {ring.symbols[i]}*{ring.symbols[j]} = {terms.replace('+ -', '- ')}")
    return "\n".join(lines) + "\n"


def load_ring(source):
    """Ring from a preset string like ``cp:2`` / ``curve:2`` or a file path."""
    name, sep, param = source.partition(":")
    if sep and name in PRESETS:
        return preset_ring(name, param)
    with open(source) as fh:
        return parse_ring(fh.read())
