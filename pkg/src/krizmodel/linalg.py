"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``column -> coefficient`` with no stored zeros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .ring import as_rational


@dataclass
class SparseRationalMatrix:
    """Matrix stored by columns; ``cols[c]`` maps row index to a nonzero rational."""
    nrows: int
    ncols: int
    cols: list = field(default_factory=list)

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        cols = [{} for _ in range(ncols)]
        for r, c, v in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside a {nrows}x{ncols} matrix")
            if v:
                cols[c][r] = as_rational(cols[c].get(r, 0) + v)
                if not cols[c][r]:
                    del cols[c][r]
        return cls(nrows, ncols, cols)

    @classmethod
    def identity(cls, k):
        return cls(k, k, [{i: 1} for i in range(k)])

    def entries(self):
        return sorted((r, c, v) for c, col in enumerate(self.cols) for r, v in col.items())

    def rows(self):
        out = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def to_dense(self):
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            dense[r][c] = v
        return dense

    def apply(self, vec):
        out = {}
        for c, a in vec.items():
            for r, v in self.cols[c].items():
                out[r] = out.get(r, 0) + a * v
        return {r: as_rational(v) for r, v in out.items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        return SparseRationalMatrix(self.nrows, other.ncols, [self.apply(col) for col in other.cols])

    def is_zero(self):
        return not any(self.cols)

    def trace(self):
        return as_rational(sum(col.get(i, 0) for i, col in enumerate(self.cols)))


# ---------------------------------------------------------------------------
# fraction-free rank

def _primitive(vec):
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    ints = {c: int(v * den) for c, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


class IncrementalEchelon:
    """Integer row echelon form grown one vector at a time."""

    def __init__(self):
        self.pivots = {}  # leading column -> primitive integer row

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        v = _primitive(vec) if vec else {}
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                return v
            a, b = row[lead], v[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * x for c, x in v.items()}
            for c, x in row.items():
                y = new.get(c, 0) - b * x
                if y:
                    new[c] = y
                else:
                    new.pop(c, None)
            v = _primitive(new) if new else {}
        return v

    def add(self, vec):
        """Insert ``vec``; return True when it raised the rank."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True


def rank_exact(matrix):
    """Exact rank via fraction-free elimination on the sparser side."""
    vecs = matrix.cols if matrix.ncols <= matrix.nrows else matrix.rows()
    ech = IncrementalEchelon()
    for v in sorted((v for v in vecs if v), key=len):
        ech.add(v)
    return ech.rank


# ---------------------------------------------------------------------------
# reduced row echelon form and subspaces

def rref(vectors):
    """Reduced echelon basis of the span; returns ``(rows, pivot_columns)``."""
    pivots = {}  # pivot column -> row with 1 at that column
    for vec in vectors:
        v = {c: Fraction(x) for c, x in vec.items() if x}
        for p, row in pivots.items():
            a = v.get(p)
            if a:
                for c, x in row.items():
                    y = v.get(c, 0) - a * x
                    if y:
                        v[c] = y
                    else:
                        v.pop(c, None)
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        v = {c: x * inv for c, x in v.items()}
        for q, row in pivots.items():
            a = row.get(p)
            if a:
                for c, x in v.items():
                    y = row.get(c, 0) - a * x
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
        pivots[p] = v
    order = sorted(pivots)
    return [{c: as_rational(x) for c, x in pivots[p].items()} for p in order], order


@dataclass
class Subspace:
    """Basis vectors with coordinate columns: ``v = sum v[coords[i]] * basis[i]``."""
    basis: list
    coords: list
    ambient: int

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, vec):
        """Coordinates of ``vec``; raise if ``vec`` leaves the subspace."""
        coeffs = [vec.get(c, 0) for c in self.coords]
        rest = dict(vec)
        for a, b in zip(coeffs, self.basis):
            if a:
                for c, x in b.items():
                    y = rest.get(c, 0) - a * x
                    if y:
                        rest[c] = y
                    else:
                        rest.pop(c, None)
        if rest:
            raise ValueError("subspace not invariant")
        return coeffs


def span(vectors, ambient):
    rows, piv = rref(vectors)
    return Subspace(rows, piv, ambient)


def kernel(matrix):
    """Null space of ``matrix`` with one coordinate per free column."""
    rows, piv = rref(matrix.rows())
    pivset = set(piv)
    basis, coords = [], []
    for f in range(matrix.ncols):
        if f in pivset:
            continue
        vec = {f: 1}
        for p, row in zip(piv, rows):
            a = row.get(f)
            if a:
                vec[p] = -a
        basis.append(vec)
        coords.append(f)
    return Subspace(basis, coords, matrix.ncols)


def image(matrix):
    return span([c for c in matrix.cols if c], matrix.nrows)


def subspace_trace(subspace, act):
    """Trace of a linear map on an invariant subspace.

    ``act`` maps an ambient vector to its image vector.
    """
    total = 0
    for i, b in enumerate(subspace.basis):
        coeffs = subspace.coordinates(act(b))
        total += coeffs[i]
    return as_rational(total)
