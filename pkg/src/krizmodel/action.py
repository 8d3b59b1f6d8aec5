"""The symmetric group action on E(X, n) and direct trace characters."""
from __future__ import annotations

from functools import lru_cache

from . import perm as P
from .chars import Character, partitions
from .exterior import (Element, components, enumerate_basis, normalize,
                       type_block_basis, type_generator, type_of)
from .linalg import IncrementalEchelon, SparseRationalMatrix


def _koszul_perm_sign(ring, marks, sigma):
    """Sign of moving the tensor factor in slot l to slot sigma(l)."""
    degs = ring.degrees
    odd = [l for l, h in enumerate(marks) if degs[h] & 1]
    inv = 0
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            if sigma[odd[a]] > sigma[odd[b]]:
                inv += 1
    return -1 if inv & 1 else 1


def act_raw(ring, sigma, mono):
    """Unnormalized image of a monomial: ``(coef, marks, edges)``."""
    n = len(sigma)
    marks = [0] * n
    for l, h in enumerate(mono.marks):
        marks[sigma[l] - 1] = h
    edges = tuple((sigma[i - 1], sigma[j - 1]) for i, j in mono.edges)
    return (_koszul_perm_sign(ring, mono.marks, sigma), tuple(marks), edges)


def act(sigma, element):
    """``sigma . element``, a left action."""
    sigma = tuple(sigma)
    if len(sigma) != element.n:
        raise ValueError(f"permutation of {len(sigma)} letters acting on n={element.n}")
    raw = []
    for mono, c in element.terms.items():
        s, marks, edges = act_raw(element.ring, sigma, mono)
        raw.append((s * c, marks, edges))
    return normalize(element.ring, element.n, raw)


def act_monomial(ring, sigma, mono):
    return act(sigma, Element.basis(ring, mono))


def action_matrix(ring, sigma, basis):
    """Matrix of ``sigma`` on the span of ``basis`` (columns are images)."""
    index = {m: i for i, m in enumerate(basis)}
    entries = []
    for c, mono in enumerate(basis):
        for m, v in act_monomial(ring, sigma, mono).terms.items():
            if m not in index:
                raise ValueError("image leaves the span of the basis")
            entries.append((index[m], c, v))
    size = len(basis)
    return SparseRationalMatrix.from_entries(size, size, entries)


# ---------------------------------------------------------------------------
# direct traces

@lru_cache(maxsize=None)
def _component_table(n, edges):
    return components(n, edges)


def _may_fix(sigma, mono):
    """False when the coefficient of ``mono`` in ``sigma . mono`` is surely zero.

    Rewriting preserves component vertex sets and root marks, so a nonzero
    diagonal entry needs sigma to permute the marked components.
    """
    comps = _component_table(mono.n, mono.edges)
    if all(sigma[v - 1] == v for v in range(1, mono.n + 1)):
        return True
    marked = {frozenset(c): mono.marks[c[0] - 1] for c in comps}
    for c in comps:
        img = frozenset(sigma[v - 1] for v in c)
        if marked.get(img) != mono.marks[c[0] - 1]:
            return False
    return True


def diagonal_entry(ring, sigma, mono, shortcut=True):
    if shortcut and not _may_fix(sigma, mono):
        return 0
    s, marks, edges = act_raw(ring, sigma, mono)
    return s * normalize(ring, mono.n, [(1, marks, edges)]).coefficient(mono)


def trace_on_basis(ring, sigma, basis, shortcut=True):
    return sum(diagonal_entry(ring, sigma, m, shortcut) for m in basis)


def character_of_basis(ring, n, basis, shortcut=True):
    """Direct trace character of the span of a stable list of monomials."""
    vals = {}
    for ct in partitions(n):
        rep = P.block_cycle_rep(ct)
        vals[ct] = len(basis) if ct == (1,) * n else trace_on_basis(ring, rep, basis, shortcut)
    return Character.from_dict(n, vals)


def character_direct(ring, n, q, k, sig=None, shortcut=True):
    """Trace character of ``E_q^k`` or of one type block in it."""
    if sig is None:
        basis = enumerate_basis(ring, n, q, k)
    else:
        basis = type_block_basis(ring, n, sig)
    return character_of_basis(ring, n, basis, shortcut)


def type_characters_direct(ring, n, q, k, shortcut=True):
    """Direct trace characters of every type block of ``E_q^k`` in one pass."""
    blocks = {}
    for m in enumerate_basis(ring, n, q, k):
        blocks.setdefault(type_of(m), []).append(m)
    return {sig: character_of_basis(ring, n, b, shortcut) for sig, b in sorted(blocks.items())}


# ---------------------------------------------------------------------------
# orbit spans

def verify_monogenic(ring, sig, restrict=False):
    """Span of the type generator under S_n (or S_{n-1} when ``restrict``).

    Returns ``(spans_block, rank, block_dim)``.
    """
    n = sig.n
    basis = type_block_basis(ring, n, sig)
    index = {m: i for i, m in enumerate(basis)}
    top = n - 2 if restrict else n - 1
    gens = [P.coxeter(i, n) for i in range(1, top + 1)]

    def coords(el):
        return {index[m]: c for m, c in el.terms.items()}

    start = Element.basis(ring, type_generator(sig))
    ech = IncrementalEchelon()
    ech.add(coords(start))
    queue = [start]
    while queue:
        el = queue.pop(0)
        for g in gens:
            img = act(g, el)
            if ech.add(coords(img)):
                queue.append(img)
    return ech.rank == len(basis), ech.rank, len(basis)
