"""Verification suites: each returns a list of ``Check`` records."""
from __future__ import annotations

import random
import sys
from dataclasses import dataclass

from . import perm as P
from .action import act, character_direct, type_characters_direct, verify_monogenic
from .chars import decompose, format_decomposition, type_character
from .exterior import Element, TypeSignature, bigraded_dims, enumerate_types
from .homology import (KrizComplex, cp1_expected_poincare, differential, differential_test_vectors,
                       gamma_cocycle, poincare_string)
from .subcomplex import (homotopy_check, se_betti, top_betti, top_cell_betti, all_top_cells,
                         top_iso_f, w_betti)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def suite_diffs(ring, n, seed=0):
    K = KrizComplex(ring, n)
    out = []
    bad = []
    for q, k in K.cells():
        if q >= 2:
            if not (K.d_matrix(q - 1, k + 1) @ K.d_matrix(q, k)).is_zero():
                bad.append((q, k))
    out.append(Check(f"d^2 = 0 on all cells, {ring.name}, n={n}", not bad, f"{len(K.cells())} cells"))
    for name, ok, detail in differential_test_vectors(ring, n):
        out.append(Check(f"test vector {name}, {ring.name}, n={n}", ok, detail))
    rng = random.Random(seed)
    gens = [P.coxeter(i, n) for i in range(1, n)]
    fails = 0
    trials = 0
    for q, k in K.cells():
        basis = K.basis(q, k)
        if not basis or q == 0 or not gens:
            continue
        sample = rng.sample(basis, min(4, len(basis)))
        el = Element(ring, n, {m: rng.randint(-3, 3) or 1 for m in sample})
        for g in gens:
            trials += 1
            if act(g, differential(el)) != differential(act(g, el)):
                fails += 1
    out.append(Check(f"S_n-equivariance of d, {ring.name}, n={n}", fails == 0, f"{trials} trials"))
    return out


def suite_injectivity(ring, n):
    K = KrizComplex(ring, n)
    g = ring.top_degree - 1
    out = []
    if ring.top_degree == 2 and ring.size == 2:
        for q in range(1, n):
            k = q
            full = K.rank(q, k) == len(K.basis(q, k))
            expect = q >= n - 2 or n <= 3
            out.append(Check(f"CP1 d_{{{q},{q}}} injective iff q >= n-2, n={n}", full == expect,
                             f"rank {K.rank(q, k)} of {len(K.basis(q, k))}"))
        if n >= 4:
            chi = K.cohomology_character(1, 1)
            dec = decompose(chi)
            out.append(Check(f"CP1 ker d_{{1,1}} = V({n - 2},2), n={n}", dec == [((n - 2, 2), 1)],
                             format_decomposition(dec)))
        return out
    for q in range(1, n):
        k = q * g
        r, dim = K.rank(q, k), len(K.basis(q, k))
        out.append(Check(f"left edge d_{{{q},{k}}} injective, {ring.name}, n={n}", r == dim, f"rank {r} of {dim}"))
    q = n - 1
    for k in range(q * g, n * g + 2):
        if (q, k) in K.dims:
            r, dim = K.rank(q, k), len(K.basis(q, k))
            out.append(Check(f"top row d_{{{q},{k}}} injective, {ring.name}, n={n}", r == dim, f"rank {r} of {dim}"))
    return out


def suite_duality(ring, n):
    from .exterior import duality_phi
    K = KrizComplex(ring, n)
    m = ring.complex_dim
    out = []
    dims_ok = chars_ok = phi_ok = True
    for q, k in K.cells():
        k2 = 2 * m * n + 2 * q * (m - 1) - k
        if K.dims.get((q, k2)) != K.dims[(q, k)]:
            dims_ok = False
            continue
        if k <= k2:
            if character_direct(ring, n, q, k) != character_direct(ring, n, q, k2):
                chars_ok = False
        for mono in K.basis(q, k):
            img = duality_phi(Element.basis(ring, mono), q, k)
            back = duality_phi(img, q, k2)
            if len(img) != 1 or len(back) != 1 or set(back.terms) != {mono}:
                phi_ok = False
    out.append(Check(f"duality dims E_q^k = E_q^(2mn+2q(m-1)-k), {ring.name}, n={n}", dims_ok))
    out.append(Check(f"duality characters, {ring.name}, n={n}", chars_ok))
    out.append(Check(f"Phi is an involution on basis lines, {ring.name}, n={n}", phi_ok))
    return out


def type_character_check(ring, n):
    """Induced type characters versus direct traces on every cell."""
    dims = bigraded_dims(ring, n)
    types_ok = sums_ok = True
    count = 0
    for q, k in sorted(dims):
        direct = type_characters_direct(ring, n, q, k)
        if sorted(direct) != enumerate_types(ring, n, q, k):
            types_ok = False
        total = None
        for sig, chi in direct.items():
            count += 1
            ind = type_character(sig, ring)
            if ind != chi:
                types_ok = False
            total = ind if total is None else total + ind
        cell = character_direct(ring, n, q, k)
        if total != cell:
            sums_ok = False
    return types_ok, sums_ok, count


def suite_characters(ring, n):
    _progress(f"characters: {ring.name} n={n}")
    types_ok, sums_ok, count = type_character_check(ring, n)
    out = [Check(f"induced = direct on every type block, {ring.name}, n={n}", types_ok, f"{count} types"),
           Check(f"sum over types = cell character, {ring.name}, n={n}", sums_ok)]
    if n <= 5:
        bad = []
        for q, k in sorted(bigraded_dims(ring, n)):
            for sig in enumerate_types(ring, n, q, k):
                ok, rank, dim = verify_monogenic(ring, sig)
                if not ok:
                    bad.append(sig)
        out.append(Check(f"every type block is monogenic, {ring.name}, n={n}", not bad, f"{len(bad)} failures"))
    top = TypeSignature((n,), (ring.fundamental,))
    ok, rank, _ = verify_monogenic(ring, top, restrict=True)
    from math import factorial
    out.append(Check(f"restricted top span has dim (n-1)!, n={n}", rank == factorial(n - 1), f"rank {rank}"))
    return out


def suite_subcomplexes(ring, n):
    out = [Check(f"Arnold homotopy del h + h del = id, n={n}", homotopy_check(n))]
    comm = all(top_iso_f(ring, n, q)[1] for q in range(n))
    out.append(Check(f"f: A(n) -> E^Top is a chain isomorphism, {ring.name}, n={n}", comm))
    out.append(Check(f"H(E^Top) = 0, {ring.name}, n={n}", not top_betti(ring, n)))
    bad = [c for c in all_top_cells(ring, n) if top_cell_betti(ring, n, *c)]
    out.append(Check(f"every E^Top(A,beta) slice is acyclic, {ring.name}, n={n}", not bad))
    out.append(Check(f"H(E(w)) = 0, {ring.name}, n={n}", not w_betti(ring, n)))
    out.append(Check(f"Betti(SE) = Betti(E), {ring.name}, n={n}", se_betti(ring, n) == KrizComplex(ring, n).betti_table()))
    return out


def suite_cp1(ring, n):
    out = []
    for nn in range(2, n + 1):
        table = KrizComplex(ring, nn).betti_table()
        expect = cp1_expected_poincare(nn)
        out.append(Check(f"CP1 Poincare polynomial n={nn}", table == expect, poincare_string(table)))
        if nn >= 3:
            support = all(k == q or k == q + 2 for (q, k) in table)
            paired = all(table.get((q, q), 0) == table.get((q + 1, q + 3), 0) for q in range(0, nn - 2))
            out.append(Check(f"CP1 H_q^q = H_(q+1)^(q+3) dims, n={nn}", support and paired))
    if n >= 3:
        K = KrizComplex(ring, n)
        gamma = gamma_cocycle(ring, n)
        cocycle = not differential(gamma)
        from .linalg import span
        im = span([c for c in K.d_matrix(2, 2).cols if c], len(K.basis(1, 3)))
        vec = K.coords(gamma, 1, 3)
        try:
            im.coordinates(vec)
            exact = True
        except ValueError:
            exact = False
        out.append(Check(f"gamma is a non-exact cocycle, n={n}", cocycle and not exact))
    return out


SUITES = {
    "diffs": suite_diffs,
    "injectivity": suite_injectivity,
    "duality": suite_duality,
    "characters": suite_characters,
    "subcomplexes": suite_subcomplexes,
    "cp1": suite_cp1,
}
