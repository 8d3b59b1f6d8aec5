"""Character theory of the symmetric group and induced type characters."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _iter_perms, product
from math import factorial, gcd, prod

from . import perm as P
from .ring import as_rational


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of ``n`` in lexicographically decreasing order."""
    def rec(rest, cap):
        if rest == 0:
            return [()]
        return [(p,) + tail for p in range(min(rest, cap), 0, -1) for tail in rec(rest - p, p)]
    return tuple(rec(n, n))


def class_size(ct):
    n = sum(ct)
    denom = 1
    for length, mult in Counter(ct).items():
        denom *= length ** mult * factorial(mult)
    return factorial(n) // denom


def centralizer_order(ct):
    return factorial(sum(ct)) // class_size(ct)


@dataclass(frozen=True)
class Character:
    """Rational class function on S_n keyed by cycle type."""
    n: int
    values: tuple  # aligned with partitions(n)

    @classmethod
    def from_dict(cls, n, mapping):
        return cls(n, tuple(as_rational(mapping.get(ct, 0)) for ct in partitions(n)))

    @classmethod
    def from_function(cls, n, fn):
        return cls(n, tuple(as_rational(fn(ct)) for ct in partitions(n)))

    def __call__(self, ct):
        return self.values[partitions(self.n).index(tuple(ct))]

    def as_dict(self):
        return dict(zip(partitions(self.n), self.values))

    def __add__(self, other):
        return Character(self.n, tuple(as_rational(a + b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return Character(self.n, tuple(as_rational(a - b) for a, b in zip(self.values, other.values)))

    def __rmul__(self, c):
        return Character(self.n, tuple(as_rational(c * a) for a in self.values))

    @property
    def degree(self):
        return self.values[partitions(self.n).index((1,) * self.n)] if self.n else 1


def zero_character(n):
    return Character(n, (0,) * len(partitions(n)))


def multiplicities(ct):
    """``(i_1, ..., i_n)``: number of cycles of each length."""
    n = sum(ct)
    c = Counter(ct)
    return tuple(c.get(length, 0) for length in range(1, n + 1))


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama

@lru_cache(maxsize=None)
def _mn(lam, mu):
    """chi_lam evaluated on cycle type mu (both tuples, same weight)."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((bset - {b}) | {nb}, reverse=True)
        L = len(new_beta)
        new_lam = tuple(x for x in (new_beta[i] - (L - 1 - i) for i in range(L)) if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def irreducible_character(lam):
    lam = tuple(lam)
    n = sum(lam)
    return Character(n, tuple(_mn(lam, ct) for ct in partitions(n)))


def dim_irrep(lam):
    return _mn(tuple(lam), (1,) * sum(lam))


def sign_character(n):
    return Character.from_function(n, lambda ct: (-1) ** (n - len(ct)))


def regular_character(n):
    return Character.from_function(n, lambda ct: factorial(n) if ct == (1,) * n else 0)


def inner_product(chi1, chi2):
    if chi1.n != chi2.n:
        raise ValueError("characters of different symmetric groups")
    n = chi1.n
    total = sum(class_size(ct) * a * b
                for ct, a, b in zip(partitions(n), chi1.values, chi2.values))
    return as_rational(Fraction(total, factorial(n)))


class NotACharacter(ValueError):
    pass


def decompose(chi):
    """``[(lam, m_lam)]`` with positive multiplicities, partitions in decreasing order."""
    out = []
    for lam in partitions(chi.n):
        m = inner_product(chi, irreducible_character(lam))
        if not isinstance(m, int) or m < 0:
            raise NotACharacter(f"not a genuine character: multiplicity of {lam} is {m}")
        if m:
            out.append((lam, m))
    return out


def format_partition(lam):
    return "V(" + ",".join(map(str, lam)) + ")"


def stable_label(lam, n=None):
    """Stable notation ``V(mu)_n`` for ``lam = (n - |mu|, mu)``."""
    lam = tuple(lam)
    if n is None:
        n = sum(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    mu = lam[1:]
    if mu and n - sum(mu) < mu[0]:
        return None
    return "V(" + ",".join(map(str, mu)) + f")_{n}"


def format_decomposition(decomp, stable=False):
    if not decomp:
        return "0"
    parts = []
    for lam, m in decomp:
        label = stable_label(lam) if stable else format_partition(lam)
        parts.append(label if m == 1 else f"{m}*{label}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# exact cyclotomic evaluation

@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial."""
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_divexact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = a[i + len(b) - 1] // b[-1]
        out[i] = coef
        for j, bj in enumerate(b):
            a[i + j] -= coef * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def cyclotomic_value(counts, order):
    """Exact value of ``sum_e counts[e] * zeta_order^e``; must be rational."""
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    poly = [0] * max(order, deg + 1)
    for e, c in counts.items():
        poly[e % order] += c
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for j, pj in enumerate(phi):
                poly[i - deg + j] -= c * pj
    if any(poly[1:deg]):
        raise ArithmeticError("induced character value is not rational")
    return poly[0]


# ---------------------------------------------------------------------------
# Z = C x| N and the one-dimensional character xi

@dataclass
class TypeGroupData:
    sizes: tuple
    odd_marks: tuple  # parity of each component mark degree
    equal_runs: list  # lists of block indices with equal (size, mark)
    order: int  # xi takes values in the order-th roots of unity
    elements: dict  # permutation -> exponent of zeta_order
    generators: list

    @property
    def n(self):
        return sum(self.sizes)


def type_group_data(sig, ring):
    sizes, marks = sig.sizes, sig.marks
    n = sum(sizes)
    t = len(sizes)
    starts = [1 + sum(sizes[:i]) for i in range(t)]
    blocks = [tuple(range(starts[i], starts[i] + sizes[i])) for i in range(t)]
    lcm = 1
    for s in sizes:
        lcm = lcm * s // gcd(lcm, s)
    order = 2 * lcm
    half = order // 2

    runs, i = [], 0
    while i < t:
        j = i
        while j + 1 < t and sizes[j + 1] == sizes[i] and marks[j + 1] == marks[i]:
            j += 1
        runs.append(list(range(i, j + 1)))
        i = j + 1
    odd = tuple(ring.degrees[h] & 1 for h in marks)

    def c_perm(exps):
        img = list(range(1, n + 1))
        for b, e in zip(blocks, exps):
            s = len(b)
            for r, v in enumerate(b):
                img[v - 1] = b[(r + e) % s]
        return tuple(img)

    def c_exp(exps):
        e_out = 0
        for s, e in zip(sizes, exps):
            e_out += e * (order // s)  # phi_s(c_s^e)
            if (s - 1) * e & 1:  # sign of c_s^e
                e_out += half
        return e_out % order

    def n_perm(run_perms):
        img = list(range(1, n + 1))
        for run, pi in zip(runs, run_perms):
            for a, b in zip(run, pi):
                for v, w in zip(blocks[a], blocks[b]):
                    img[v - 1] = w
        return tuple(img)

    def n_exp(run_perms):
        e_out = 0
        for run, pi in zip(runs, run_perms):
            s = sizes[run[0]]
            alpha_neg = (s & 1) == 0 if not odd[run[0]] else (s & 1) == 1
            # alpha(v) = (-1)^(s+1) for even marks, (-1)^s for odd marks
            if alpha_neg and P.sign(tuple(run.index(b) + 1 for b in pi)) == -1:
                e_out += half
        return e_out % order

    elements = {}
    c_choices = list(product(*[range(s) for s in sizes]))
    n_choices = list(product(*[list(_iter_perms(run)) for run in runs]))
    for nu in n_choices:
        pn, en = n_perm(nu), n_exp(nu)
        for exps in c_choices:
            z = P.compose(c_perm(exps), pn)
            if z in elements:
                raise AssertionError("C and N intersect nontrivially")
            elements[z] = (c_exp(exps) + en) % order

    gens = []
    for i in range(t):
        if sizes[i] > 1:
            exps = [0] * t
            exps[i] = 1
            gens.append(c_perm(exps))
    for r, run in enumerate(runs):
        for a in range(len(run) - 1):
            nu = [tuple(rr) for rr in runs]
            swapped = list(run)
            swapped[a], swapped[a + 1] = swapped[a + 1], swapped[a]
            nu[r] = tuple(swapped)
            gens.append(n_perm(nu))
    data = TypeGroupData(sizes, odd, runs, order, elements, gens)
    check_multiplicative(data)
    return data


def check_multiplicative(data):
    """xi(g z) = xi(g) xi(z) for generators g and all z in Z."""
    el = data.elements
    expected = prod(data.sizes) * prod(factorial(len(r)) for r in data.equal_runs)
    if len(el) != expected:
        raise AssertionError(f"|Z| = {len(el)}, expected {expected}")
    for g in data.generators:
        eg = el[g]
        for z, ez in el.items():
            gz = P.compose(g, z)
            if gz not in el:
                raise AssertionError("Z is not closed under multiplication")
            if el[gz] != (eg + ez) % data.order:
                raise AssertionError("xi is not multiplicative on Z")


def induced_character(data):
    """Ind_Z^{S_n}(xi), via the class-sum formula."""
    n = data.n
    by_class = {}
    for z, e in data.elements.items():
        ct = P.cycle_type(z)
        counts = by_class.setdefault(ct, Counter())
        counts[e] += 1
    size_z = len(data.elements)
    vals = {}
    for ct, counts in by_class.items():
        val = cyclotomic_value(counts, data.order)
        vals[ct] = Fraction(centralizer_order(ct) * val, size_z)
    return Character.from_dict(n, vals)


def induced_character_direct(data):
    """Ind_Z^{S_n}(xi) by summing xi(t^-1 g t) over all t in S_n."""
    n = data.n
    perms = P.all_permutations(n)
    vals = {}
    for ct in partitions(n):
        g = P.block_cycle_rep(ct)
        counts = Counter()
        for t in perms:
            conj = P.compose(P.inverse(t), P.compose(g, t))
            e = data.elements.get(conj)
            if e is not None:
                counts[e] += 1
        vals[ct] = Fraction(cyclotomic_value(counts, data.order), len(data.elements))
    return Character.from_dict(n, vals)


_TYPE_CHAR_CACHE = {}


def type_character(sig, ring):
    """Character of the type block as an induced one-dimensional character."""
    key = (sig.sizes, _mark_pattern(sig, ring))
    if key not in _TYPE_CHAR_CACHE:
        _TYPE_CHAR_CACHE[key] = induced_character(type_group_data(sig, ring))
    return _TYPE_CHAR_CACHE[key]


def _mark_pattern(sig, ring):
    """Only the equality pattern and parity of marks affects the character."""
    labels, out = {}, []
    for size, h in zip(sig.sizes, sig.marks):
        labels.setdefault((size, h), len(labels))
        out.append((labels[(size, h)], ring.degrees[h] & 1))
    return tuple(out)


def top_arnold_character(n):
    """eps_n Ind_{<c_n>}(phi_n)."""
    from .exterior import TypeSignature
    from .ring import cp_ring
    return type_character(TypeSignature((n,), (0,)), cp_ring(1))


def prime_multiplicity(lam, p):
    """``(dim V(lam) - chi_lam(c_p)) / p`` for the top type on p points."""
    lam = tuple(lam)
    val = Fraction(dim_irrep(lam) - _mn(lam, (p,)), p)
    return as_rational(val)
