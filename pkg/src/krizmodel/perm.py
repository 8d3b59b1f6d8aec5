"""Permutations of {1..n} in one-line notation (tuples of 1-based images)."""
from __future__ import annotations

import re
from itertools import permutations as _iter_perms


def identity(n):
    return tuple(range(1, n + 1))


def compose(s, t):
    """``(s t)(v) = s(t(v))``."""
    return tuple(s[t[v] - 1] for v in range(len(t)))


def inverse(s):
    out = [0] * len(s)
    for v, img in enumerate(s, 1):
        out[img - 1] = v
    return tuple(out)


def cycles(s):
    seen, out = set(), []
    for start in range(1, len(s) + 1):
        if start in seen:
            continue
        cyc, v = [], start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = s[v - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(s):
    return tuple(sorted((len(c) for c in cycles(s)), reverse=True))


def sign(s):
    return -1 if sum(len(c) - 1 for c in cycles(s)) & 1 else 1


def from_cycles(n, cyc_list):
    img = list(range(1, n + 1))
    for cyc in cyc_list:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    out = tuple(img)
    if sorted(out) != list(range(1, n + 1)):
        raise ValueError("cycles are not disjoint")
    return out


def block_cycle_rep(partition):
    """Canonical representative: cycles on consecutive blocks."""
    n = sum(partition)
    cyc_list, start = [], 1
    for part in partition:
        cyc_list.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(n, cyc_list)


def coxeter(i, n):
    """The adjacent transposition ``(i, i+1)``."""
    return from_cycles(n, [(i, i + 1)])


def all_permutations(n):
    return [tuple(p) for p in _iter_perms(range(1, n + 1))]


def parse_permutation(text, n):
    """Parse ``(1 2 3)(4 5)`` or ``[2,3,1,5,4]``."""
    text = text.strip()
    if text.startswith("["):
        vals = [int(x) for x in re.findall(r"-?\d+", text)]
        if sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"{text!r} is not a permutation of 1..{n}")
        return tuple(vals)
    if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)*", text):
        raise ValueError(f"cannot parse permutation {text!r}")
    cyc_list = []
    for body in re.findall(r"\(([^)]*)\)", text):
        cyc = tuple(int(x) for x in re.findall(r"\d+", body))
        if any(not 1 <= v <= n for v in cyc):
            raise ValueError(f"cycle {cyc} out of range for n={n}")
        if cyc:
            cyc_list.append(cyc)
    return from_cycles(n, cyc_list)
