"""Canonical forms and (anti-)isomorphism tests.

The canonical form of a table tuple is its lexicographically least relabeling
over all n! permutations, tables compared in the given order (addition before
multiplication), each row-major.  The search keeps only permutations that
attain the minimum cell by cell, so most branches die after a few cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import OrderTooLarge
from .tables import Check, FiniteSemiring, Table, format_semiring, opposite

CANONICAL_ORDER_CAP = 8
_NUMPY_FROM = 6

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


@lru_cache(maxsize=None)
def _perm_arrays(n: int):
    inv = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    fwd = np.empty_like(inv)
    rows = np.arange(len(inv))[:, None]
    fwd[rows, inv] = np.arange(n)[None, :]
    return fwd, inv


def _canon_numpy(tables: Sequence[Table], n: int):
    fwd, inv = _perm_arrays(n)
    alive = np.arange(len(fwd))
    out = []
    for t in tables:
        arr = np.asarray(t, dtype=np.int64)
        for r in range(n):
            for c in range(n):
                vals = fwd[alive, arr[inv[alive, r], inv[alive, c]]]
                best = vals.min()
                alive = alive[vals == best]
                out.append(int(best))
    return tuple(out), tuple(int(v) for v in fwd[alive[0]])


def _canon_python(tables: Sequence[Table], n: int):
    alive = []
    for sigma in permutations(range(n)):
        pi = [0] * n
        for k, x in enumerate(sigma):
            pi[x] = k
        alive.append((pi, sigma))
    out = []
    for t in tables:
        for r in range(n):
            for c in range(n):
                best = n
                keep = []
                for pi, sigma in alive:
                    v = pi[t[sigma[r]][sigma[c]]]
                    if v < best:
                        best = v
                        keep = [(pi, sigma)]
                    elif v == best:
                        keep.append((pi, sigma))
                alive = keep
                out.append(best)
    return tuple(out), tuple(alive[0][0])


def canonical_key(tables: Sequence[Table], max_order: int = CANONICAL_ORDER_CAP):
    """Return ``(flat canonical entries, permutation original -> canonical)``."""
    n = len(tables[0])
    if n > max_order:
        raise OrderTooLarge(f"canonical forms are capped at order {max_order}, got {n}")
    if n >= _NUMPY_FROM:
        return _canon_numpy(tables, n)
    return _canon_python(tables, n)


def _unflatten(flat, n, k):
    size = n * n
    return tuple(
        tuple(tuple(flat[t * size + r * n : t * size + (r + 1) * n]) for r in range(n)) for t in range(k)
    )


def canonical_table(t: Table) -> Table:
    flat, _ = canonical_key((t,))
    return _unflatten(flat, len(t), 1)[0]


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    order: int
    canonical_add: Table
    canonical_mul: Table
    witness_permutation: tuple[int, ...]

    @property
    def key(self) -> tuple:
        return (self.order, self.canonical_add, self.canonical_mul)

    def semiring(self) -> FiniteSemiring:
        return FiniteSemiring(self.canonical_add, self.canonical_mul)

    def text(self) -> str:
        return format_semiring(self.semiring())

    def digest(self) -> str:
        return f"{fnv1a64(self.text().encode('ascii')):016x}"

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


def canonical_form(s: FiniteSemiring, max_order: int = CANONICAL_ORDER_CAP) -> CanonicalForm:
    flat, perm = canonical_key((s.add, s.mul), max_order)
    add, mul = _unflatten(flat, s.order, 2)
    return CanonicalForm(s.order, add, mul, perm)


def is_isomorphic(s: FiniteSemiring, t: FiniteSemiring) -> Check:
    """Witness is a permutation p with ``p[i]`` the image in ``t`` of ``i`` in ``s``."""
    if s.order != t.order:
        return Check(False)
    cs, ct = canonical_form(s), canonical_form(t)
    if cs != ct:
        return Check(False)
    inv_t = [0] * t.order
    for i, p in enumerate(ct.witness_permutation):
        inv_t[p] = i
    return Check(True, tuple(inv_t[p] for p in cs.witness_permutation))


def is_anti_isomorphic(s: FiniteSemiring, t: FiniteSemiring) -> Check:
    return is_isomorphic(opposite(s), t)
