"""Multiplicative divisibility: every a is an n-th power for every n >= 1.

The power maps ``p_n(b) = b^n`` satisfy ``p_{n+1}(b) = p_n(b) * b``, so the
sequence ``p_1, p_2, ...`` is determined by its current term and, in a finite
semigroup, runs into a cycle.  Checking the image of each distinct map seen
before the first repeat therefore covers every n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tables import Check, FiniteSemiring, is_mult_idempotent


@dataclass(frozen=True)
class PowerProfile:
    # maps[k] is the tuple (b^(k+1) for b in S)
    maps: tuple[tuple[int, ...], ...]
    preperiod: int
    period: int

    def power_map(self, n: int) -> tuple[int, ...]:
        if n <= self.preperiod:
            return self.maps[n - 1]
        k = self.preperiod + (n - 1 - self.preperiod) % self.period
        return self.maps[k]

    def image(self, n: int) -> frozenset:
        return frozenset(self.power_map(n))


def power_profile(s: FiniteSemiring) -> PowerProfile:
    m = s.mul
    cur = tuple(s.elements)
    seen = {cur: 0}
    maps = [cur]
    while True:
        cur = tuple(m[p][b] for b, p in enumerate(cur))
        if cur in seen:
            start = seen[cur]
            return PowerProfile(tuple(maps), start, len(maps) - start)
        seen[cur] = len(maps)
        maps.append(cur)


def is_mult_divisible(s: FiniteSemiring) -> Check:
    """Witness on failure is the least ``(n, a)`` with ``a`` not an n-th power."""
    prof = power_profile(s)
    for k, pm in enumerate(prof.maps):
        img = set(pm)
        for a in s.elements:
            if a not in img:
                return Check(False, (k + 1, a))
    return Check(True)


def finite_band_check(s: FiniteSemiring) -> bool:
    """Divisible implies idempotent; False would be an internal inconsistency."""
    return (not is_mult_divisible(s)) or is_mult_idempotent(s)
