"""Ideals, bi-ideals, the A(S)/B(S) split and the two-block relation rho."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .congruences import Partition
from .errors import NoAbsorbingElement
from .tables import Check, FiniteSemiring, mult_absorbing


class Kind(Enum):
    IDEAL = "ideal"  # I+I, SI, IS inside I
    BI_IDEAL = "bi-ideal"  # S+I, SI, IS inside I
    SEMIGROUP_IDEAL = "semigroup-ideal"  # SI, IS inside I; multiplication only


@dataclass(frozen=True)
class SubsetClosure:
    members: frozenset
    kind: Kind

    def sorted(self) -> list[int]:
        return sorted(self.members)


def ideal_generated(s: FiniteSemiring, seed: Iterable[int], kind: Kind = Kind.IDEAL) -> SubsetClosure:
    members = set(seed)
    if not members:
        raise ValueError("seed must be non-empty")
    a, m = s.add, s.mul
    work = list(members)
    while work:
        x = work.pop()
        new = []
        for c in s.elements:
            new.append(m[c][x])
            new.append(m[x][c])
            if kind is Kind.BI_IDEAL:
                new.append(a[c][x])
        if kind is Kind.IDEAL:
            new.extend(a[x][y] for y in members)
        for y in new:
            if y not in members:
                members.add(y)
                work.append(y)
    return SubsetClosure(frozenset(members), kind)


def is_closed_under(s: FiniteSemiring, subset: Iterable[int], kind: Kind) -> bool:
    sub = set(subset)
    return ideal_generated(s, sub, kind).members == sub


def _simplicity(s: FiniteSemiring, kind: Kind) -> Check:
    if s.order < 2:
        return Check(False, None)
    for i, j in combinations(s.elements, 2):
        closure = ideal_generated(s, (i, j), kind)
        if len(closure.members) < s.order:
            return Check(False, closure.sorted())
    return Check(True)


def is_ideal_simple(s: FiniteSemiring) -> Check:
    """Every ideal with at least two elements is the whole semiring (and |S| >= 2).

    A failure carries the ideal generated by the first offending pair.
    """
    return _simplicity(s, Kind.IDEAL)


def is_bi_ideal_simple(s: FiniteSemiring) -> Check:
    return _simplicity(s, Kind.BI_IDEAL)


def is_semigroup_ideal_simple(s: FiniteSemiring) -> Check:
    """Same test for the multiplicative semigroup alone."""
    return _simplicity(s, Kind.SEMIGROUP_IDEAL)


@dataclass(frozen=True)
class ABDecomposition:
    w: int
    A: frozenset
    B: frozenset
    neither: frozenset


def sas_plus_s(s: FiniteSemiring, a: int) -> set[int]:
    sas = {s.mul[s.mul[x][a]][y] for x in s.elements for y in s.elements}
    return {s.add[u][v] for u in sas for v in s.elements}


def ab_decomposition(s: FiniteSemiring) -> ABDecomposition:
    w = mult_absorbing(s)
    if w is None:
        raise NoAbsorbingElement("A(S)/B(S) need a multiplicatively absorbing element")
    A, B, neither = set(), set(), set()
    for a in s.elements:
        t = sas_plus_s(s, a)
        if t == {w}:
            A.add(a)
        elif len(t) == s.order:
            B.add(a)
        else:
            neither.add(a)
    # for |S| = 1 the element lands in A; {w} = S, so B would hold it too
    if s.order == 1:
        B.add(w)
    return ABDecomposition(w, frozenset(A), frozenset(B), frozenset(neither))


def rho_partition(s: FiniteSemiring) -> Partition:
    """Blocks ``{w}`` and ``S \\ {w}`` for the multiplicatively absorbing ``w``."""
    w = mult_absorbing(s)
    if w is None:
        raise NoAbsorbingElement("rho needs a multiplicatively absorbing element")
    if s.order < 2:
        raise ValueError("rho needs at least two elements")
    rest = [x for x in s.elements if x != w]
    return Partition.from_blocks(s.order, [[w], rest])


def nonabsorbing_part(s: FiniteSemiring) -> Optional[list[int]]:
    w = mult_absorbing(s)
    if w is None:
        return None
    return [x for x in s.elements if x != w]
