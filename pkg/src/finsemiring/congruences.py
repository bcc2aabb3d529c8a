"""Congruences of finite semirings: closure, lattice, simplicity, quotients."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import NotACongruence, OrderTooLarge
from .tables import FiniteSemiring, check_axioms

LATTICE_ORDER_CAP = 8


@dataclass(frozen=True, order=True)
class Partition:
    """Equivalence on ``0..n-1``; ``labels[i]`` is the least element of i's block."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        for i, lab in enumerate(labels):
            if lab > i or labels[lab] != lab:
                raise ValueError(f"labels {labels} are not canonical")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = list(range(n))
        for block in blocks:
            block = sorted(block)
            for x in block:
                labels[x] = block[0]
        return cls(tuple(labels))

    @classmethod
    def from_keys(cls, keys) -> "Partition":
        """Group indices by equal key."""
        first = {}
        return cls(tuple(first.setdefault(k, i) for i, k in enumerate(keys)))

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return sum(1 for i, lab in enumerate(self.labels) if lab == i)

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return list(out.values())

    def same(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def is_identity(self) -> bool:
        return self.labels == tuple(range(len(self.labels)))

    def is_full(self) -> bool:
        return all(lab == 0 for lab in self.labels)

    def refines(self, other: "Partition") -> bool:
        """True if every block of self lies inside a block of other."""
        return all(other.labels[i] == other.labels[lab] for i, lab in enumerate(self.labels))

    def meet(self, other: "Partition") -> "Partition":
        return Partition.from_keys(zip(self.labels, other.labels))

    def pairs(self) -> list[tuple[int, int]]:
        return [(lab, i) for i, lab in enumerate(self.labels) if lab != i]

    def __str__(self) -> str:
        return " ".join(map(str, self.labels))


def parse_partition(text: str) -> Partition:
    return Partition.from_keys(int(t) for t in text.split())


def is_congruence(s: FiniteSemiring, p: Partition) -> bool:
    return _first_instability(s, p) is None


def _first_instability(s: FiniteSemiring, p: Partition):
    lab = p.labels
    a, m = s.add, s.mul
    for x in s.elements:
        for y in range(x + 1, s.order):
            if lab[x] != lab[y]:
                continue
            for c in s.elements:
                if (
                    lab[a[x][c]] != lab[a[y][c]]
                    or lab[m[x][c]] != lab[m[y][c]]
                    or lab[m[c][x]] != lab[m[c][y]]
                ):
                    return (x, y, c)
    return None


def congruence_generated(s: FiniteSemiring, pairs: Iterable[tuple[int, int]]) -> Partition:
    """Smallest congruence containing ``pairs`` (union-find plus worklist)."""
    n = s.order
    parent = list(range(n))
    a, m = s.add, s.mul

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(pairs)
    while work:
        u, v = work.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        if ru < rv:
            parent[rv] = ru
        else:
            parent[ru] = rv
        # only the merging pair needs its translates; transitivity covers the rest
        for c in range(n):
            work.append((a[u][c], a[v][c]))
            work.append((m[u][c], m[v][c]))
            work.append((m[c][u], m[c][v]))
    # union by min keeps each root the least element of its block
    return Partition(tuple(find(x) for x in range(n)))


def principal_congruences(s: FiniteSemiring) -> dict[tuple[int, int], Partition]:
    return {(i, j): congruence_generated(s, [(i, j)]) for i, j in combinations(s.elements, 2)}


def join(s: FiniteSemiring, p: Partition, q: Partition) -> Partition:
    return congruence_generated(s, p.pairs() + q.pairs())


@dataclass(frozen=True)
class CongruenceLattice:
    order: int
    congruences: tuple[Partition, ...]

    def __len__(self) -> int:
        return len(self.congruences)

    def __contains__(self, p) -> bool:
        return p in self.congruences

    def __iter__(self):
        return iter(self.congruences)

    def coatoms(self) -> list[Partition]:
        proper = [c for c in self.congruences if not c.is_full()]
        return [c for c in proper if not any(d != c and c.refines(d) for d in proper)]

    def atoms(self) -> list[Partition]:
        nontriv = [c for c in self.congruences if not c.is_identity()]
        return [c for c in nontriv if not any(d != c and d.refines(c) for d in nontriv)]


def congruence_lattice(s: FiniteSemiring, max_order: int = LATTICE_ORDER_CAP) -> CongruenceLattice:
    if s.order > max_order:
        raise OrderTooLarge(f"congruence lattice capped at order {max_order}, got {s.order}")
    found = {Partition.identity(s.order)}
    found.update(principal_congruences(s).values())
    frontier = list(found)
    while frontier:
        new = []
        for p in frontier:
            for q in list(found):
                r = join(s, p, q)
                if r not in found:
                    found.add(r)
                    new.append(r)
        frontier = new
    return CongruenceLattice(s.order, tuple(sorted(found)))


def is_congruence_simple(s: FiniteSemiring) -> bool:
    if s.order < 2:
        return False
    return all(congruence_generated(s, [(i, j)]).is_full() for i, j in combinations(s.elements, 2))


@dataclass(frozen=True)
class Monolith:
    exists: bool
    partition: Optional[Partition] = None


def monolith(s: FiniteSemiring) -> Monolith:
    """Least non-identity congruence, when there is one.

    Computed as the meet of all non-identity principal congruences.
    """
    if s.order < 2:
        return Monolith(False)
    acc = Partition.full(s.order)
    for p in principal_congruences(s).values():
        acc = acc.meet(p)
    if acc.is_identity():
        return Monolith(False)
    return Monolith(True, acc)


def is_subdirectly_irreducible(s: FiniteSemiring) -> bool:
    return monolith(s).exists


def quotient(s: FiniteSemiring, c: Partition) -> FiniteSemiring:
    bad = _first_instability(s, c)
    if bad is not None:
        raise NotACongruence(f"partition {c} is not stable at (x, y, c) = {bad}")
    reps = sorted(set(c.labels))
    index = {r: k for k, r in enumerate(reps)}
    cls = [index[lab] for lab in c.labels]
    add = [[cls[s.add[x][y]] for y in reps] for x in reps]
    mul = [[cls[s.mul[x][y]] for y in reps] for x in reps]
    return check_axioms(add, mul)


def doubling_congruence(s: FiniteSemiring) -> Partition:
    """Kernel of ``x -> x + x``."""
    p = Partition.from_keys(s.add[x][x] for x in s.elements)
    if not is_congruence(s, p):
        raise NotACongruence(f"x+x kernel {p} is unstable; tables are not a semiring")
    return p
