"""Named semirings and constructions: the catalog, End(L), End0(L),
step endomorphisms, zero/bi-absorber adjunction and projection semirings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Union

from .errors import NoBiAbsorbing, NoLeastElement, NotAnEndomorphism, NoZero, UnknownName
from .tables import (
    FiniteSemiring,
    Table,
    as_table,
    bi_absorbing_element,
    check_axioms,
    is_associative,
    zero_element,
)

Endomorphism = tuple[int, ...]


@dataclass(frozen=True)
class SemilatticeTable:
    join: Table

    def __post_init__(self):
        t = as_table(self.join)
        n = len(t)
        for x in range(n):
            if t[x][x] != x:
                raise ValueError(f"join is not idempotent at {x}")
            for y in range(n):
                if t[x][y] != t[y][x]:
                    raise ValueError(f"join is not commutative at ({x},{y})")
        if not is_associative(t):
            raise ValueError("join is not associative")
        object.__setattr__(self, "join", t)

    @property
    def order(self) -> int:
        return len(self.join)

    def leq(self, x: int, y: int) -> bool:
        return self.join[x][y] == y

    def greatest(self) -> int:
        top = 0
        for x in range(self.order):
            top = self.join[top][x]
        return top

    def least(self) -> Optional[int]:
        for x in range(self.order):
            if all(self.join[x][y] == y for y in range(self.order)):
                return x
        return None


def chain(k: int) -> SemilatticeTable:
    """The k-element chain 0 < 1 < ... < k-1 under max."""
    return SemilatticeTable([[max(x, y) for y in range(k)] for x in range(k)])


# -- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    value: Union[FiniteSemiring, SemilatticeTable]
    element_names: tuple[str, ...]

    @property
    def is_semiring(self) -> bool:
        return isinstance(self.value, FiniteSemiring)


_IDEMPOTENT_2 = [[0, 0], [0, 1]]

# (addition, multiplication, element names in index order)
_TABLES = {
    "S1": ([[0, 1], [1, 0]], _IDEMPOTENT_2, ("w", "a")),
    "S2": ([[0, 1], [1, 1]], _IDEMPOTENT_2, ("w", "a")),
    "S3": ([[0, 0], [0, 1]], _IDEMPOTENT_2, ("w", "a")),
    "S4": ([[0, 0], [0, 0]], _IDEMPOTENT_2, ("w", "a")),
    "S5": ([[0, 1], [1, 1]], [[0, 0], [1, 1]], ("a", "w")),
    "S6": ([[0, 1], [1, 1]], [[0, 1], [0, 1]], ("a", "w")),
    "S7": (
        [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
        [[0, 0, 0], [0, 1, 2], [2, 2, 2]],
        ("a", "b", "w"),
    ),
    "S8": (
        [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
        [[0, 0, 2], [0, 1, 2], [0, 2, 2]],
        ("a", "b", "w"),
    ),
    "P": (
        [
            [0, 1, 2, 3, 4],
            [1, 1, 4, 4, 4],
            [2, 4, 2, 4, 4],
            [3, 4, 4, 3, 4],
            [4, 4, 4, 4, 4],
        ],
        [
            [0, 0, 0, 0, 0],
            [0, 1, 2, 3, 4],
            [0, 2, 2, 0, 2],
            [0, 3, 0, 3, 3],
            [0, 4, 2, 3, 4],
        ],
        ("0", "1", "a", "b", "c"),
    ),
}

SEMIRING_NAMES = tuple(_TABLES)
CHAIN_CAP = 6


def catalog(name: str) -> CatalogEntry:
    key = name.strip()
    if key in _TABLES:
        add, mul, names = _TABLES[key]
        return CatalogEntry(key, check_axioms(add, mul), names)
    m = re.fullmatch(r"L(\d+)", key)
    if m and 1 <= int(m.group(1)) <= CHAIN_CAP:
        k = int(m.group(1))
        return CatalogEntry(key, chain(k), tuple(str(i) for i in range(k)))
    raise UnknownName(f"unknown catalog name {name!r}; try S1..S8, P, L1..L{CHAIN_CAP}")


def catalog_semiring(name: str) -> FiniteSemiring:
    entry = catalog(name)
    if not entry.is_semiring:
        raise UnknownName(f"{name!r} is a semilattice, not a semiring")
    return entry.value


def catalog_names() -> list[str]:
    return list(SEMIRING_NAMES) + [f"L{k}" for k in range(1, CHAIN_CAP + 1)]


# -- endomorphism semirings ---------------------------------------------------


class EndSemiring(NamedTuple):
    semiring: FiniteSemiring
    maps: tuple[Endomorphism, ...]


def endomorphisms(lat: SemilatticeTable) -> list[Endomorphism]:
    """All join-preserving self-maps, in lexicographic order of image tuples."""
    n, j = lat.order, lat.join
    out = []
    img = [0] * n

    def consistent(x):
        # pairs whose operands and join are all <= x have been assigned
        for y in range(x + 1):
            z = j[x][y]
            if z <= x and img[z] != j[img[x]][img[y]]:
                return False
            for u in range(y + 1):
                v = j[y][u]
                if v == x and img[x] != j[img[y]][img[u]]:
                    return False
        return True

    def extend(x):
        if x == n:
            out.append(tuple(img))
            return
        for v in range(n):
            img[x] = v
            if consistent(x):
                extend(x + 1)

    extend(0)
    return out


def _semiring_of_maps(lat: SemilatticeTable, maps: list[Endomorphism]) -> FiniteSemiring:
    j = lat.join
    index = {f: k for k, f in enumerate(maps)}
    add = [[index[tuple(j[f[x]][g[x]] for x in range(lat.order))] for g in maps] for f in maps]
    mul = [[index[tuple(f[g[x]] for x in range(lat.order))] for g in maps] for f in maps]
    return check_axioms(add, mul)


def end_semiring(lat: SemilatticeTable) -> EndSemiring:
    """End(L) under pointwise join and composition ``(f*g)(x) = f(g(x))``."""
    maps = endomorphisms(lat)
    return EndSemiring(_semiring_of_maps(lat, maps), tuple(maps))


def end0_semiring(lat: SemilatticeTable) -> EndSemiring:
    bottom = lat.least()
    if bottom is None:
        raise NoLeastElement("End0(L) needs a least element")
    maps = [f for f in endomorphisms(lat) if f[bottom] == bottom]
    return EndSemiring(_semiring_of_maps(lat, maps), tuple(maps))


def is_endomorphism(lat: SemilatticeTable, f: Endomorphism) -> bool:
    j = lat.join
    n = lat.order
    return all(f[j[x][y]] == j[f[x]][f[y]] for x in range(n) for y in range(n))


def step_endomorphism(lat: SemilatticeTable, a: int, b: int) -> Endomorphism:
    """``x -> 0`` for ``x <= a``, ``x -> b`` otherwise."""
    bottom = lat.least()
    if bottom is None:
        raise NoLeastElement("step maps need a least element")
    f = tuple(bottom if lat.leq(x, a) else b for x in range(lat.order))
    if not is_endomorphism(lat, f):
        raise NotAnEndomorphism(f"step map for a={a}, b={b} is {f}, which does not preserve joins")
    return f


# -- adjunctions and projections ----------------------------------------------


def _adjoin(s: FiniteSemiring, additively_neutral: bool) -> FiniteSemiring:
    n = s.order
    z = n
    add = [list(row) + [x if additively_neutral else z] for x, row in enumerate(s.add)]
    add.append([x if additively_neutral else z for x in range(n)] + [z])
    mul = [list(row) + [z] for row in s.mul]
    mul.append([z] * (n + 1))
    return check_axioms(add, mul)


def adjoin_zero(s: FiniteSemiring) -> FiniteSemiring:
    """Add a new zero ``z`` (index n) to a semiring with a bi-absorbing element."""
    if bi_absorbing_element(s) is None:
        raise NoBiAbsorbing("adjoin_zero expects a bi-absorbing element")
    return _adjoin(s, additively_neutral=True)


def adjoin_biabsorber(s: FiniteSemiring) -> FiniteSemiring:
    """Add a new bi-absorbing ``z`` (index n) to a semiring with a zero."""
    if zero_element(s) is None:
        raise NoZero("adjoin_biabsorber expects a zero")
    return _adjoin(s, additively_neutral=False)


def zig_zag(s: FiniteSemiring, max_order: int = 8) -> list[FiniteSemiring]:
    """Alternating adjunctions starting from ``s`` up to ``max_order`` elements.

    Returns the iterates of order ``|s|+1 .. max_order``.
    """
    out = []
    cur = s
    while cur.order < max_order:
        if bi_absorbing_element(cur) is not None:
            cur = adjoin_zero(cur)
        elif zero_element(cur) is not None:
            cur = adjoin_biabsorber(cur)
        else:
            raise NoZero("zig-zag needs a zero or a bi-absorbing element")
        out.append(cur)
    return out


class Side(Enum):
    LEFT = "left"  # ab = a
    RIGHT = "right"  # ab = b


def projection_semiring(lat: SemilatticeTable, side: Side) -> FiniteSemiring:
    n = lat.order
    if side is Side.LEFT:
        mul = [[x] * n for x in range(n)]
    else:
        mul = [list(range(n)) for _ in range(n)]
    return check_axioms(lat.join, mul)
