"""Finite semirings as pairs of Cayley tables.

Elements are the integers ``0..n-1``; a table is a tuple of rows and
``table[i][j]`` is the result of ``i o j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, NamedTuple, Optional, Sequence

from .errors import (
    NotABand,
    NotAssociativeAdd,
    NotAssociativeMul,
    NotCommutativeAdd,
    NotLeftDistributive,
    NotRightDistributive,
    ParseError,
    TableShapeError,
)

Table = tuple[tuple[int, ...], ...]


class Check(NamedTuple):
    """Boolean verdict plus optional evidence; truthiness follows ``ok``."""

    ok: bool
    witness: Any = None

    def __bool__(self):
        return self.ok


def as_table(rows: Iterable[Iterable[int]]) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise TableShapeError("a table needs at least one element")
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableShapeError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise TableShapeError(f"entry ({i},{j})={v} outside 0..{n - 1}")
    return table


@dataclass(frozen=True)
class FiniteSemiring:
    add: Table
    mul: Table

    def __post_init__(self):
        object.__setattr__(self, "add", as_table(self.add))
        object.__setattr__(self, "mul", as_table(self.mul))
        if len(self.add) != len(self.mul):
            raise TableShapeError("addition and multiplication tables differ in order")

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    def sum(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.add[acc][x]
        return acc

    def prod(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul[acc][x]
        return acc


def _first_nonassociative(t: Table):
    n = len(t)
    for x, y, z in product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            return (x, y, z)
    return None


def is_associative(t: Table) -> bool:
    return _first_nonassociative(t) is None


def check_axioms(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> FiniteSemiring:
    """Validate a table pair and return it as a semiring.

    Axioms are checked in a fixed order and the first failure raises with
    the lexicographically smallest witness.
    """
    s = FiniteSemiring(add, mul)
    a, m, n = s.add, s.mul, s.order
    w = _first_nonassociative(a)
    if w:
        raise NotAssociativeAdd(w)
    for x, y in product(range(n), repeat=2):
        if a[x][y] != a[y][x]:
            raise NotCommutativeAdd((x, y))
    w = _first_nonassociative(m)
    if w:
        raise NotAssociativeMul(w)
    for x, y, z in product(range(n), repeat=3):
        if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
            raise NotLeftDistributive((x, y, z))
    for x, y, z in product(range(n), repeat=3):
        if m[a[y][z]][x] != a[m[y][x]][m[z][x]]:
            raise NotRightDistributive((x, y, z))
    return s


def relabel(s: FiniteSemiring, perm: Sequence[int]) -> FiniteSemiring:
    """Image of ``s`` under the bijection ``i -> perm[i]``."""
    n = s.order
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    add = tuple(tuple(perm[s.add[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    mul = tuple(tuple(perm[s.mul[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
    return FiniteSemiring(add, mul)


# -- predicates -------------------------------------------------------------


@dataclass(frozen=True)
class PredicateReport:
    mult_idempotent: bool
    add_idempotent: bool
    bi_idempotent: bool
    commutative_mul: bool
    add_cancellative: bool
    boolean_ring: bool
    # flag name -> elements on which the law fails
    counterexamples: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {
            k: getattr(self, k)
            for k in (
                "mult_idempotent",
                "add_idempotent",
                "bi_idempotent",
                "commutative_mul",
                "add_cancellative",
                "boolean_ring",
            )
        }
        out["counterexamples"] = {k: list(v) for k, v in self.counterexamples.items()}
        return out


def _idempotency_failure(t: Table):
    for x in range(len(t)):
        if t[x][x] != x:
            return (x,)
    return None


def _commutativity_failure(t: Table):
    n = len(t)
    for x, y in product(range(n), repeat=2):
        if t[x][y] != t[y][x]:
            return (x, y)
    return None


def _cancellation_failure(t: Table):
    n = len(t)
    for a, b, c in product(range(n), repeat=3):
        if a != b and t[a][c] == t[b][c]:
            return (a, b, c)
    return None


def mult_absorbing(s: FiniteSemiring) -> Optional[int]:
    """The multiplicatively absorbing element, if any (it is unique)."""
    for w in s.elements:
        if all(s.mul[w][x] == w and s.mul[x][w] == w for x in s.elements):
            return w
    return None


def add_neutral(s: FiniteSemiring) -> Optional[int]:
    for e in s.elements:
        if all(s.add[e][x] == x for x in s.elements):
            return e
    return None


def zero_element(s: FiniteSemiring) -> Optional[int]:
    w = mult_absorbing(s)
    if w is not None and all(s.add[w][x] == x for x in s.elements):
        return w
    return None


def bi_absorbing_element(s: FiniteSemiring) -> Optional[int]:
    w = mult_absorbing(s)
    if w is not None and all(s.add[w][x] == w for x in s.elements):
        return w
    return None


def is_mult_idempotent(s: FiniteSemiring) -> bool:
    return _idempotency_failure(s.mul) is None


def is_add_idempotent(s: FiniteSemiring) -> bool:
    return _idempotency_failure(s.add) is None


def is_commutative(s: FiniteSemiring) -> bool:
    return _commutativity_failure(s.mul) is None


def predicates(s: FiniteSemiring) -> PredicateReport:
    cx = {}
    mi = _idempotency_failure(s.mul)
    ai = _idempotency_failure(s.add)
    cm = _commutativity_failure(s.mul)
    ac = _cancellation_failure(s.add)
    for name, w in (
        ("mult_idempotent", mi),
        ("add_idempotent", ai),
        ("commutative_mul", cm),
        ("add_cancellative", ac),
    ):
        if w is not None:
            cx[name] = w
    if mi is not None or ai is not None:
        cx["bi_idempotent"] = mi if mi is not None else ai

    # additively cancellative + zero + additive inverses + commutative idempotent mult
    boolean = None
    z = zero_element(s)
    if ac is not None:
        boolean = ac
    elif z is None:
        boolean = ()
    else:
        for x in s.elements:
            if not any(s.add[x][y] == z for y in s.elements):
                boolean = (x,)
                break
        else:
            boolean = cm if cm is not None else mi
    if boolean is not None:
        cx["boolean_ring"] = boolean
    return PredicateReport(
        mult_idempotent=mi is None,
        add_idempotent=ai is None,
        bi_idempotent=mi is None and ai is None,
        commutative_mul=cm is None,
        add_cancellative=ac is None,
        boolean_ring=boolean is None,
        counterexamples=cx,
    )


@dataclass(frozen=True)
class ElementProfile:
    element: int
    is_left_mult_absorbing: bool
    is_right_mult_absorbing: bool
    is_mult_absorbing: bool
    is_add_absorbing: bool
    is_bi_absorbing: bool
    is_zero: bool
    is_mult_neutral: bool
    is_add_neutral: bool


def classify_elements(s: FiniteSemiring) -> list[ElementProfile]:
    out = []
    el = s.elements
    for w in el:
        left = all(s.mul[w][x] == w for x in el)  # wS = {w}
        right = all(s.mul[x][w] == w for x in el)  # Sw = {w}
        add_abs = all(s.add[w][x] == w for x in el)
        add_neu = all(s.add[x][w] == x for x in el)
        mult_neu = all(s.mul[x][w] == x and s.mul[w][x] == x for x in el)
        absorbing = left and right
        out.append(
            ElementProfile(
                element=w,
                is_left_mult_absorbing=left,
                is_right_mult_absorbing=right,
                is_mult_absorbing=absorbing,
                is_add_absorbing=add_abs,
                is_bi_absorbing=absorbing and add_abs,
                is_zero=absorbing and add_neu,
                is_mult_neutral=mult_neu,
                is_add_neutral=add_neu,
            )
        )
    return out


# -- constructions on tables --------------------------------------------------


def restrict(s: FiniteSemiring, subset: Iterable[int]) -> FiniteSemiring:
    """Subsemiring on ``subset`` (must be closed), re-indexed in ascending order."""
    keep = sorted(set(subset))
    index = {x: k for k, x in enumerate(keep)}
    try:
        add = [[index[s.add[x][y]] for y in keep] for x in keep]
        mul = [[index[s.mul[x][y]] for y in keep] for x in keep]
    except KeyError:
        raise ValueError(f"{keep} is not closed under the operations") from None
    return FiniteSemiring(add, mul)


def is_closed(s: FiniteSemiring, subset: Iterable[int]) -> bool:
    keep = set(subset)
    return all(s.add[x][y] in keep and s.mul[x][y] in keep for x in keep for y in keep)


def transpose(t: Table) -> Table:
    return tuple(zip(*t))


def opposite(s: FiniteSemiring) -> FiniteSemiring:
    return check_axioms(s.add, transpose(s.mul))


def direct_product(s: FiniteSemiring, t: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; the pair (i, j) gets index ``i*|T| + j``."""
    m = t.order
    pairs = [(i, j) for i in s.elements for j in t.elements]

    def op(sa, ta):
        return [[sa[i][k] * m + ta[j][l] for (k, l) in pairs] for (i, j) in pairs]

    return check_axioms(op(s.add, t.add), op(s.mul, t.mul))


def band_law_check(mul: Sequence[Sequence[int]]):
    """Check ``b = bab`` whenever ``b`` lies in the principal ideal ``BaB``.

    Returns ``Check(True)`` or ``Check(False, (a, b))``.  For a band the law
    always holds, so a failure means the tables or this code are broken.
    """
    t = as_table(mul)
    n = len(t)
    if _idempotency_failure(t) is not None or not is_associative(t):
        raise NotABand("multiplication is not an idempotent semigroup")
    for a in range(n):
        ideal = {t[t[x][a]][y] for x in range(n) for y in range(n)}
        for b in sorted(ideal):
            if t[t[b][a]][b] != b:
                return Check(False, (a, b))
    return Check(True)


# -- text format ----------------------------------------------------------------


def format_table(t: Table) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in t)


def format_semiring(s: FiniteSemiring) -> str:
    return f"{s.order}\n{format_table(s.add)}\n\n{format_table(s.mul)}\n"


def _parse_rows(lines: list[str], n: int, what: str) -> Table:
    if len(lines) != n:
        raise ParseError(f"{what} table: expected {n} rows, got {len(lines)}")
    rows = []
    for k, line in enumerate(lines):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as e:
            raise ParseError(f"{what} table row {k}: {e}") from None
        if len(row) != n:
            raise ParseError(f"{what} table row {k}: expected {n} entries, got {len(row)}")
        for v in row:
            if not 0 <= v < n:
                raise ParseError(f"{what} table row {k}: entry {v} outside 0..{n - 1}")
        rows.append(tuple(row))
    return tuple(rows)


def _parse_header(text: str):
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise ParseError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1:
        raise ParseError("order must be positive")
    return n, lines[1:]


def parse_tables(text: str) -> tuple[Table, Table]:
    """Parse the two-table text format into ``(add, mul)`` without axiom checks."""
    n, body = _parse_header(text)
    try:
        gap = body.index("")
    except ValueError:
        raise ParseError("missing blank line between the two tables") from None
    add = _parse_rows(body[:gap], n, "addition")
    rest = [ln for ln in body[gap + 1 :]]
    while rest and rest[-1] == "":
        rest.pop()
    mul = _parse_rows(rest, n, "multiplication")
    return add, mul


def parse_semiring(text: str) -> FiniteSemiring:
    return check_axioms(*parse_tables(text))


def parse_table(text: str) -> Table:
    """Single-table variant (used for semilattices)."""
    n, body = _parse_header(text)
    return _parse_rows([ln for ln in body if ln], n, "operation")
