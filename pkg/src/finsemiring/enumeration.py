"""Exhaustive enumeration of small semirings and semilattices up to isomorphism.

One table is fixed to a representative of each isomorphism class of its own
kind, then the other table is completed by ``search.complete_table`` under
associativity and both distributive laws.  Every semiring is isomorphic to
one whose fixed table is exactly such a representative, so nothing is lost;
the duplicates that remain are removed by canonical form.

When addition is idempotent the addition is fixed first (semilattices are
few and admit a cheap order-compatible labeling); otherwise multiplication
is fixed first.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Optional

from .congruences import is_congruence_simple
from .constructions import SemilatticeTable
from .divisibility import is_mult_divisible
from .errors import OrderTooLarge
from .ideals import is_bi_ideal_simple, is_ideal_simple
from .morphisms import CanonicalForm, _unflatten, canonical_form, canonical_key
from .search import SearchStats, complete_table
from .tables import FiniteSemiring, Table, check_axioms, mult_absorbing

MAX_ORDER = 4
MAX_ORDER_BI_IDEMPOTENT = 5
MAX_SEMILATTICE_ORDER = 6


@dataclass(frozen=True)
class ConstraintSet:
    mult_idempotent: bool = False
    add_idempotent: bool = False
    commutative_mul: bool = False
    has_mult_absorbing: bool = False
    congruence_simple_filter: bool = False
    ideal_simple_filter: bool = False
    bi_ideal_simple_filter: bool = False
    mult_divisible_filter: bool = False

    def active(self) -> list[str]:
        return [f.name for f in fields(self) if getattr(self, f.name)]

    def describe(self) -> str:
        return ",".join(self.active()) or "none"


_FILTERS = {
    "has_mult_absorbing": lambda s: mult_absorbing(s) is not None,
    "congruence_simple_filter": is_congruence_simple,
    "ideal_simple_filter": lambda s: bool(is_ideal_simple(s)),
    "bi_ideal_simple_filter": lambda s: bool(is_bi_ideal_simple(s)),
    "mult_divisible_filter": lambda s: bool(is_mult_divisible(s)),
}


@dataclass
class EnumerationResult:
    order: int
    constraints: ConstraintSet
    classes: list[CanonicalForm]
    counts: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    mode: str = "full"

    def semirings(self) -> list[FiniteSemiring]:
        return [c.semiring() for c in self.classes]

    def manifest_lines(self) -> list[str]:
        return [
            f"order={self.order}",
            f"constraints={self.constraints.describe()}",
            f"class_count={len(self.classes)}",
            f"nodes_visited={self.stats.get('nodes', 0)}",
            f"prunes={self.stats.get('prunes', 0)}",
            f"wall_ms={self.stats.get('wall_ms', 0)}",
            f"mode={self.mode}",
        ] + [f"count.{k}={v}" for k, v in self.counts.items()]

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "constraints": asdict(self.constraints),
            "mode": self.mode,
            "class_count": len(self.classes),
            "counts": dict(self.counts),
            "stats": dict(self.stats),
            "classes": [
                {"digest": c.digest(), "add": [list(r) for r in c.canonical_add], "mul": [list(r) for r in c.canonical_mul]}
                for c in self.classes
            ],
        }


def _check_bounds(n: int, c: ConstraintSet) -> None:
    if n < 1:
        raise ValueError("order must be positive")
    cap = MAX_ORDER_BI_IDEMPOTENT if (c.mult_idempotent and c.add_idempotent) else MAX_ORDER
    if n > cap:
        raise OrderTooLarge(f"enumeration at order {n} exceeds the cap {cap} for constraints {c.describe()}")


def _class_reps(tables, n) -> list[Table]:
    """Canonical representatives of single tables, sorted."""
    reps = {}
    for t in tables:
        flat, _ = canonical_key((t,))
        reps.setdefault(flat, None)
    return sorted(_unflatten(flat, n, 1)[0] for flat in reps)


def semilattice_tables(n: int, stats: Optional[SearchStats] = None) -> list[Table]:
    if n > MAX_SEMILATTICE_ORDER:
        raise OrderTooLarge(f"semilattice enumeration capped at order {MAX_SEMILATTICE_ORDER}")
    # every finite semilattice has a labeling with x <= x+y numerically
    gen = complete_table(n, commutative=True, idempotent=True, monotone=True, stats=stats)
    return _class_reps(gen, n)


def enumerate_semilattices(n: int) -> list[SemilatticeTable]:
    return [SemilatticeTable(t) for t in semilattice_tables(n)]


def _complete_one(args):
    """Worker: all partners of one fixed representative, as canonical keys."""
    n, fixed, unknown_is, c = args
    stats = SearchStats()
    if unknown_is == "add":
        gen = complete_table(
            n, fixed=fixed, unknown_is="add", commutative=True, idempotent=c.add_idempotent, stats=stats
        )
        pairs = ((a, fixed) for a in gen)
    else:
        gen = complete_table(
            n,
            fixed=fixed,
            unknown_is="mul",
            commutative=c.commutative_mul,
            idempotent=c.mult_idempotent,
            stats=stats,
        )
        pairs = ((fixed, m) for m in gen)
    keys = set()
    candidates = 0
    for add, mul in pairs:
        candidates += 1
        flat, _ = canonical_key((add, mul))
        keys.add(flat)
    return keys, candidates, stats


def enumerate_semirings(
    n: int,
    constraints: Optional[ConstraintSet] = None,
    *,
    threads: int = 1,
    mode: Optional[str] = None,
) -> EnumerationResult:
    """``mode`` is only recorded; by default it is ``restricted`` when addition
    is forced idempotent and ``full`` otherwise."""
    c = constraints or ConstraintSet()
    if mode is None:
        mode = "restricted" if c.add_idempotent else "full"
    _check_bounds(n, c)
    t0 = time.perf_counter()
    stats = SearchStats()
    if c.add_idempotent:
        fixed_reps = semilattice_tables(n, stats)
        unknown_is = "mul"
    else:
        gen = complete_table(n, commutative=c.commutative_mul, idempotent=c.mult_idempotent, stats=stats)
        fixed_reps = _class_reps(gen, n)
        if c.has_mult_absorbing:
            fixed_reps = [m for m in fixed_reps if _table_has_absorbing(m)]
        unknown_is = "add"

    jobs = [(n, rep, unknown_is, c) for rep in fixed_reps]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_complete_one, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        parts = [_complete_one(job) for job in jobs]

    keys = set()
    candidates = 0
    for k, cand, st in parts:
        keys |= k
        candidates += cand
        stats.merge(st)

    classes = []
    for flat in sorted(keys):
        add, mul = _unflatten(flat, n, 2)
        s = check_axioms(add, mul)  # guard against a search bug
        classes.append(canonical_form(s))
    counts = {"fixed_table_reps": len(fixed_reps), "candidates": candidates, "generated": len(classes)}
    for name in c.active():
        check = _FILTERS.get(name)
        if check is None:
            continue
        classes = [cf for cf in classes if check(cf.semiring())]
        counts[name] = len(classes)
    classes.sort(key=lambda cf: cf.key)
    wall_ms = int(round((time.perf_counter() - t0) * 1000))
    return EnumerationResult(
        order=n,
        constraints=c,
        classes=classes,
        counts=counts,
        stats={"nodes": stats.nodes, "prunes": stats.prunes, "leaves": stats.leaves, "wall_ms": wall_ms},
        mode=mode,
    )


def _table_has_absorbing(m: Table) -> bool:
    n = len(m)
    return any(all(m[w][x] == w and m[x][w] == w for x in range(n)) for w in range(n))


def corpus(max_order: int, constraints: Optional[ConstraintSet] = None, threads: int = 1) -> list[FiniteSemiring]:
    """All classes of orders 1..max_order, in order then canonical order."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semirings(n, constraints, threads=threads).semirings())
    return out


def write_result(result: EnumerationResult, outdir) -> Path:
    """Write ``<digest>.txt`` per class, ``manifest.txt`` and ``result.json``."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for cf in result.classes:
        (out / f"{cf.digest()}.txt").write_text(cf.text())
    (out / "manifest.txt").write_text("\n".join(result.manifest_lines()) + "\n")
    (out / "result.json").write_text(json.dumps(result.as_dict(), indent=2) + "\n")
    return out


def default_threads() -> int:
    return max(1, min(4, os.cpu_count() or 1))
