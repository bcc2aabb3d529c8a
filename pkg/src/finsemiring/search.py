"""Backtracking completion of one Cayley table with constraint propagation.

The unknown table is filled cell by cell in row-major order.  Every
assignment is pushed through associativity (and, when the other table is
fixed, both distributive laws); any equation with three known cells forces
the fourth.  Since every equation is re-examined when its last cell gets a
value, a table that reaches the leaf satisfies all imposed laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .tables import Table


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    leaves: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.leaves += other.leaves


def complete_table(
    n: int,
    *,
    fixed: Optional[Table] = None,
    unknown_is: Optional[str] = None,
    commutative: bool = False,
    idempotent: bool = False,
    monotone: bool = False,
    stats: Optional[SearchStats] = None,
) -> Iterator[Table]:
    """Yield every associative table on ``0..n-1`` meeting the constraints.

    ``unknown_is`` is ``"add"`` or ``"mul"`` when ``fixed`` holds the other
    operation; the yielded tables then also distribute with it.  ``monotone``
    restricts entries to ``t[i][j] >= max(i, j)``.
    """
    if stats is None:
        stats = SearchStats()
    if (fixed is None) != (unknown_is is None):
        raise ValueError("fixed and unknown_is go together")
    T = [[-1] * n for _ in range(n)]
    trail: list[tuple[int, int]] = []
    F = fixed
    rng = range(n)

    def put(i, j, v, queue):
        cur = T[i][j]
        if cur != -1:
            return cur == v
        if monotone and v < (i if i > j else j):
            return False
        T[i][j] = v
        trail.append((i, j))
        queue.append((i, j))
        if commutative and i != j:
            if T[j][i] != -1:
                return T[j][i] == v
            T[j][i] = v
            trail.append((j, i))
            queue.append((j, i))
        return True

    def propagate(queue):
        while queue:
            i, j = queue.pop()
            v = T[i][j]
            # (i j) c = i (j c)
            Tv, Tj, Ti = T[v], T[j], T[i]
            for c in rng:
                t = Tj[c]
                if t == -1:
                    continue
                u = Tv[c]
                if u != -1:
                    if not put(i, t, u, queue):
                        return False
                else:
                    r = Ti[t]
                    if r != -1 and not put(v, c, r, queue):
                        return False
            # (a i) j = a (i j)
            for a in rng:
                s = T[a][i]
                if s == -1:
                    continue
                left = T[s][j]
                right = T[a][v]
                if left != -1:
                    if not put(a, v, left, queue):
                        return False
                elif right != -1 and not put(s, j, right, queue):
                    return False
            # cell (i, j) as the outer product in (x y) j with x y = i, or i (y z) with y z = j
            for x in rng:
                Tx = T[x]
                for y in rng:
                    if Tx[y] == i:
                        t = T[y][j]
                        if t != -1 and not put(x, t, v, queue):
                            return False
                    if Tx[y] == j:
                        u = Ti[x]
                        if u != -1 and not put(u, y, v, queue):
                            return False
            if F is None:
                continue
            if unknown_is == "add":
                # x(i+j) = xi + xj and (i+j)x = ix + jx with multiplication fixed
                for x in rng:
                    Fx = F[x]
                    if not put(Fx[i], Fx[j], Fx[v], queue):
                        return False
                    if not put(F[i][x], F[j][x], F[v][x], queue):
                        return False
            else:
                # i(j+z) = ij + iz and (i+z)j = ij + zj with addition fixed
                Fj, Fi, Fv = F[j], F[i], F[v]
                for z in rng:
                    w = Ti[z]
                    if w != -1 and not put(i, Fj[z], Fv[w], queue):
                        return False
                    w = T[z][j]
                    if w != -1 and not put(Fi[z], j, Fv[w], queue):
                        return False
        return True

    def undo(mark):
        while len(trail) > mark:
            i, j = trail.pop()
            T[i][j] = -1

    queue: list[tuple[int, int]] = []
    ok = True
    if idempotent:
        for x in rng:
            ok = ok and put(x, x, x, queue)
    if not ok or not propagate(queue):
        stats.prunes += 1
        return

    cells = [(i, j) for i in rng for j in rng]

    def dfs(start):
        k = start
        while k < len(cells) and T[cells[k][0]][cells[k][1]] != -1:
            k += 1
        if k == len(cells):
            stats.leaves += 1
            yield tuple(tuple(row) for row in T)
            return
        i, j = cells[k]
        lo = max(i, j) if monotone else 0
        for v in range(lo, n):
            stats.nodes += 1
            mark = len(trail)
            q: list[tuple[int, int]] = []
            if put(i, j, v, q) and propagate(q):
                yield from dfs(k + 1)
            else:
                stats.prunes += 1
            undo(mark)

    yield from dfs(0)
