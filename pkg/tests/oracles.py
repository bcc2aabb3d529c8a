"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the package beyond plain tuples of tuples.
"""

from itertools import permutations, product


def tables(n, commutative=False):
    cells = [(i, j) for i in range(n) for j in range(n) if not commutative or i <= j]
    for vals in product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for (i, j), v in zip(cells, vals):
            t[i][j] = v
            t[j][i] = v if commutative else t[j][i]
        yield tuple(tuple(r) for r in t)


def associative(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def distributive(add, mul):
    n = len(add)
    r = range(n)
    return all(
        mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]] and mul[add[y][z]][x] == add[mul[y][x]][mul[z][x]]
        for x in r
        for y in r
        for z in r
    )


def relabel(t, p):
    """Table of the copy where old element i is called p[i]."""
    n = len(t)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[p[i]][p[j]] = p[t[i][j]]
    return tuple(tuple(r) for r in out)


def brute_canonical(*ts):
    n = len(ts[0])
    return min(tuple(relabel(t, p) for t in ts) for p in permutations(range(n)))


def brute_isomorphic(s, t):
    n = len(s[0])
    if n != len(t[0]):
        return False
    return any(all(relabel(a, p) == b for a, b in zip(s, t)) for p in permutations(range(n)))


def naive_semiring_classes(n, mult_idempotent=False):
    """Every (add, mul) on n elements, deduplicated by brute-force canonical form."""
    adds = [t for t in tables(n, commutative=True) if associative(t)]
    muls = [t for t in tables(n) if associative(t)]
    if mult_idempotent:
        muls = [m for m in muls if all(m[x][x] == x for x in range(n))]
    found = set()
    for a in adds:
        for m in muls:
            if distributive(a, m):
                found.add(brute_canonical(a, m))
    return found


def all_partitions(n):
    """Set partitions of range(n) as canonical label tuples (first-occurrence numbering)."""
    def rec(i, labels, k):
        if i == n:
            yield tuple(labels)
            return
        for lab in range(k + 1):
            labels.append(lab)
            yield from rec(i + 1, labels, max(k, lab + 1))
            labels.pop()

    yield from rec(0, [], 0)


def stable(add, mul, labels):
    n = len(add)
    for x in range(n):
        for y in range(n):
            if labels[x] != labels[y]:
                continue
            for c in range(n):
                if labels[add[x][c]] != labels[add[y][c]]:
                    return False
                if labels[mul[x][c]] != labels[mul[y][c]]:
                    return False
                if labels[mul[c][x]] != labels[mul[c][y]]:
                    return False
    return True


def brute_congruences(add, mul):
    """All congruences as sets of blocks (frozensets), independent of labeling."""
    n = len(add)
    out = set()
    for labels in all_partitions(n):
        if stable(add, mul, labels):
            out.add(blocks_of(labels))
    return out


def blocks_of(labels):
    groups = {}
    for x, lab in enumerate(labels):
        groups.setdefault(lab, set()).add(x)
    return frozenset(frozenset(g) for g in groups.values())


def brute_semilattice_classes(n):
    found = set()
    for t in tables(n, commutative=True):
        if all(t[x][x] == x for x in range(n)) and associative(t):
            found.add(brute_canonical(t))
    return found


def join_preserving_maps(join):
    n = len(join)
    return sorted(
        f
        for f in product(range(n), repeat=n)
        if all(f[join[x][y]] == join[f[x]][f[y]] for x in range(n) for y in range(n))
    )


def divisible_direct(mul, upto=20):
    n = len(mul)
    for k in range(1, upto + 1):
        img = set()
        for b in range(n):
            p = b
            for _ in range(k - 1):
                p = mul[p][b]
            img.add(p)
        if len(img) != n:
            return False
    return True


def brute_ideal_simple(add, mul, bi=False):
    """Every subset with >= 2 elements closed as an ideal (bi-ideal) is the whole set."""
    n = len(add)
    if n < 2:
        return False
    r = range(n)
    for mask in range(1, 2**n - 1):
        sub = {x for x in r if mask >> x & 1}
        if len(sub) < 2:
            continue
        ok = all(mul[s][i] in sub and mul[i][s] in sub for i in sub for s in r)
        if bi:
            ok = ok and all(add[s][i] in sub for i in sub for s in r)
        else:
            ok = ok and all(add[i][j] in sub for i in sub for j in sub)
        if ok:
            return False
    return True
