import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finsemiring.congruences import (
    Partition,
    congruence_generated,
    congruence_lattice,
    doubling_congruence,
    is_congruence,
    is_congruence_simple,
    join,
    monolith,
    parse_partition,
    quotient,
)
from finsemiring.constructions import catalog_semiring
from finsemiring.enumeration import corpus
from finsemiring.errors import NotACongruence, OrderTooLarge
from finsemiring.tables import check_axioms

from oracles import blocks_of, brute_congruences


def blockset(p):
    return blocks_of(p.labels)


def test_partition_basics():
    p = Partition.from_blocks(5, [[1, 4], [0, 2]])
    assert p.labels == (0, 1, 0, 3, 1)
    assert p.num_blocks == 3
    assert p.same(1, 4) and not p.same(0, 1)
    assert str(p) == "0 1 0 3 1"
    assert parse_partition("0 1 0 3 1") == p
    assert Partition.identity(5).refines(p) and p.refines(Partition.full(5))
    assert Partition.from_keys("xyxzy") == p
    with pytest.raises(ValueError):
        Partition((1, 0))


def test_meet_and_refines():
    a = Partition.from_blocks(4, [[0, 1, 2]])
    b = Partition.from_blocks(4, [[1, 2, 3]])
    m = a.meet(b)
    assert m == Partition.from_blocks(4, [[1, 2]])
    assert m.refines(a) and m.refines(b) and not a.refines(b)


def test_p_congruences_match_all_partitions_oracle():
    p = catalog_semiring("P")
    lat = congruence_lattice(p)
    assert {blockset(c) for c in lat} == brute_congruences(p.add, p.mul)
    assert len(lat) == 5


def test_p_monolith_and_coatoms():
    p = catalog_semiring("P")
    mono = monolith(p)
    assert mono.exists and mono.partition == Partition.from_blocks(5, [[1, 4]])
    # rho = {0} | {1, a, b, c} is not among them: a*b = 0
    assert [str(c) for c in congruence_lattice(p).coatoms()] == ["0 1 0 1 1", "0 1 1 0 1"]


def test_simple_catalog():
    for name in ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"):
        assert is_congruence_simple(catalog_semiring(name))
    assert not is_congruence_simple(catalog_semiring("P"))


def test_generated_and_join():
    p = catalog_semiring("P")
    c = congruence_generated(p, [(1, 4)])
    assert c == monolith(p).partition
    full = join(p, congruence_generated(p, [(0, 2)]), congruence_generated(p, [(0, 3)]))
    assert full.is_full()


def test_quotient_and_errors():
    p = catalog_semiring("P")
    q = quotient(p, Partition.from_blocks(5, [[0, 2], [1, 3, 4]]))
    assert q.order == 2
    with pytest.raises(NotACongruence):
        quotient(p, Partition.from_blocks(5, [[1, 2, 3, 4]]))


def test_lattice_cap():
    s = check_axioms([[max(i, j) for j in range(9)] for i in range(9)], [[min(i, j) for j in range(9)] for i in range(9)])
    with pytest.raises(OrderTooLarge):
        congruence_lattice(s)


def test_doubling_congruence_on_s4():
    s4 = catalog_semiring("S4")
    assert doubling_congruence(s4).is_full()


# order <= 3 corpus against the all-partitions oracle, exhaustively
SMALL = corpus(3)


def test_small_corpus_lattices_exhaustive():
    for s in SMALL:
        assert {blockset(c) for c in congruence_lattice(s)} == brute_congruences(s.add, s.mul)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(SMALL) - 1), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=3))
def test_generated_congruence_is_least(idx, pairs):
    s = SMALL[idx]
    pairs = [(x % s.order, y % s.order) for x, y in pairs]
    c = congruence_generated(s, pairs)
    assert is_congruence(s, c)
    for d in congruence_lattice(s):
        if all(d.same(x, y) for x, y in pairs):
            assert c.refines(d)


def test_lattice_closed_under_meet():
    rng = random.Random(7)
    for s in rng.sample(SMALL, 20):
        lat = list(congruence_lattice(s))
        for a in lat:
            for b in lat:
                assert a.meet(b) in lat


def test_generated_by_zero_a_in_p_matches_oracle():
    p = catalog_semiring("P")
    c = congruence_generated(p, [(0, 2)])
    containing = [b for b in brute_congruences(p.add, p.mul) if any({0, 2} <= blk for blk in b)]
    least = max(containing, key=len)
    assert blockset(c) == least
    assert c.same(1, 4)
    assert congruence_generated(p, [(3, 3)]).is_identity()


def test_product_of_fields_is_not_subdirectly_irreducible():
    from finsemiring.tables import direct_product

    s1 = catalog_semiring("S1")
    assert not monolith(direct_product(s1, s1)).exists
    assert monolith(catalog_semiring("S7")).partition.is_full()


def test_trivial_quotients():
    s = catalog_semiring("S7")
    assert quotient(s, Partition.identity(3)) == s
    assert quotient(s, Partition.full(3)).order == 1
    assert doubling_congruence(catalog_semiring("S1")).is_full()
    assert doubling_congruence(catalog_semiring("S7")).is_identity()
