import json

import pytest

from finsemiring.constructions import catalog_semiring
from finsemiring.enumeration import (
    ConstraintSet,
    enumerate_semilattices,
    enumerate_semirings,
    semilattice_tables,
    write_result,
)
from finsemiring.errors import OrderTooLarge
from finsemiring.morphisms import canonical_form
from finsemiring.search import SearchStats, complete_table
from finsemiring.tables import check_axioms, is_associative

from oracles import brute_semilattice_classes, naive_semiring_classes


@pytest.mark.parametrize(
    "kwargs, counts",
    [
        ({}, [1, 8, 113, 3492]),
        ({"commutative": True}, [1, 6, 63, 1140]),
        ({"idempotent": True}, [1, 4, 35, 604]),
        ({"commutative": True, "idempotent": True}, [1, 2, 9, 76]),
    ],
)
def test_labeled_semigroup_counts(kwargs, counts):
    assert [sum(1 for _ in complete_table(n, **kwargs)) for n in range(1, 5)] == counts


def test_completions_are_associative():
    for t in complete_table(3):
        assert is_associative(t)


def test_completion_against_fixed_table():
    s = catalog_semiring("S7")
    muls = list(complete_table(3, fixed=s.add, unknown_is="mul", idempotent=True))
    assert s.mul in muls
    for m in muls:
        check_axioms(s.add, m)
    with pytest.raises(ValueError):
        list(complete_table(2, fixed=s.add))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_naive_oracle(n):
    got = {(cf.canonical_add, cf.canonical_mul) for cf in enumerate_semirings(n).classes}
    assert got == naive_semiring_classes(n)


def test_mult_idempotent_matches_naive_oracle():
    got = {(cf.canonical_add, cf.canonical_mul) for cf in enumerate_semirings(3, ConstraintSet(mult_idempotent=True)).classes}
    assert got == naive_semiring_classes(3, mult_idempotent=True)
    assert len(got) == 43


def test_class_counts():
    # orders 1..3 confirmed by the naive oracle; order 4 frozen from this search
    assert [len(enumerate_semirings(n).classes) for n in range(1, 5)] == [1, 10, 132, 2341]


def test_constrained_counts():
    bi = ConstraintSet(mult_idempotent=True, add_idempotent=True)
    assert [len(enumerate_semirings(n, bi).classes) for n in range(2, 6)] == [4, 23, 166, 1379]
    mi = ConstraintSet(mult_idempotent=True)
    assert [len(enumerate_semirings(n, mi).classes) for n in range(2, 5)] == [6, 43, 381]


def test_semilattices():
    assert [len(semilattice_tables(n)) for n in range(1, 7)] == [1, 1, 2, 5, 15, 53]
    for n in range(1, 5):
        assert {(t,) for t in semilattice_tables(n)} == brute_semilattice_classes(n)
    # the 3-chain and the join of two atoms (no least element)
    assert sorted(lat.least() is not None for lat in enumerate_semilattices(3)) == [False, True]


def test_filters_and_counts():
    c = ConstraintSet(mult_idempotent=True, congruence_simple_filter=True)
    res = enumerate_semirings(2, c)
    assert res.counts["generated"] == 6 and res.counts["congruence_simple_filter"] == 6
    res = enumerate_semirings(2, ConstraintSet(mult_idempotent=True, has_mult_absorbing=True))
    assert len(res.classes) == 4
    assert c.describe() == "mult_idempotent,congruence_simple_filter"


def test_caps():
    with pytest.raises(OrderTooLarge):
        enumerate_semirings(5)
    with pytest.raises(OrderTooLarge):
        enumerate_semirings(6, ConstraintSet(mult_idempotent=True, add_idempotent=True))
    with pytest.raises(OrderTooLarge):
        semilattice_tables(7)
    with pytest.raises(ValueError):
        enumerate_semirings(0)


def test_parallel_matches_serial():
    c = ConstraintSet(mult_idempotent=True)
    a = enumerate_semirings(4, c)
    b = enumerate_semirings(4, c, threads=2)
    assert [x.key for x in a.classes] == [x.key for x in b.classes]


def test_write_result(tmp_path):
    res = enumerate_semirings(3, ConstraintSet(mult_idempotent=True, add_idempotent=True, congruence_simple_filter=True))
    out = write_result(res, tmp_path / "r")
    files = sorted(p.name for p in out.iterdir())
    digests = sorted(canonical_form(catalog_semiring(n)).digest() + ".txt" for n in ("S7", "S8"))
    assert files == sorted(digests + ["manifest.txt", "result.json"])
    manifest = dict(line.split("=", 1) for line in (out / "manifest.txt").read_text().splitlines())
    assert manifest["class_count"] == "2" and manifest["mode"] == "restricted" and manifest["order"] == "3"
    assert {"nodes_visited", "wall_ms", "constraints", "prunes"} <= manifest.keys()
    assert json.loads((out / "result.json").read_text())["class_count"] == 2


def test_stats_accumulate():
    st = SearchStats()
    list(complete_table(3, stats=st))
    assert st.leaves == 113 and st.nodes > st.leaves
