from finsemiring.constructions import catalog_semiring
from finsemiring.divisibility import finite_band_check, is_mult_divisible, power_profile
from finsemiring.enumeration import corpus
from finsemiring.tables import check_axioms, predicates

from oracles import divisible_direct

Z3 = check_axioms([[(i + j) % 3 for j in range(3)] for i in range(3)], [[(i * j) % 3 for j in range(3)] for i in range(3)])


def test_z3_not_divisible():
    chk = is_mult_divisible(Z3)
    assert not chk and chk.witness == (2, 2)
    assert finite_band_check(Z3)


def test_idempotent_profiles():
    prof = power_profile(catalog_semiring("S7"))
    assert prof.preperiod == 0 and prof.period == 1
    assert prof.image(17) == {0, 1, 2}
    assert is_mult_divisible(catalog_semiring("S1"))


def test_profile_matches_direct_powers():
    z5 = check_axioms([[(i + j) % 5 for j in range(5)] for i in range(5)], [[(i * j) % 5 for j in range(5)] for i in range(5)])
    prof = power_profile(z5)
    for n in range(1, 30):
        assert prof.power_map(n) == tuple(pow(b, n, 5) for b in range(5))


def test_cycle_detection_agrees_with_direct_check():
    for s in corpus(4):
        assert bool(is_mult_divisible(s)) == divisible_direct(s.mul)
        assert bool(is_mult_divisible(s)) == predicates(s).mult_idempotent
        assert finite_band_check(s)
