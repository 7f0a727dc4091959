import random
from fractions import Fraction

import pytest

from conftest import REFERENCE_PAIRS, get_code, random_code, random_mask
from jacweight.averages import (
    AverageResult,
    all_ones_point,
    avg_jacobi,
    avg_joint_jacobi,
    avg_joint_jacobi_value,
    brute_avg_jacobi,
    brute_avg_joint_jacobi,
    brute_delta,
    compositions,
    delta,
    delta_closed,
    intersection_point,
    intersection_size,
    monte_carlo_delta,
    multinomial,
    _mc_delta_python,
)
from jacweight.codes import LinearCode
from jacweight.enumerators import collapse, macwilliams_second, macwilliams_single
from jacweight.refvalues import REFERENCE_ROWS, matches_reference
from jacweight.rings import field_ring, modular_ring

F2 = field_ring(2)
F3 = field_ring(3)
Z4 = modular_ring(4)

FROZEN_DELTAS = {
    ("e8", "e8", 1): Fraction(24, 5),
    ("e8", "e8", 2): Fraction(32, 5),
    ("e8", "e8", 3): Fraction(48, 5),
    ("e8x2", "e8x2", 1): Fraction(384, 65),
    ("e8x2", "e8x2", 2): Fraction(512, 65),
    ("e8x2", "e8x2", 3): Fraction(768, 65),
    ("d16plus", "e8x2", 1): Fraction(384, 65),
    ("d16plus", "e8x2", 2): Fraction(512, 65),
    ("d16plus", "e8x2", 3): Fraction(768, 65),
    ("d16plus", "d16plus", 1): Fraction(384, 65),
    ("d16plus", "d16plus", 2): Fraction(512, 65),
    ("d16plus", "d16plus", 3): Fraction(768, 65),
    ("g24", "g24", 1): Fraction(25280, 4199),
    ("g24", "g24", 2): Fraction(101120, 12597),
    ("g24", "g24", 3): Fraction(50560, 4199),
    ("g24", "g24", 4): Fraction(84224, 4199),
    ("g24", "g24", 5): Fraction(454400, 12597),
    ("d24plus", "d24plus", 1): Fraction(3482880, 572033),
    ("d24plus", "d24plus", 2): Fraction(4643840, 572033),
    ("d24plus", "d24plus", 3): Fraction(6965760, 572033),
    ("g24", "d24plus", 1): Fraction(1920, 323),
    ("g24", "d24plus", 2): Fraction(2560, 323),
    ("g24", "d24plus", 3): Fraction(3840, 323),
}


def front_mask(n: int, k: int):
    return (1,) * k + (0,) * (n - k)


def test_multinomial_convention():
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(5, (5,)) == 1
    assert multinomial(0, ()) == 1
    # parts that do not compose n contribute zero, not an error
    assert multinomial(3, (1, 1)) == 0
    assert multinomial(2, (3, -1)) == 0


def test_compositions_lexicographic():
    got = list(compositions(3, 2))
    assert got == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert got == sorted(got)
    assert len(list(compositions(2, 3))) == 6
    assert list(compositions(0, 2)) == [(0, 0)]
    assert list(compositions(2, 0)) == []


def test_intersection_point_binary_rule():
    pt = intersection_point(F2)
    zeros = {i for i, v in enumerate(pt) if v == 0}
    # (0,1,0) and (1,0,0) in base-2 variable order
    assert zeros == {2, 4}
    assert len(pt) == 8
    q4 = intersection_point(Z4)
    assert len(q4) == 64
    for a1 in range(4):
        for a2 in range(4):
            for a3 in range(4):
                idx = (a1 * 4 + a2) * 4 + a3
                expect = Fraction(0) if a1 != a2 and a3 == 0 else Fraction(1)
                assert q4[idx] == expect


def test_intersection_size_trivials():
    e8 = get_code("e8")
    assert intersection_size(e8, e8, (1,) * 8) == e8.size * e8.size
    assert intersection_size(e8, e8, (0,) * 8) == e8.size
    rep = LinearCode(F2, 2, ((1, 1),))
    assert intersection_size(rep, rep, (0, 1)) == 2


def test_brute_average_matches_hand_computation():
    code_c = LinearCode(F2, 2, ((1, 0),))
    code_d = LinearCode(F2, 2, ((0, 0),))
    got = brute_avg_joint_jacobi(code_c, code_d, (0, 1))

    def mono(*syms):
        vec = [0] * 8
        for a1, a2, a3 in syms:
            vec[(a1 * 2 + a2) * 2 + a3] += 1
        return tuple(vec)

    assert got.terms == {
        mono((0, 0, 0), (0, 0, 1)): Fraction(1),
        mono((1, 0, 0), (0, 0, 1)): Fraction(1, 2),
        mono((0, 0, 0), (1, 0, 1)): Fraction(1, 2),
    }


def test_brute_is_gated_by_length():
    big = LinearCode(F2, 9, ((1,) * 9,))
    with pytest.raises(ValueError):
        brute_avg_jacobi(big, (0,) * 9)
    with pytest.raises(ValueError):
        brute_delta(big, big, (0,) * 9)


def test_pair_validation():
    a = LinearCode(F2, 3, ((1, 1, 0),))
    b = LinearCode(F3, 3, ((1, 1, 0),))
    c = LinearCode(F2, 2, ((1, 1),))
    with pytest.raises(ValueError):
        avg_joint_jacobi(a, b, (0, 0, 0))
    with pytest.raises(ValueError):
        avg_joint_jacobi(a, c, (0, 0, 0))
    with pytest.raises(ValueError):
        delta_closed(a, a, (0, 0))


@pytest.mark.parametrize("ring,seed", [(F2, 1), (F3, 2), (Z4, 3)])
def test_closed_forms_match_brute(ring, seed):
    rng = random.Random(seed)
    for trial in range(2):
        n = 4 + trial
        code_c = random_code(ring, n, rows=2, rng=rng)
        code_d = random_code(ring, n, rows=1, rng=rng)
        w = random_mask(ring, n, rng)
        assert avg_jacobi(code_c, w) == brute_avg_jacobi(code_c, w)
        assert avg_joint_jacobi(code_c, code_d, w) == brute_avg_joint_jacobi(
            code_c, code_d, w
        )
        assert delta_closed(code_c, code_d, w) == brute_delta(code_c, code_d, w)


def test_avg_jacobi_fixed_by_invariant_code_and_mask():
    for ring in (F2, Z4):
        rep = LinearCode(ring, 3, ((1, 1, 1),))
        w = (0, 0, 0)
        from jacweight.enumerators import jacobi

        assert avg_jacobi(rep, w) == jacobi(rep, w)


def test_avg_joint_against_zero_code_collapses_to_avg_jacobi():
    for ring in (F2, Z4):
        code = LinearCode(ring, 3, ((1, 0, 1), (0, 1, 1)))
        zero = LinearCode(ring, 3, ((0, 0, 0),))
        w = (0, 1, 0)
        joint = avg_joint_jacobi(code, zero, w)
        assert collapse(joint, (0, 2)) == avg_jacobi(code, w)


def test_left_slot_permutation_invariance():
    rng = random.Random(17)
    for ring in (F2, Z4):
        code_c = random_code(ring, 5, rows=2, rng=rng)
        code_d = random_code(ring, 5, rows=1, rng=rng)
        w = random_mask(ring, 5, rng)
        sigma = tuple(rng.sample(range(5), 5))
        assert avg_joint_jacobi(code_c.permute(sigma), code_d, w) == avg_joint_jacobi(
            code_c, code_d, w
        )


def test_distribution_sufficiency():
    # both row spans have the same Jacobi table against the zero mask
    d1 = LinearCode(F2, 2, ((1, 0),))
    d2 = LinearCode(F2, 2, ((0, 1),))
    code_c = LinearCode(F2, 2, ((1, 1),))
    w = (0, 0)
    from jacweight.codes import jacobi_table

    assert jacobi_table(d1, w) == jacobi_table(d2, w)
    assert avg_joint_jacobi(code_c, d1, w) == avg_joint_jacobi(code_c, d2, w)


def test_swapping_the_codes_changes_the_average():
    zero = LinearCode(F2, 2, ((0, 0),))
    span = LinearCode(F2, 2, ((1, 0),))
    w = (0, 0)
    assert avg_joint_jacobi(zero, span, w) != avg_joint_jacobi(span, zero, w)


def test_permuting_both_codes_changes_the_average():
    zero = LinearCode(F2, 2, ((0, 0),))
    span = LinearCode(F2, 2, ((1, 0),))
    w = (0, 1)
    sigma = (1, 0)
    moved = avg_joint_jacobi(zero.permute(sigma), span.permute(sigma), w)
    assert moved != avg_joint_jacobi(zero, span, w)


def test_all_ones_evaluations_of_averages():
    code_c = get_code("z4_small")
    code_d = LinearCode(Z4, 3, ((1, 1, 1),))
    w = (0, 1, 2)
    ones2 = all_ones_point(Z4, 2)
    ones3 = all_ones_point(Z4, 3)
    assert brute_avg_jacobi(code_c, w).evaluate(ones2) == code_c.size
    assert avg_jacobi(code_c, w).evaluate(ones2) == code_c.size
    joint = avg_joint_jacobi(code_c, code_d, w)
    assert joint.evaluate(ones3) == code_c.size * code_d.size
    assert avg_joint_jacobi_value(code_c, code_d, w, ones3) == (
        code_c.size * code_d.size
    )


def test_transforms_commute_with_averaging():
    span = LinearCode(F2, 2, ((1, 0),))
    self_dual = LinearCode(F2, 2, ((1, 1),))
    for w in ((0, 0), (0, 1)):
        joint = avg_joint_jacobi(self_dual, self_dual, w)
        assert macwilliams_second(joint, self_dual.size) == joint
    aj = macwilliams_single(avg_jacobi(span, (0, 1)), span.size)
    assert aj == avg_jacobi(span.dual(), (0, 1))
    code_c = LinearCode(F2, 4, ((1, 0, 1, 1), (0, 1, 0, 1)))
    code_d = LinearCode(F2, 4, ((1, 1, 1, 0),))
    w = (0, 1, 0, 0)
    direct = avg_joint_jacobi(code_c, code_d.dual(), w)
    routed = macwilliams_second(avg_joint_jacobi(code_c, code_d, w), code_d.size)
    assert direct == routed


def test_delta_three_routes_on_e8():
    e8 = get_code("e8")
    w = front_mask(8, 2)
    closed = delta_closed(e8, e8, w)
    point = intersection_point(F2)
    expanded = avg_joint_jacobi(e8, e8, w).evaluate(point)
    streamed = avg_joint_jacobi_value(e8, e8, w, point)
    exhaustive = brute_delta(e8, e8, w)
    assert closed == expanded == streamed == exhaustive == Fraction(32, 5)


@pytest.mark.parametrize("pair", REFERENCE_PAIRS, ids=lambda p: f"{p[0]}-{p[1]}")
def test_closed_form_equals_streamed_evaluation(pair):
    code_c = get_code(pair[0])
    code_d = get_code(pair[1])
    point = intersection_point(code_c.ring)
    for k in (1, 2, 3):
        w = front_mask(code_c.n, k)
        assert delta_closed(code_c, code_d, w) == avg_joint_jacobi_value(
            code_c, code_d, w, point
        )


def test_frozen_reference_fractions():
    for (cn, dn, k), expected in FROZEN_DELTAS.items():
        code_c = get_code(cn)
        code_d = get_code(dn)
        value = delta_closed(code_c, code_d, front_mask(code_c.n, k))
        assert value == expected, (cn, dn, k)


def test_printed_table_agreement():
    disagreements = []
    for cn, dn, k, printed in REFERENCE_ROWS:
        value = FROZEN_DELTAS[(cn, dn, k)]
        if not matches_reference(value, printed):
            disagreements.append((cn, dn, k))
    # one reference entry carries corrupted digits; see notes on g24 wt 3
    assert disagreements == [("g24", "g24", 3)]


def test_g24_weight_three_is_twice_weight_one():
    assert FROZEN_DELTAS[("g24", "g24", 3)] == 2 * FROZEN_DELTAS[("g24", "g24", 1)]
    assert FROZEN_DELTAS[("e8", "e8", 3)] == 2 * FROZEN_DELTAS[("e8", "e8", 1)]
    assert (
        FROZEN_DELTAS[("d24plus", "d24plus", 3)]
        == 2 * FROZEN_DELTAS[("d24plus", "d24plus", 1)]
    )


def test_mask_placement_invariance_on_e8():
    e8 = get_code("e8")
    for k in (1, 2):
        values = set()
        import itertools

        for support in itertools.combinations(range(8), k):
            w = tuple(1 if i in support else 0 for i in range(8))
            values.add(delta_closed(e8, e8, w))
        assert len(values) == 1


def test_delta_on_trivial_pair():
    zero = LinearCode(F3, 4, ((0, 0, 0, 0),))
    for k in range(5):
        assert delta_closed(zero, zero, front_mask(4, k)) == 1


def test_monte_carlo_determinism_and_fields():
    e8 = get_code("e8")
    w = front_mask(8, 1)
    a = monte_carlo_delta(e8, e8, w, samples=500, seed=9)
    b = monte_carlo_delta(e8, e8, w, samples=500, seed=9)
    assert a == b
    assert a.method == "mc"
    assert a.samples == 500
    assert a.seed == 9
    assert a.stderr is not None
    assert abs(a.value - 4.8) <= 3 * a.stderr
    with pytest.raises(ValueError):
        monte_carlo_delta(e8, e8, w, samples=0, seed=1)


def test_monte_carlo_all_ones_mask_has_no_variance():
    e8 = get_code("e8")
    res = monte_carlo_delta(e8, e8, (1,) * 8, samples=40, seed=3)
    assert res.value == float(e8.size * e8.size)
    assert res.stderr == 0.0


def test_monte_carlo_python_fallback():
    f9 = field_ring(3, 2)
    zero = LinearCode(f9, 16, ((0,) * 16,))
    res = monte_carlo_delta(zero, zero, (0,) * 16, samples=20, seed=4)
    assert res.value == 1.0
    assert res.stderr == 0.0
    e8 = get_code("e8")
    w = front_mask(8, 1)
    py = _mc_delta_python(e8, e8, w, samples=2000, seed=11)
    assert abs(py.value - 4.8) <= 3 * py.stderr


def test_delta_dispatcher():
    e8 = get_code("e8")
    w = front_mask(8, 1)
    closed = delta(e8, e8, w)
    assert closed == AverageResult(value=Fraction(24, 5), method="closed")
    brute = delta(e8, e8, w, method="brute")
    assert brute.value == Fraction(24, 5)
    assert brute.method == "brute"
    mc = delta(e8, e8, w, method="mc", samples=200, seed=1)
    assert mc.samples == 200
    with pytest.raises(ValueError):
        delta(e8, e8, w, method="guess")
