import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import signed_perms
from signed_ess.bruhat import (
    catalog_S,
    catalog_W,
    leq_A,
    leq_B,
    minimal_not_below,
    minimal_not_below_S,
    rank_A,
    rank_B,
    supremum,
)
from signed_ess.essential import (
    BasicTriple,
    InvalidTripleError,
    base_of,
    basic_inverse,
    basic_length,
    basic_leq_via_typeA,
    basic_perm_A,
    basic_signed,
    bigrassmannians,
    classify_exception,
    count_basic,
    dissecting_t_A,
    dissecting_u,
    enumerate_basic,
    essential_set_A,
    essential_set_B,
    essential_set_C,
    essential_to_json,
    maximal_basic_below,
    n_min,
    reflect,
    rwy_via_bijection,
    rwy_via_bijection_A,
)
from signed_ess.perm_core import (
    WindowPermutation,
    compose,
    identity,
    inverse,
    iota,
    is_bigrassmannian,
    length,
    longest_element,
    pad,
    parse,
    window_longest,
)


def triples(ts):
    return {BasicTriple(*t) for t in ts}


def small(*values):
    return WindowPermutation(1, tuple(values))


# ---------------------------------------------------------------- reflection and basic elements


def test_reflect_examples():
    assert reflect((3, 4, 3)).as_tuple() == (9, -3, -2)
    assert reflect((1, 1, 1)).as_tuple() == (2, 0, 0)
    assert reflect(reflect((1, 1, 2))).as_tuple() == (1, 1, 2)


def test_basic_perm_A_examples():
    v = basic_perm_A((3, -1, 2))
    assert v.lo == -4 and v.values == (-4, -3, -2, 2, 3, 4, -1, 0, 1)
    assert basic_perm_A((3, 4, 2), "small").values == (1, 3, 4, 5, 2)
    with pytest.raises(InvalidTripleError):
        basic_perm_A((0, 1, 1))
    with pytest.raises(InvalidTripleError):
        basic_perm_A((3, 2, 2), "small")
    with pytest.raises(ValueError):
        basic_perm_A((1, 1, 1), "diagonal")


def test_small_basic_inverse_rule():
    # the inverse of v(k, p, q) is v(k + q - p, q, p): swap p and q, then recount
    assert inverse(basic_perm_A((3, 4, 2), "small")).values == (1, 5, 2, 3, 4)
    assert basic_perm_A((1, 2, 4), "small").values == (1, 5, 2, 3, 4)
    for n in range(2, 7):
        for k, p, q in itertools.product(range(1, n + 1), repeat=3):
            if q + k <= n and p >= k > p - q:
                v = basic_perm_A((k, p, q), "small", n)
                assert inverse(v) == basic_perm_A((k + q - p, q, p), "small", n)


def test_basic_perm_A_is_minimal_with_rank():
    # Bruhat-minimal element of S on [-2, 2] with rank_A(., p, q) >= k
    cat = catalog_S(-2, 2)
    for k, p, q in itertools.product(range(1, 5), range(-1, 3), range(-1, 3)):
        if k > max(0, 1 - p - q) and max(abs(p), abs(p + k - 1), abs(q), abs(q + k - 1)) <= 2:
            hits = [v for v in cat.elements if rank_A(v, p, q) >= k]
            mins = [v for v in hits if not any(u != v and leq_A(u, v) for u in hits)]
            assert mins == [basic_perm_A((k, p, q), n=2)]


def test_basic_signed_examples():
    assert basic_signed((2, 2, 3)).window == (1, -4, -3, 2)
    assert basic_signed((3, 2, -2)).window == (4, -3, 1, 2)
    assert basic_signed((4, 2, -1)).window == (5, -4, -3, -2, 1)
    assert basic_signed((1, 1, 1)).window == (-1,)
    for bad in [(1, 1, -1), (1, 0, 2), (0, 2, 2), (1, 2, 0)]:
        with pytest.raises(InvalidTripleError):
            basic_signed(bad)


def test_basic_signed_matches_recipe():
    for t in enumerate_basic(6):
        assert basic_signed(t) == oracles.basic_from_recipe(t)


def test_basic_signed_is_minimum_with_rank(W3, W4):
    for n, elems in ((3, W3), (4, W4)):
        for t in enumerate_basic(n):
            k, p, q = t
            hits = [w for w in elems if rank_B(w, p, q) >= k]
            assert oracles.minimal_elements(hits, n) == {pad(basic_signed(t), n)}


def test_basic_length_and_inverse_examples():
    assert basic_length((2, 2, 3)) == 9 == length(parse("1 -4 -3 2"))
    assert basic_length((3, 2, -2)) == 6 == length(parse("4 -3 1 2"))
    assert basic_inverse((3, 2, -2)).as_tuple() == (2, 3, -1)
    assert basic_signed((2, 3, -1)) == inverse(parse("4 -3 1 2")) == parse("3 4 -2 1")


def test_basic_length_inverse_and_n_min_by_computation():
    for t in enumerate_basic(6):
        w = basic_signed(t)
        assert basic_length(t) == length(w)
        assert basic_signed(basic_inverse(t)) == inverse(w)
        assert n_min(t) == w.n
        assert is_bigrassmannian(w)


def test_enumerate_basic_small():
    assert [t.as_tuple() for t in enumerate_basic(1)] == [(1, 1, 1)]
    assert {t.as_tuple() for t in enumerate_basic(2)} == {
        (1, 1, 1), (1, 1, 2), (1, 2, -1), (1, 2, 1), (1, 2, 2), (2, 1, 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_count_basic(n):
    ts = enumerate_basic(n)
    assert len(ts) == len(set(ts)) == count_basic(n) == (2 * n ** 3 + n) // 3


def test_count_basic_values():
    assert count_basic(1) == 1 and count_basic(4) == 44


# ---------------------------------------------------------------- essential sets


def test_essential_set_A_examples():
    v = iota(parse("-2 3 1"))
    assert set(essential_set_A(v)) == triples([(1, 3, -1), (1, 1, 2), (3, 0, -1), (2, -2, 2)])
    assert essential_set_A(WindowPermutation(-2, tuple(range(-2, 3)))) == ()
    assert set(essential_set_A(small(3, 6, 1, 5, 2, 4), "small")) == triples(
        [(1, 2, 5), (2, 2, 2), (2, 4, 4), (3, 4, 2)])
    with pytest.raises(ValueError):
        essential_set_A(v, "big")


def test_essential_set_A_ranks_are_recorded():
    v = iota(parse("-5 6 4 -3 -1 2"))
    for t in essential_set_A(v):
        assert rank_A(v, t.p, t.q) == t.k


def test_essential_set_B_examples():
    assert set(essential_set_B(parse("-2 3 1"))) == triples([(1, 3, -1), (1, 1, 2)])
    assert set(essential_set_B(parse("4 5 -3 1 2"))) == triples([(3, 3, -2)])
    assert set(essential_set_B(parse("1 5 -4 -3 2"))) == triples([(3, 3, -2), (2, 3, 3)])
    big = triples([(2, 4, 1), (3, 4, -2), (4, 3, -4), (1, 1, 5), (2, 1, 3), (3, 1, 1)])
    assert set(essential_set_B(parse("-5 6 4 -3 -1 2"))) == big
    assert essential_set_B(identity(4)) == ()


def test_essential_set_ordering():
    ess = essential_set_B(parse("-5 6 4 -3 -1 2"))
    assert [(t.p, t.q) for t in ess] == sorted((t.p, t.q) for t in ess)


def test_exception_ii_drops_the_mirrored_corner():
    w = parse("4 5 -3 1 2")
    # (1,3,3) would be read off a corner but is forced by (3,3,-2)
    assert rank_B(w, 3, 3) == 1
    assert BasicTriple(1, 3, 3) not in essential_set_B(w)


def test_essential_to_json():
    data = essential_to_json(parse("-2 3 1"))
    assert data == {"w": [-2, 3, 1], "type": "B",
                    "essential": [{"k": 1, "p": 1, "q": 2}, {"k": 1, "p": 3, "q": -1}]}
    assert json.loads(json.dumps(essential_to_json(parse("-2 3 1"), "c")))["type"] == "C"


def test_maximal_basic_below_examples():
    assert set(maximal_basic_below(parse("-2 3 1"))) == triples([(1, 3, -1), (1, 1, 2)])
    assert maximal_basic_below(identity(3)) == ()
    big = triples([(2, 4, 1), (3, 4, -2), (4, 3, -4), (1, 1, 5), (2, 1, 3), (3, 1, 1)])
    assert set(maximal_basic_below(parse("-5 6 4 -3 -1 2"))) == big


def test_maximal_basic_below_matches_oracle(W3):
    basics = {t: pad(basic_signed(t), 3) for t in enumerate_basic(3)}
    for w in W3:
        below = [x for x in basics.values() if oracles.leq(x, w)]
        expected = {t for t, x in basics.items() if x in oracles.maximal_elements(below, 3)}
        assert set(maximal_basic_below(w)) == expected


def test_essential_equals_maximal_basic_W4(W4):
    for w in W4:
        assert essential_set_B(w) == maximal_basic_below(w)


def test_essential_equals_maximal_basic_random_W5():
    rng = random.Random(2024)
    elems = catalog_W(5).elements
    for w in rng.sample(elems, 150):
        assert essential_set_B(w) == maximal_basic_below(w)


def test_essential_records_ranks_and_is_antichain(W4):
    for w in W4[::5]:
        ess = essential_set_B(w)
        assert all(rank_B(w, t.p, t.q) == t.k for t in ess)
        for a, b in itertools.permutations(ess, 2):
            assert not leq_B(basic_signed(a), basic_signed(b))


def test_essential_B_inside_essential_A_of_iota(W4):
    for w in W4:
        assert set(essential_set_B(w)) <= set(essential_set_A(iota(w)))


def test_reflection_symmetry(W4):
    for w in W4:
        ess = {t.as_tuple() for t in essential_set_A(iota(w))}
        assert {reflect(t).as_tuple() for t in ess} == ess


def test_essential_set_ignores_padding(W3):
    for w in W3:
        assert essential_set_B(pad(w, 5)) == essential_set_B(w)
        assert essential_set_C(pad(w, 4)) == essential_set_C(w)


def test_type_c_reading_agrees(W4):
    for w in W4:
        assert essential_set_C(w) == essential_set_B(w)


def test_supremum_sets_contain_essential_set(W3):
    """Any set of basic elements with supremum w contains the essential set of w."""
    basics = {t: pad(basic_signed(t), 3) for t in enumerate_basic(3)}
    for w in W3:
        below = [t for t, x in basics.items() if oracles.leq(x, w)]
        if len(below) > 12:
            continue
        ess = set(essential_set_B(w))
        for r in range(len(below) + 1):
            for ys in itertools.combinations(below, r):
                if oracles.supremum([basics[t] for t in ys], 3) == w:
                    assert ess <= set(ys)


# ---------------------------------------------------------------- dissecting elements and RWY


def test_dissecting_u_examples():
    assert dissecting_u((1, 1, 1), 2).window == (2, 1)
    with pytest.raises(ValueError):
        dissecting_u((2, 2, 3), 3)


def test_dissecting_u_is_max_with_rank_below(W3, W4):
    for n, elems in ((3, W3), (4, W4)):
        for t in enumerate_basic(n):
            k, p, q = t
            hits = [w for w in elems if rank_B(w, p, q) < k]
            assert oracles.maximal_elements(hits, n) == {dissecting_u(t, n)}


@pytest.mark.parametrize("n", [3, 4])
def test_dissective_decomposition(n):
    elems = catalog_W(n).elements
    for t in enumerate_basic(n):
        x = pad(basic_signed(t), n)
        u = dissecting_u(t, n)
        for w in elems:
            assert leq_B(x, w) != leq_B(w, u)


def test_dissecting_t_A_examples():
    assert dissecting_t_A((1, 2, 5), 6).values == (5, 4, 6, 3, 2, 1)
    assert dissecting_t_A((3, 4, 2), 6).values == (6, 5, 2, 1, 4, 3)
    with pytest.raises(ValueError):
        dissecting_t_A((3, 4, 2), 4)


def test_worked_rwy_example():
    v = small(4, 2, 5, 1, 6, 3)
    w0 = window_longest(1, 6)
    vw0 = compose(v, w0)
    assert vw0.values == (3, 6, 1, 5, 2, 4)
    ess = essential_set_A(vw0, "small")
    dissecting = [dissecting_t_A(t, 6).values for t in ess]
    assert set(dissecting) == {(5, 4, 6, 3, 2, 1), (6, 2, 5, 4, 3, 1),
                               (6, 4, 3, 2, 5, 1), (6, 5, 2, 1, 4, 3)}
    rwy = {(1, 2, 3, 6, 4, 5), (1, 3, 4, 5, 2, 6), (1, 5, 2, 3, 4, 6), (3, 4, 1, 2, 5, 6)}
    assert {u.values for u in rwy_via_bijection_A(v)} == rwy
    assert {u.values for u in minimal_not_below_S(v)} == rwy


def test_dissecting_t_A_is_max_with_small_rank_below():
    cat = catalog_S(1, 5)
    for k, p, q in itertools.product(range(1, 6), repeat=3):
        if q + k <= 5 and p >= k > p - q:
            hits = [v for v in cat.elements if rank_A(v, p, q, "small") < k]
            maxes = [v for v in hits if not any(u != v and leq_A(v, u) for u in hits)]
            assert maxes == [dissecting_t_A((k, p, q), 5)]


def test_rwy_signed(W3):
    assert rwy_via_bijection(longest_element(3)) == set()
    for w in W3:
        assert rwy_via_bijection(w, 3) == minimal_not_below(w)
        outside = [x for x in W3 if not oracles.leq(x, w)]
        assert rwy_via_bijection(w, 3) == oracles.minimal_elements(outside, 3)


def test_rwy_small_permutations():
    for v in catalog_S(1, 5).elements:
        assert rwy_via_bijection_A(v) == minimal_not_below_S(v)


# ---------------------------------------------------------------- comparisons through type A


def test_case_i_example():
    t, t2 = (3, 2, 2), (4, 2, -1)
    assert leq_B(basic_signed(t), basic_signed(t2))
    assert not leq_A(basic_perm_A(t), basic_perm_A(t2))
    assert classify_exception(t, t2) == "case-i"
    assert basic_leq_via_typeA(t, t2)


def test_case_ii_example():
    t, t2 = (4, 2, -2), (3, 4, 3)
    assert reflect(t2).as_tuple() == (9, -3, -2)
    assert classify_exception(t, t2) == "case-ii"
    assert basic_leq_via_typeA(t, t2)


def test_reflexive_comparison_needs_no_exception():
    for t in enumerate_basic(3):
        assert basic_leq_via_typeA(t, t)
        assert classify_exception(t, t) == "none"


def test_basic_leq_via_typeA_exhaustive():
    ts = enumerate_basic(4)
    elems = {t: pad(basic_signed(t), 4) for t in ts}
    for t, t2 in itertools.product(ts, repeat=2):
        direct = leq_B(elems[t], elems[t2])
        assert basic_leq_via_typeA(t, t2) == direct
        assert classify_exception(t, t2) in ("none", "case-i", "case-ii")


# ---------------------------------------------------------------- base and bigrassmannians


def test_base_small():
    for n in (2, 3):
        base = base_of(n)
        assert base == {pad(basic_signed(t), n) for t in enumerate_basic(n)}
        assert len(base) == count_basic(n)
        assert identity(n) not in base
        assert base == oracles.join_irreducibles(n)


def test_base_four():
    assert base_of(4) == oracles.join_irreducibles(4) == {
        pad(basic_signed(t), 4) for t in enumerate_basic(4)}


def test_bigrassmannian_census():
    basics4 = {pad(basic_signed(t), 4) for t in enumerate_basic(4)}
    big4 = bigrassmannians(4)
    assert len(big4) == 45
    assert set(big4) - basics4 == {parse("1 4 -3 2")}
    basics5 = {pad(basic_signed(t), 5) for t in enumerate_basic(5)}
    extra = {parse(s) for s in ("1 4 -3 2 5", "1 4 5 -3 2", "1 5 -4 -3 2", "1 5 -4 2 3", "1 2 5 -4 3")}
    assert set(bigrassmannians(5)) - basics5 == extra


# ---------------------------------------------------------------- properties


@settings(max_examples=60, deadline=None)
@given(signed_perms(max_n=5))
def test_supremum_of_essential_set_property(w):
    res = supremum([pad(basic_signed(t), w.n) for t in essential_set_B(w)], w.n)
    assert res.element == w


@settings(max_examples=60, deadline=None)
@given(signed_perms(max_n=5))
def test_essential_is_maximal_basic_property(w):
    assert essential_set_B(w) == maximal_basic_below(w)


@given(st.sampled_from(enumerate_basic(6)))
def test_basic_is_own_essential_set(t):
    assert essential_set_B(basic_signed(t)) == (BasicTriple(*t),)
