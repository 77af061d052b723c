from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfactor.errors import (
    IndexOutOfRange,
    NotFiniteType,
    NotGCM,
    NotSymmetrizable,
    UnknownType,
    WeightLengthError,
)
from spinfactor.rootsys import (
    BUILTIN_TYPES,
    GeneralizedCartanMatrix,
    build_root_system,
    dominant_representative,
    root_order_leq,
    root_system,
    weyl_orbit,
    weyl_reflect,
)

RANK4 = [t for t in BUILTIN_TYPES if int(t[1:]) <= 4]
RANK3 = [t for t in BUILTIN_TYPES if int(t[1:]) <= 3]


def closure_roots(cartan):
    """Brute-force positive roots in simple-root coordinates.

    Apply every simple reflection to every known root until nothing new
    appears. s_i(beta) = beta - <beta, alpha_i-check> alpha_i, where the
    pairing is sum_j beta_j * cartan[i][j].
    """
    n = len(cartan)
    roots = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    roots |= {tuple(-x for x in r) for r in roots}
    frontier = set(roots)
    while frontier:
        new = set()
        for r in frontier:
            for i in range(n):
                p = sum(r[j] * cartan[i][j] for j in range(n))
                s = tuple(r[j] - (p if j == i else 0) for j in range(n))
                if s not in roots:
                    new.add(s)
        roots |= new
        frontier = new
    return {r for r in roots if all(x >= 0 for x in r)}


# oracle values ---------------------------------------------------------------

def test_a2_positive_roots_rho_coxeter():
    rs = build_root_system(GeneralizedCartanMatrix([[2, -1], [-1, 2]]))
    assert set(rs.positive_roots) == {(2, -1), (-1, 2), (1, 1)}
    assert rs.rho == (1, 1)
    assert rs.coxeter_number == 3


def test_a1_forced():
    rs = build_root_system(GeneralizedCartanMatrix([[2]]))
    assert rs.positive_roots == ((2,),)
    assert rs.rho == (1,)
    assert rs.theta == rs.theta_s == (2,)


def test_b2_lengths_and_numbers():
    rs = build_root_system(GeneralizedCartanMatrix([[2, -1], [-2, 2]]))
    assert len(rs.positive_roots) == 4
    assert set(rs.short_positive_roots) == {(1, 0), (-1, 2)}
    assert set(rs.long_positive_roots) == {(2, -2), (0, 2)}
    assert rs.theta == (0, 2) and rs.theta in rs.long_positive_roots
    assert rs.theta_s == (1, 0) and rs.theta_s in rs.short_positive_roots
    assert rs.coxeter_number == 4
    assert rs.dual_coxeter_number == 3


@pytest.mark.parametrize("name", RANK4 + ["E6"])
def test_positive_roots_match_reflection_closure(name):
    rs = root_system(name)
    assert set(rs.positive_root_coords) == closure_roots(rs.cartan.entries)


@pytest.mark.parametrize("name,order", [
    ("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("B4", 384),
    ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)])
def test_weyl_group_order(name, order):
    assert root_system(name).weyl_group_order() == order


@pytest.mark.parametrize("name,h,hv", [
    ("A3", 4, 4), ("B3", 6, 5), ("C3", 6, 4), ("D4", 6, 6), ("G2", 6, 4), ("F4", 12, 9),
    ("E6", 12, 12)])
def test_coxeter_numbers(name, h, hv):
    rs = root_system(name)
    assert (rs.coxeter_number, rs.dual_coxeter_number) == (h, hv)


def test_reflect_examples():
    a1, a2, b2 = root_system("A1"), root_system("A2"), root_system("B2")
    assert weyl_reflect(a1, 1, a1.rho) == (-1,)
    assert weyl_reflect(a2, 1, (2, -1)) == (-2, 1)
    # s2 fixes theta_s = (1,0) since its second label is 0
    assert weyl_reflect(b2, 2, b2.theta_s) == (1, 0)
    assert weyl_reflect(b2, 2, weyl_reflect(b2, 2, b2.theta_s)) == b2.theta_s
    assert weyl_reflect(b2, 1, b2.theta_s) == (-1, 2)


def test_reflect_index_out_of_range():
    rs = root_system("A2")
    for i in (0, 3, -1):
        with pytest.raises(IndexOutOfRange):
            weyl_reflect(rs, i, (1, 0))


def test_orbit_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert weyl_orbit(a1, a1.rho) == {(1,), (-1,)}
    assert len(weyl_orbit(a2, a2.rho)) == 6
    assert weyl_orbit(a2, (0, 0)) == {(0, 0)}


def test_dominant_representative_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    dom, sign, regular = dominant_representative(a2, (-1, 2))
    assert dom == (1, 1) and regular and sign == -1
    assert (-1, 2) in weyl_orbit(a2, dom)
    assert dominant_representative(a2, (0, 1))[2] is False
    assert dominant_representative(a1, (3,)) == ((3,), 1, True)


def test_root_order_examples():
    a2 = root_system("A2")
    assert root_order_leq(a2, (1, 0), (1, 0))
    assert root_order_leq(a2, (0, 0), a2.theta)
    assert not root_order_leq(a2, (2, -1), (-1, 2))


# errors ----------------------------------------------------------------------

def test_invalid_matrices():
    with pytest.raises(NotGCM):
        GeneralizedCartanMatrix([[2, -1], [0, 2]])
    with pytest.raises(NotGCM):
        GeneralizedCartanMatrix([[2, 1], [1, 2]])
    with pytest.raises(NotGCM):
        GeneralizedCartanMatrix([[3]])
    with pytest.raises(NotSymmetrizable):
        GeneralizedCartanMatrix([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]]).half_lengths
    with pytest.raises(NotFiniteType):
        build_root_system(GeneralizedCartanMatrix([[2, -2], [-2, 2]]))


def test_unknown_type_and_weight_length():
    with pytest.raises(UnknownType):
        root_system("Q7")
    with pytest.raises(WeightLengthError):
        root_system("A2").check_weight((1,))


def test_cartan_json_matches_builtin():
    rs = build_root_system(GeneralizedCartanMatrix([[2, -3], [-1, 2]]))
    assert rs.positive_roots == root_system("G2").positive_roots
    dual = build_root_system(GeneralizedCartanMatrix([[2, -1], [-3, 2]]))
    assert len(dual.positive_roots) == 6 and dual.dual_coxeter_number == 4


# invariants ------------------------------------------------------------------

@pytest.mark.parametrize("name", RANK4)
def test_roots_sign_coherent(name):
    rs = root_system(name)
    for c in rs.positive_root_coords:
        assert all(x >= 0 for x in c) and any(c)


@pytest.mark.parametrize("name", RANK4)
def test_coxeter_identities(name):
    rs = root_system(name)
    assert rs.height(rs.theta) + 1 == rs.coxeter_number
    assert 1 + sum(rs.comarks) == rs.dual_coxeter_number


types_st = st.sampled_from(RANK4)


@given(types_st, st.data())
def test_reflection_is_involution(name, data):
    rs = root_system(name)
    w = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(1, rs.rank))
    assert weyl_reflect(rs, i, weyl_reflect(rs, i, w)) == w


@given(types_st, st.data())
def test_dominant_representative_in_orbit(name, data):
    rs = root_system(name)
    if rs.weyl_group_order() > 400:
        return
    w = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    dom, sign, regular = dominant_representative(rs, w)
    assert rs.is_dominant(dom)
    assert w in weyl_orbit(rs, dom)
    assert regular == all(x != 0 for x in dom)
    assert len(weyl_orbit(rs, dom)) * (1 if regular else 2) <= rs.weyl_group_order()


@pytest.mark.parametrize("name", RANK3)
def test_root_order_is_partial_order(name):
    rs = root_system(name)
    roots = rs.positive_roots
    leq = {(b, c): root_order_leq(rs, b, c) for b in roots for c in roots}
    for b in roots:
        assert leq[b, b]
    for b, c in permutations(roots, 2):
        assert not (leq[b, c] and leq[c, b])
    for b in roots:
        for c in roots:
            if not leq[b, c]:
                continue
            for e in roots:
                if leq[c, e]:
                    assert leq[b, e]
