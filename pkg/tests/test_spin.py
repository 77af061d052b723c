from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfactor.charalg import (
    FormalCharacter,
    adjoint_character,
    decompose,
    irreducible_character,
)
from spinfactor.errors import NotACharacter, NotSelfDual, TooLarge, ZeroPairing
from spinfactor.rootsys import BUILTIN_TYPES, root_system, wadd, wscale
from spinfactor.spin import (
    DistinguishedCoweight,
    WedgeModule,
    check_orthogonal_candidate,
    clifford_relations_hold,
    clifford_wedge_oracle,
    direct_sum,
    positive_weights,
    spin0_additivity_check,
    spin0_character,
    spin_character,
)

RANK4 = [t for t in BUILTIN_TYPES if int(t[1:]) <= 4]


def char(rs, terms):
    return FormalCharacter(rs, terms)


def subset_oracle(rs, chi):
    """Character of the wedge space spanned by V+ plus half the zero weights,
    shifted by -half the total, from explicit subset enumeration."""
    pos = []
    for w, m in chi.items():
        if any(w) and rs.height(w) > 0:
            pos += [w] * m
    m0 = chi.coefficient((0,) * rs.rank)
    pos += [(0,) * rs.rank] * (m0 // 2)
    total = (0,) * rs.rank
    for w in pos:
        total = wadd(total, w)
    terms = {}
    for k in range(len(pos) + 1):
        for sub in combinations(range(len(pos)), k):
            w = wscale(-1, total)
            for i in sub:
                w = wadd(w, wscale(2, pos[i]))
            w = tuple(x // 2 for x in w)
            terms[w] = terms.get(w, 0) + 1
    return char(rs, terms)


# oracle values ---------------------------------------------------------------

def test_orthogonal_candidate_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert check_orthogonal_candidate(a2, adjoint_character(a2))
    assert check_orthogonal_candidate(a1, irreducible_character(a1, (1,)))
    assert not check_orthogonal_candidate(a2, irreducible_character(a2, (1, 0)))
    with pytest.raises(NotACharacter):
        check_orthogonal_candidate(a1, char(a1, {(1,): 1}))


def test_spin0_examples():
    a1, b2 = root_system("A1"), root_system("B2")
    assert spin0_character(a1, adjoint_character(a1)) == char(a1, {(1,): 1, (-1,): 1})
    for m0 in (0, 1, 2, 5):
        zero = char(a1, {(0,): m0})
        assert spin0_character(a1, zero) == FormalCharacter.one(a1)
    assert spin0_character(b2, irreducible_character(b2, b2.theta_s)) == \
        irreducible_character(b2, b2.rho_s)


def test_spin_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert spin_character(a1, adjoint_character(a1)) == irreducible_character(a1, a1.rho)
    assert spin_character(a1, char(a1, {(0,): 2})) == char(a1, {(0,): 2})
    spin = spin_character(a2, adjoint_character(a2))
    assert spin == irreducible_character(a2, a2.rho).scale(2)
    assert spin.dim() == 16


def test_additivity_examples():
    a1, b2 = root_system("A1"), root_system("B2")
    assert spin0_additivity_check(a1, adjoint_character(a1), char(a1, {}))
    assert spin0_additivity_check(a1, adjoint_character(a1), adjoint_character(a1))
    assert spin0_additivity_check(b2, adjoint_character(b2),
                                  irreducible_character(b2, b2.theta_s))


def test_spin_errors():
    a2 = root_system("A2")
    with pytest.raises(NotSelfDual):
        spin0_character(a2, irreducible_character(a2, (1, 0)))
    # (-1,1) has simple-root coordinates (-1/3, 1/3), orthogonal to the default d
    six = irreducible_character(a2, (1, 0)) + irreducible_character(a2, (0, 1))
    with pytest.raises(ZeroPairing):
        spin0_character(a2, six)
    spin = spin0_character(a2, six, DistinguishedCoweight((2, 1)))
    assert spin.dim() == 8 and spin.is_w_invariant()
    with pytest.raises(NotACharacter):
        spin0_character(a2, adjoint_character(a2).scale(-1))


def test_clifford_oracle_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert clifford_wedge_oracle(a1, [((2,), 1), ((-2,), 1)]) == char(a1, {(1,): 1, (-1,): 1})
    assert clifford_wedge_oracle(a1, []) == FormalCharacter.one(a1)
    adj = adjoint_character(a2)
    wedge = clifford_wedge_oracle(a2, adj)
    assert wedge.dim() == 16 and wedge == spin_character(a2, adj)
    with pytest.raises(TooLarge):
        clifford_wedge_oracle(a2, adj.scale(4))


def test_wedge_module_cartan_weights():
    # on e_J the i-th Cartan element acts by +1/2 if i in J else -1/2
    m = WedgeModule(3, False)
    for i in range(1, 4):
        ev = m.cartan_eigenvalues(i)
        for j in range(m.size):
            assert ev[j] == (1 if j >> (i - 1) & 1 else -1)


@pytest.mark.parametrize("dim", range(0, 11))
def test_clifford_relations(dim):
    assert clifford_relations_hold(dim // 2, bool(dim % 2))


# invariants ------------------------------------------------------------------

def corpus():
    out = []
    for t in ("A1", "A2", "B2"):
        rs = root_system(t)
        out.append(adjoint_character(rs))
    b2 = root_system("B2")
    out.append(irreducible_character(b2, b2.theta_s))
    base = list(out)
    for i, a in enumerate(base):
        for b in base[i:]:
            if a.rs == b.rs and (a + b).dim() <= 16:
                out.append(a + b)
    return out


@pytest.mark.parametrize("chi", corpus(), ids=lambda c: f"{c.rs.name}:dim{c.dim()}")
def test_oracles_agree_on_corpus(chi):
    rs = chi.rs
    spin = spin_character(rs, chi)
    assert clifford_wedge_oracle(rs, chi) == spin
    assert subset_oracle(rs, chi) == spin
    m0 = chi.coefficient((0,) * rs.rank)
    assert spin == spin0_character(rs, chi).scale(2 ** (m0 // 2))
    assert all(m > 0 for _, m in decompose(rs, spin0_character(rs, chi)))


@pytest.mark.parametrize("name", RANK4)
def test_adjoint_spin_is_rho(name):
    rs = root_system(name)
    assert spin0_character(rs, adjoint_character(rs)) == irreducible_character(rs, rs.rho)


@pytest.mark.parametrize("name", ["B2", "B3", "C2", "C3"])
def test_short_root_spin(name):
    rs = root_system(name)
    assert spin0_character(rs, irreducible_character(rs, rs.theta_s)) == \
        irreducible_character(rs, rs.rho_s)


@pytest.mark.parametrize("name", ["A1", "B2"])
def test_doubled_short_root_spin(name):
    rs = root_system(name)
    hw = wadd(wscale(2, rs.rho_s), rs.rho)
    assert spin0_character(rs, irreducible_character(rs, wscale(2, rs.theta_s))) == \
        irreducible_character(rs, hw)


@given(st.sampled_from(["A1", "A2", "B2", "G2"]), st.data())
def test_spin0_multiplicative(name, data):
    rs = root_system(name)
    pool = [adjoint_character(rs), irreducible_character(rs, rs.theta_s),
            FormalCharacter.monomial(rs, (0,) * rs.rank, 3)]
    a = direct_sum(data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=2)))
    b = direct_sum(data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=2)))
    assert spin0_additivity_check(rs, a, b)
    parts = decompose(rs, spin0_character(rs, a + b))
    assert all(m > 0 for _, m in parts)


def test_positive_weights_of_adjoint_are_positive_roots():
    for name in ("A2", "B2", "G2"):
        rs = root_system(name)
        pos = positive_weights(rs, adjoint_character(rs))
        assert sorted(w for w, _ in pos) == sorted(rs.positive_roots)
        assert all(m == 1 for _, m in pos)
