import os
from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinfactor.charalg import (
    adjoint_character,
    decompose,
    irreducible_character,
    weyl_dimension,
)
from spinfactor.embed import (
    FoldingCase,
    embedding_by_name,
    folding_case,
    folding_embedding,
    identity_embedding,
    principal_sl2_embedding,
    principal_specialization,
    principal_specialization_from_character,
    prop3_factors,
    restrict_character,
    verify_prop3,
    verify_prop4,
    verify_theorem1,
    verify_theorem2,
)
from spinfactor.errors import (
    BadPartition,
    BadRank,
    DecompositionMismatch,
    LargeComputation,
    NonIntegralImage,
    UnsupportedKind,
    ZeroPolynomial,
)
from spinfactor.qpoly import QPolynomial, is_symmetric_unimodal
from spinfactor.rootsys import root_system, wadd, wscale

FOLDINGS = ["A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2"]


def q(*coeffs, low=0):
    return QPolynomial.from_list(list(coeffs), low)


def ssyt_oracle(lam, n):
    """Sum of q^(sum of entries - |lam|) over all semistandard fillings."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    out = {}
    for fill in cartesian(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all((r, c - 1) not in t or t[r, c - 1] <= v for (r, c), v in t.items()) and \
                all((r - 1, c) not in t or t[r - 1, c] < v for (r, c), v in t.items()):
            e = sum(fill) - len(cells)
            out[e] = out.get(e, 0) + 1
    return QPolynomial(out)


# oracle values ---------------------------------------------------------------

def test_identity_restriction():
    b2 = root_system("B2")
    chi = irreducible_character(b2, (1, 1))
    assert restrict_character(identity_embedding(b2), chi) == chi


def test_principal_restriction_of_adjoint():
    spec = principal_sl2_embedding(3)
    chi = restrict_character(spec, adjoint_character(spec.source))
    assert decompose(spec.target, chi) == [((4,), 1), ((2,), 1)]


def test_folding_restriction_of_adjoint():
    spec, _ = folding_embedding("A3_to_C2")
    chi = restrict_character(spec, adjoint_character(spec.source))
    c2 = spec.target
    assert sorted(decompose(c2, chi)) == sorted([(c2.theta, 1), (c2.theta_s, 1)])


def test_principal_embedding_rows():
    assert principal_sl2_embedding(2).restriction == ((1,),)
    a2 = root_system("A2")
    s3 = principal_sl2_embedding(3)
    assert all(s3.restrict_weight(a) == (2,) for a in a2.simple_roots)
    assert s3.restrict_weight(a2.theta) == (4,)
    # rho(H) with H = 2 rho-check is the sum of the heights of the positive roots
    a3 = root_system("A3")
    heights = sum(a3.height(a) for a in a3.positive_roots)
    assert principal_sl2_embedding(4).restrict_weight(a3.rho) == (2 * heights // 2,) == (10,)
    with pytest.raises(BadRank):
        principal_sl2_embedding(1)


def test_non_integral_image():
    spec = principal_sl2_embedding(3)
    from fractions import Fraction
    with pytest.raises(NonIntegralImage):
        spec.restrict_weight((Fraction(1, 4), 0))


def test_folding_parts():
    _, parts = folding_embedding("A3_to_C2")
    c2 = root_system("C2")
    assert parts == [irreducible_character(c2, c2.theta_s)]
    _, parts = folding_embedding("A2_to_B1")
    b1 = root_system("A1")
    assert parts == [irreducible_character(b1, wscale(2, b1.theta_s))]
    _, parts = folding_embedding("D4_to_G2")
    g2 = root_system("G2")
    assert parts == [irreducible_character(g2, g2.theta_s)] * 2


def test_folding_names_and_errors():
    assert folding_case("A2n1_to_Cn", 2) == folding_case("A3_to_C2")
    assert folding_case("A2n_to_Bn", 1) == folding_case("A2_to_B1")
    assert folding_case("D4_to_G2").order == 3
    with pytest.raises(UnsupportedKind):
        folding_case("A3_to_G2")
    with pytest.raises(UnsupportedKind):
        embedding_by_name("nonsense")


def test_theorem1_examples():
    spec, parts = folding_embedding("A2_to_B1")
    rep = verify_theorem1(spec, parts)
    assert rep.passed
    b1 = spec.target
    lhs = restrict_character(spec, irreducible_character(spec.source, spec.source.rho))
    hw = wadd(b1.rho, wscale(2, b1.rho_s))
    assert lhs == irreducible_character(b1, b1.rho) * irreducible_character(b1, hw)

    spec, parts = folding_embedding("A3_to_C2")
    rep = verify_theorem1(spec, parts)
    # short positive roots of C2 are e1 - e2 and e1 + e2, so rho_s = e1 = (1,0)
    assert spec.target.rho_s == (1, 0)
    assert rep.passed and rep.details["spin_factors"] == ["1*V(1,0)"]

    spec, parts = folding_embedding("D4_to_G2")
    rep = verify_theorem1(spec, parts)
    assert rep.passed
    assert rep.details["spin_factors"] == ["1*V(1,0) + 1*V(0,0)"] * 2


def test_theorem1_precondition():
    spec, parts = folding_embedding("A3_to_C2")
    with pytest.raises(DecompositionMismatch):
        verify_theorem1(spec, parts + parts)


def test_large_folding_gated():
    spec, parts = folding_embedding("E6_to_F4")
    with pytest.raises(LargeComputation):
        verify_theorem1(spec, parts)


def test_theorem2_examples():
    spec, parts = folding_embedding("A3_to_C2")
    zero = (0,) * spec.source.rank
    t1 = verify_theorem1(spec, parts)
    t2 = verify_theorem2(spec, parts, zero)
    assert t2.passed and t2.lhs_hash == t1.lhs_hash and t2.rhs_hash == t1.rhs_hash
    assert verify_theorem2(spec, parts, (1, 0, 0)).passed
    spec, parts = embedding_by_name("principal_sl2:3")
    assert verify_theorem2(spec, parts, (1, 0)).passed


def test_principal_specialization_examples():
    assert principal_specialization((1, 0), 2) == q(1, 1)
    expected = QPolynomial.monomial(1) * q(1, 1) ** 2 * q(1, 0, 1)
    assert principal_specialization((2, 1, 0), 3) == expected == ssyt_oracle((2, 1), 3)
    for n in (1, 2, 5):
        assert principal_specialization((0,), n) == QPolynomial.one()
    with pytest.raises(BadPartition):
        principal_specialization((1, 2), 3)
    with pytest.raises(BadPartition):
        principal_specialization((1, 1, 1), 2)


@pytest.mark.parametrize("lam,n", [((2,), 3), ((2, 1), 3), ((3, 1), 3), ((2, 2, 1), 4),
                                   ((3, 2), 2), ((1, 1, 1), 4)])
def test_principal_specialization_matches_tableaux(lam, n):
    ps = principal_specialization(lam, n)
    assert ps == ssyt_oracle(lam, n)
    assert ps == principal_specialization_from_character(lam, n)


def test_prop3_examples():
    rep = verify_prop3(2, (0,))
    assert rep.passed and rep.details["lhs"] == "1 + q" and len(rep.factors) == 1
    assert rep.factors[0]["symmetric_unimodal"]
    rep = verify_prop3(3, (0,))
    assert rep.passed
    assert principal_specialization((2, 1, 0), 3) == \
        QPolynomial.monomial(1) * q(1, 1) * q(1, 1) * q(1, 0, 1)
    assert [str(f) for f in prop3_factors(3, (0,))] == ["q + q^2", "1 + q + q^2 + q^3"]
    assert verify_prop3(3, (1, 0, 0)).passed


def test_unimodality_examples():
    assert is_symmetric_unimodal(q(1, 1))
    assert not is_symmetric_unimodal(q(1, 1, 0, 1))
    assert is_symmetric_unimodal(q(1, 1) * q(1, 0, 1))
    assert q(1, 1) * q(1, 0, 1) == q(1, 1, 1, 1)
    assert not is_symmetric_unimodal(q(1, 0, 1))
    assert is_symmetric_unimodal(q(2, low=3))
    with pytest.raises(ZeroPolynomial):
        is_symmetric_unimodal(QPolynomial())


# invariants ------------------------------------------------------------------

def all_specs():
    out = [folding_embedding(k)[0] for k in FOLDINGS + ["E6_to_F4"]]
    out += [principal_sl2_embedding(n) for n in range(2, 6)]
    return out


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: s.name)
def test_roots_restrict_nonnegatively(spec):
    for a in spec.source.positive_roots:
        assert spec.d.pair(spec.target, spec.restrict_weight(a)) >= 0


@given(st.sampled_from([s for s in all_specs() if s.source.rank <= 4]), st.data())
def test_restriction_preserves_dimension(spec, data):
    lam = tuple(data.draw(st.lists(st.integers(0, 1), min_size=spec.source.rank,
                                   max_size=spec.source.rank)))
    chi = restrict_character(spec, irreducible_character(spec.source, lam))
    assert chi.dim() == weyl_dimension(spec.source, lam)
    assert chi.is_w_invariant()


@pytest.mark.parametrize("kind", FOLDINGS + ["A2n_to_Bn:2"])
def test_theorem1_and_closed_form(kind):
    name, _, n = kind.partition(":")
    args = (name, int(n)) if n else (name,)
    spec, parts = folding_embedding(*args)
    assert verify_theorem1(spec, parts).passed
    assert verify_prop4(*args).passed


@pytest.mark.parametrize("n", range(2, 6))
def test_theorem1_principal(n):
    spec, parts = embedding_by_name(f"principal_sl2:{n}")
    assert verify_theorem1(spec, parts).passed


@pytest.mark.parametrize("kind", ["A3_to_C2", "A2_to_B1", "D4_to_G2"])
def test_theorem2_fundamental(kind):
    spec, parts = folding_embedding(kind)
    for i in range(spec.source.rank):
        assert verify_theorem2(spec, parts, spec.source.fundamental_weight(i)).passed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_prop3_all_small_partitions(n):
    for mu in cartesian(range(3), repeat=n):
        if all(x >= y for x, y in zip(mu, mu[1:])):
            rep = verify_prop3(n, mu)
            assert rep.passed
            assert all(f["symmetric_unimodal"] for f in rep.factors)


def test_folding_case_is_hashable_dataclass():
    assert isinstance(folding_case("D3_to_B2"), FoldingCase)
    assert hash(folding_case("D3_to_B2")) == hash(folding_case("D3_to_B2"))


@pytest.mark.skipif(os.environ.get("SPINFACTOR_SLOW", "") in ("", "0"),
                    reason="about 150 s; set SPINFACTOR_SLOW=1")
def test_theorem1_e6_f4_large():
    spec, parts = folding_embedding("E6_to_F4")
    rep = verify_theorem1(spec, parts, allow_large=True)
    assert rep.passed and rep.details["spin_factors"] == ["1*V(0,0,1,1)"]
