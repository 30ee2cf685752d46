from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from abacus_sf import powersum as ps
from abacus_sf.partitions import partitions_of, strict_partitions_of
from oracles import marked_shifted_q_monomials, ppoly_to_monomials

F = Fraction


def poly(*terms):
    return {idx: F(num, den) for idx, num, den in terms}


coeff_strategy = st.fractions(
    min_value=-5, max_value=5, max_denominator=12
).filter(lambda q: q != 0)
index_strategy = st.lists(st.integers(1, 6), min_size=0, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)
ppoly_strategy = st.dictionaries(index_strategy, coeff_strategy, max_size=6)


# ---------------------------------------------------------------------------
# ring operations

def test_arithmetic_basics():
    a = poly(((2,), 1, 2))
    b = poly(((1, 1), 1, 2))
    assert ps.add(a, b) == ps.schur_p((2,))
    assert ps.sub(ps.add(a, b), b) == a
    assert ps.mul(ps.p_single(2), ps.p_single(3)) == {(3, 2): F(1)}
    assert ps.mul(a, ps.zero()) == {}
    assert ps.scale(a, 0) == {}


@given(ppoly_strategy, ppoly_strategy)
def test_mul_commutes(a, b):
    assert ps.mul(a, b) == ps.mul(b, a)


def test_degree_components():
    mixed = ps.add(ps.p_single(3), ps.one())
    comps = ps.degree_components(mixed)
    assert set(comps) == {0, 3}
    assert comps[3] == ps.p_single(3)


# ---------------------------------------------------------------------------
# Schur functions

def test_schur_p_examples():
    assert ps.schur_p(()) == {(): F(1)}
    assert ps.schur_p((1,)) == {(1,): F(1)}
    assert ps.schur_p((2,)) == poly(((2,), 1, 2), ((1, 1), 1, 2))


def test_schur_q_examples():
    assert ps.schur_q((1,)) == {(1,): F(2)}
    assert ps.schur_q((2,)) == {(1, 1): F(2)}
    q31 = ps.schur_q((3, 1))
    assert set(q31) == {(3, 1), (1, 1, 1, 1)}
    assert all(sum(idx) == 4 for idx in q31)


def test_schur_q_rejects_non_strict():
    with pytest.raises(ValueError):
        ps.schur_q((2, 2))


def test_schur_q_odd_support():
    for n in range(8):
        for lam in strict_partitions_of(n):
            q = ps.schur_q(lam)
            assert all(sum(idx) == n for idx in q)
            assert all(all(part % 2 for part in idx) for idx in q)


def test_schur_small_p_scaling():
    assert ps.schur_small_p((1,)) == {(1,): F(1)}
    assert ps.schur_small_p(()) == {(): F(1)}
    assert ps.schur_small_p((2, 1)) == ps.scale(ps.schur_q((2, 1)), F(1, 4))


def test_schur_q_against_marked_tableaux():
    for n in range(7):
        for lam in strict_partitions_of(n):
            nvars = max(n, 1)
            got = ppoly_to_monomials(ps.schur_q(lam), nvars)
            want = marked_shifted_q_monomials(lam, nvars)
            assert got == {k: F(v) for k, v in want.items() if v}


# ---------------------------------------------------------------------------
# plethysm, specialization, projection

def test_plethysm_pr():
    assert ps.plethysm_pr(ps.p_single(2), 2) == {(4,): F(1)}
    p2 = ps.plethysm_pr(ps.schur_p((1,)), 2)
    assert p2 == ps.sub(ps.schur_p((2,)), ps.schur_p((1, 1)))


@given(ppoly_strategy, ppoly_strategy, st.sampled_from([2, 3]))
def test_plethysm_is_ring_hom(a, b, r):
    assert ps.plethysm_pr(ps.add(a, b), r) == ps.add(
        ps.plethysm_pr(a, r), ps.plethysm_pr(b, r))
    assert ps.plethysm_pr(ps.mul(a, b), r) == ps.mul(
        ps.plethysm_pr(a, r), ps.plethysm_pr(b, r))


def test_omega_specialize():
    assert ps.omega_specialize(ps.p_single(3), 3) == {(3,): F(3)}
    assert ps.omega_specialize(ps.p_single(2), 3) == {}
    mixed = {(2, 2): F(1, 3), (2, 1): F(5)}
    assert ps.omega_specialize(mixed, 2) == {(2, 2): F(4, 3)}


def test_omega_littlewood_square_example():
    got = ps.omega_specialize(ps.schur_p((2, 2)), 2)
    assert got == {(2, 2): F(1)}  # equals p_2 * p_2 exactly


def test_reduce_mod3():
    assert ps.reduce_mod3(ps.p_single(3)) == {}
    kept = {(5, 1): F(1)}
    assert ps.reduce_mod3(kept) == kept
    reduced = ps.reduce_mod3(ps.schur_small_p((4, 3, 1)))
    assert reduced
    assert all(all(part % 3 for part in idx) for idx in reduced)
    assert ps.reduce_mod3(reduced) == reduced


# ---------------------------------------------------------------------------
# Hall pairing and basis conversion

def test_hall_inner_examples():
    assert ps.hall_inner(ps.p_single(2), ps.p_single(2)) == 2
    assert ps.hall_inner(ps.one(), ps.one()) == 1
    assert ps.hall_inner(ps.p_single(2), ps.p_single(1)) == 0


def test_schur_orthonormality():
    for n in range(7):
        lams = list(partitions_of(n))
        for lam in lams:
            for mu in lams:
                want = 1 if lam == mu else 0
                assert ps.hall_inner(ps.schur_p(lam), ps.schur_p(mu)) == want


def test_to_schur_basis_examples():
    assert ps.to_schur_basis(ps.p_single(2)) == {(2,): 1, (1, 1): -1}
    assert ps.to_schur_basis(ps.schur_p((3, 1))) == {(3, 1): 1}
    assert ps.to_schur_basis(ps.zero()) == {}


def test_to_schur_matches_hall_inner():
    f = ps.add(ps.mul(ps.p_single(2), ps.p_single(1)), ps.scale(ps.p_single(3), F(1, 2)))
    e = ps.to_schur_basis(f)
    for lam in partitions_of(3):
        assert e.get(lam, 0) == ps.hall_inner(f, ps.schur_p(lam))


def test_reconstruction_identity():
    # to_schur_basis is inverted by from_schur_expansion on the p-monomial basis
    for degree in range(11):
        for rho in partitions_of(degree):
            f = ps.p_monomial(rho)
            assert ps.from_schur_expansion(ps.to_schur_basis(f)) == f


def test_inhomogeneous_conversion():
    f = ps.add(ps.one(), ps.p_single(2))
    assert ps.to_schur_basis(f) == {(): 1, (2,): 1, (1, 1): -1}


# ---------------------------------------------------------------------------
# serialization

def test_records_shape_and_order():
    recs = ps.expansion_to_records({(2,): F(1), (1, 1): F(-1)})
    assert recs == [
        {"index": [2], "num": "1", "den": "1"},
        {"index": [1, 1], "num": "-1", "den": "1"},
    ]
    recs = ps.expansion_to_records(ps.schur_p((2,)))
    assert [r["index"] for r in recs] == [[2], [1, 1]]
    assert recs[0]["den"] == "2"


@given(ppoly_strategy)
def test_records_roundtrip(a):
    assert ps.expansion_from_records(ps.expansion_to_records(a)) == a
