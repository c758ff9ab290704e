import random
from fractions import Fraction

import pytest

from inversys.apolarity import contract, minimal_generators, socle_piece
from inversys.certify import (
    CIType, feasible_types, is_complete_intersection, lemma_ku_check,
    sample_ci_witness, verify_certificate)
from inversys.errors import InputError
from inversys.poly import Poly, monomials, parse, parse_many
from inversys.regseq import ideal_piece
from inversys.short import k_lambda, legendre

from conftest import random_form

CI5_H = "x0*x1*x2*x3*x4 + x1*x2*x3*x4^2"
CI5_F = ["x0^2", "x1^2", "x2^2", "x3^2", "x4^2 - 2*x0*x4"]
NONCI5_H = "x0*x1*x2*x3*x4 + x3*x4^4"


# -- verify_certificate -----------------------------------------------------

def test_certificate_three_lines():
    cert = verify_certificate(parse("x0*x1*x2"), parse_many(["x0^2", "x1^2", "x2^2"]))
    assert cert.valid
    # det(Jac) = 8 x0 x1 x2 and 8 x0x1x2 o y0y1y2 = 8
    assert contract(Poly.const(3, 8) * parse("x0*x1*x2"), parse("x0*x1*x2")) == 8
    assert cert.scalar == 8
    assert cert.type == CIType((2, 2, 2), 3)


def test_certificate_five_variables():
    cert = verify_certificate(parse(CI5_H), parse_many(CI5_F))
    assert cert.valid and cert.scalar == 32
    assert cert.jacobian_det == 32 * parse("x0*x1*x2*x3", 5) * parse("x4 - x0", 5)


def test_fused_four_item_reading_fails():
    # the last two squares read as a single item
    H = parse(CI5_H)
    fused = parse_many(["x0^2", "x1^2", "x2^2", "x3^2*x4^2 - 2*x0*x4"], 5)
    with pytest.raises(InputError):
        verify_certificate(H, fused)
    assert not contract(fused[3], H).is_zero()


def test_certificate_legendre():
    cert = verify_certificate(legendre(2), k_lambda(2))
    assert cert.valid and cert.scalar == -192 == -16 * 4 * 3


def test_certificate_not_regular():
    cert = verify_certificate(parse("x0*x1*x2"), parse_many(["x0^2", "x1^2", "x0*x1"], 3))
    assert not cert.valid
    assert "regular_sequence" in cert.failures()
    assert not cert.witness.regular


def test_certificate_evaluates_everything():
    cert = verify_certificate(parse("x0*x1*x2"), parse_many(["x0", "x1", "x2"]))
    assert cert.failures() == ["degree", "annihilation"]
    assert cert.witness.regular
    assert cert.jacobian_contraction == parse("x0*x1*x2")


def test_certificate_input_errors():
    H = parse("x0*x1*x2")
    with pytest.raises(InputError):
        verify_certificate(H, parse_many(["x0^2", "x1^2"], 3))
    with pytest.raises(InputError):
        verify_certificate(H, parse_many(["x0^2", "x1^2", "x2^2 + x0"]))
    with pytest.raises(InputError):
        verify_certificate(Poly.zero(3), parse_many(["x0^2", "x1^2", "x2^2"]))


# -- decision ---------------------------------------------------------------

def test_decision_examples():
    d = is_complete_intersection(parse("x0*x1*x2"))
    assert d.is_ci and d.type.degrees == (2, 2, 2) and d.type.paper_conforming
    d = is_complete_intersection(parse(NONCI5_H))
    assert not d.is_ci and d.refutation.count(2) == 4 and len(d.refutation) != 5
    d = is_complete_intersection(parse("x1^2*x2 - x0^3"))
    assert not d.is_ci and len(d.generators) == 5
    d = is_complete_intersection(legendre(2))
    assert d.is_ci and d.type.degrees == (2, 2, 2)
    assert all(ideal_piece(d.generators, k) == ideal_piece(k_lambda(2), k) for k in range(5))


def test_decision_non_conforming_type():
    d = is_complete_intersection(parse("x0^3", 3))
    assert d.is_ci and d.type.degrees == (1, 1, 4)
    assert not d.type.paper_conforming


def test_decision_zero():
    with pytest.raises(InputError):
        is_complete_intersection(Poly.zero(2))


def test_scaling_and_permutation_invariance():
    rng = random.Random(31)
    for _ in range(15):
        H = random_form(rng, 3, rng.randint(2, 4), rng.choice([0.3, 1.0]))
        d = is_complete_intersection(H)
        d2 = is_complete_intersection(H * Fraction(-7, 3))
        assert (d.is_ci, d.generator_degrees) == (d2.is_ci, d2.generator_degrees)
        perm = [2, 0, 1]
        Hp = Poly(3, {tuple(e[perm[i]] for i in range(3)): c for e, c in H.terms.items()})
        dp = is_complete_intersection(Hp)
        assert dp.is_ci == d.is_ci
        assert sorted(dp.generator_degrees) == sorted(d.generator_degrees)


def test_degree_and_socle_laws():
    rng = random.Random(32)
    seen = 0
    for _ in range(25):
        n = rng.randint(2, 3)
        H = random_form(rng, n, rng.randint(2, 4), rng.choice([0.3, 1.0]))
        d = is_complete_intersection(H)
        if not d.is_ci:
            for t in feasible_types(H.degree, n - 1):
                assert sample_ci_witness(H, t, 5, 0).successes == 0
            continue
        seen += 1
        cert = d.certificate
        assert H.degree == sum(cert.degrees) - n
        assert not contract(cert.jacobian_det, H).is_zero()
        assert not ideal_piece(cert.generators, H.degree).contains(cert.jacobian_det)
    assert seen


def test_monomial_decisions_match_closed_form():
    for n in range(1, 4):
        for s in range(1, 5):
            for a in monomials(n, s):
                d = is_complete_intersection(Poly.monomial(a))
                assert d.is_ci
                assert d.generator_degrees == tuple(sorted(x + 1 for x in a))


# -- feasible types ---------------------------------------------------------

def test_feasible_types():
    assert [t.degrees for t in feasible_types(3, 2)] == [(2, 2, 2)]
    assert [t.degrees for t in feasible_types(5, 4)] == [(2, 2, 2, 2, 2)]
    assert feasible_types(1, 2) == []


def test_feasible_types_brute_force():
    import itertools
    for n in range(0, 4):
        for s in range(1, 7):
            brute = sorted({tuple(sorted(c)) for c in itertools.product(range(2, s + 3), repeat=n + 1)
                            if sum(c) == s + n + 1})
            got = [t.degrees for t in feasible_types(s, n)]
            assert got == brute
            assert all(sum(t.degrees) == s + n + 1 for t in feasible_types(s, n))


def test_citype_validation():
    with pytest.raises(InputError):
        CIType((2, 2), 3)
    assert CIType.of((3, 2)).degrees == (2, 3)


# -- sampler ----------------------------------------------------------------

def test_sampler_three_lines():
    rep = sample_ci_witness(parse("x0*x1*x2"), (2, 2, 2), 50, 42)
    assert rep.successes >= 1 and rep.successes <= rep.z1 <= rep.trials == 50
    assert rep.witness.valid
    again = verify_certificate(rep.witness.H, rep.witness.generators)
    assert again.valid


def test_sampler_five_variable_non_ci():
    rep = sample_ci_witness(parse(NONCI5_H), (2, 2, 2, 2, 2), 30, 1)
    assert rep.successes == 0 and rep.witness is None
    assert rep.z1 == rep.successes


def test_sampler_deterministic():
    H = legendre(3)
    a = sample_ci_witness(H, (2, 2, 2), 10, 7)
    b = sample_ci_witness(H, (2, 2, 2), 10, 7)
    assert a == b
    assert sample_ci_witness(H, (2, 2, 2), 10, 8).witness != a.witness


def test_sampler_edge_cases():
    H = parse("x0*x1*x2")
    assert sample_ci_witness(H, (2, 2, 2), 0, 1).trials == 0
    rep = sample_ci_witness(parse("x0^2 + x1^2 + x2^2"), (1, 1, 3), 5, 1)
    assert rep.trials == 0 and "degree 1" in rep.note
    with pytest.raises(InputError):
        sample_ci_witness(H, (2, 2, 3), 5, 1)


# -- lemma check ------------------------------------------------------------

def test_lemma_reflexive():
    sq = parse_many(["x0^2", "x1^2", "x2^2"])
    assert lemma_ku_check(sq, sq, 3)


def test_lemma_socle_killed():
    K = k_lambda(2)
    rep = socle_piece(K, 3).polys[0]
    assert not lemma_ku_check(K, K + [rep], 3)


def test_lemma_maximal_ideal():
    sq = parse_many(["x0^2", "x1^2", "x2^2"])
    m = [Poly.var(3, i) for i in range(3)]
    assert not lemma_ku_check(sq, m, 3)


def test_lemma_redundant_generators():
    # J = Ann(H) given by a different generating set still passes
    H = legendre(5)
    K = list(minimal_generators(H).polys)
    J = K + [K[0] * Poly.var(3, 1)]
    assert lemma_ku_check(K, J, 3)


def test_lemma_preconditions():
    sq = parse_many(["x0^2", "x1^2", "x2^2"])
    with pytest.raises(InputError):
        lemma_ku_check(sq, parse_many(["x0^2", "x1^2"], 3), 3)
    with pytest.raises(InputError):
        lemma_ku_check(sq, sq, 2)
