import random

import pytest

from oracles import random_word

from braidcoset.cosets import (BraidCoset, CertificateError, EqualityCertificate, chain,
                               comb_certificate, componentwise_product, conj_to_coset,
                               coset_equal, coset_product, in_subgroup, independence_certificate,
                               product_threshold, product_word, replay_transcript,
                               representative_change, stabilization_certificate,
                               write_transcript)
from braidcoset.garside import braid_equal
from braidcoset.symmetric import canonical_invariant, perm_of
from braidcoset.words import IDENTITY, BraidWord, parse_word, shift, theta

w = parse_word


def test_certificate_is_checked_on_construction():
    c = EqualityCertificate(w("s3"), IDENTITY, w("s2"), w("s3 s2"), 2, 2)
    assert c.to_line() == "cert 2 2 : s3 ; s2 ; 1 ; s3 s2"
    with pytest.raises(CertificateError):
        EqualityCertificate(w("s2"), IDENTITY, w("s2"), w("s2 s2"), 2, 2)
    with pytest.raises(CertificateError):
        EqualityCertificate(w("s4"), IDENTITY, w("s2"), w("s3 s2"), 2, 2)


def test_certificate_algebra():
    a = EqualityCertificate(w("s3"), IDENTITY, w("s2"), w("s3 s2"), 2, 2)
    b = EqualityCertificate(IDENTITY, w("s4"), w("s3 s2"), w("s3 s2 s4"), 2, 2)
    ab = a.then(b)
    assert braid_equal(ab.rhs, w("s3 s2 s4")) and ab.lhs == w("s2")
    assert chain([a, b]) == ab
    assert a.inverse().lhs == a.rhs
    s = a.shifted(3)
    assert s.alpha == 5 and s.unshifted(3) == a
    r = a.reversed()
    assert r.lhs == w("s2") and r.rhs == w("s2 s3")


def test_transcript_round_trip_and_tamper():
    a = EqualityCertificate(w("s3"), IDENTITY, w("s2"), w("s3 s2"), 2, 2)
    text = "# comment\n\n" + write_transcript([a, a.inverse()])
    assert replay_transcript(text) == [a, a.inverse()]
    bad = text.replace("s3 ; s2", "s4 ; s2", 1)
    with pytest.raises(CertificateError, match="line 3"):
        replay_transcript(bad)


def test_product_examples():
    one = BraidCoset(0, 0)
    assert braid_equal(coset_product(one, one).rep, w("s1"))
    p = BraidCoset(2, 2, w("s2"))
    assert product_threshold(p, p) == 3
    assert braid_equal(coset_product(p, p).rep, w("s2") * theta(3, 2) * w("s2"))
    assert product_word(w("s2 s2"), w("s2"), 2, 3).letters[:2] == (2, 2)
    with pytest.raises(ValueError):
        coset_product(p, BraidCoset(1, 1))
    with pytest.raises(ValueError):
        coset_product(p, p, n=2)


def test_identity_coset_is_neutral():
    rng = random.Random(4)
    for _ in range(20):
        alpha, gamma = rng.randint(0, 3), rng.randint(0, 3)
        p = random_word(rng, [1, 2, 3, 4], 4)
        P = BraidCoset(alpha, gamma, p)
        n = product_threshold(BraidCoset(alpha, alpha), P)
        left = product_word(IDENTITY, P.rep, alpha, n)
        c = EqualityCertificate(theta(n, alpha).inverse(), IDENTITY, left, P.rep, alpha, gamma)
        n = product_threshold(P, BraidCoset(gamma, gamma))
        right = product_word(P.rep, IDENTITY, gamma, n)
        d = EqualityCertificate(IDENTITY, theta(n, gamma).inverse(), right, P.rep, alpha, gamma)
        assert c and d


def test_stabilization_below_range_rejected():
    with pytest.raises(ValueError):
        stabilization_certificate(w("s3"), w("s1"), 0, 1, 0, 2)
    c = stabilization_certificate(w("s3"), w("s1"), 0, 1, 0, 4)
    assert braid_equal(c.rhs, product_word(w("s3"), w("s1"), 1, 4))


def test_comb_examples():
    for beta in range(3):
        c = comb_certificate(BraidWord((beta + 1,)), 2, beta, "left")
        assert c.rhs == theta(2, beta) * BraidWord((beta + 3,))
    with pytest.raises(ValueError):
        comb_certificate(w("s1"), 2, 1)


def test_independence_rejects_bad_input():
    with pytest.raises(ValueError):
        independence_certificate(w("s1"), w("s1"), IDENTITY, 5, 0, 1, 0)
    with pytest.raises(ValueError):
        independence_certificate(w("s1"), w("s2"), IDENTITY, 1, 0, 1, 0)
    c = independence_certificate(w("s1"), w("s2"), w("s3^-1"), 4, 1, 1, 1, w("s2"))
    assert c.h == shift(4, w("s3")) and c.k == shift(4, w("s2^-1"))


def test_representative_change():
    p, p2 = w("s2"), w("s3 s2")
    cp = EqualityCertificate(w("s3"), IDENTITY, p, p2, 2, 2)
    q, q2 = w("s1"), w("s1 s3")
    cq = EqualityCertificate(IDENTITY, w("s3"), q, q2, 2, 1)
    c = representative_change(p, p2, cp, q, q2, cq, 2, 5)
    assert c.alpha == 2 and c.gamma == 1


def test_coset_equal_branches():
    v = coset_equal(BraidCoset(2, 2, w("s2")), BraidCoset(2, 2, w("s3 s2")))
    assert v.answer == "equal" and v.certificate is not None
    v = coset_equal(BraidCoset(2, 2, w("s2 s2")), BraidCoset(2, 2, w("s3 s2 s3 s2")))
    assert v.answer == "distinct" and "partial injection" in v.invariant
    v = coset_equal(BraidCoset(0, 0, w("s1 s1")), BraidCoset(0, 0, w("s1^-1 s1^-1")),
                    budget=50, length_cap=2)
    assert v.answer == "unknown"
    with pytest.raises(ValueError):
        coset_equal(BraidCoset(0, 1), BraidCoset(1, 0))


def test_coset_equal_is_sound_across_budgets():
    rng = random.Random(9)
    for _ in range(15):
        a = BraidCoset(1, 1, random_word(rng, [1, 2, 3], 3))
        b = BraidCoset(1, 1, random_word(rng, [1, 2, 3], 3))
        answers = {coset_equal(a, b, budget=bud, length_cap=cap).answer
                   for bud, cap in ((20, 2), (2000, 4))}
        assert not {"equal", "distinct"} <= answers
        same_inv = (canonical_invariant(perm_of(a.rep), 1, 1)
                    == canonical_invariant(perm_of(b.rep), 1, 1))
        assert ("distinct" in answers) == (not same_inv)


def test_conjugacy_bridge_and_componentwise():
    gs = [w("s1 s2"), w("s2")]
    h = w("s1")
    out = conj_to_coset(gs, h)
    assert all(braid_equal(o * h, g) for o, g in zip(out, gs))
    ps = [BraidCoset(1, 1, w("s2")), BraidCoset(1, 1, w("s1"))]
    qs = [BraidCoset(1, 1, w("s1")), BraidCoset(1, 1, w("s3"))]
    prods = componentwise_product(ps, qs)
    n = 4
    assert braid_equal(prods[0].rep, product_word(w("s2"), w("s1"), 1, n))
    assert braid_equal(prods[1].rep, product_word(w("s1"), w("s3"), 1, n))


def test_subgroup_membership():
    assert in_subgroup(w("s3 s4^-1"), 2)
    assert not in_subgroup(w("s2"), 2)
    assert in_subgroup(IDENTITY, 7)
