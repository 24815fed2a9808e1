"""
The sixteen acceptance checks. Each ``check_*`` function returns
``(passed, detail)``; the pytest wrappers assert on it and record a one-line
verdict that is printed at the end of the run (see conftest.py). Running this
file directly prints the same lines without pytest.
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from oracles import brute_conjugator, random_word, same_braid, sym_double_coset_labels

from braidcoset.artin import check_theta_formula, final_counterexample_check
from braidcoset.burau import block_size, eta, stabilization_witness, theta_matrix
from braidcoset.cosets import (BraidCoset, associativity_certificate, comb_certificate,
                               coset_product, independence_certificate, naive_counterexample,
                               product_threshold, product_word, stabilization_chain,
                               step3_certificate)
from braidcoset.garside import braid_equal, conjugate_test
from braidcoset.laurent import permutation_matrix
from braidcoset.symmetric import (FinPermutation, SymCoset, canonical_invariant, perm_of,
                                  sym_product, sym_threshold, theta_s)
from braidcoset.words import (BraidWord, IndexGrid, admissible_grids, parse_word,
                              support_upper, theta)

RESULTS: dict[int, tuple[bool, str]] = {}


def _w(text: str) -> BraidWord:
    return parse_word(text)


# ---------------------------------------------------------------- 1-3

def check_burau_relations():
    cases = 0
    for i in range(1, 7):
        for j in range(1, 7):
            if abs(i - j) >= 2:
                si, sj = BraidWord((i,)), BraidWord((j,))
                if eta(si * sj) != eta(sj * si):
                    return False, f"far commutation fails for s{i}, s{j}"
                cases += 1
        a, b = BraidWord((i, i + 1, i)), BraidWord((i + 1, i, i + 1))
        if eta(a) != eta(b):
            return False, f"braid relation fails at i={i}"
        cases += 1
    return True, f"{cases} exact Laurent-matrix identities"


def check_theta_matrix():
    bad = [(j, k) for j in range(1, 6) for k in range(5) if theta_matrix(j, k) != eta(theta(j, k))]
    return not bad, f"25 cases, failures {bad}"


def check_step3():
    n = 0
    for m in range(1, 5):
        for beta in range(4):
            u, ell = step3_certificate(m, beta)
            if not braid_equal(u * theta(m + 1, beta) * ell, theta(m, beta)):
                return False, f"m={m} beta={beta}"
            if min(u.min_index(), ell.min_index()) <= m + beta:
                return False, f"support out of range at m={m} beta={beta}"
            n += 1
    return True, f"{n} cases, u and l in B[m+beta]"


# ---------------------------------------------------------------- 4-5

def check_grids():
    count = 0
    for g in range(1, 5):
        for ell in range(1, 5):
            for grid in admissible_grids(g, ell, 12):
                row = BraidWord(tuple(v for r in grid for v in r))
                col = BraidWord(tuple(grid[i][j] for j in range(ell) for i in range(g)))
                if not braid_equal(row, col):
                    return False, f"grid {grid}"
                count += 1
    example = IndexGrid(tuple(tuple(3 + i - j for j in range(1, 4)) for i in range(1, 4)))
    ok = braid_equal(example.row_word(), example.column_word())
    ok &= same_braid(example.row_word(), example.column_word())
    return ok, f"{count} admissible grids plus the 3+i-j example"


def check_comb():
    n = 0
    for j in range(1, 6):
        for beta in range(4):
            for i in range(beta + 1, beta + j):
                for sign in (1, -1):
                    d = BraidWord((sign * i,))
                    comb_certificate(d, j, beta, "left")
                    comb_certificate(d, j, beta, "right")
                    n += 2
    return True, f"{n} identities verified"


# ---------------------------------------------------------------- 6-8

def check_independence():
    rng = random.Random(6)
    for _ in range(200):
        alpha, beta, gamma = rng.randint(0, 4), rng.randint(0, 3), rng.randint(0, 4)
        p = random_word(rng, [1, 2, 3, 4], 4)
        q = random_word(rng, [1, 2, 3, 4], 4)
        gens = list(range(beta + 1, 5))
        h = random_word(rng, gens, 4)
        k = random_word(rng, gens, 4)
        N = max(map(support_upper, (p, q, h, k)), default=0)
        j = max(N, alpha, gamma) + 1
        independence_certificate(p, h, k, j, alpha, beta, gamma, q)
    return True, "200 randomized tuples verified"


def check_stabilization():
    rng = random.Random(7)
    for _ in range(100):
        alpha, beta, gamma = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        p = random_word(rng, [1, 2, 3, 4], 4)
        q = random_word(rng, [1, 2, 3, 4], 4)
        # threshold of the given words (canonical representatives may need less)
        n0 = max(support_upper(p), support_upper(q), alpha, gamma) + 1
        for n in (n0 + 1, n0 + 2):
            c = stabilization_chain(p, q, alpha, beta, gamma, n, n0)
            if not (braid_equal(c.lhs, product_word(p, q, beta, n))
                    and braid_equal(c.rhs, product_word(p, q, beta, n0))):
                return False, "certificate proves the wrong pair"
    return True, "100 pairs, n0 ~ n0+1 ~ n0+2 certified"


def check_associativity():
    a, b, c = _w("s2^-1 s1^-1"), _w("s1 s1"), _w("s1 s1 s2 s2")
    cert = associativity_certificate(a, b, c, 3, 1, 2, 3)
    ok = braid_equal(cert.left.rhs, cert.right.rhs)
    rng = random.Random(8)
    branches = {"beta<=gamma": 0, "gamma<beta": 0}
    while sum(branches.values()) < 50:
        alpha, beta, gamma, delta = (rng.randint(0, 3) for _ in range(4))
        key = "beta<=gamma" if beta <= gamma else "gamma<beta"
        if branches[key] >= 25:
            continue
        a, b, c = (random_word(rng, [1, 2, 3], 3) for _ in range(3))
        cert = associativity_certificate(a, b, c, alpha, beta, gamma, delta)
        ok &= braid_equal(cert.left.rhs, cert.right.rhs)
        ok &= cert.left.alpha == alpha and cert.left.gamma == delta
        branches[key] += 1
    return bool(ok), f"worked example plus 50 triples {branches}"


# ---------------------------------------------------------------- 9-12

def check_naive_counterexample():
    rep = naive_counterexample()
    ok = perm_of(_w("s2 s2")).is_identity()
    ok &= perm_of(_w("s3 s2 s3 s2")) == FinPermutation.parse("(2 4 3)")
    ok &= rep.invariants_differ
    ok &= rep.same_coset_certificate.alpha == 2 and rep.same_coset_certificate.gamma == 2
    return bool(ok), (f"perms {rep.perm_square} and {rep.perm_other}; invariants "
                      f"{rep.invariant_square} vs {rep.invariant_other}; "
                      f"certificate {rep.same_coset_certificate.to_line()}")


def check_symmetric():
    for n in range(1, 6):
        for beta in range(4):
            if perm_of(theta(n, beta)) != theta_s(n, beta):
                return False, f"theta {n} {beta}"
    rng = random.Random(10)
    for _ in range(100):
        alpha, beta, gamma = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        p = random_word(rng, [1, 2, 3, 4], 4)
        q = random_word(rng, [1, 2, 3, 4], 4)
        P, Q = BraidCoset(alpha, beta, p), BraidCoset(beta, gamma, q)
        sp_, sq_ = SymCoset(alpha, beta, perm_of(p)), SymCoset(beta, gamma, perm_of(q))
        n0 = max(product_threshold(P, Q), sym_threshold(sp_, sq_))
        braid_perm = perm_of(product_word(p, q, beta, n0))
        sp = sym_product(sp_, sq_, n0)
        if sp.perm != braid_perm:
            return False, "images differ at a common n"
        own = sym_product(SymCoset(alpha, beta, perm_of(p)), SymCoset(beta, gamma, perm_of(q)))
        canon = perm_of(coset_product(P, Q).rep)
        if canonical_invariant(own.perm, alpha, gamma) != canonical_invariant(canon, alpha, gamma):
            return False, "cosets differ"
    return True, "20 block swaps and 100 products agree"


def check_partial_injection():
    compared = 0
    for n in range(1, 7):
        for alpha in range(4):
            for beta in range(4):
                label = sym_double_coset_labels(n, alpha, beta)
                inv = {k: canonical_invariant(FinPermutation.from_images(k), alpha, beta)
                       for k in label}
                by_inv: dict = {}
                for k, v in inv.items():
                    by_inv.setdefault(v, set()).add(label[k])
                if any(len(s) != 1 for s in by_inv.values()):
                    return False, f"invariant merges cosets at n={n} {alpha} {beta}"
                if len(by_inv) != len(set(label.values())):
                    return False, f"invariant splits a coset at n={n} {alpha} {beta}"
                compared += len(label)
    return True, f"exhaustive over S_1..S_6, {compared} permutations classified"


def check_star_machinery():
    rng = random.Random(12)
    runs = 0
    for k in range(3):
        for _ in range(4):
            p = eta(random_word(rng, [1, 2, 3], 3))
            q = eta(random_word(rng, [1, 2, 3], 3))
            i = block_size(k, p, q)
            w = stabilization_witness(p, q, k, i)
            if not w.ok:
                return False, f"k={k}: {w.checks}"
            runs += 1
    for j in range(1, 5):
        for k in range(4):
            spec = theta_matrix(j, k).specialize(1)
            s = theta_s(j, k)
            images = [s(i) - 1 for i in range(1, k + 2 * j + 1)]
            if spec != permutation_matrix(images):
                return False, f"t=1 mismatch j={j} k={k}"
    return True, f"{runs} witnesses with five checks each; 16 t=1 specializations"


# ---------------------------------------------------------------- 13-16

def check_functor():
    rng = random.Random(13)
    for _ in range(50):
        k = rng.randint(0, 2)
        p = random_word(rng, [1, 2, 3], 3)
        q = random_word(rng, [1, 2, 3], 3)
        ep, eq = eta(p), eta(q)
        n, m = rng.randint(0, 2), rng.randint(0, 2)
        j0 = max(n, m, k + block_size(k, ep, eq))
        if eta(p * theta(j0, k) * q) != ep * theta_matrix(j0, k) * eq:
            return False, f"p={p} q={q} k={k}"
    return True, "50 randomized products"


def check_artin_formula():
    report: dict[int, int] = {}
    ok = all(check_theta_formula(k, beta, report) for k in range(1, 5) for beta in range(4))
    covered = sorted(report)
    return ok and covered == [1, 2, 3, 4, 5], f"16 (k, beta) pairs; case tallies {dict(sorted(report.items()))}"


def check_final_report():
    rep = final_counterexample_check(N=4, radius=3)
    ok = rep.search_witness is None and rep.searched > 0 and bool(rep.lines())
    return ok, (f"bounded search ({rep.searched} states, cap 6) found no pair; "
                f"{rep.status}")


def check_conjugacy():
    rng = random.Random(16)
    agree = yes = 0
    pairs = 0
    while pairs < 100:
        strands = rng.choice((3, 4))
        gens = list(range(1, strands))
        u = random_word(rng, gens, 5, 1)
        if pairs % 2 == 0:
            c = random_word(rng, gens, 2, 1)
            v = c * u * c.inverse()
        else:
            v = random_word(rng, gens, 5, 1)
        if len(v) > 5 or not v:
            continue
        pairs += 1
        got = conjugate_test(u, v)
        oracle = brute_conjugator(u, v, strands, 4)
        if got.answer == "yes" and not same_braid(got.witness * u * got.witness.inverse(), v):
            return False, f"bad witness for {u} ~ {v}"
        if (got.answer == "yes") == (oracle is not None):
            agree += 1
        yes += oracle is not None
    return agree == 100, f"{agree}/100 agree ({yes} conjugate)"


CHECKS = [
    (1, "Burau relations", check_burau_relations),
    (2, "Theta matrix equals Burau image", check_theta_matrix),
    (3, "stabilization identity", check_step3),
    (4, "grid products row-wise = column-wise", check_grids),
    (5, "comb identities", check_comb),
    (6, "representative independence", check_independence),
    (7, "stabilization certificates", check_stabilization),
    (8, "associativity certificates", check_associativity),
    (9, "naive product counterexample", check_naive_counterexample),
    (10, "symmetric coincidence", check_symmetric),
    (11, "partial-injection completeness", check_partial_injection),
    (12, "star_t machinery and t=1", check_star_machinery),
    (13, "functoriality of the Burau image", check_functor),
    (14, "Artin theta formula", check_artin_formula),
    (15, "two-automorphism report", check_final_report),
    (16, "conjugacy against brute force", check_conjugacy),
]


def _run(number: int, name: str, fn) -> tuple[bool, str]:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a raised certificate error is a failure, not a crash
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    detail = f"{detail} [{time.perf_counter() - t0:.1f}s]"
    RESULTS[number] = (ok, f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok, detail


@pytest.mark.parametrize("number,name,fn", CHECKS, ids=[f"c{n:02d}" for n, _, _ in CHECKS])
def test_criterion(number, name, fn):
    ok, detail = _run(number, name, fn)
    print(RESULTS[number][1])
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, name, fn in CHECKS:
        ok, _ = _run(number, name, fn)
        print(RESULTS[number][1], flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
