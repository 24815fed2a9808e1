"""
Reference computations that share no code path with the engines under test.

* Word problem: the Artin action on the free group is faithful, so two words
  are the same braid iff their generator images agree. No normal forms.
* Burau: generator matrices specialized at a rational t and multiplied as
  plain Fraction matrices, instead of symbolic column operations.
* Conjugacy: breadth-first search for a short conjugator, tested with the
  Artin oracle.
* Symmetric double cosets: orbits of S_n under left and right multiplication
  by the adjacent transpositions of the two point stabilizers.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from braidcoset.artin import artin
from braidcoset.words import BraidWord


def same_braid(u: BraidWord, v: BraidWord) -> bool:
    return artin(u) == artin(v)


def burau_specialized(w: BraidWord, t0, dim: int) -> list[list[Fraction]]:
    t = Fraction(t0)
    m = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for x in w.letters:
        i = abs(x) - 1
        g = [[Fraction(int(r == c)) for c in range(dim)] for r in range(dim)]
        if x > 0:
            g[i][i], g[i][i + 1], g[i + 1][i], g[i + 1][i + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            g[i][i], g[i][i + 1], g[i + 1][i], g[i + 1][i + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
        m = [[sum(m[r][k] * g[k][c] for k in range(dim)) for c in range(dim)] for r in range(dim)]
    return m


def words_up_to(gens: list[int], max_len: int):
    """Freely reduced words over the generators and their inverses."""
    letters = [s * g for g in gens for s in (1, -1)]
    frontier = [()]
    yield BraidWord()
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
                yield BraidWord(w + (x,))
        frontier = nxt


def brute_conjugator(u: BraidWord, v: BraidWord, strands: int, max_len: int) -> BraidWord | None:
    """Some c of length <= max_len with c u c^-1 = v, or None."""
    target = artin(v)
    for c in words_up_to(list(range(1, strands)), max_len):
        if artin(c * u * c.inverse()) == target:
            return c
    return None


def random_word(rng: random.Random, gens: list[int], max_len: int, min_len: int = 0) -> BraidWord:
    n = rng.randint(min_len, max_len)
    return BraidWord(tuple(rng.choice(gens) * rng.choice((1, -1)) for _ in range(n)))


def sym_double_coset_labels(n: int, alpha: int, beta: int) -> dict[tuple[int, ...], int]:
    """Label every permutation of 1..n (as its image tuple) by its orbit under
    s -> a s b with a fixing 1..alpha and b fixing 1..beta, products read left
    to right so that (a s b)(i) = b(s(a(i)))."""
    perms = list(itertools.permutations(range(1, n + 1)))
    label: dict[tuple[int, ...], int] = {}
    left = [j for j in range(alpha + 1, n)]     # swap inputs j, j+1
    right = [j for j in range(beta + 1, n)]     # swap values j, j+1
    for start in perms:
        if start in label:
            continue
        tag = len(set(label.values()))
        label[start] = tag
        stack = [start]
        while stack:
            s = stack.pop()
            nbrs = []
            for j in left:
                t = list(s)
                t[j - 1], t[j] = t[j], t[j - 1]
                nbrs.append(tuple(t))
            for j in right:
                nbrs.append(tuple(j + 1 if x == j else j if x == j + 1 else x for x in s))
            for t in nbrs:
                if t not in label:
                    label[t] = tag
                    stack.append(t)
    return label
