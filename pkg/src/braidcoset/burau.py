"""
The (unreduced) Burau representation, the block matrices Theta_j[k], the
subgroups G[n] of GL(infinity) and the one-parameter double-coset product.

Rows and columns are 0-based internally: generator s_i acts on columns i-1, i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import ONE, T, T_INV, ZERO, LaurentMatrix, LaurentPoly
from .words import BraidWord, ascending, support_upper, tau

ONE_MINUS_T = ONE - T
ONE_MINUS_T_INV = ONE - T_INV


def eta(w: BraidWord) -> LaurentMatrix:
    """Burau image of w. s_i has the block (1-t, t; 1, 0) on rows/columns
    i-1, i; the product is applied letter by letter as column operations."""
    top = support_upper(w)
    if top == 0:
        return LaurentMatrix.identity(1)
    dim = top + 1
    # work column-wise: cols[c][r]
    cols = [[ONE if r == c else ZERO for r in range(dim)] for c in range(dim)]
    for x in w.letters:
        c = abs(x) - 1
        a, b = cols[c], cols[c + 1]
        if x > 0:
            cols[c] = [ONE_MINUS_T * p + q for p, q in zip(a, b)]
            cols[c + 1] = [T * p for p in a]
        else:
            cols[c] = [T_INV * q for q in b]
            cols[c + 1] = [p + ONE_MINUS_T_INV * q for p, q in zip(a, b)]
    return LaurentMatrix([[cols[c][r] for c in range(dim)] for r in range(dim)])


def theta_matrix(j: int, k: int) -> LaurentMatrix:
    """The block matrix 1_k + [[V_j, t^j 1_j], [1_j, 0]], of size k + 2j, where
    every row of V_j is (1-t)(1, t, ..., t^(j-1))."""
    if j < 1:
        raise ValueError("j must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    dim = k + 2 * j
    tj = LaurentPoly.monomial(j)
    vrow = [ONE_MINUS_T * LaurentPoly.monomial(c) for c in range(j)]
    entries = {}
    for r in range(j):
        for c in range(j):
            entries[k + r, k + c] = vrow[c]
        entries[k + r, k + j + r] = tj
        for c in range(j):
            if c != r:
                entries[k + r, k + j + c] = ZERO
    for r in range(j):
        for c in range(2 * j):
            entries[k + j + r, k + c] = ONE if c == r else ZERO
    return LaurentMatrix.from_blocks(dim, entries)


def in_G(x: LaurentMatrix, n: int) -> bool:
    """Membership in G[n]: identity on the first n coordinates, the row vector
    (1, t, t^2, ...) fixed on the left and the all-ones column fixed on the
    right."""
    d = x.dim
    for i in range(min(n, d)):
        for j in range(d):
            want = ONE if i == j else ZERO
            if x[i, j] != want or x[j, i] != want:
                return False
    for c in range(d):
        acc = ZERO
        for r in range(d):
            if x[r, c].terms:
                acc = acc + LaurentPoly.monomial(r) * x[r, c]
        if acc != LaurentPoly.monomial(c):
            return False
    for r in range(d):
        acc = ZERO
        for c in range(d):
            acc = acc + x[r, c]
        if not acc.is_one():
            return False
    return True


@dataclass(frozen=True)
class GLCoset:
    """The double coset G[n] * rep * G[m]."""

    n: int
    m: int
    rep: LaurentMatrix = field(compare=False)

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("coset indices must be nonnegative")


def block_size(k: int, *mats: LaurentMatrix) -> int:
    """Smallest N >= 1 such that every matrix is the identity beyond k + N."""
    top = max((m.trimmed_dim() for m in mats), default=0)
    return max(1, top - k)


def star_t(p: GLCoset, q: GLCoset) -> GLCoset:
    """G[n] p Theta_j0[k] q G[m] with j0 = max(m, n, k + N)."""
    if p.m != q.n:
        raise ValueError(f"middle indices differ: {p.m} vs {q.n}")
    k = p.m
    N = block_size(k, p.rep, q.rep)
    j0 = max(p.n, q.m, k + N)
    return GLCoset(p.n, q.m, p.rep * theta_matrix(j0, k) * q.rep)


def step3_words(m: int, beta: int) -> tuple[BraidWord, BraidWord]:
    """(u, l) with theta_m[beta] = u theta_{m+1}[beta] l."""
    u = ascending(m + beta + 1, 2 * m + beta).inverse()
    ell = tau(m, m + 1, beta).inverse()
    return u, ell


@dataclass
class StabilizationWitness:
    U: LaurentMatrix
    L: LaurentMatrix
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def stabilization_witness(p: LaurentMatrix, q: LaurentMatrix, k: int, i: int) -> StabilizationWitness:
    """Matrices U, L in G[k] with Theta_i[k] = U Theta_{i+1}[k] L, U commuting
    with p and L with q; so p Theta_i q and p Theta_{i+1} q share a coset."""
    N = block_size(k, p, q)
    if i < N:
        raise ValueError(f"i = {i} is below the threshold N = {N}")
    u, ell = step3_words(i, k)
    U, L = eta(u), eta(ell)
    checks = {
        "theta": U * theta_matrix(i + 1, k) * L == theta_matrix(i, k),
        "U commutes with p": U * p == p * U,
        "L commutes with q": L * q == q * L,
        "U in G[k]": in_G(U, k),
        "L in G[k]": in_G(L, k),
    }
    return StabilizationWitness(U, L, checks)


def swap_blocks(h: LaurentMatrix, j: LaurentMatrix, k: int, M: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """For H = 1_k + h and J = 1_k + j with h, j of size M, return (H', J'):
    the same blocks moved to coordinates k+M .. k+2M-1."""
    hb, jb = h.block(k, M), j.block(k, M)
    dim = k + 2 * M

    def place(b: LaurentMatrix) -> LaurentMatrix:
        return LaurentMatrix.from_blocks(
            dim, {(k + M + r, k + M + c): b[r, c] for r in range(M) for c in range(M)})

    return place(hb), place(jb)


def check_representative_swap(p: LaurentMatrix, q: LaurentMatrix, H: LaurentMatrix,
                              J: LaurentMatrix, k: int, M: int | None = None) -> bool:
    """Check p J Theta_M H q = H' p Theta_M q J' for H, J in G[k]."""
    if not (in_G(H, k) and in_G(J, k)):
        raise ValueError("H and J must lie in G[k]")
    if M is None:
        M = max(block_size(k, p, q, H, J), 1)
    if max(H.trimmed_dim(), J.trimmed_dim()) > k + M:
        raise ValueError(f"M = {M} is too small for H and J")
    Hs, Js = swap_blocks(H, J, k, M)
    th = theta_matrix(M, k)
    if not J * th * H == Hs * th * Js:
        return False
    return p * J * th * H * q == Hs * p * th * q * Js


def specialize_theta_at_one(j: int, k: int):
    return theta_matrix(j, k).specialize(1)


def identity_coset(n: int = 0, m: int = 0) -> GLCoset:
    return GLCoset(n, m, LaurentMatrix.identity(1))


__all__ = [
    "eta", "theta_matrix", "in_G", "GLCoset", "star_t", "block_size", "step3_words",
    "StabilizationWitness", "stabilization_witness", "swap_blocks",
    "check_representative_swap", "identity_coset", "ONE", "T",
]
