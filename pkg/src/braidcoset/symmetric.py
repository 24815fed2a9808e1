"""
Finitely supported permutations of {1, 2, 3, ...}, the endpoint map from
braids, block swaps, and a complete invariant for the double cosets
S[alpha] \\ S / S[beta], where S[a] is the subgroup fixing 1..a pointwise.

Convention: products are read left to right, so ``(s * t)(i) = t(s(i))``.
For a braid, ``perm_of(w)(i)`` is the final position of the strand that
starts at position i; with this convention perm_of is a homomorphism.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .words import BraidWord


class FinPermutation:
    """A bijection of the positive integers moving finitely many points."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[int, int] | None = None):
        m = {int(k): int(v) for k, v in (mapping or {}).items() if int(k) != int(v)}
        if any(k < 1 or v < 1 for k, v in m.items()):
            raise ValueError("permutations act on positive integers")
        if set(m) != set(m.values()):
            raise ValueError("mapping is not a bijection of its support")
        self._map = m

    @classmethod
    def from_images(cls, images: Iterable[int]) -> FinPermutation:
        """From the 1-based image list [s(1), s(2), ...]."""
        return cls({i + 1: v for i, v in enumerate(images)})

    @classmethod
    def transposition(cls, i: int, j: int) -> FinPermutation:
        return cls({i: j, j: i})

    @classmethod
    def parse(cls, text: str) -> FinPermutation:
        """Cycle notation such as ``(1 3 2)(4 5)``; ``()`` is the identity."""
        body = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)*", body):
            raise ValueError(f"not a cycle expression: {text!r}")
        perm = cls()
        for cyc in re.findall(r"\(([^)]*)\)", body):
            pts = [int(x) for x in cyc.split()]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle ({cyc})")
            if len(pts) > 1:
                perm = perm * cls({pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))})
        return perm

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self._map)

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def support(self) -> set[int]:
        return set(self._map)

    def max_moved(self) -> int:
        return max(self._map, default=0)

    def __mul__(self, other: FinPermutation) -> FinPermutation:
        """Apply self first, then other."""
        pts = set(self._map) | set(other._map)
        return FinPermutation({i: other(self(i)) for i in pts})

    def inverse(self) -> FinPermutation:
        return FinPermutation({v: k for k, v in self._map.items()})

    def is_identity(self) -> bool:
        return not self._map

    def images(self, n: int) -> list[int]:
        return [self(i) for i in range(1, n + 1)]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FinPermutation) and self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"FinPermutation({str(self)!r})"


IDENTITY_PERM = FinPermutation()


def perm_of(w: BraidWord) -> FinPermutation:
    """Endpoint permutation of a braid: i maps to the final position of the
    strand starting at i."""
    n = max((abs(x) for x in w.letters), default=0) + 1
    at = list(range(n + 1))  # at[pos] = strand currently at pos
    for x in w.letters:
        i = abs(x)
        at[i], at[i + 1] = at[i + 1], at[i]
    return FinPermutation({at[pos]: pos for pos in range(1, n + 1)})


def theta_s(n: int, beta: int) -> FinPermutation:
    """Swap the blocks beta+1..beta+n and beta+n+1..beta+2n."""
    if n < 1:
        raise ValueError("n must be positive")
    m = {}
    for i in range(beta + 1, beta + n + 1):
        m[i] = i + n
        m[i + n] = i
    return FinPermutation(m)


@dataclass(frozen=True)
class PartialInjection:
    """Injective partial map from {1..beta} to {1..alpha}, stored as sorted pairs."""

    alpha: int
    beta: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.pairs))
        object.__setattr__(self, "pairs", pairs)
        dom = [a for a, _ in pairs]
        rng = [b for _, b in pairs]
        if len(set(dom)) != len(dom) or len(set(rng)) != len(rng):
            raise ValueError("not an injective partial map")
        if any(not 1 <= a <= self.beta for a in dom) or any(not 1 <= b <= self.alpha for b in rng):
            raise ValueError("pairs out of range")

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __str__(self) -> str:
        body = ", ".join(f"{a}->{b}" for a, b in self.pairs)
        return "{" + body + "}"


def canonical_invariant(s: FinPermutation, alpha: int, beta: int) -> PartialInjection:
    """Complete invariant of S[alpha] s S[beta].

    With products read left to right, left factors act on the input side and
    right factors on the output side; what survives is which of the first
    alpha inputs land among the first beta outputs. It is recorded from the
    output side: i <= beta is paired with the input j <= alpha that reaches it.
    """
    inv = s.inverse()
    return PartialInjection(alpha, beta, tuple(
        (i, inv(i)) for i in range(1, beta + 1) if inv(i) <= alpha))


@dataclass(frozen=True)
class SymCoset:
    """The double coset S[alpha] perm S[gamma]."""

    alpha: int
    gamma: int
    perm: FinPermutation

    def invariant(self) -> PartialInjection:
        return canonical_invariant(self.perm, self.alpha, self.gamma)

    def same_coset(self, other: SymCoset) -> bool:
        if (self.alpha, self.gamma) != (other.alpha, other.gamma):
            raise ValueError("cosets over different subgroups")
        return self.invariant() == other.invariant()


def sym_threshold(p: SymCoset, q: SymCoset) -> int:
    return max(p.perm.max_moved(), q.perm.max_moved(), p.alpha, q.gamma) + 1


def sym_product(p: SymCoset, q: SymCoset, n: int | None = None) -> SymCoset:
    """S[alpha] p theta_s(n, beta) q S[gamma] at n = n0 unless given."""
    if p.gamma != q.alpha:
        raise ValueError(f"middle indices differ: {p.gamma} vs {q.alpha}")
    n0 = sym_threshold(p, q)
    if n is None:
        n = n0
    elif n < n0:
        raise ValueError(f"n = {n} is below the stable range (n0 = {n0})")
    return SymCoset(p.alpha, q.gamma, p.perm * theta_s(n, p.gamma) * q.perm)


def fixes_prefix(s: FinPermutation, alpha: int) -> bool:
    return all(s(i) == i for i in range(1, alpha + 1))


__all__ = [
    "FinPermutation", "IDENTITY_PERM", "perm_of", "theta_s", "PartialInjection",
    "canonical_invariant", "SymCoset", "sym_product", "sym_threshold", "fixes_prefix",
]
