"""
Braid words over the Artin generators s_1, s_2, ... of the infinite braid group.

A letter is a nonzero integer: +i stands for s_i and -i for its inverse. Words
are immutable and always kept freely reduced; no braid relation is applied at
this level (equality of braids lives in :mod:`braidcoset.garside`).

Also defined here: the shift homomorphism, the positive braids tau and theta
that separate two coset representatives, and rectangular index grids whose
row-wise and column-wise products coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class WordSyntaxError(ValueError):
    """Raised when a word does not match the ``s<k>`` / ``s<k>^-1`` grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced finite word in the generators s_i^{+-1}, i >= 1."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x == 0 for x in letters):
            raise ValueError("generator index 0 is not allowed")
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> BraidWord:
        letters = []
        for index, sign in pairs:
            if index < 1 or sign not in (1, -1):
                raise ValueError(f"bad letter ({index}, {sign})")
            letters.append(index * sign)
        return cls(tuple(letters))

    @classmethod
    def gen(cls, i: int, power: int = 1) -> BraidWord:
        sign = 1 if power >= 0 else -1
        return cls((sign * i,) * abs(power))

    def pairs(self) -> list[tuple[int, int]]:
        """The letters as (index, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def reverse(self) -> BraidWord:
        """Letters in reverse order (the anti-automorphism fixing every s_i)."""
        return BraidWord(self.letters[::-1])

    def indices(self) -> set[int]:
        return {abs(x) for x in self.letters}

    def min_index(self) -> int:
        return min((abs(x) for x in self.letters), default=0)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"BraidWord({format_word(self)!r})"


IDENTITY = BraidWord()

_TOKEN = re.compile(r"s(\d+)(\^-1)?")


def parse_word(text: str) -> BraidWord:
    """Parse ``"s2^-1 s3 s1"``. The tokens ``1`` and ``e`` (or an empty string)
    denote the identity."""
    stripped = text.strip()
    if stripped in ("", "1", "e"):
        return IDENTITY
    letters = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        end = m.end()
        if end < n and not text[end].isspace():
            raise WordSyntaxError(f"unexpected {text[end]!r}", end)
        index = int(m.group(1))
        if index == 0:
            raise WordSyntaxError("generator index 0", m.start(1))
        letters.append(-index if m.group(2) else index)
        pos = end
    return BraidWord(tuple(letters))


def format_word(w: BraidWord) -> str:
    """Inverse of :func:`parse_word`; the empty word prints as ``1``."""
    if not w.letters:
        return "1"
    return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in w.letters)


def free_reduce(w: BraidWord | Sequence[int]) -> BraidWord:
    letters = w.letters if isinstance(w, BraidWord) else tuple(w)
    return BraidWord(_reduce(letters))


def support_upper(w: BraidWord) -> int:
    """Largest generator index in the (freely reduced) word, 0 when empty.

    This bounds the true support min{j : w in <s_1..s_j>} from above, which is
    all the coset constructions need.
    """
    return max((abs(x) for x in w.letters), default=0)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def shift(m: int, w: BraidWord) -> BraidWord:
    """The homomorphism s_j -> s_{m+j}."""
    if m < 0:
        raise ValueError("shift amount must be nonnegative")
    if m == 0:
        return w
    return BraidWord(tuple(x + m if x > 0 else x - m for x in w.letters))


def unshift(m: int, w: BraidWord) -> BraidWord:
    """Inverse of :func:`shift` on words whose indices all exceed m."""
    if m and w.letters and w.min_index() <= m:
        raise ValueError(f"word {w} has an index <= {m}")
    return BraidWord(tuple(x - m if x > 0 else x + m for x in w.letters))


def descending(top: int, bottom: int) -> BraidWord:
    """s_top s_{top-1} ... s_bottom (empty if top < bottom)."""
    return BraidWord(tuple(range(top, bottom - 1, -1)))


def ascending(bottom: int, top: int) -> BraidWord:
    """s_bottom s_{bottom+1} ... s_top (empty if top < bottom)."""
    return BraidWord(tuple(range(bottom, top + 1)))


def tau(i: int, n: int, beta: int) -> BraidWord:
    """s_{n+beta+i} s_{n+beta+i-1} ... s_{beta+i+1}, for 0 <= i <= n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= i <= n - 1:
        raise ValueError(f"tau index {i} out of range 0..{n - 1}")
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    return descending(n + beta + i, beta + i + 1)


def theta(n: int, beta: int) -> BraidWord:
    """The positive braid tau_0 tau_1 ... tau_{n-1}: two adjacent bundles of n
    strands, starting after strand beta, cross each other."""
    if n < 1:
        raise ValueError("n must be positive")
    letters: list[int] = []
    for i in range(n):
        letters.extend(range(n + beta + i, beta + i, -1))
    return BraidWord(tuple(letters))


@dataclass(frozen=True)
class IndexGrid:
    """A g x l array of generator indices, strictly decreasing along each row
    and strictly increasing down each column.

    ``entries[i][j]`` is the index in row i, column j (0-based). Empty grids
    (zero rows or zero columns) are allowed and stand for the identity.
    """

    entries: tuple[tuple[int, ...], ...]
    ncols: int = field(default=-1)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        ncols = len(rows[0]) if rows else max(self.ncols, 0)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", ncols)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged grid")
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v < 1:
                    raise ValueError(f"grid entry {v} is not a positive index")
                if j and not v < r[j - 1]:
                    raise ValueError(f"row {i} is not strictly decreasing")
                if i and not rows[i - 1][j] < v:
                    raise ValueError(f"column {j} is not strictly increasing")

    @classmethod
    def bracket(cls, top_left: int, top_right: int, bottom_left: int,
                bottom_right: int) -> IndexGrid:
        """The grid written [top_left -> top_right ; bottom_left -> bottom_right]
        with unit steps: each row counts down by one, each column counts up."""
        ncols = top_left - top_right + 1
        nrows = bottom_left - top_left + 1
        if ncols < 0 or nrows < 0:
            raise ValueError(
                f"bracket [{top_left}->{top_right}; {bottom_left}->{bottom_right}] "
                "has negative size")
        if ncols and nrows and bottom_right != bottom_left - ncols + 1:
            raise ValueError(
                f"bracket [{top_left}->{top_right}; {bottom_left}->{bottom_right}] "
                "is not a unit-step grid")
        return cls.affine(top_left, nrows, ncols)

    @classmethod
    def affine(cls, top_left: int, nrows: int, ncols: int) -> IndexGrid:
        """Entry (i, j) = top_left + i - j."""
        rows = tuple(tuple(top_left + i - j for j in range(ncols)) for i in range(nrows))
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def row_word(self) -> BraidWord:
        return BraidWord(tuple(v for r in self.entries for v in r))

    def column_word(self) -> BraidWord:
        return BraidWord(tuple(self.entries[i][j]
                               for j in range(self.ncols) for i in range(self.nrows)))

    def values(self) -> list[int]:
        return [v for r in self.entries for v in r]


def grid_word(g: IndexGrid, order: str = "row") -> BraidWord:
    """Concatenate the grid row by row (``"row"``) or column by column
    (``"column"``); both orders give the same braid."""
    if order in ("row", "row-wise"):
        return g.row_word()
    if order in ("column", "col", "column-wise"):
        return g.column_word()
    raise ValueError(f"unknown order {order!r}")


def admissible_grids(nrows: int, ncols: int, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every nrows x ncols array with entries in 1..max_entry, strictly
    decreasing along rows and strictly increasing down columns, as raw tuples
    (wrap in :class:`IndexGrid` when validation is wanted)."""

    def rows(prev: tuple[int, ...] | None, j: int, cur: list[int]):
        if j == ncols:
            yield tuple(cur)
            return
        hi = cur[-1] - 1 if cur else max_entry
        lo = prev[j] + 1 if prev else 1
        for v in range(lo, hi + 1):
            cur.append(v)
            yield from rows(prev, j + 1, cur)
            cur.pop()

    def build(acc: list[tuple[int, ...]]):
        if len(acc) == nrows:
            yield tuple(acc)
            return
        for r in rows(acc[-1] if acc else None, 0, []):
            acc.append(r)
            yield from build(acc)
            acc.pop()

    yield from build([])


def theta_grid(n: int, beta: int) -> IndexGrid:
    """The grid whose row-wise product is theta(n, beta)."""
    return IndexGrid.affine(n + beta, n, n)
