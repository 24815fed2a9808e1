"""
Exact arithmetic in Z[t, t^-1] and square matrices over it.

A :class:`LaurentMatrix` of dimension d stands for the infinite matrix equal to
its d x d block in the top-left corner and to the identity elsewhere. Two
matrices are equal when they agree after padding to a common size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial with integer coefficients, stored as sorted
    (exponent, coefficient) pairs with no zero coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            acc: dict[int, int] = {}
            for e, c in terms:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
            items = acc.items()
        self.terms = tuple(sorted((int(e), int(c)) for e, c in items if c))
        self._hash = None

    @classmethod
    def _raw(cls, d: dict[int, int]) -> LaurentPoly:
        p = object.__new__(cls)
        p.terms = tuple(sorted((e, c) for e, c in d.items() if c))
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        p = object.__new__(LaurentPoly)
        p.terms = tuple((e, -c) for e, c in self.terms)
        p._hash = None
        return p

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        if other.terms == ((0, 1),):
            return self
        if self.terms == ((0, 1),):
            return other
        d: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1 or self.terms[0][1] not in (1, -1):
                raise ValueError("only units can be raised to negative powers")
            e, c = self.terms[0]
            return LaurentPoly({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def evaluate(self, t0) -> Fraction:
        t0 = Fraction(t0)
        if t0 == 0 and any(e < 0 for e, _ in self.terms):
            raise ZeroDivisionError("cannot evaluate negative powers of t at 0")
        return sum((c * t0 ** e for e, c in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)
T_INV = LaurentPoly.monomial(-1)


class LaurentMatrix:
    """Square matrix over Z[t, t^-1], extended by the identity beyond ``dim``."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_coerce(x) for x in r) for r in rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        self.dim = d
        self.rows = rows

    @classmethod
    def identity(cls, dim: int) -> LaurentMatrix:
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_blocks(cls, dim: int, entries: Mapping[tuple[int, int], LaurentPoly]) -> LaurentMatrix:
        """Identity of size ``dim`` with the given (row, col) entries overwritten."""
        rows = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
        for (i, j), v in entries.items():
            rows[i][j] = _coerce(v)
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        if i < self.dim and j < self.dim:
            return self.rows[i][j]
        return ONE if i == j else ZERO

    def pad(self, dim: int) -> LaurentMatrix:
        if dim <= self.dim:
            return self
        return LaurentMatrix([[self[i, j] for j in range(dim)] for i in range(dim)])

    def trimmed_dim(self) -> int:
        """Smallest d such that the matrix is the identity outside its d x d block."""
        d = self.dim
        while d > 0:
            k = d - 1
            if not self.rows[k][k].is_one():
                break
            if any(not self.rows[k][j].is_zero() for j in range(k)):
                break
            if any(not self.rows[i][k].is_zero() for i in range(k)):
                break
            d -= 1
        return d

    def trimmed(self) -> LaurentMatrix:
        d = self.trimmed_dim()
        if d == self.dim:
            return self
        return LaurentMatrix([r[:d] for r in self.rows[:d]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        d = max(self.dim, other.dim)
        a, b = self.pad(d), other.pad(d)
        return a.rows == b.rows

    def __hash__(self) -> int:
        return hash(self.trimmed().rows)

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        d = max(self.dim, other.dim)
        a = self.pad(d).rows
        b = other.pad(d).rows
        cols = list(zip(*b))
        out = []
        for r in a:
            nz = [(k, x) for k, x in enumerate(r) if x.terms]
            row = []
            for c in cols:
                acc: dict[int, int] = {}
                for k, x in nz:
                    y = c[k]
                    if not y.terms:
                        continue
                    for e1, c1 in x.terms:
                        for e2, c2 in y.terms:
                            e = e1 + e2
                            acc[e] = acc.get(e, 0) + c1 * c2
                row.append(LaurentPoly._raw(acc))
            out.append(row)
        return LaurentMatrix(out)

    def __neg__(self) -> LaurentMatrix:
        return LaurentMatrix([[-x for x in r] for r in self.rows])

    def block(self, start: int, size: int) -> LaurentMatrix:
        """The principal submatrix on rows and columns start .. start+size-1."""
        m = self.pad(start + size)
        return LaurentMatrix([[m[i, j] for j in range(start, start + size)]
                              for i in range(start, start + size)])

    def specialize(self, t0) -> list[list[Fraction]]:
        """Evaluate every entry at t = t0 (t0 must be nonzero)."""
        t0 = Fraction(t0)
        if t0 == 0:
            raise ValueError("t0 = 0 is not allowed: entries may contain negative powers")
        return [[x.evaluate(t0) for x in r] for r in self.rows]

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "entries": [[[[e, str(c)] for e, c in x.terms] for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentMatrix:
        dim = int(data["dim"])
        rows = [[LaurentPoly((int(e), int(c)) for e, c in x) for x in r] for r in data["entries"]]
        if len(rows) != dim:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        return cls(rows)

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + ", ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self) -> str:
        return f"LaurentMatrix(dim={self.dim})"


def permutation_matrix(images: Iterable[int]) -> list[list[Fraction]]:
    """Rational 0/1 matrix with a 1 in row i, column images[i] (0-based)."""
    images = list(images)
    n = len(images)
    return [[Fraction(1 if images[i] == j else 0) for j in range(n)] for i in range(n)]


def rational_matmul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in zip(*b)] for r in a]
