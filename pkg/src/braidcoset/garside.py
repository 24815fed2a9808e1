"""
Left normal form in B_n and the word and conjugacy problems built on it.

A braid is written Delta^inf A_1 ... A_r where every A_k is a positive
permutation braid other than 1 and Delta, and each pair (A_k, A_{k+1}) is
left-weighted: every generator that left-divides A_{k+1} right-divides A_k.

Simple factors are permutations of range(n) stored as tuples: ``p[k]`` is the
final position of the strand that starts at position k, words being read left
to right. The generator s_i (1-based) swaps positions i-1 and i.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .words import BraidWord, exponent_sum, support_upper

__all__ = [
    "GarsideNF", "normal_form", "braid_equal", "conjugate_test", "exponent_sum",
    "ConjugacyResult", "BudgetExceeded", "DEFAULT_SSS_BUDGET", "braid_perm",
]

DEFAULT_SSS_BUDGET = 100_000

Perm = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    pass


def _inverse(p: Perm) -> list[int]:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return inv


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _atom(i: int, n: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def _delta_over_atom(i: int, n: int) -> Perm:
    """The simple element Y with Y s_i = Delta."""
    swap = {i - 1: i, i: i - 1}
    return tuple(swap.get(n - 1 - k, n - 1 - k) for k in range(n))


def _flip(p: Perm) -> Perm:
    """Conjugation by Delta, s_i -> s_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


def _left_weight_perms(a: Perm, b: Perm) -> tuple[Perm, Perm] | None:
    """Rewrite the product of simples a.b as a left-weighted pair; None when
    (a, b) already is one."""
    n = len(a)
    ainv = _inverse(a)
    bl = list(b)
    todo = [i for i in range(n - 1) if bl[i] > bl[i + 1] and ainv[i] < ainv[i + 1]]
    if not todo:
        return None
    while todo:
        i = todo.pop()
        if not (bl[i] > bl[i + 1] and ainv[i] < ainv[i + 1]):
            continue
        # a <- a s_{i+1}, b <- s_{i+1}^-1 b
        ainv[i], ainv[i + 1] = ainv[i + 1], ainv[i]
        bl[i], bl[i + 1] = bl[i + 1], bl[i]
        for j in (i - 1, i, i + 1):
            if 0 <= j < n - 1 and bl[j] > bl[j + 1] and ainv[j] < ainv[j + 1]:
                todo.append(j)
    return tuple(_inverse(tuple(ainv))), tuple(bl)


class _SimpleTable:
    """Simple elements of B_n interned as small integers, with memoised
    left-weighting of pairs. Tables grow lazily, so large n is fine as long as
    only few simples occur."""

    def __init__(self, n: int):
        self.n = n
        self.ids: dict[Perm, int] = {}
        self.perms: list[Perm] = []
        self.flipped: list[int] = []
        self.pairs: dict[tuple[int, int], tuple[int, int] | None] = {}
        self.identity = self.intern(_identity(n))
        self.delta = self.intern(_delta(n))
        self.atoms = [-1] + [self.intern(_atom(i, n)) for i in range(1, n)]
        self.co_atoms = [-1] + [self.intern(_delta_over_atom(i, n)) for i in range(1, n)]

    def intern(self, p: Perm) -> int:
        k = self.ids.get(p)
        if k is None:
            k = len(self.perms)
            self.ids[p] = k
            self.perms.append(p)
            self.flipped.append(-1)
        return k

    def flip(self, k: int) -> int:
        f = self.flipped[k]
        if f < 0:
            f = self.intern(_flip(self.perms[k]))
            self.flipped[k] = f
            self.flipped[f] = k
        return f

    def left_weight(self, a: int, b: int) -> tuple[int, int] | None:
        key = (a, b)
        try:
            return self.pairs[key]
        except KeyError:
            pass
        res = _left_weight_perms(self.perms[a], self.perms[b])
        if res is not None:
            res = (self.intern(res[0]), self.intern(res[1]))
        self.pairs[key] = res
        return res


_TABLES: dict[int, _SimpleTable] = {}


def _table(n: int) -> _SimpleTable:
    t = _TABLES.get(n)
    if t is None:
        t = _TABLES[n] = _SimpleTable(n)
    return t


def simple_word(p: Perm) -> list[int]:
    """A positive word (1-based generator indices) for the simple braid p."""
    q = list(p)
    out = []
    n = len(q)
    i = 0
    while i < n - 1:
        if q[i] > q[i + 1]:
            out.append(i + 1)
            q[i], q[i + 1] = q[i + 1], q[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return out


class _Builder:
    """Incremental left normal form under right multiplication.

    Factors are kept (as interned ids) in a frame twisted by Delta-conjugation
    ``flips`` times, so multiplying by an inverse generator needs no pass over
    the list.
    """

    __slots__ = ("n", "inf", "factors", "flips", "table")

    def __init__(self, n: int, inf: int = 0, factors=()):
        self.n = n
        self.table = t = _table(n)
        self.inf = inf
        self.factors = [t.intern(p) for p in factors]
        self.flips = 0

    def _push(self, s: int) -> None:
        f = self.factors
        f.append(s)
        j = len(f) - 1
        lw = self.table.left_weight
        while j > 0:
            pair = lw(f[j - 1], f[j])
            if pair is None:
                break
            f[j - 1], f[j] = pair
            j -= 1
        if j == len(f) - 1 and j > 0:
            return
        ident = self.table.identity
        while f and f[-1] == ident:
            f.pop()
        delta = self.table.delta
        k = 0
        while k < len(f) and f[k] == delta:
            k += 1
        if k:
            del f[:k]
            self.inf += k

    def mul_letter(self, x: int) -> None:
        t = self.table
        if x > 0:
            self._push(t.atoms[self.n - x if self.flips else x])
        else:
            # s_i^-1 = Delta^-1 Y; moving Delta^-1 to the front twists every factor
            self.inf -= 1
            self.flips ^= 1
            self._push(t.co_atoms[self.n + x if self.flips else -x])

    def mul_letters(self, letters) -> None:
        for x in letters:
            self.mul_letter(x)

    def mul_simple(self, s: Perm) -> None:
        k = self.table.intern(s)
        self._push(self.table.flip(k) if self.flips else k)

    def result(self) -> GarsideNF:
        t = self.table
        fs = self.factors
        if self.flips:
            fs = [t.flip(k) for k in fs]
        return GarsideNF(self.n, self.inf, tuple(t.perms[k] for k in fs))


@dataclass(frozen=True)
class GarsideNF:
    """Delta^inf * factors[0] * ... * factors[-1] in B_n."""

    n: int
    inf: int
    factors: tuple[Perm, ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        n = self.n
        dw = simple_word(_delta(n))
        letters: list[int] = []
        if self.inf >= 0:
            letters.extend(dw * self.inf)
        else:
            inv = [-x for x in reversed(dw)]
            letters.extend(inv * (-self.inf))
        for p in self.factors:
            letters.extend(simple_word(p))
        return BraidWord(tuple(letters))

    def __mul__(self, other: GarsideNF) -> GarsideNF:
        if self.n != other.n:
            raise ValueError("strand counts differ")
        b = _Builder(self.n, self.inf, self.factors)
        for x in other.to_word().letters:
            b.mul_letter(x)
        return b.result()

    def inverse(self) -> GarsideNF:
        return normal_form(self.to_word().inverse(), self.n)

    def conjugate_by_simple(self, s: Perm) -> GarsideNF:
        """s^-1 * self * s."""
        b = _Builder(self.n)
        for x in reversed(simple_word(s)):
            b.mul_letter(-x)
        for x in self.to_word().letters:
            b.mul_letter(x)
        b.mul_simple(s)
        return b.result()

    def cycling(self) -> tuple[GarsideNF, Perm]:
        """Conjugate by tau^inf(A_1), moving the first factor to the end."""
        if not self.factors:
            return self, _identity(self.n)
        c = self.factors[0]
        if self.inf % 2:
            c = _flip(c)
        return self.conjugate_by_simple(c), c

    def decycling(self) -> tuple[GarsideNF, BraidWord]:
        """Conjugate by A_r^-1, moving the last factor to the front.

        Returns the new form and the conjugator c with new = c^-1 self c.
        """
        if not self.factors:
            return self, BraidWord()
        last = self.factors[-1]
        w = BraidWord(tuple(simple_word(last)))
        new = normal_form(w * self.to_word() * w.inverse(), self.n)
        return new, w.inverse()

    def __str__(self) -> str:
        fs = " ".join("(" + ",".join(str(v + 1) for v in p) + ")" for p in self.factors)
        return f"D^{self.inf} {fs}".rstrip()


def normal_form(w: BraidWord, n: int) -> GarsideNF:
    """Left normal form of w in B_n; every generator index must be < n."""
    if n < 1:
        raise ValueError("n must be positive")
    if support_upper(w) >= n:
        raise ValueError(f"word {w} does not live in B_{n}")
    return _nf_letters(w.letters, n)


def _nf_letters(letters, n: int) -> GarsideNF:
    inf, fs, flips = _nf_ids(letters, n)
    t = _table(n)
    if flips:
        fs = [t.flip(k) for k in fs]
    return GarsideNF(n, inf, tuple(t.perms[k] for k in fs))


_MISSING = object()


def _nf_ids(letters, n: int) -> tuple[int, list[int], int]:
    """Same computation as :class:`_Builder`, inlined for speed; returns
    (inf, interned factor ids, frame parity)."""
    t = _table(n)
    pairs = t.pairs
    lw = t.left_weight
    atoms, co_atoms = t.atoms, t.co_atoms
    ident, delta = t.identity, t.delta
    f: list[int] = []
    inf = 0
    flips = 0
    for x in letters:
        if x > 0:
            s = atoms[n - x if flips else x]
        else:
            inf -= 1
            flips ^= 1
            s = co_atoms[n + x if flips else -x]
        f.append(s)
        j = len(f) - 1
        last = j
        while j > 0:
            a = f[j - 1]
            pair = pairs.get((a, f[j]), _MISSING)
            if pair is _MISSING:
                pair = lw(a, f[j])
            if pair is None:
                break
            f[j - 1], f[j] = pair
            j -= 1
        if j == last and j > 0:
            continue
        while f and f[-1] == ident:
            f.pop()
        k = 0
        while k < len(f) and f[k] == delta:
            k += 1
        if k:
            del f[:k]
            inf += k
    return inf, f, flips


def braid_perm(w: BraidWord, n: int) -> tuple[int, ...]:
    """Endpoint permutation of w on n strands (same convention as the factors)."""
    return _perm_letters(w.letters, n)


def _perm_letters(letters, n: int) -> tuple[int, ...]:
    pos = list(range(n))
    for x in letters:
        i = x if x > 0 else -x
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    # pos[k] = strand now at position k
    p = [0] * n
    for k, s in enumerate(pos):
        p[s] = k
    return tuple(p)


def _shifted_letters(u: BraidWord, v: BraidWord) -> tuple[tuple[int, ...], tuple[int, ...], int, int]:
    """Shift both words down as far as possible; return the letters, the
    smallest strand count containing both, and the shift used. Shifting is an
    injective homomorphism, so equality and conjugacy are unaffected."""
    idx = [x if x > 0 else -x for x in u.letters]
    idx += [x if x > 0 else -x for x in v.letters]
    if not idx:
        return (), (), 2, 0
    m = min(idx) - 1
    n = max(idx) - m + 1
    if m:
        lu = tuple(x - m if x > 0 else x + m for x in u.letters)
        lv = tuple(x - m if x > 0 else x + m for x in v.letters)
    else:
        lu, lv = u.letters, v.letters
    return lu, lv, max(n, 2), m


def _common_frame(u: BraidWord, v: BraidWord) -> tuple[BraidWord, BraidWord, int]:
    lu, lv, n, _ = _shifted_letters(u, v)
    return BraidWord(lu), BraidWord(lv), n


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    """Decide u = v in the infinite braid group."""
    if u.letters == v.letters:
        return True
    if exponent_sum(u) != exponent_sum(v):
        return False
    lu, lv, n, _ = _shifted_letters(u, v)
    if _perm_letters(lu, n) != _perm_letters(lv, n):
        return False
    inf1, f1, fl1 = _nf_ids(lu, n)
    inf2, f2, fl2 = _nf_ids(lv, n)
    if inf1 != inf2 or len(f1) != len(f2):
        return False
    if fl1 != fl2:
        flip = _table(n).flip
        f2 = [flip(k) for k in f2]
    return f1 == f2


@dataclass(frozen=True)
class ConjugacyResult:
    """Outcome of :func:`conjugate_test`: ``answer`` is "yes", "no" or
    "indeterminate"; on "yes", ``witness`` c satisfies c u c^-1 = v."""

    answer: str
    witness: BraidWord | None = None
    explored: int = 0

    def __bool__(self) -> bool:
        return self.answer == "yes"


def _raise_inf(x: GarsideNF, conj: BraidWord) -> tuple[GarsideNF, BraidWord]:
    bound = x.n * (x.n - 1) // 2 + 1
    idle = 0
    while idle < bound and x.factors:
        y, c = x.cycling()
        conj = conj * BraidWord(tuple(simple_word(c)))
        idle = 0 if y.inf > x.inf else idle + 1
        x = y
    return x, conj


def _lower_sup(x: GarsideNF, conj: BraidWord) -> tuple[GarsideNF, BraidWord]:
    bound = x.n * (x.n - 1) // 2 + 1
    idle = 0
    while idle < bound and x.factors:
        y, c = x.decycling()
        conj = conj * c
        idle = 0 if y.sup < x.sup else idle + 1
        x = y
    return x, conj


def _summit(x: GarsideNF) -> tuple[GarsideNF, BraidWord]:
    """A super summit element y with y = c^-1 x c."""
    conj = BraidWord()
    x, conj = _raise_inf(x, conj)
    x, conj = _lower_sup(x, conj)
    return x, conj


def _super_summit_set(x: GarsideNF, budget: int, target: GarsideNF | None = None):
    """Close x under conjugation by simple elements, keeping only conjugates
    with the same inf and sup. Returns (element -> conjugator c with
    element = c^-1 x c, improved) where ``improved`` is a conjugate with
    better inf/sup if one was met (then x was not a summit element)."""
    n = x.n
    simples = [p for p in permutations(range(n)) if p != _identity(n)]
    seen: dict[GarsideNF, BraidWord] = {x: BraidWord()}
    queue = deque([x])
    while queue:
        z = queue.popleft()
        cz = seen[z]
        for s in simples:
            y = z.conjugate_by_simple(s)
            if y in seen:
                continue
            cy = cz * BraidWord(tuple(simple_word(s)))
            if y.inf > x.inf or y.sup < x.sup:
                return seen, (y, cy)
            if y.inf != x.inf or y.sup != x.sup:
                continue
            seen[y] = cy
            if target is not None and y == target:
                return seen, None
            if len(seen) > budget:
                raise BudgetExceeded(f"super summit set exceeds {budget} elements")
            queue.append(y)
    return seen, None


def _certified_summit(x: GarsideNF, conj: BraidWord, budget: int):
    """Improve x until its simple-conjugation closure at fixed inf/sup meets
    nothing better; that closure is then its super summit set."""
    while True:
        seen, improved = _super_summit_set(x, budget)
        if improved is None:
            return x, conj, seen
        y, c = improved
        x, c2 = _summit(y)
        conj = conj * c * c2


def conjugate_test(u: BraidWord, v: BraidWord,
                   budget: int = DEFAULT_SSS_BUDGET) -> ConjugacyResult:
    """Decide whether u and v are conjugate in the infinite braid group.

    Both braids are placed in the smallest B_n that contains them; conjugacy
    there agrees with conjugacy in B_infinity. Exceeding ``budget`` summit
    elements gives an "indeterminate" answer.
    """
    if braid_equal(u, v):
        return ConjugacyResult("yes", BraidWord(), 0)
    if exponent_sum(u) != exponent_sum(v):
        return ConjugacyResult("no")
    lo = min((w.min_index() for w in (u, v) if w), default=1)
    m = max(lo - 1, 0)
    su, sv, n = _common_frame(u, v)
    if sorted(_cycle_type(braid_perm(su, n))) != sorted(_cycle_type(braid_perm(sv, n))):
        return ConjugacyResult("no")
    xu, a = _summit(normal_form(su, n))
    xv, b = _summit(normal_form(sv, n))
    try:
        xu, a, set_u = _certified_summit(xu, a, budget)
        explored = len(set_u)
        if xv not in set_u:
            xv, b, set_v = _certified_summit(xv, b, budget)
            explored += len(set_v)
            if xv not in set_u:
                return ConjugacyResult("no", explored=explored)
    except BudgetExceeded:
        return ConjugacyResult("indeterminate", explored=budget)
    # xu = a^-1 su a, xv = b^-1 sv b, xv = s^-1 xu s
    s = set_u[xv]
    c = b * s.inverse() * a.inverse()
    if m:
        c = BraidWord(tuple(x + m if x > 0 else x - m for x in c.letters))
    return ConjugacyResult("yes", c, explored)


def _cycle_type(p: tuple[int, ...]) -> list[int]:
    seen = [False] * len(p)
    out = []
    for k in range(len(p)):
        if not seen[k]:
            ln = 0
            j = k
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            out.append(ln)
    return out


def delta_word(n: int) -> BraidWord:
    return BraidWord(tuple(simple_word(_delta(n))))


def simple_count(n: int) -> int:
    return math.factorial(n)
