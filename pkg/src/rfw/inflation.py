"""Inflated random Fibonacci words: construction, counting, entropy.

The inflation rule maps 0 -> 1 and 1 -> 01 (probability p) or 10
(probability 1-p), the choice drawn independently at each 1.  The set A_n
of all generation-n inflated words satisfies

    A_n = A_{n-1} A_{n-2}  u  A_{n-2} A_{n-1},      n >= 3,

with A_0 = {}, A_1 = {0}, A_2 = {1}.  All members of A_n share the length
f_n (the n-th Fibonacci number), so everything fits a packed 64-bit word
through n = 10 (f_10 = 55).

Three independent routes to |A_n| are provided (a cubic recursion, a
rational recursion, and an explicit product), plus the log-growth sum
whose limit is the topological entropy of the chain.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .words import CapacityError, Word, fib
from .wordset import WordSet, union_packed

DEFAULT_BUDGET = 10**8
DEFAULT_ITEM_CAP = 1 << 26

#: Largest generation whose words fit 64 symbols (f_10 = 55 <= 64 < 89 = f_11).
MAX_GENERATION = 10


class BudgetError(RuntimeError):
    """A requested enumeration would exceed the configured element budget."""


class ItemCapError(BudgetError):
    """A construction would materialize more candidates than the item cap."""


@dataclass
class VerifyResult:
    """Outcome of one brute-force property check, with a witness on failure."""

    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class PrngHandle:
    """Deterministic random source for the inflation sampler.

    Wraps a Mersenne Twister (python stdlib ``random.Random``) seeded with a
    fixed 64-bit value; identical seeds give identical sample streams on any
    platform.  One handle must not be shared between threads.
    """

    __slots__ = ("seed", "_rng")

    def __init__(self, seed: int) -> None:
        self.seed = seed & (1 << 64) - 1
        self._rng = random.Random(self.seed)

    def coin(self, p: float) -> bool:
        """True with probability p."""
        return self._rng.random() < p


# --- sampler ----------------------------------------------------------


def inflate_step(w: Word, p: float, rng: PrngHandle) -> Word:
    """One application of the inflation rule to every symbol of w.

    p = 0 and p = 1 are admitted as the two deterministic degenerations
    (useful as oracles) although the random chain itself has 0 < p < 1.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    zeros = w.length - w.bits.bit_count()
    if zeros + 2 * (w.length - zeros) > 64:
        raise CapacityError(f"inflating a word with {w.length - zeros} ones exceeds capacity")
    bits = 0
    pos = 0
    for i in range(w.length):
        if w.bits >> i & 1:
            # 1 -> 01 keeps the 1 late; 1 -> 10 puts it first.
            bits |= (1 << pos + 1) if rng.coin(p) else (1 << pos)
            pos += 2
        else:
            bits |= 1 << pos
            pos += 1
    return Word(bits, pos)


def sample_chain(n: int, p: float, rng: PrngHandle) -> Word:
    """The generation-n word r_n reached by n-1 inflation steps from 0."""
    if n < 1:
        raise ValueError(f"generation must be >= 1, got {n}")
    if n > MAX_GENERATION:
        raise CapacityError(f"generation {n} has words of {fib(n)} symbols, beyond 64")
    w = Word.parse("0")
    for _ in range(n - 1):
        w = inflate_step(w, p, rng)
    return w


# --- enumeration ------------------------------------------------------


def enumerate_A(n: int, budget: int = DEFAULT_BUDGET) -> WordSet:
    """The full set A_n, canonically ordered.

    The predicted size (explicit product formula) is checked against the
    budget before anything is built; n = 10 already needs ~3.8e10 words.
    """
    if n < 0:
        raise ValueError(f"generation must be >= 0, got {n}")
    if n > MAX_GENERATION:
        raise CapacityError(f"generation {n} has words of {fib(n)} symbols, beyond 64")
    predicted = count_A_explicit(n)
    if predicted > budget:
        raise BudgetError(f"|A_{n}| = {predicted} exceeds budget {budget}")
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> WordSet:
    if n == 0:
        return WordSet(0)
    if n == 1:
        return WordSet(1, [Word.parse("0")])
    if n == 2:
        return WordSet(1, [Word.parse("1")])
    big, small = _enumerate(n - 1), _enumerate(n - 2)
    packed = union_packed([big.product(small).packed, small.product(big).packed])
    return WordSet.from_packed(fib(n), packed, canonical=True)


# --- counting ---------------------------------------------------------


def count_A_long(n: int) -> int:
    """|A_n| by the cubic recursion 2|A_{n-1}||A_{n-2}| - |A_{n-2}|^2 |A_{n-3}|."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    counts = [0, 1, 1]
    for m in range(3, n + 1):
        counts.append(2 * counts[m - 1] * counts[m - 2]
                      - counts[m - 2] ** 2 * counts[m - 3])
    return counts[n]


def count_A_short(n: int) -> int:
    """|A_n| by the rational recursion (n-1)/(n-2) |A_{n-1}| |A_{n-2}|.

    The division is provably exact; a nonzero remainder would mean an
    implementation bug, so it raises rather than rounds.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    counts = [0, 1, 1]
    for m in range(3, n + 1):
        num = (m - 1) * counts[m - 1] * counts[m - 2]
        q, r = divmod(num, m - 2)
        if r:
            raise ArithmeticError(f"inexact division at n = {m}: {num} / {m - 2}")
        counts.append(q)
    return counts[n]


def count_A_explicit(n: int) -> int:
    """|A_n| by the closed product (n-1) * prod_{i=2}^{n-1} (n-i)^f_{i-2}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= 2:
        return (0, 1, 1)[n]
    out = n - 1
    f = [fib(i) for i in range(n)]
    for i in range(2, n):
        out *= (n - i) ** f[i - 2]
    return out


def log_growth(n: int) -> float:
    """log|A_n| / f_n evaluated through the explicit-product sum.

    Fibonacci ratios are formed from exact integers and converted to float
    once, never propagated through a floating recurrence.
    """
    if n < 3:
        raise ValueError(f"log_growth requires n >= 3, got {n}")
    f = [fib(i) for i in range(n + 1)]
    total = math.log(n - 1) / f[n]
    for i in range(2, n):
        total += f[i - 2] / f[n] * math.log(n - i)
    return total


def entropy_limit(tol: float = 1e-8, max_terms: int = 5000) -> float:
    """Limit of log|A_n| / f_n, iterated until successive values differ < tol.

    Tail bound: the i-th term of the sum is (f_{i-2}/f_n) log(n-i) and
    f_{n-j}/f_n <= 2 phi^{-j}, so once successive evaluations agree within
    tol the remaining gap to the limit is O(tol) (geometric tail with ratio
    1/phi ~ 0.618).
    """
    if tol < 1e-12:
        raise ValueError(f"tolerance {tol} below the 1e-12 floor")
    prev = log_growth(3)
    for n in range(4, max_terms):
        cur = log_growth(n)
        if abs(cur - prev) < tol:
            return cur
        prev = cur
    raise ArithmeticError(f"entropy sum did not converge within {max_terms} terms")


# --- brute-force property checks -------------------------------------


def verify_palindromic(n: int, budget: int = DEFAULT_BUDGET) -> VerifyResult:
    """A_n is closed under word reversal (n >= 1)."""
    a = enumerate_A(n, budget)
    if a.reverse() == a:
        return VerifyResult(True)
    missing = next(w for w in a if w.reverse() not in a)
    return VerifyResult(False, f"reverse({missing}) not in A_{n}")


def verify_overlap(n: int, budget: int = DEFAULT_BUDGET) -> VerifyResult:
    """(A_{n-1}A_{n-2}) inter (A_{n-2}A_{n-1}) = A_{n-2}A_{n-3}A_{n-2}.

    This is the index-shifted, length-consistent form of the overlap
    identity behind the cubic recursion for |A_n|.
    """
    if n < 4:
        raise ValueError(f"overlap identity needs n >= 4, got {n}")
    a1 = enumerate_A(n - 1, budget)
    a2 = enumerate_A(n - 2, budget)
    a3 = enumerate_A(n - 3, budget)
    lhs = a1.product(a2).intersection(a2.product(a1))
    rhs = a2.product(a3).product(a2)
    if lhs == rhs:
        return VerifyResult(True)
    diff = np.setxor1d(lhs.packed, rhs.packed)
    w = Word(int(diff[0]), lhs.length)
    return VerifyResult(False, f"overlap mismatch at n = {n}, e.g. {w}")
