"""Factor sets of the random Fibonacci chain and the bound machinery.

F_n is the set of length-f_n factors of the infinite inflation limit; for
n >= 4 it equals F(A_{n+1}, f_n) and can be built *without* materializing
A_{n+1}: every window of a concatenation uv decomposes into a suffix of u
and a prefix of v, and because the defining products are full Cartesian
products the window set is exactly (suffix-slice set) x (prefix-slice
set), unioned over both concatenation orders and all offsets.  That is
what lets the n = 9 row of the numerics table be computed although
|A_10| ~ 3.8e10.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .inflation import (DEFAULT_BUDGET, DEFAULT_ITEM_CAP, ItemCapError,
                        VerifyResult, enumerate_A)
from .words import Word, fib
from .wordset import WordSet, slice_packed, union_packed

# Stabilization generation used to define F_n for n <= 3: factor sets of
# length <= f_3 = 2 are empirically constant from generation 5 on; we use
# generation 7 and assert agreement with generation 8 in the test suite.
_SMALL_N_SOURCE = 7


@dataclass(frozen=True)
class SliceSet:
    """Distinct sub-words w[a,b] over all w in A_n."""

    n: int
    a: int
    b: int
    members: WordSet


@dataclass
class FactorReport:
    """One row of the numerics table, blanks encoded as None."""

    n: int
    f_n: int
    a_count: int
    f_count: int | None
    fa_next_count: int | None
    c: Fraction | None
    #: Slack of the 4^{n-2}|A_n| cut bound: bound minus the max cut product.
    cut_bound_slack: int | None = None
    #: Slack of the |F_n| <= 2(4^{n-2} f_{n-1} + 1)|A_n| bound.
    factor_bound_slack: int | None = None

    def to_json_dict(self) -> dict:
        c_field = None
        if self.c is not None:
            c_field = {"num": self.c.numerator, "den": self.c.denominator,
                       "rounded": format_c(self.c)}
        return {
            "n": self.n,
            "f_n": self.f_n,
            "A_n": str(self.a_count),
            "F_n": None if self.f_count is None else str(self.f_count),
            "F_A_next": None if self.fa_next_count is None else str(self.fa_next_count),
            "c_n": c_field,
        }


def format_c(c: Fraction) -> str:
    """Round-half-up to 5 decimals; exact integers print as e.g. "2.0"."""
    if c.denominator == 1:
        return f"{c.numerator}.0"
    d = Decimal(c.numerator) / Decimal(c.denominator)
    return str(d.quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP))


def slice_set(n: int, a: int, b: int, budget: int = DEFAULT_BUDGET) -> SliceSet:
    """The slice set A_n[a,b]; a = b + 1 yields {empty word}."""
    return SliceSet(n, a, b, enumerate_A(n, budget).slices(a, b))


def factor_set(s: WordSet, ell: int) -> WordSet:
    """All distinct length-ell factors of the members of s, by sliding window."""
    if not 1 <= ell <= s.length:
        raise IndexError(f"factor length {ell} outside [1, {s.length}]")
    # Dedup per offset before the union keeps peak memory at one window array.
    chunks = [np.unique(slice_packed(s.packed, k, k + ell - 1))
              for k in range(1, s.length - ell + 2)]
    return WordSet.from_packed(ell, union_packed(chunks), canonical=True)


def _window_plan(n: int) -> list[tuple[int, int, int, int, int, int]]:
    """Suffix/prefix slice coordinates for every (order, offset) chunk of F_n.

    Windows of length f_n in A_n A_{n-1} at offset k cover positions
    [k, k-1+f_n], i.e. the suffix A_n[k, f_n] followed by the prefix
    A_{n-1}[1, k-1]; in A_{n-1} A_n they cover A_{n-1}[k, f_{n-1}] followed
    by A_n[1, k-1+f_{n-2}].  Offsets run over [1, f_{n-1} + 1] in both.
    """
    plan = []
    for k in range(1, fib(n - 1) + 2):
        plan.append((n, k, fib(n), n - 1, 1, k - 1))
        plan.append((n - 1, k, fib(n - 1), n, 1, k - 1 + fib(n - 2)))
    return plan


@lru_cache(maxsize=16)
def _factor_set_Fn_cached(n: int, budget: int, item_cap: int) -> WordSet:
    if n <= 3:
        return factor_set(enumerate_A(_SMALL_N_SOURCE, budget), fib(n))
    plan = _window_plan(n)
    pieces = [(slice_set(sn, sa, sb, budget).members,
               slice_set(pn, pa, pb, budget).members)
              for sn, sa, sb, pn, pa, pb in plan]
    projected = sum(len(suf) * len(pre) for suf, pre in pieces)
    if projected > item_cap:
        raise ItemCapError(
            f"windowed F_{n} projects {projected} candidates, above item cap {item_cap}"
        )
    acc = np.empty(0, dtype=np.uint64)
    for suf, pre in pieces:
        acc = np.union1d(acc, suf.product(pre).packed)
    return WordSet.from_packed(fib(n), acc, canonical=True)


def factor_set_Fn(n: int, budget: int = DEFAULT_BUDGET,
                  item_cap: int = DEFAULT_ITEM_CAP) -> WordSet:
    """The factor set F_n.

    For n >= 4 this is the windowed construction over A_n and A_{n-1}
    described in the module docstring (A_{n+1} is never materialized).
    For n <= 3 factor stability does not apply and F_n is read off the
    generation-7 factors instead.
    """
    if n < 1:
        raise ValueError(f"F_n needs n >= 1, got {n}")
    return _factor_set_Fn_cached(n, budget, item_cap)


# --- cut statistics ---------------------------------------------------


@lru_cache(maxsize=None)
def _cut_products(n: int, budget: int) -> list[tuple[int, int, int]]:
    """(k, |A_n[1,k]|, |A_n[k+1,f_n]|) for every cut point k."""
    packed = enumerate_A(n, budget).packed
    f_n = fib(n)
    out = []
    for k in range(1, f_n):
        pre = len(np.unique(slice_packed(packed, 1, k)))
        suf = len(np.unique(slice_packed(packed, k + 1, f_n)))
        out.append((k, pre, suf))
    return out


def c_stat(n: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """max_k |A_n[1,k]| |A_n[k+1,f_n]| / |A_n| as a reduced exact rational."""
    if n < 3:
        raise ValueError(f"c_n needs n >= 3, got {n}")
    best = max(pre * suf for _, pre, suf in _cut_products(n, budget))
    return Fraction(best, len(enumerate_A(n, budget)))


# --- proposition verifiers -------------------------------------------


def verify_prefix_stability(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyResult:
    """Prefix and suffix slice sets of A_n persist into A_{n+k}."""
    if n < 3 or k < 0:
        raise ValueError(f"prefix stability needs n >= 3, k >= 0, got ({n}, {k})")
    f_n, f_nk = fib(n), fib(n + k)
    prefix_ok = (slice_set(n, 1, f_n - 1, budget).members
                 == slice_set(n + k, 1, f_n - 1, budget).members)
    if not prefix_ok:
        return VerifyResult(False, f"prefix sets A_{n}[1,{f_n - 1}] != A_{n + k}[1,{f_n - 1}]")
    suffix_ok = (slice_set(n, 2, f_n, budget).members
                 == slice_set(n + k, f_nk - f_n + 2, f_nk, budget).members)
    if not suffix_ok:
        return VerifyResult(False, f"suffix sets of A_{n} and A_{n + k} differ")
    return VerifyResult(True)


def _superset_rhs(n: int, budget: int) -> WordSet:
    """(A_{n-1}[1, f_{n-1}-1]) {0,1}^2 (A_{n-2}[2, f_{n-2}])."""
    free = WordSet(2, [Word.parse(s) for s in ("00", "01", "10", "11")])
    left = slice_set(n - 1, 1, fib(n - 1) - 1, budget).members
    right = slice_set(n - 2, 2, fib(n - 2), budget).members
    return left.product(free).product(right)


def verify_superset(n: int, budget: int = DEFAULT_BUDGET, *,
                    reversed_form: bool = False) -> VerifyResult:
    """A_n is contained in the prefix/free-block/suffix product set.

    The reversed form checks the mirror statement obtained by reversing
    both sides (valid since every A_m is reversal-closed).
    """
    if n < 4:
        raise ValueError(f"superset check needs n >= 4, got {n}")
    a_n = enumerate_A(n, budget)
    if reversed_form:
        a_n = a_n.reverse()
    rhs = _superset_rhs(n, budget)
    inside = np.isin(a_n.packed, rhs.packed, assume_unique=True)
    if inside.all():
        return VerifyResult(True)
    w = Word(int(a_n.packed[int(np.argmin(inside))]), a_n.length)
    return VerifyResult(False, f"{w} in A_{n} escapes the superset (reversed={reversed_form})")


def verify_factor_stability(n: int, k: int, budget: int = DEFAULT_BUDGET) -> VerifyResult:
    """F(A_{n+1}, f_n) = F(A_{n+k}, f_n), both by direct sliding windows.

    Holds for n >= 4, k >= 1; at n = 3 it genuinely fails (the factor 00
    only appears from generation 5 on), which callers may assert.
    """
    if k < 1:
        raise ValueError(f"factor stability needs k >= 1, got {k}")
    f_n = fib(n)
    first = factor_set(enumerate_A(n + 1, budget), f_n)
    later = factor_set(enumerate_A(n + k, budget), f_n)
    if first == later:
        return VerifyResult(True)
    diff = np.setxor1d(first.packed, later.packed)
    w = Word(int(diff[0]), f_n)
    return VerifyResult(False, f"F(A_{n + 1},f_{n}) != F(A_{n + k},f_{n}), e.g. {w}")


def verify_slice_bound(n: int, budget: int = DEFAULT_BUDGET) -> VerifyResult:
    """|A_n[1,k]| |A_n[k+1,f_n]| <= 4^{n-2} |A_n| at every cut point."""
    if n < 3:
        raise ValueError(f"slice bound needs n >= 3, got {n}")
    bound = 4 ** (n - 2) * len(enumerate_A(n, budget))
    for k, pre, suf in _cut_products(n, budget):
        if pre * suf > bound:
            return VerifyResult(False, f"cut k = {k}: {pre} * {suf} > {bound}")
    return VerifyResult(True)


def verify_Fn_bound(n: int, budget: int = DEFAULT_BUDGET,
                    item_cap: int = DEFAULT_ITEM_CAP) -> VerifyResult:
    """|F_n| <= 2 (4^{n-2} f_{n-1} + 1) |A_n|."""
    if n < 3:
        raise ValueError(f"factor-count bound needs n >= 3, got {n}")
    f_count = len(factor_set_Fn(n, budget, item_cap))
    bound = 2 * (4 ** (n - 2) * fib(n - 1) + 1) * len(enumerate_A(n, budget))
    if f_count <= bound:
        return VerifyResult(True)
    return VerifyResult(False, f"|F_{n}| = {f_count} > {bound}")


# --- table assembly ---------------------------------------------------


def fa_next_count(n: int, budget: int = DEFAULT_BUDGET,
                  item_cap: int = DEFAULT_ITEM_CAP) -> int:
    """|F(A_{n+1}, f_n)| by direct scan of A_{n+1} where enumerable.

    At n = 9 the direct scan would need A_10; by factor stability the value
    equals |F_9|, delivered by the windowed construction instead.
    """
    if n + 1 <= 9:
        return len(factor_set(enumerate_A(n + 1, budget), fib(n)))
    return len(factor_set_Fn(n, budget, item_cap))


def build_report(n: int, budget: int = DEFAULT_BUDGET,
                 item_cap: int = DEFAULT_ITEM_CAP) -> FactorReport:
    """Compute one full table row; blank cells (per the table layout) are None."""
    a_count = len(enumerate_A(n, budget))
    if n == 0:
        return FactorReport(0, 0, a_count, None, None, None)
    f_count = len(factor_set_Fn(n, budget, item_cap))
    fa_next = None if n == 0 else fa_next_count(n, budget, item_cap)
    if n < 3:
        return FactorReport(n, fib(n), a_count, f_count, fa_next, None)
    c = c_stat(n, budget)
    max_cut = max(pre * suf for _, pre, suf in _cut_products(n, budget))
    return FactorReport(
        n, fib(n), a_count, f_count, fa_next, c,
        cut_bound_slack=4 ** (n - 2) * a_count - max_cut,
        factor_bound_slack=2 * (4 ** (n - 2) * fib(n - 1) + 1) * a_count - f_count,
    )


def table_rows(max_n: int, budget: int = DEFAULT_BUDGET,
               item_cap: int = DEFAULT_ITEM_CAP) -> list[FactorReport]:
    return [build_report(n, budget, item_cap) for n in range(max_n + 1)]
