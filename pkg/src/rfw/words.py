"""Packed binary words and Fibonacci numbers.

Words over the alphabet {0,1} of length at most 64 are stored as a single
unsigned integer plus an explicit symbol count.  The symbol at 1-based
position i sits at bit i-1 (least significant bit first), so extracting a
prefix is a mask and extracting a suffix is a shift.  All operations are
pure; Word values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass

WORD_CAPACITY = 64


class CapacityError(ValueError):
    """An operation would produce a word longer than 64 symbols."""


def fib(n: int) -> int:
    """n-th Fibonacci number with f_0 = 0, f_1 = 1.  Exact for any n."""
    if n < 0:
        raise ValueError(f"fib requires n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class Word:
    """A binary word of up to 64 symbols, packed LSB-first."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= WORD_CAPACITY:
            raise CapacityError(f"word length {self.length} outside [0, {WORD_CAPACITY}]")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the declared length")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Build a word from its ASCII form, leftmost character = position 1."""
        if len(text) > WORD_CAPACITY:
            raise CapacityError(f"word of {len(text)} symbols exceeds capacity")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid symbol {ch!r} in word")
        return cls(bits, len(text))

    def render(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return self.length

    def symbol(self, i: int) -> int:
        """Symbol at 1-based position i."""
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside [1, {self.length}]")
        return self.bits >> (i - 1) & 1

    def slice(self, a: int, b: int) -> "Word":
        """Sub-word at 1-based positions [a, b]; a = b + 1 gives the empty word."""
        if not (1 <= a <= b + 1 <= self.length + 1):
            raise IndexError(f"slice [{a}, {b}] outside word of length {self.length}")
        n = b - a + 1
        return Word(self.bits >> (a - 1) & ((1 << n) - 1), n)

    def reverse(self) -> "Word":
        bits = 0
        for i in range(self.length):
            if self.bits >> i & 1:
                bits |= 1 << (self.length - 1 - i)
        return Word(bits, self.length)

    def concat(self, other: "Word") -> "Word":
        if self.length + other.length > WORD_CAPACITY:
            raise CapacityError(
                f"concatenation of {self.length} + {other.length} symbols exceeds capacity"
            )
        return Word(self.bits | other.bits << self.length, self.length + other.length)

    def __add__(self, other: "Word") -> "Word":
        return self.concat(other)


EMPTY = Word(0, 0)
