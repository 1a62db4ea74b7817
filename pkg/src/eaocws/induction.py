"""Induced Z-only errors and gauge reduction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering
from math import comb

from .pauli import PauliError, PauliOp
from .structure import CodeLayout, WordGaugeGroup


@total_ordering
@dataclass(frozen=True)
class BinaryWord:
    """GF(2) word on ``n`` Alice and ``c`` Bob positions, bit 0 = qubit 1.

    Ordering is lexicographic on the ``"alice|bob"`` text, qubit 1 first.
    """

    n: int
    c: int
    alice: int = 0
    bob: int = 0

    @classmethod
    def zero(cls, n: int, c: int = 0) -> "BinaryWord":
        return cls(n, c)

    @classmethod
    def parse(cls, text: str, n: int | None = None, c: int | None = None) -> "BinaryWord":
        left, _, right = text.partition("|")
        if set(left + right) - {"0", "1"}:
            raise ValueError(f"not a binary word: {text!r}")
        if (n is not None and len(left) != n) or (c is not None and len(right) != c):
            raise ValueError(f"{text!r} does not match n={n}, c={c}")
        a = sum(1 << i for i, ch in enumerate(left) if ch == "1")
        b = sum(1 << i for i, ch in enumerate(right) if ch == "1")
        return cls(len(left), len(right), a, b)

    @property
    def packed(self) -> int:
        """Single integer, Alice bits low and Bob bits above them."""
        return self.alice | (self.bob << self.n)

    @classmethod
    def unpack(cls, value: int, n: int, c: int) -> "BinaryWord":
        return cls(n, c, value & ((1 << n) - 1), value >> n)

    @property
    def is_zero(self) -> bool:
        return not (self.alice or self.bob)

    def __xor__(self, other: "BinaryWord") -> "BinaryWord":
        if (self.n, self.c) != (other.n, other.c):
            raise ValueError("length mismatch")
        return BinaryWord(self.n, self.c, self.alice ^ other.alice, self.bob ^ other.bob)

    def _key(self) -> str:
        return str(self)

    def __lt__(self, other: "BinaryWord") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        a = "".join(str((self.alice >> i) & 1) for i in range(self.n))
        b = "".join(str((self.bob >> i) & 1) for i in range(self.c))
        return f"{a}|{b}"


def enumerate_alice_errors(layout: CodeLayout, max_weight: int) -> list[PauliOp]:
    """All non-identity Paulis on Alice's qubits with weight <= ``max_weight``.

    Ordered by weight, then support (lexicographic), then letters X < Y < Z.
    """
    n, c = layout.n, layout.c
    if max_weight > n:
        raise ValueError(f"max_weight {max_weight} exceeds n={n}")
    letters = ((1, 0), (1, 1), (0, 1))  # X, Y, Z
    out = []
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for choice in itertools.product(letters, repeat=w):
                x = z = 0
                for q, (bx, bz) in zip(support, choice):
                    x |= bx << q
                    z |= bz << q
                out.append(PauliOp(n, c, x, z))
    return out


def count_alice_errors(n: int, max_weight: int) -> int:
    return sum(comb(n, w) * 3 ** w for w in range(1, max_weight + 1))


def induce(e: PauliOp, group: WordGaugeGroup) -> BinaryWord:
    """Z-only image of an Alice error under the word stabilizer (no gauge reduction).

    Bob Z components are already Z-only and pass through unchanged, so the
    full generators s_i map to the zero word. Bob X is rejected.
    """
    if e.xb:
        raise PauliError("induced errors are undefined for Paulis with X on Bob's qubits")
    lay = group.layout
    rows = group.graph.rows
    alice = e.za
    x = e.xa
    while x:
        low = x & -x
        alice ^= rows[low.bit_length() - 1]
        x ^= low
    bob = ((e.xa & lay.ebit_mask) >> lay.s) ^ e.zb
    return BinaryWord(lay.n, lay.c, alice, bob)


def gauge_reduce(w: BinaryWord, layout: CodeLayout) -> BinaryWord:
    return BinaryWord(w.n, w.c, w.alice & ~layout.gauge_mask, w.bob)


def effective_word(e: PauliOp, group: WordGaugeGroup) -> BinaryWord:
    return gauge_reduce(induce(e, group), group.layout)


def effective_error_set(layout: CodeLayout, group: WordGaugeGroup,
                        max_weight: int) -> dict[BinaryWord, list[PauliOp]]:
    """Map each distinct reduced word to the errors producing it (enumeration order)."""
    out: dict[BinaryWord, list[PauliOp]] = {}
    for e in enumerate_alice_errors(layout, max_weight):
        out.setdefault(effective_word(e, group), []).append(e)
    return out
