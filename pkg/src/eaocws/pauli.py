"""
Projective Pauli operators on a bipartite (Alice | Bob) register.

An operator on ``n`` Alice qubits and ``c`` Bob qubits is stored as four
GF(2) words packed into Python integers:

    x_alice, z_alice   (n bits)      x_bob, z_bob   (c bits)

Qubit 1 of each side is bit 0. Letters map as I=(0,0), X=(1,0), Z=(0,1),
Y=(1,1) in (x, z). No phase is stored, so ``multiply`` is a plain XOR.

Text format: uppercase letters, one ``|`` between the Alice and Bob parts,
e.g. ``"IZXZII|ZII"``. The separator may be omitted when ``c == 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .structure import CodeLayout

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


class PauliError(ValueError):
    pass


class Region(enum.Enum):
    ALICE = "alice"
    BOB = "bob"
    BOTH = "both"
    ANCILLA = "ancilla"
    EBIT = "ebit"
    GAUGE = "gauge"


def bits_of(word: int, length: int) -> np.ndarray:
    """Unpack ``word`` into a uint8 array, qubit 1 first."""
    return np.array([(word >> i) & 1 for i in range(length)], dtype=np.uint8)


def word_of(bits) -> int:
    out = 0
    for i, b in enumerate(bits):
        if int(b) & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class PauliOp:
    n: int
    c: int
    xa: int = 0
    za: int = 0
    xb: int = 0
    zb: int = 0

    def __post_init__(self):
        for name in ("xa", "za", "xb", "zb"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.n < 0 or self.c < 0:
            raise PauliError("register sizes must be non-negative")
        if (self.xa | self.za) >> self.n or (self.xb | self.zb) >> self.c:
            raise PauliError("bit words exceed register size")

    @classmethod
    def identity(cls, n: int, c: int = 0) -> "PauliOp":
        return cls(n, c)

    @classmethod
    def from_bits(cls, x_alice, z_alice, x_bob=(), z_bob=()) -> "PauliOp":
        n, c = len(x_alice), len(x_bob)
        if len(z_alice) != n or len(z_bob) != c:
            raise PauliError("x and z vectors must have equal length per side")
        return cls(n, c, word_of(x_alice), word_of(z_alice), word_of(x_bob), word_of(z_bob))

    @property
    def x_alice(self) -> np.ndarray:
        return bits_of(self.xa, self.n)

    @property
    def z_alice(self) -> np.ndarray:
        return bits_of(self.za, self.n)

    @property
    def x_bob(self) -> np.ndarray:
        return bits_of(self.xb, self.c)

    @property
    def z_bob(self) -> np.ndarray:
        return bits_of(self.zb, self.c)

    @property
    def is_identity(self) -> bool:
        return not (self.xa or self.za or self.xb or self.zb)

    @property
    def alice_only(self) -> bool:
        return not (self.xb or self.zb)

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return multiply(self, other)

    def __str__(self) -> str:
        return pauli_to_text(self)


def parse_pauli(text: str, layout: "CodeLayout | None" = None, *, n: int | None = None,
                c: int | None = None) -> PauliOp:
    """Parse ``"IZXZII|ZII"``-style text.

    Sizes come from ``layout`` (or explicit ``n``/``c``); when neither is
    given they are inferred from the text itself.
    """
    if layout is not None:
        n, c = layout.n, layout.c
    if "|" in text:
        if text.count("|") != 1:
            raise PauliError(f"expected a single '|' in {text!r}")
        left, right = text.split("|")
    else:
        if c:
            raise PauliError(f"missing '|' separator in {text!r} (c={c})")
        left, right = text, ""
    if n is not None and len(left) != n:
        raise PauliError(f"expected {n} Alice letters, got {len(left)} in {text!r}")
    if c is not None and len(right) != c:
        raise PauliError(f"expected {c} Bob letters, got {len(right)} in {text!r}")

    def side(letters: str) -> tuple[int, int]:
        x = z = 0
        for i, ch in enumerate(letters):
            try:
                bx, bz = _LETTER_BITS[ch]
            except KeyError:
                raise PauliError(f"illegal character {ch!r} in {text!r}") from None
            x |= bx << i
            z |= bz << i
        return x, z

    xa, za = side(left)
    xb, zb = side(right)
    return PauliOp(len(left), len(right), xa, za, xb, zb)


def _letters(x: int, z: int, length: int) -> str:
    return "".join(_BITS_LETTER[((x >> i) & 1, (z >> i) & 1)] for i in range(length))


def pauli_to_text(op: PauliOp) -> str:
    return _letters(op.xa, op.za, op.n) + "|" + _letters(op.xb, op.zb, op.c)


def alice_text(op: PauliOp) -> str:
    """Alice letters only, e.g. ``XIZ`` for ``XIZ|II``."""
    return _letters(op.xa, op.za, op.n)


def _check_same(a: PauliOp, b: PauliOp) -> None:
    if a.n != b.n or a.c != b.c:
        raise PauliError(f"layout mismatch: ({a.n},{a.c}) vs ({b.n},{b.c})")


def multiply(a: PauliOp, b: PauliOp) -> PauliOp:
    """Projective product (phases dropped)."""
    _check_same(a, b)
    return PauliOp(a.n, a.c, a.xa ^ b.xa, a.za ^ b.za, a.xb ^ b.xb, a.zb ^ b.zb)


def commutes(a: PauliOp, b: PauliOp) -> int:
    """Symplectic product: 0 if ``a`` and ``b`` commute, 1 if they anticommute."""
    _check_same(a, b)
    return ((a.xa & b.za).bit_count() + (a.za & b.xa).bit_count()
            + (a.xb & b.zb).bit_count() + (a.zb & b.xb).bit_count()) & 1


def region_masks(region: Region, op: PauliOp, layout: "CodeLayout | None" = None) -> tuple[int, int]:
    """Return (alice_mask, bob_mask) selecting the qubits of ``region``."""
    full_a, full_b = (1 << op.n) - 1, (1 << op.c) - 1
    if region is Region.ALICE:
        return full_a, 0
    if region is Region.BOB:
        return 0, full_b
    if region is Region.BOTH:
        return full_a, full_b
    if layout is None:
        raise PauliError(f"region {region.value!r} requires a layout")
    if region is Region.ANCILLA:
        return layout.ancilla_mask, 0
    if region is Region.EBIT:
        return layout.ebit_mask, 0
    return layout.gauge_mask, 0


def weight(op: PauliOp, region: Region = Region.BOTH, layout: "CodeLayout | None" = None) -> int:
    ma, mb = region_masks(Region(region), op, layout)
    return ((op.xa | op.za) & ma).bit_count() + ((op.xb | op.zb) & mb).bit_count()
