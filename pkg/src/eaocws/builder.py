"""Word operators, Bob-side elimination, ancilla patterns and code assembly."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .induction import BinaryWord
from .pauli import PauliError, PauliOp, commutes, multiply
from .structure import CodeLayout, Graph, WordGaugeGroup, build_gauge_group


def word_operator(c: BinaryWord, layout: CodeLayout | None = None) -> PauliOp:
    if layout is not None and (c.n, c.c) != (layout.n, layout.c):
        raise ValueError(f"word {c} does not match layout {layout}")
    return PauliOp(c.n, c.c, za=c.alice, zb=c.bob)


def eliminate_bob_z(w: PauliOp, group: WordGaugeGroup) -> PauliOp:
    """Clear Bob's Z factors with the ebit-position stabilizers ``s_{s+j}``."""
    if w.xb:
        raise PauliError("Bob-side X cannot be removed with word stabilizers")
    s = group.layout.s
    for j in range(w.c):
        if (w.zb >> j) & 1:
            w = multiply(w, group.stabilizers[s + j])
    return w


def ancilla_pattern(w: PauliOp, group: WordGaugeGroup) -> tuple[int, ...]:
    """X action of the unencoded word operator on the ancillas.

    Bit ``i`` is the commutation bit with ``s_{i+1}``, the encoded image of
    ancilla Z.
    """
    if not w.alice_only:
        raise PauliError("ancilla patterns are defined for Alice-only operators")
    return tuple(commutes(w, group.stabilizers[i]) for i in range(group.layout.s))


def unencoded_form(w: PauliOp, group: WordGaugeGroup) -> PauliOp:
    """Alice-only operator before the graph-state encoder, up to phase.

    The encoder maps unencoded X_i to Z_i and Z_i to X_i Z^{r_i}, so encoded
    Z^v X^u comes from X^(v + sum u_i r_i) Z^u.
    """
    if not w.alice_only:
        raise PauliError("only Alice-side operators have an unencoded form")
    rows = group.graph.rows
    x = w.za
    u = w.xa
    while u:
        low = u & -u
        x ^= rows[low.bit_length() - 1]
        u ^= low
    return PauliOp(w.n, w.c, xa=x, za=w.xa)


def pattern_text(p: tuple[int, ...]) -> str:
    return "".join(map(str, p))


@dataclass(frozen=True)
class WordOperator:
    source: BinaryWord
    raw: PauliOp
    alice_only: PauliOp
    ancilla_pattern: tuple[int, ...]


def make_word_operator(c: BinaryWord, group: WordGaugeGroup) -> WordOperator:
    raw = word_operator(c, group.layout)
    alice = eliminate_bob_z(raw, group)
    return WordOperator(c, raw, alice, ancilla_pattern(alice, group))


@dataclass
class Selection:
    representatives: list[WordOperator]
    classes: dict[tuple[int, ...], list[WordOperator]]

    @property
    def K(self) -> int:
        return len(self.representatives)


def select_encodable(ops: list[WordOperator]) -> Selection:
    """One representative per ancilla pattern, smallest source codeword wins."""
    classes: dict[tuple[int, ...], list[WordOperator]] = {}
    for op in sorted(ops, key=lambda o: o.source):
        classes.setdefault(op.ancilla_pattern, []).append(op)
    reps = sorted((members[0] for members in classes.values()), key=lambda o: o.source)
    return Selection(reps, classes)


def is_power_of_two(k: int) -> bool:
    return k > 0 and (k & (k - 1)) == 0


@dataclass
class EaocwsCode:
    layout: CodeLayout
    graph: Graph
    codewords: list[BinaryWord]
    word_operators: list[WordOperator]
    selection: Selection
    d: int
    verification: dict = field(default_factory=lambda: {"status": "unverified"})

    @cached_property
    def group(self) -> WordGaugeGroup:
        return build_gauge_group(self.graph, self.layout)

    @property
    def n(self) -> int:
        return self.layout.n

    @property
    def c(self) -> int:
        return self.layout.c

    @property
    def r(self) -> int:
        return self.layout.r

    @property
    def K(self) -> int:
        return self.selection.K

    @property
    def additive(self) -> bool:
        """Selected codewords form a linear code (so K is a power of two)."""
        words = set(self.selected_codewords)
        return is_power_of_two(self.K) and all(a ^ b in words for a in words for b in words)

    @property
    def selected(self) -> list[WordOperator]:
        return self.selection.representatives

    @property
    def selected_codewords(self) -> list[BinaryWord]:
        return [op.source for op in self.selected]

    @property
    def classes(self) -> dict[tuple[int, ...], list[WordOperator]]:
        return self.selection.classes

    def parameters(self) -> str:
        if self.additive:
            k = self.K.bit_length() - 1
            return f"[[{self.n},{k},{self.r},{self.d};{self.c}]]"
        return f"(({self.n},{self.K},{self.r},{self.d};{self.c}))"

    def __str__(self) -> str:
        return self.parameters()


def assemble_code(layout: CodeLayout, graph: Graph, codewords: list[BinaryWord],
                  d_claim: int) -> EaocwsCode:
    if not codewords:
        raise ValueError("cannot assemble a code from an empty codeword list")
    zero = BinaryWord.zero(layout.n, layout.c)
    if zero not in codewords:
        raise ValueError("the codeword list must contain the zero word")
    if len(set(codewords)) != len(codewords):
        raise ValueError("codewords must be distinct")
    group = build_gauge_group(graph, layout)
    ops = [make_word_operator(cw, group) for cw in codewords]
    code = EaocwsCode(layout, graph, list(codewords), ops, select_encodable(ops), d_claim)
    code.group = group
    return code
