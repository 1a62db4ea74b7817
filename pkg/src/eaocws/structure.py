"""Qubit layout, graphs, and the encoded word gauge group in standard form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .pauli import PauliOp, commutes, pauli_to_text


class LayoutError(ValueError):
    pass


@dataclass(frozen=True)
class CodeLayout:
    """Register sizes and qubit roles on Alice's side.

    Alice positions (0-based) ``0..s-1`` are ancillas, ``s..s+c-1`` hold
    Alice's ebit halves and ``s+c..n-1`` are gauge qubits, with
    ``s = n - r - c``.
    """

    n: int
    c: int = 0
    r: int = 0

    def __post_init__(self):
        if min(self.n, self.c, self.r) < 0:
            raise LayoutError("n, c and r must be non-negative")
        if self.n - self.r - self.c < 0:
            raise LayoutError(f"s = n - r - c must be >= 0 (n={self.n}, c={self.c}, r={self.r})")

    @property
    def s(self) -> int:
        return self.n - self.r - self.c

    @property
    def width(self) -> int:
        return self.n + self.c

    def ebit_position(self, j: int) -> int:
        return self.s + j

    def gauge_position(self, k: int) -> int:
        return self.s + self.c + k

    @property
    def ancilla_mask(self) -> int:
        return (1 << self.s) - 1

    @property
    def ebit_mask(self) -> int:
        return ((1 << self.c) - 1) << self.s

    @property
    def gauge_mask(self) -> int:
        return ((1 << self.r) - 1) << (self.s + self.c)

    def roles(self) -> list[str]:
        return ["ancilla"] * self.s + ["ebit"] * self.c + ["gauge"] * self.r

    def __str__(self) -> str:
        return f"n={self.n} c={self.c} r={self.r} s={self.s}"


@dataclass(frozen=True)
class Graph:
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.uint8) & 1
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise LayoutError("adjacency must be a square matrix")
        if not np.array_equal(a, a.T):
            raise LayoutError("adjacency must be symmetric")
        if np.any(np.diag(a)):
            raise LayoutError("adjacency must have a zero diagonal")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    def row(self, i: int) -> int:
        """Neighbourhood of vertex ``i`` (0-based) as a bit word."""
        return sum(1 << int(j) for j in np.flatnonzero(self.adjacency[i]))

    @property
    def rows(self) -> list[int]:
        return [self.row(i) for i in range(self.vertex_count)]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list, 1-based, each edge once with ``i < j``."""
        i, j = np.nonzero(np.triu(self.adjacency))
        return [(int(a) + 1, int(b) + 1) for a, b in zip(i, j)]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise LayoutError(f"bad edge ({u}, {v}) for {n} vertices")
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        return cls(a)

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())


def ring_graph(n: int) -> Graph:
    if n < 3:
        raise LayoutError("a ring needs at least 3 vertices")
    a = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        a[i, (i + 1) % n] = a[(i + 1) % n, i] = 1
    return Graph(a)


@dataclass(frozen=True)
class WordGaugeGroup:
    """Generators ``s_1..s_n``, ``h_1..h_c`` and ``g_1..g_r`` (0-based lists).

    ``stabilizers[i]`` for ``i >= n - r`` pairs with ``gauge_z[i - (n - r)]``
    as the X-type half of a gauge qubit; the rest fix the base state.
    """

    layout: CodeLayout
    graph: Graph
    stabilizers: tuple[PauliOp, ...]
    ebit_x: tuple[PauliOp, ...]
    gauge_z: tuple[PauliOp, ...]

    @property
    def state_stabilizers(self) -> tuple[PauliOp, ...]:
        """Generators fixing every base state: ``s_i`` off gauge qubits plus all ``h_j``."""
        return self.stabilizers[: self.layout.n - self.layout.r] + self.ebit_x

    @property
    def gauge_x(self) -> tuple[PauliOp, ...]:
        return self.stabilizers[self.layout.n - self.layout.r:]

    def named(self) -> list[tuple[str, PauliOp]]:
        out = [(f"s_{i + 1}", p) for i, p in enumerate(self.stabilizers)]
        out += [(f"h_{j + 1}", p) for j, p in enumerate(self.ebit_x)]
        out += [(f"g_{k + 1}", p) for k, p in enumerate(self.gauge_z)]
        return out

    def __len__(self):
        return len(self.stabilizers) + len(self.ebit_x) + len(self.gauge_z)


def build_gauge_group(graph: Graph, layout: CodeLayout) -> WordGaugeGroup:
    n, c = layout.n, layout.c
    if graph.vertex_count != n:
        raise LayoutError(f"graph has {graph.vertex_count} vertices, layout needs {n}")
    rows = graph.rows
    s = layout.s
    stab = []
    for i in range(n):
        zb = 1 << (i - s) if s <= i < s + c else 0
        stab.append(PauliOp(n, c, xa=1 << i, za=rows[i], zb=zb))
    hs = tuple(PauliOp(n, c, za=1 << layout.ebit_position(j), xb=1 << j) for j in range(c))
    gs = tuple(PauliOp(n, c, za=1 << layout.gauge_position(k)) for k in range(layout.r))
    return WordGaugeGroup(layout, graph, tuple(stab), hs, gs)


@dataclass(frozen=True)
class GroupViolation:
    first: str
    second: str
    expected: int
    actual: int

    def __str__(self):
        rel = {0: "commute", 1: "anticommute"}
        return f"{self.first} and {self.second} should {rel[self.expected]} but {rel[self.actual]}"


def validate_group(group: WordGaugeGroup) -> list[GroupViolation]:
    """List every commutation relation among generators that is off.

    Only gauge pairs ``(s_{n-r+k}, g_k)`` should anticommute.
    """
    lay = group.layout
    named = group.named()
    partner = {f"s_{lay.gauge_position(k) + 1}": f"g_{k + 1}" for k in range(lay.r)}
    partner.update({v: k for k, v in partner.items()})
    report = []
    for a in range(len(named)):
        for b in range(a + 1, len(named)):
            (na, pa), (nb, pb) = named[a], named[b]
            expected = 1 if partner.get(na) == nb else 0
            actual = commutes(pa, pb)
            if actual != expected:
                report.append(GroupViolation(na, nb, expected, actual))
    return report


def describe_group(group: WordGaugeGroup) -> str:
    return "\n".join(f"{name} = {pauli_to_text(p)}" for name, p in group.named())
