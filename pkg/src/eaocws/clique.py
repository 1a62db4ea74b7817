"""
Maximum clique by branch and bound over integer bitsets.

Vertices are ``0..N-1`` and ``adj[v]`` is the neighbourhood of ``v`` as a
Python int. The bound is the number of colour classes of a greedy
sequential colouring (the MCQ scheme of Tomita & Seki).
"""

from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExhausted(Exception):
    pass


@dataclass
class Budget:
    max_seconds: float | None = None
    max_nodes: int | None = None

    def start(self) -> "_Meter":
        return _Meter(self)


class _Meter:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.t0 = time.perf_counter()
        self.deadline = None if budget.max_seconds is None else self.t0 + budget.max_seconds

    def tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise BudgetExhausted
        if self.deadline is not None and (self.nodes & 255) == 0 and time.perf_counter() > self.deadline:
            raise BudgetExhausted

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.t0


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def color_classes(P: int, adj: list[int]) -> list[tuple[int, int]]:
    """Greedy colouring of ``P``; returns ``(vertex, colour)`` by increasing colour."""
    order = []
    k = 0
    U = P
    while U:
        k += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low & ~adj[v]
            U &= ~low
            order.append((v, k))
    return order


def color_bound(P: int, adj: list[int]) -> int:
    order = color_classes(P, adj)
    return order[-1][1] if order else 0


@dataclass
class CliqueResult:
    clique: list[int]
    optimal: bool
    nodes: int
    seconds: float


class _Done(Exception):
    pass


def max_clique(adj: list[int], candidates: int, budget: Budget | None = None,
               lower: int = 0, upper: int | None = None) -> CliqueResult:
    """Largest clique inside ``candidates``.

    ``optimal`` is False when the budget ran out; the clique is then the
    best one seen so far. The search stops early once a clique of size
    ``upper`` (a known bound) is found.
    """
    meter = (budget or Budget()).start()
    best: list[int] = []
    best_size = lower

    def expand(C: list[int], P: int):
        nonlocal best, best_size
        meter.tick()
        order = color_classes(P, adj)
        for v, k in reversed(order):
            if len(C) + k <= best_size:
                return
            C.append(v)
            newP = P & adj[v]
            if newP:
                expand(C, newP)
            elif len(C) > best_size:
                best, best_size = list(C), len(C)
                if upper is not None and best_size >= upper:
                    raise _Done
            C.pop()
            P &= ~(1 << v)

    optimal = True
    try:
        if candidates:
            expand([], candidates)
    except _Done:
        pass
    except BudgetExhausted:
        optimal = False
    return CliqueResult(sorted(best), optimal, meter.nodes, meter.elapsed)


def first_clique_of_size(adj: list[int], candidates: int, size: int,
                         budget: Budget | None = None) -> CliqueResult:
    """Lexicographically first clique (as a sorted vertex list) of exactly ``size``.

    Vertices are tried in increasing index order, so the first hit is the
    lexicographic minimum. Returns an empty clique if none exists.
    """
    meter = (budget or Budget()).start()

    def search(C: list[int], P: int) -> list[int] | None:
        meter.tick()
        if len(C) == size:
            return list(C)
        if len(C) + P.bit_count() < size or len(C) + color_bound(P, adj) < size:
            return None
        while P:
            if len(C) + P.bit_count() < size:
                return None
            low = P & -P
            v = low.bit_length() - 1
            P ^= low
            C.append(v)
            hit = search(C, P & adj[v])
            C.pop()
            if hit is not None:
                return hit
        return None

    try:
        hit = search([], candidates)
    except BudgetExhausted:
        return CliqueResult([], False, meter.nodes, meter.elapsed)
    return CliqueResult(hit or [], True, meter.nodes, meter.elapsed)
