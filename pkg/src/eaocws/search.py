"""
Classical codeword search on the compatibility graph.

Candidates are the canonical words (gauge coordinates zero) of length
``n + c``. Two words are compatible when their XOR is not a forbidden
effective error and commutes with every error whose effective word is
zero (and, optionally, when they have different ancilla patterns). The
graph is a Cayley graph, so a best clique can always be anchored at the
zero word.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clique import Budget, first_clique_of_size, max_clique
from .induction import BinaryWord, effective_error_set
from .pauli import PauliOp, multiply
from .structure import CodeLayout, WordGaugeGroup

MODES = ("detect", "correct")
DEGENERACY = ("pairs", "single")
MAX_SEARCH_WIDTH = 20


def gf2_basis(vectors) -> list[int]:
    """Reduced basis (as ints) of the GF(2) span of ``vectors``."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return basis


def in_span(v: int, basis: list[int]) -> bool:
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


@dataclass
class SearchProblem:
    layout: CodeLayout
    group: WordGaugeGroup
    d: int
    mode: str
    max_weight: int
    effective: dict[BinaryWord, list[PauliOp]] = field(repr=False)
    forbidden: frozenset[int] = field(repr=False)
    zero_coset: list[PauliOp] = field(repr=False)
    distinct_patterns: bool = False
    degeneracy: str = "pairs"
    budget: Budget = field(default_factory=Budget)
    seed: int = 0

    def __post_init__(self):
        self.x_constraints = gf2_basis(e.xa for e in self.zero_coset)

    def forbids(self, w: BinaryWord) -> bool:
        return w.packed in self.forbidden

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "d": self.d,
            "max_weight": self.max_weight,
            "D_size": len(self.forbidden),
            "zero_coset_rank": len(self.x_constraints),
            "distinct_patterns": self.distinct_patterns,
            "degeneracy": self.degeneracy,
            "seed": self.seed,
        }


@dataclass
class CodewordSet:
    codewords: list[BinaryWord]
    optimal: bool = True
    lex_minimal: bool = True
    nodes: int = 0
    seconds: float = 0.0
    vertices: int = 0

    @property
    def budget_exhausted(self) -> bool:
        return not (self.optimal and self.lex_minimal)

    def __len__(self):
        return len(self.codewords)

    def to_json(self) -> dict:
        return {
            "codewords": [str(w) for w in self.codewords],
            "size": len(self.codewords),
            "optimal": self.optimal,
            "lex_minimal": self.lex_minimal,
            "budget_exhausted": self.budget_exhausted,
            "nodes": self.nodes,
            "vertices": self.vertices,
        }


def build_problem(layout: CodeLayout, group: WordGaugeGroup, d: int, mode: str = "detect", *,
                  distinct_patterns: bool = False, degeneracy: str = "pairs",
                  budget: Budget | None = None, seed: int = 0) -> SearchProblem:
    """Forbidden differences and degeneracy constraints for distance ``d``.

    ``detect`` uses every error of weight <= d-1. ``correct`` uses errors of
    weight <= t = (d-1)//2 plus the identity, forbidding pairwise XORs of
    their effective words. With ``degeneracy="pairs"`` the products of
    error pairs sharing an effective word join the zero coset; ``"single"``
    keeps only individual errors that reduce to zero.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d - 1 > layout.n:
        raise ValueError(f"d-1 = {d - 1} exceeds n = {layout.n}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if degeneracy not in DEGENERACY:
        raise ValueError(f"degeneracy must be one of {DEGENERACY}")
    zero = BinaryWord.zero(layout.n, layout.c)

    if mode == "detect":
        weight = d - 1
        eff = effective_error_set(layout, group, weight)
        forbidden = frozenset(w.packed for w in eff if not w.is_zero)
        zero_coset = list(eff.get(zero, []))
    else:
        weight = (d - 1) // 2
        eff = effective_error_set(layout, group, weight)
        words = {w.packed for w in eff} | {0}
        forbidden = frozenset(a ^ b for a in words for b in words) - {0}
        zero_coset = list(eff.get(zero, []))
        if degeneracy == "pairs":
            for w, errs in eff.items():
                if not w.is_zero:
                    zero_coset += [multiply(errs[0], e) for e in errs[1:]]
    return SearchProblem(layout, group, d, mode, weight, eff, forbidden, zero_coset,
                         distinct_patterns, degeneracy, budget or Budget(), seed)


def is_canonical(w: BinaryWord, layout: CodeLayout) -> bool:
    return not (w.alice & layout.gauge_mask)


def difference_allowed(delta: BinaryWord, problem: SearchProblem) -> bool:
    if delta.is_zero or delta.packed in problem.forbidden:
        return False
    if any((delta.alice & m).bit_count() & 1 for m in problem.x_constraints):
        return False
    if problem.distinct_patterns and not (delta.alice & problem.layout.ancilla_mask):
        return False
    return True


def compatible(c1: BinaryWord, c2: BinaryWord, problem: SearchProblem) -> bool:
    lay = problem.layout
    if not (is_canonical(c1, lay) and is_canonical(c2, lay)):
        raise ValueError("codewords must have zero gauge coordinates")
    if c1 == c2:
        raise ValueError("compatibility is defined for distinct words")
    return difference_allowed(c1 ^ c2, problem)


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)


def candidate_words(layout: CodeLayout) -> np.ndarray:
    """Canonical packed words in lexicographic order of their text form."""
    width = layout.width
    if width > MAX_SEARCH_WIDTH:
        raise ValueError(f"n + c = {width} is beyond the search cap of {MAX_SEARCH_WIDTH}")
    allv = np.arange(1 << width, dtype=np.int64)
    v = allv[(allv & layout.gauge_mask) == 0]
    rev = np.zeros_like(v)
    for i in range(width):
        rev |= ((v >> i) & 1) << (width - 1 - i)
    return v[np.argsort(rev, kind="stable")]


def allowed_table(problem: SearchProblem) -> np.ndarray:
    """Boolean lookup over every packed difference value."""
    lay = problem.layout
    vals = np.arange(1 << lay.width, dtype=np.int64)
    ok = vals != 0
    if problem.forbidden:
        ok &= ~np.isin(vals, np.fromiter(problem.forbidden, dtype=np.int64))
    alice = vals & ((1 << lay.n) - 1)
    for m in problem.x_constraints:
        ok &= (_popcount(alice & m) & 1) == 0
    if problem.distinct_patterns:
        ok &= (alice & lay.ancilla_mask) != 0
    ok &= (vals & lay.gauge_mask) == 0
    return ok


def _pack_rows(matrix: np.ndarray) -> list[int]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def compatibility_graph(problem: SearchProblem) -> tuple[np.ndarray, np.ndarray]:
    """Candidate words and their boolean adjacency matrix."""
    words = candidate_words(problem.layout)
    ok = allowed_table(problem)
    return words, ok[words[:, None] ^ words[None, :]]


def search_codewords(problem: SearchProblem) -> CodewordSet:
    """Largest compatible set containing the zero word.

    Ties between maximum sets go to the lexicographically smallest sorted
    codeword list. ``seed`` only perturbs the vertex order of the bounding
    pass, never the returned set when the search completes.
    """
    lay = problem.layout
    words, matrix = compatibility_graph(problem)
    N = len(words)
    adj = _pack_rows(matrix)
    P0 = adj[0]  # words[0] is the zero word

    # bounding pass on a degree-sorted relabelling of the zero word's neighbours
    members = np.flatnonzero(matrix[0])
    members = members[np.random.default_rng(problem.seed).permutation(len(members))]
    sub = matrix[np.ix_(members, members)]
    order = np.argsort(-sub.sum(axis=1), kind="stable")
    members = members[order]
    sub_adj = _pack_rows(sub[np.ix_(order, order)]) if len(members) else []
    upper = (1 << lay.s) - 1 if problem.distinct_patterns else None
    first = max_clique(sub_adj, (1 << len(members)) - 1, problem.budget, upper=upper)
    best = sorted([0] + [int(members[i]) for i in first.clique])
    nodes, seconds = first.nodes, first.seconds

    lex_ok = first.optimal
    if first.optimal and len(best) > 1:
        remaining = None
        if problem.budget.max_seconds is not None:
            remaining = max(problem.budget.max_seconds - seconds, 0.0)
        second = first_clique_of_size(adj, P0, len(best) - 1, Budget(remaining, problem.budget.max_nodes))
        nodes += second.nodes
        seconds += second.seconds
        if second.optimal and second.clique:
            best = [0] + second.clique
        else:
            lex_ok = False

    codewords = sorted(BinaryWord.unpack(int(words[i]), lay.n, lay.c) for i in best)
    return CodewordSet(codewords, first.optimal, lex_ok, nodes, seconds, N)


def verify_codeword_set(cws: list[BinaryWord], problem: SearchProblem) -> list[tuple[BinaryWord, BinaryWord]]:
    """Pairs that fail ``compatible``; empty for a valid set."""
    bad = []
    for i in range(len(cws)):
        for j in range(i + 1, len(cws)):
            if not compatible(cws[i], cws[j], problem):
                bad.append((cws[i], cws[j]))
    return bad


def greedy_additive_code(problem: SearchProblem) -> list[BinaryWord]:
    """Linear code grown greedily, generator by generator, in lexicographic order.

    A baseline only: every nonzero element of the span must be an allowed
    difference.
    """
    lay = problem.layout
    ok = allowed_table(problem)
    span = [0]
    for v in candidate_words(lay):
        v = int(v)
        if v == 0 or v in span:
            continue
        new = [s ^ v for s in span]
        if all(ok[x] for x in new):
            span += new
    return sorted(BinaryWord.unpack(v, lay.n, lay.c) for v in span)
