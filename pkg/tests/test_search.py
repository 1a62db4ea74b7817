"""Search problems, compatibility and codeword search."""

import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eaocws import reference as ref
from eaocws.clique import Budget
from eaocws.induction import BinaryWord, effective_word, enumerate_alice_errors
from eaocws.search import (
    allowed_table, build_problem, candidate_words, compatibility_graph, compatible,
    greedy_additive_code, search_codewords, verify_codeword_set,
)
from eaocws.structure import CodeLayout, Graph, build_gauge_group, ring_graph

from conftest import random_graph, random_layout
from test_clique import brute_force_cliques


def words(*texts):
    return [BinaryWord.parse(t) for t in texts]


def allowed_oracle(layout, group, d):
    """Allowed differences straight from the detection condition.

    delta is allowed iff no error of weight <= d-1 has effective word delta,
    and every error with effective word zero commutes with Z^delta.
    """
    errs = enumerate_alice_errors(layout, d - 1) if d > 1 else []
    eff = [(e, effective_word(e, group)) for e in errs]

    def ok(delta: BinaryWord) -> bool:
        if delta.is_zero:
            return False
        for e, w in eff:
            if w == delta:
                return False
            if w.is_zero and (e.xa & delta.alice).bit_count() % 2:
                return False
        return True

    return ok


def small_instances(count=40, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        lay = random_layout(rng, 7)
        if lay.width - lay.r > 4:  # at most 16 candidate words
            continue
        d = int(rng.integers(1, min(lay.n, 4) + 2))
        out.append((lay, build_gauge_group(random_graph(rng, lay.n), lay), d))
    return out


class TestBuildProblem:
    def test_ring6_detect_counts(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3, "detect")
        assert prob.max_weight == 2
        assert sum(len(v) for v in prob.effective.values()) == 153

    def test_single_error_correction_set(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3, "correct", degeneracy="single")
        eff = [BinaryWord.parse(t.replace("I", "0").replace("Z", "1")) for t in ref.RING6_EFFECTIVE]
        expected = {(a ^ b).packed for a in eff + [BinaryWord.zero(6, 3)] for b in eff + [BinaryWord.zero(6, 3)]}
        assert prob.forbidden == frozenset(expected - {0})

    def test_distance_one_is_unconstrained(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 1)
        assert not prob.forbidden and not prob.zero_coset
        cands = candidate_words(ring6_layout)
        assert allowed_table(prob)[cands[1:]].all()

    @pytest.mark.parametrize("kw", [{"mode": "fix"}, {"degeneracy": "x"}, {"d": 0}, {"d": 8}])
    def test_rejects_bad_arguments(self, ring6_layout, ring6_group, kw):
        args = {"d": 3, **kw}
        with pytest.raises(ValueError):
            build_problem(ring6_layout, ring6_group, **args)


class TestCompatible:
    def test_listed_codewords_single_rule(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3, "correct", degeneracy="single")
        assert compatible(*words("110100|010", "111100|011"), prob)

    def test_forbidden_difference(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3, "detect")
        a = BinaryWord.parse("110100|010")
        assert not compatible(a, a ^ BinaryWord.parse("010100|100"), prob)

    def test_zero_coset_anticommutation(self):
        # vertex 1 only touches the gauge qubit 4, so X_1 has effective word zero
        lay = CodeLayout(4, 0, 1)
        group = build_gauge_group(Graph.from_edges(4, [(1, 4), (2, 3), (3, 4)]), lay)
        prob = build_problem(lay, group, 2, "detect")
        assert "XIII|" in [str(e) for e in prob.zero_coset]
        a, b = words("0000|", "1100|")
        assert (a ^ b).packed not in prob.forbidden
        assert not compatible(a, b, prob)

    def test_rejects_gauge_coordinates(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3)
        with pytest.raises(ValueError):
            compatible(*words("000000|000", "000001|000"), prob)

    def test_translation_invariant(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3)
        rng = np.random.default_rng(0)
        cands = candidate_words(ring6_layout)
        for _ in range(300):
            a, b, x = (BinaryWord.unpack(int(v), 6, 3) for v in rng.choice(cands, 3, replace=False))
            assert compatible(a, b, prob) == compatible(a ^ x, b ^ x, prob)

    def test_matches_direct_condition(self):
        for lay, group, d in small_instances(30, seed=1):
            prob = build_problem(lay, group, d)
            ok = allowed_oracle(lay, group, d)
            table = allowed_table(prob)
            for v in candidate_words(lay):
                assert table[int(v)] == ok(BinaryWord.unpack(int(v), lay.n, lay.c))


class TestSearch:
    def test_single_rule_finds_eight(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3, "correct", degeneracy="single")
        found = search_codewords(prob)
        assert len(found) >= 8 and found.optimal
        assert verify_codeword_set(found.codewords, prob) == []

    def test_all_differences_forbidden(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3)
        every = frozenset(int(v) for v in candidate_words(ring6_layout)) - {0}
        prob = dataclasses.replace(prob, forbidden=every)
        assert [str(w) for w in search_codewords(prob).codewords] == ["000000|000"]

    def test_equals_brute_force(self):
        for lay, group, d in small_instances(40, seed=2):
            for distinct in (False, True):
                prob = build_problem(lay, group, d, distinct_patterns=distinct)
                words_, matrix = compatibility_graph(prob)
                assert len(words_) <= 20
                best, cliques = brute_force_cliques(matrix)
                found = search_codewords(prob)
                assert len(found) == best
                idx = sorted(int(np.flatnonzero(words_ == w.packed)[0]) for w in found.codewords)
                assert idx in cliques
                if distinct:
                    assert len(found) <= 1 << lay.s

    def test_seed_does_not_change_result(self, ring6_layout, ring6_group):
        results = {tuple(map(str, search_codewords(build_problem(ring6_layout, ring6_group, 3, seed=s)).codewords))
                   for s in range(4)}
        assert len(results) == 1

    def test_budget_flag(self):
        lay = CodeLayout(7, 3, 1)
        prob = build_problem(lay, build_gauge_group(ring_graph(7), lay), 3, "correct",
                             degeneracy="single", budget=Budget(max_nodes=2))
        found = search_codewords(prob)
        assert found.budget_exhausted
        assert verify_codeword_set(found.codewords, prob) == []

    def test_greedy_additive_baseline(self, ring6_layout, ring6_group):
        prob = build_problem(ring6_layout, ring6_group, 3)
        lin = greedy_additive_code(prob)
        assert verify_codeword_set(lin, prob) == []
        assert all((a ^ b) in lin for a in lin for b in lin)
        assert len(lin) <= len(search_codewords(prob))


@st.composite
def correctable_instance(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    lay = random_layout(rng, 7, min_n=2)
    t = draw(st.integers(1, max(1, lay.n // 2)))
    return lay, build_gauge_group(random_graph(rng, lay.n), lay), t


class TestModes:
    @settings(max_examples=60, deadline=None)
    @given(correctable_instance())
    def test_correct_equals_detect_at_twice_t(self, inst):
        lay, group, t = inst
        det = build_problem(lay, group, 2 * t + 1, "detect")
        cor = build_problem(lay, group, 2 * t + 1, "correct", degeneracy="pairs")
        assert np.array_equal(allowed_table(det), allowed_table(cor))

    def test_single_rule_is_looser(self, ring6_layout, ring6_group):
        pairs = allowed_table(build_problem(ring6_layout, ring6_group, 3, "correct"))
        single = allowed_table(build_problem(ring6_layout, ring6_group, 3, "correct", degeneracy="single"))
        assert not (pairs & ~single).any()
        assert (single & ~pairs).any()
