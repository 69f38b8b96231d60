import random
from itertools import combinations, permutations, product

import pytest

from hypothesis import given, settings, strategies as st

from menger.config import Guards
from menger.exceptions import GuardExceeded
from menger.graph import Graph, MMInstance, MMPInstance, PathSet, verify_mm_solution
from menger.solvers import enumerate_terminal_choices, solve_mm_brute, solve_mmp_brute

from .conftest import complete_graph, cycle_graph, graphs


def simple_paths(g, s, t):
    if s == t:
        yield [s]
        return

    stack = [[s]]
    while stack:
        path = stack.pop()

        for v in g.adjacency[path[-1]]:
            if v == t:
                yield path + [t]
            elif v not in path:
                stack.append(path + [v])


def naive_answer(inst):
    """ Try every k-tuple of simple paths for every choice of endpoints. """
    for sources in combinations(sorted(inst.A), inst.k):
        for sinks in permutations(sorted(inst.Z), inst.k):
            options = [list(simple_paths(inst.graph, s, t)) for s, t in zip(sources, sinks)]

            for paths in product(*options):
                if verify_mm_solution(inst, PathSet(paths)) is None:
                    return True

    return False


@st.composite
def small_instances(draw, max_n=5, max_r=4):
    g = draw(graphs(max_n=max_n))
    vertices = st.sampled_from(range(g.n))
    A = draw(st.lists(vertices, min_size=1, max_size=3, unique=True))
    Z = draw(st.lists(vertices, min_size=1, max_size=3, unique=True))

    return MMInstance(g, A, Z, r=draw(st.integers(1, max_r)), k=draw(st.integers(1, 2)))


def test_cycle_yes_with_witness(c8):
    outcome = solve_mmp_brute(MMPInstance(c8, [(0, 2), (4, 6)], r=2))

    assert outcome.answer
    assert outcome.witness == PathSet([[0, 1, 2], [4, 5, 6]])
    assert outcome.stats['method'] == 'brute'


def test_cycle_no_when_too_close(c8):
    outcome = solve_mmp_brute(MMPInstance(c8, [(0, 2), (4, 6)], r=3))

    assert not outcome.answer
    assert outcome.witness is None


@pytest.mark.parametrize('r', [1, 2, 5])
def test_single_vertex(r):
    outcome = solve_mmp_brute(MMPInstance(Graph(1), [(0, 0)], r=r))

    assert outcome.witness == PathSet([[0]])


def test_terminal_choices_single_pair():
    inst = MMInstance(complete_graph(2), A=[0], Z=[1], r=3, k=1)
    choices = list(enumerate_terminal_choices(inst))

    assert len(choices) == 1
    assert choices[0].terminals == ((0, 1), )


def test_terminal_choices_factor_out_index_order():
    inst = MMInstance(Graph(4), A=[0, 1], Z=[2, 3], r=3, k=2)
    choices = list(enumerate_terminal_choices(inst))

    assert [x.terminals for x in choices] == [((0, 2), (1, 3)), ((0, 3), (1, 2))]


def test_terminal_choices_need_k_sources():
    inst = MMInstance(complete_graph(2), A=[0], Z=[1], r=3, k=2)

    assert list(enumerate_terminal_choices(inst)) == []


def test_terminal_choices_skip_close_terminals(c8):
    inst = MMInstance(c8, A=[0, 4], Z=[2, 6], r=3, k=2)

    assert list(enumerate_terminal_choices(inst)) == []
    assert not solve_mm_brute(inst)


def test_mm_examples():
    assert solve_mm_brute(MMInstance(complete_graph(2), A=[0], Z=[1], r=5, k=1))
    assert not solve_mm_brute(MMInstance(complete_graph(2), A=[0], Z=[1], r=1, k=2))

    two_edges = Graph(4, [(0, 1), (2, 3)])
    outcome = solve_mm_brute(MMInstance(two_edges, A=[0, 2], Z=[1, 3], r=9, k=2))

    assert outcome.answer
    assert outcome.stats['choices'] >= 1


def test_max_vertices_guard():
    with pytest.raises(GuardExceeded) as excinfo:
        solve_mmp_brute(MMPInstance(cycle_graph(3), [(0, 1)], r=1), guards=Guards(max_vertices=2))

    assert excinfo.value.guard == 'max_vertices'
    assert excinfo.value.method == 'brute'


def test_node_budget_guard(c8):
    with pytest.raises(GuardExceeded) as excinfo:
        solve_mmp_brute(MMPInstance(c8, [(0, 2), (4, 6)], r=2), guards=Guards(node_budget=1))

    assert excinfo.value.guard == 'node_budget'


@settings(max_examples=50, deadline=None)
@given(small_instances())
def test_brute_matches_naive_enumeration(inst):
    outcome = solve_mm_brute(inst)

    assert outcome.answer == naive_answer(inst)

    if outcome.answer:
        assert verify_mm_solution(inst, outcome.witness) is None


@settings(max_examples=40, deadline=None)
@given(small_instances(max_n=6, max_r=5))
def test_smaller_r_never_loses_a_yes(inst):
    if inst.r == 1 or not solve_mm_brute(inst):
        return

    looser = MMInstance(inst.graph, inst.A, inst.Z, r=inst.r - 1, k=inst.k)
    assert solve_mm_brute(looser)


@settings(max_examples=40, deadline=None)
@given(small_instances(max_n=6), st.randoms(use_true_random=False))
def test_answer_survives_relabelling(inst, rng):
    permutation = list(range(inst.graph.n))
    rng.shuffle(permutation)

    relabelled = MMInstance(inst.graph.relabel(permutation), [permutation[v] for v in inst.A],
                            [permutation[v] for v in inst.Z], r=inst.r, k=inst.k)

    assert solve_mm_brute(relabelled).answer == solve_mm_brute(inst).answer


def test_seeded_random_witnesses_verify():
    rng = random.Random(11)

    for _ in range(30):
        n = rng.randint(2, 9)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35])
        inst = MMInstance(g, rng.sample(range(n), 2), rng.sample(range(n), 2), r=rng.randint(1, 3), k=2)
        outcome = solve_mm_brute(inst)

        if outcome:
            assert verify_mm_solution(inst, outcome.witness) is None
