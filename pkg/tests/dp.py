import pytest

from hypothesis import given, settings, strategies as st

from menger.cnf import CnfFormula, evaluate
from menger.config import Guards
from menger.dp_engine import (
    GENERAL, TW_ONLY, assign_constraints, prepare_general, run_general, run_tw_only, solve_dp_general,
    solve_dp_tw_only,
)
from menger.exceptions import GuardExceeded, SolverError
from menger.graph import Graph, MMInstance, MMPInstance, PathSet, verify_mm_solution
from menger.local_check import Color, check, decode_paths, encode_mmp, is_valid_coloring, solve_local_brute
from menger.reduction import build_reduction, extract_assignment
from menger.solvers import solve_mm, solve_mmp
from menger.treewidth import make_nice, min_fill_decomposition

from .conftest import complete_graph, graphs, path_graph


@st.composite
def terminal_instances(draw, max_n=7, max_r=4):
    k = draw(st.integers(1, 2))
    g = draw(graphs(max_n=max_n, min_n=2 * k))
    ends = draw(st.lists(st.sampled_from(range(g.n)), min_size=2 * k, max_size=2 * k, unique=True))

    return MMPInstance(g, list(zip(ends[::2], ends[1::2])), r=draw(st.integers(1, max_r)))


def tw_only(mmp):
    lc = encode_mmp(mmp)
    return lc, solve_dp_tw_only(lc, make_nice(min_fill_decomposition(mmp.graph), mmp.graph))


def test_single_vertex_both_modes():
    mmp = MMPInstance(Graph(1), [(0, 0)], r=2)
    lc = encode_mmp(mmp)

    assert solve_dp_general(lc, min_fill_decomposition(mmp.graph)) == (Color(1, 0), )
    assert tw_only(mmp)[1] == (Color(1, 0), )


def test_tw_only_path():
    mmp = MMPInstance(path_graph(4), [(0, 3)], r=3)
    lc, coloring = tw_only(mmp)

    assert coloring == (Color(1, 1), Color(1, 2), Color(1, 2), Color(1, 1))
    assert decode_paths(mmp, coloring) == PathSet([[0, 1, 2, 3]])


def test_tw_only_needs_radius_one():
    mmp = MMPInstance(path_graph(4), [(0, 3)], r=4)
    lc = encode_mmp(mmp)

    with pytest.raises(ValueError):
        run_tw_only(lc, make_nice(min_fill_decomposition(mmp.graph), mmp.graph))


def test_tw_only_too_close(c8):
    lc, coloring = tw_only(MMPInstance(c8, [(0, 2), (4, 6)], r=3))

    assert coloring is None


def test_constraints_land_on_covering_bags():
    mmp = MMPInstance(path_graph(6), [(0, 5)], r=5)
    lc = encode_mmp(mmp)
    nice = prepare_general(lc, min_fill_decomposition(mmp.graph))
    at = assign_constraints(lc, nice)

    assert sorted(v for vertices in at.values() for v in vertices) == list(range(6))

    for node_id, vertices in at.items():
        for v in vertices:
            assert lc.balls[v] <= nice[node_id].bag


def test_state_budget_guard():
    mmp = MMPInstance(path_graph(6), [(0, 5)], r=3)
    lc = encode_mmp(mmp)

    with pytest.raises(GuardExceeded) as excinfo:
        solve_dp_general(lc, min_fill_decomposition(mmp.graph), state_budget=1)

    assert excinfo.value.guard == 'state_budget'
    assert excinfo.value.method == GENERAL


@settings(max_examples=80, deadline=None)
@given(terminal_instances())
def test_modes_agree_with_colouring_search(mmp):
    lc = encode_mmp(mmp)
    expected = solve_local_brute(lc) is not None
    td = min_fill_decomposition(mmp.graph)

    answers = [
        solve_dp_general(lc, td, prune=True),
        solve_dp_general(lc, td, prune=False),
    ]
    if mmp.r <= 3:
        answers.append(tw_only(mmp)[1])

    for coloring in answers:
        assert (coloring is not None) == expected

        if coloring is not None:
            assert is_valid_coloring(lc, coloring)
            assert decode_paths(mmp, coloring) is not None


@settings(max_examples=40, deadline=None)
@given(terminal_instances(max_n=6))
def test_unpruned_tables_are_sound(mmp):
    lc = encode_mmp(mmp)
    nice = prepare_general(lc, min_fill_decomposition(mmp.graph))
    at = assign_constraints(lc, nice)

    full = run_general(lc, nice, prune=False)
    pruned = run_general(lc, nice, prune=True)

    assert full.accepted == pruned.accepted == (solve_local_brute(lc) is not None)
    assert pruned.total_states <= full.total_states

    for node_id, states in enumerate(full.tables):
        for state in states:
            colors = full.colors(node_id, state)

            assert all(colors[v] in lc.allowed[v] for v in colors)
            assert all(check(lc, v, colors) for v in at[node_id])


def test_tw_only_table_holds_aggregates():
    mmp = MMPInstance(path_graph(3), [(0, 2)], r=3)
    lc = encode_mmp(mmp)
    table = run_tw_only(lc, make_nice(min_fill_decomposition(mmp.graph), mmp.graph))

    assert table.mode == TW_ONLY
    assert table.accepted
    assert table.reconstruct(3) == (Color(1, 1), Color(1, 2), Color(1, 1))


@pytest.mark.parametrize('method', ['auto', 'brute', 'dp_general', 'dp_tw'])
def test_solve_mm_examples(method, c8):
    assert not solve_mm(MMInstance(complete_graph(2), A=[0], Z=[1], r=1, k=2), method=method)

    outcome = solve_mm(MMInstance(c8, A=[0, 4], Z=[2, 6], r=2, k=2), method=method)
    assert outcome.answer
    assert verify_mm_solution(MMInstance(c8, A=[0, 4], Z=[2, 6], r=2, k=2), outcome.witness) is None

    assert not solve_mm(MMInstance(c8, A=[0, 4], Z=[2, 6], r=3, k=2), method=method)


@pytest.mark.parametrize('method', ['auto', 'brute', 'dp_general', 'dp_tw'])
def test_solve_mmp_methods(method):
    outcome = solve_mmp(MMPInstance(path_graph(4), [(0, 3)], r=3), method=method)

    assert outcome.witness == PathSet([[0, 1, 2, 3]])


def test_solve_mmp_conflicting_terminals_is_no():
    assert not solve_mmp(MMPInstance(path_graph(3), [(0, 1), (1, 2)], r=1), method='brute')
    assert not solve_mmp(MMPInstance(path_graph(3), [(0, 1), (1, 2)], r=1), method='dp_tw')


def test_tw_method_rejects_large_r():
    with pytest.raises(SolverError):
        solve_mm(MMInstance(path_graph(4), A=[0], Z=[3], r=4, k=1), method='dp_tw')


def test_solve_mm_names_method_on_guard_trip(c8):
    with pytest.raises(GuardExceeded) as excinfo:
        solve_mm(MMInstance(c8, A=[0, 4], Z=[2, 6], r=2, k=2), method='dp_general', guards=Guards(state_budget=1))

    assert excinfo.value.method == GENERAL


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, min_n=2), st.integers(1, 4), st.data())
def test_methods_agree_on_mm(g, r, data):
    vertices = st.sampled_from(range(g.n))
    A = data.draw(st.lists(vertices, min_size=1, max_size=2, unique=True))
    Z = data.draw(st.lists(vertices, min_size=1, max_size=2, unique=True))
    inst = MMInstance(g, A, Z, r=r, k=data.draw(st.integers(1, 2)))

    methods = ['brute', 'dp_general'] + (['dp_tw'] if r <= 3 else [])
    answers = set(solve_mm(inst, method=method).answer for method in methods)

    assert len(answers) == 1


def test_single_clause_reduction_is_yes():
    phi = CnfFormula(1, [(1, 1, 1)])
    inst, cert = build_reduction(phi, 3, 2)
    outcome = solve_mm(inst, method='brute')

    assert outcome.answer
    assert evaluate(phi, extract_assignment(cert, outcome.witness))


@pytest.mark.slow
@pytest.mark.parametrize('method', ['brute', 'dp_tw'])
def test_contradiction_reduction_is_no(contradiction, method):
    inst, _ = build_reduction(contradiction, 3, 2)

    assert not solve_mm(inst, method=method)


@pytest.mark.slow
@pytest.mark.parametrize('method', ['auto', 'brute'])
def test_sample_reduction_is_yes(sample_formula, method):
    inst, cert = build_reduction(sample_formula, 3, 2)
    outcome = solve_mm(inst, method=method)

    assert outcome.answer
    assert verify_mm_solution(inst, outcome.witness) is None
    assert evaluate(sample_formula, extract_assignment(cert, outcome.witness))


@pytest.mark.slow
def test_padded_sample_reduction_extracts(sample_formula):
    inst, cert = build_reduction(sample_formula, 3, 3)
    outcome = solve_mm(inst, method='brute')

    assert outcome.answer
    assert evaluate(sample_formula, extract_assignment(cert, outcome.witness))
