import mock
import pytest

from menger.config import GUARD_DEFAULTS, Guards, RunConfig, check_deadline
from menger.exceptions import ConfigError, GuardExceeded, InvalidDecomposition, ParseError, SolverError
from menger.graph import MMInstance
from menger.solvers import BaseSolver, Solver, SolveOutcome
from menger.solvers.brute import BruteForceSolver
from menger.solvers.dp import GeneralDpSolver, TreewidthDpSolver

from .conftest import complete_graph, cycle_graph


def test_guard_defaults(monkeypatch):
    for name in GUARD_DEFAULTS:
        monkeypatch.delenv('MENGER_' + name.upper(), raising=False)

    guards = Guards()

    assert guards.as_dict() == dict(GUARD_DEFAULTS)
    assert guards.deadline() is None


def test_guard_loaded_from_env(monkeypatch):
    monkeypatch.setenv('MENGER_NODE_BUDGET', '17')
    monkeypatch.setenv('MENGER_TIME_LIMIT', '2.5')

    guards = Guards()

    assert guards.node_budget == 17
    assert guards.time_limit == 2.5
    assert guards.deadline() is not None


def test_guard_keyword_beats_env(monkeypatch):
    monkeypatch.setenv('MENGER_NODE_BUDGET', '17')

    assert Guards(node_budget=5).node_budget == 5


def test_invalid_guards_raise_config_error(monkeypatch):
    with pytest.raises(ConfigError):
        Guards(nodes=5)

    with pytest.raises(ConfigError):
        Guards(node_budget=0)

    monkeypatch.setenv('MENGER_STATE_BUDGET', 'many')
    with pytest.raises(ConfigError):
        Guards()


def test_expired_deadline_raises():
    with pytest.raises(GuardExceeded) as excinfo:
        check_deadline(0.0, method='brute')

    assert excinfo.value.method == 'brute'

    check_deadline(None)


def test_run_config_validation():
    config = RunConfig('reduce', r=3, k=2, cnf='sample.cnf')

    assert config.path('cnf') == 'sample.cnf'
    assert config.path('out') is None

    with pytest.raises(ConfigError):
        RunConfig('reduce', r=3, k=2, variant='deg3')

    with pytest.raises(ConfigError):
        RunConfig('solve', method='magic')

    with pytest.raises(ConfigError):
        RunConfig('crossval', trials=-1)


def test_error_messages():
    assert str(ParseError('bad', 3)) == 'line 3: bad'
    assert ParseError('bad').line is None
    assert str(GuardExceeded('node_budget', 10, method='brute')) == 'brute: node_budget exceeded (limit 10)'

    late = GuardExceeded('state_budget', 5)
    assert str(late) == 'state_budget exceeded (limit 5)'
    late.method = 'dp_tw'
    assert str(late) == 'dp_tw: state_budget exceeded (limit 5)'

    assert issubclass(SolverError, EnvironmentError)
    assert issubclass(InvalidDecomposition, ValueError)


def test_outcome_requires_witness_for_yes():
    with pytest.raises(ValueError):
        SolveOutcome(True)

    assert not SolveOutcome(False)


def test_proxy_detects_by_radius_and_width():
    guards = Guards(max_expanded_width=9)

    assert Solver.detect(MMInstance(cycle_graph(8), [0], [4], r=3, k=1), guards=guards) is TreewidthDpSolver
    assert Solver.detect(MMInstance(cycle_graph(8), [0], [4], r=5, k=1), guards=guards) is GeneralDpSolver

    narrow = Guards(max_expanded_width=1)
    assert Solver.detect(MMInstance(cycle_graph(8), [0], [4], r=5, k=1), guards=narrow) is BruteForceSolver


def test_proxy_named_method():
    inst = MMInstance(complete_graph(2), [0], [1], r=5, k=1)

    assert Solver.detect(inst, method='brute') is BruteForceSolver
    assert Solver.detect(inst, method='dp_general') is GeneralDpSolver


def test_proxy_resolves_lazily():
    solver = Solver.init(MMInstance(complete_graph(2), [0], [1], r=2, k=1), method='brute')

    assert isinstance(solver._real, BaseSolver)
    assert solver.TAG == 'brute'
    assert solver.solve().witness is not None


def test_unknown_method_raises_solver_error():
    solver = Solver.init(MMInstance(complete_graph(2), [0], [1], r=2, k=1), method='magic')

    with pytest.raises(SolverError):
        print(solver.NAME)


def test_proxy_detects_on_first_attribute_access():
    inst = MMInstance(cycle_graph(8), [0], [4], r=3, k=1)

    with mock.patch.object(TreewidthDpSolver, 'detect', return_value=False) as detect:
        solver = Solver.init(inst)
        assert not detect.called

        assert solver.TAG == GeneralDpSolver.TAG
        assert detect.call_count == 1

        assert solver.solve()
        assert detect.call_count == 1
