import json

import pytest

from menger.cli import EXIT_GUARD, EXIT_INPUT, EXIT_NO, EXIT_OK, main
from menger.formats import parse_instance, parse_solution, write_instance
from menger.graph import MMInstance, MMPInstance

from .conftest import SAMPLE_CNF, cycle_graph


SINGLE_CNF = 'p cnf 1 1\n1 1 1 0\n'


def put(tmpdir, name, text):
    path = tmpdir.join(name)
    path.write(text)

    return str(path)


@pytest.fixture
def cycle_instance(tmpdir):
    return put(tmpdir, 'c8.mm', write_instance(MMInstance(cycle_graph(8), A=[0, 4], Z=[2, 6], r=2, k=2)))


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['--version'])

    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip() == 'tg-menger 0.1.0 (format 1)'


def test_reduce_sample(tmpdir):
    cnf = put(tmpdir, 'sample.cnf', SAMPLE_CNF)
    out, cert = str(tmpdir.join('sample.mm')), str(tmpdir.join('sample.json'))

    assert main(['reduce', cnf, '-r', '3', '-o', out, '--cert', cert]) == EXIT_OK

    text = open(out).read()
    assert text.splitlines()[0] == 'p mm 74 109 3 2'
    assert parse_instance(text).graph.n == 74
    assert json.load(open(cert))['variant'] == 'deg4'


def test_reduce_to_stdout(tmpdir, capsys):
    cnf = put(tmpdir, 'single.cnf', SINGLE_CNF)

    assert main(['reduce', cnf, '-r', '4', '-k', '3', '--variant', 'deg3']) == EXIT_OK
    assert capsys.readouterr().out.startswith('p mm ')


@pytest.mark.parametrize('args', [
    ['-r', '2'],
    ['-r', '3', '--variant', 'deg3'],
    ['-r', '3', '-k', '1'],
])
def test_reduce_preconditions(tmpdir, args):
    cnf = put(tmpdir, 'sample.cnf', SAMPLE_CNF)

    assert main(['reduce', cnf] + args) == EXIT_INPUT


def test_reduce_bad_cnf(tmpdir):
    cnf = put(tmpdir, 'broken.cnf', 'p cnf 1 1\n1 2 0\n')

    assert main(['reduce', cnf, '-r', '3']) == EXIT_INPUT


def test_missing_file(tmpdir):
    assert main(['reduce', str(tmpdir.join('nowhere.cnf')), '-r', '3']) == EXIT_INPUT


def test_solve_yes_and_verify(tmpdir, cycle_instance):
    out = str(tmpdir.join('c8.sol'))

    assert main(['solve', cycle_instance, '-o', out]) == EXIT_OK

    answer, witness = parse_solution(open(out).read())
    assert answer
    assert len(witness) == 2

    assert main(['verify', cycle_instance, out]) == EXIT_OK


def test_solve_no(tmpdir, capsys):
    instance = put(tmpdir, 'tight.mm', write_instance(MMInstance(cycle_graph(8), A=[0, 4], Z=[2, 6], r=3, k=2)))

    assert main(['solve', instance, '--method', 'brute']) == EXIT_NO
    assert capsys.readouterr().out == 's no\n'


def test_solve_terminal_pairs(tmpdir, capsys):
    instance = put(tmpdir, 'pairs.mmp', write_instance(MMPInstance(cycle_graph(8), [(0, 2), (4, 6)], r=2)))

    assert main(['solve', instance, '--method', 'dp_general']) == EXIT_OK
    assert capsys.readouterr().out == 's yes\nP 1 1 2 3\nP 2 5 6 7\n'


def test_solve_guard(tmpdir, cycle_instance):
    out = tmpdir.join('c8.sol')

    assert main(['solve', cycle_instance, '--method', 'brute', '--node-budget', '1', '-o', str(out)]) == EXIT_GUARD
    assert not out.check()


def test_solve_guard_from_environment(monkeypatch, cycle_instance):
    monkeypatch.setenv('MENGER_STATE_BUDGET', '1')

    assert main(['solve', cycle_instance, '--method', 'dp_general']) == EXIT_GUARD


def test_solve_with_decomposition(tmpdir, cycle_instance):
    td = put(tmpdir, 'c8.td', 's td 6 3 8\nb 1 1 2 8\nb 2 2 3 8\nb 3 3 4 8\nb 4 4 5 8\nb 5 5 6 8\nb 6 6 7 8\n'
                              '1 2\n2 3\n3 4\n4 5\n5 6\n')

    assert main(['solve', cycle_instance, '--method', 'dp_tw', '--td', td]) == EXIT_OK

    bad = put(tmpdir, 'bad.td', 's td 1 2 8\nb 1 1 2\n')
    assert main(['solve', cycle_instance, '--td', bad]) == EXIT_INPUT


def test_verify_reports_violations(tmpdir, cycle_instance):
    perturbed = put(tmpdir, 'perturbed.sol', 's yes\nP 1 1 2 3\nP 2 5 4 7\n')
    assert main(['verify', cycle_instance, perturbed]) == EXIT_NO

    truncated = put(tmpdir, 'truncated.sol', '')
    assert main(['verify', cycle_instance, truncated]) == EXIT_INPUT

    no = put(tmpdir, 'no.sol', 's no\n')
    assert main(['verify', cycle_instance, no]) == EXIT_OK


def test_extract_roundtrip(tmpdir):
    cnf = put(tmpdir, 'single.cnf', SINGLE_CNF)
    instance, cert = str(tmpdir.join('single.mm')), str(tmpdir.join('single.json'))
    solution, assignment = str(tmpdir.join('single.sol')), str(tmpdir.join('single.v'))

    assert main(['reduce', cnf, '-r', '3', '-k', '3', '-o', instance, '--cert', cert]) == EXIT_OK
    assert main(['solve', instance, '--method', 'brute', '-o', solution]) == EXIT_OK
    assert main(['extract', cert, solution, '-o', assignment]) == EXIT_OK
    assert open(assignment).read() == 'v 1 0\n'

    no = put(tmpdir, 'no.sol', 's no\n')
    assert main(['extract', cert, no]) == EXIT_INPUT


def test_roundtrip_sweep(tmpdir):
    out = str(tmpdir.join('roundtrip.json'))

    assert main(['roundtrip', '--nvars', '1', '--nclauses', '1', '--exhaustive', '--methods', 'brute',
                 '-o', out]) == EXIT_OK

    report = json.load(open(out))
    assert report['formulas'] == 4
    assert report['disagreements'] == []


def test_crossval_sweep(tmpdir):
    out = str(tmpdir.join('crossval.json'))

    assert main(['crossval', '--trials', '5', '--seed', '1', '--no-local', '--node-budget', '50000',
                 '--state-budget', '20000', '-o', out]) == EXIT_OK
    assert json.load(open(out))['trials'] == 5
