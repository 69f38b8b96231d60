import pytest

from menger.exceptions import ParseError
from menger.formats import clean_text, parse_instance, parse_solution, read_text, write_instance, write_solution
from menger.graph import MMInstance, MMPInstance, PathSet

from .conftest import cycle_graph, path_graph


def test_instance_text():
    inst = MMInstance(path_graph(3), A=[0], Z=[2], r=2, k=1)

    assert write_instance(inst) == 'p mm 3 2 2 1\ne 1 2\ne 2 3\na 1\nz 3\n'
    assert parse_instance(write_instance(inst)) == inst


def test_terminal_pair_instance_text():
    inst = MMPInstance(cycle_graph(8), [(0, 2), (4, 6)], r=2)
    text = write_instance(inst)

    assert text.splitlines()[0] == 'p mmp 8 8 2 2'
    assert text.endswith('t 1 1 3\nt 2 5 7\n')
    assert parse_instance(text) == inst


def test_instance_comments_and_mojibake():
    inst = parse_instance(clean_text('c caf\xc3\xa9 \xe2\x80\x94 notes\np mm 2 1 3 1\ne 1 2\na 1\nz 2\n'))

    assert inst.graph.num_edges == 1
    assert inst.r == 3


@pytest.mark.parametrize('text, line', [
    ('p mm 2 1 1 1\ne 1 3\n', 2),
    ('a 1\np mm 2 0 1 1\n', 1),
    ('p mm 2 0 1 1\np mm 2 0 1 1\n', 2),
    ('p mm 2 0 1\n', 1),
    ('p graph 2 0 1 1\n', 1),
    ('p mm 2 0 1 1\nt 1 1 2\n', 2),
    ('p mmp 2 0 1 1\nt 2 1 2\n', 2),
    ('p mmp 2 0 1 1\nt 1 1 2\nt 1 2 1\n', 3),
    ('p mm 2 1 1 1\ne 1 x\n', 2),
])
def test_instance_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_instance(text)

    assert excinfo.value.line == line


@pytest.mark.parametrize('text', [
    '',
    'p mm 2 2 1 1\ne 1 2\n',
    'p mmp 3 0 1 2\nt 1 1 2\n',
    'p mm 2 0 0 1\na 1\nz 2\n',
    'p mm 2 2 1 1\ne 1 2\ne 2 1\n',
])
def test_instance_errors(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_solution_text():
    witness = PathSet([[0, 1], [2]])
    text = write_solution(True, witness)

    assert text == 's yes\nP 1 1 2\nP 2 3\n'
    assert parse_solution(text) == (True, witness)
    assert write_solution(False) == 's no\n'
    assert parse_solution('c nothing found\ns no\n') == (False, None)


@pytest.mark.parametrize('text', [
    '',
    'P 1 1 2\ns yes\n',
    's maybe\n',
    's no\nP 1 1 2\n',
    's yes\nP 1 1\nP 1 2\n',
    's yes\nP 2 1 2\n',
    's yes\nP 1\n',
    's yes\ns yes\n',
])
def test_solution_errors(text):
    with pytest.raises(ParseError):
        parse_solution(text)


def test_read_text_decodes_bytes(tmpdir):
    path = tmpdir.join('instance.mm')
    path.write_binary(u'c r\xe9sum\xe9\np mm 1 0 1 1\na 1\nz 1\n'.encode('utf-8'))

    inst = parse_instance(read_text(str(path)))
    assert inst.A == inst.Z == frozenset([0])
