""" Text formats for instances and solutions. Every vertex id on disk is 1-indexed.

Instance::

    c comment
    p mm <n> <edges> <r> <k>
    e <u> <v>
    a <v>
    z <v>

Terminal-pair instance: header ``p mmp <n> <edges> <r> <k>`` with ``t <i> <s> <t>`` lines instead of
``a``/``z`` lines. Solution: ``s yes`` or ``s no``, then one ``P <i> <v1> <v2> ...`` line per path.
"""
import ftfy

from .exceptions import ParseError
from .graph import Graph, MMInstance, MMPInstance, PathSet


def clean_text(data):
    """ Decode raw bytes of an input file, repairing mis-encodings and stray BOMs.
    """
    if isinstance(data, bytes):
        data = ftfy.guess_bytes(data)[0]

    return ftfy.fix_text(data)


def read_text(path):
    with open(path, 'rb') as handle:
        return clean_text(handle.read())


def write_text(path, text):
    with open(path, 'w') as handle:
        handle.write(text)


def _lines(text):
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if line and not line.startswith('c'):
            yield line_no, line.split()


def _ints(parts, line_no, count=None):
    try:
        values = [int(x) for x in parts]
    except ValueError:
        raise ParseError('expected integers, got %r' % ' '.join(parts), line_no)

    if count is not None and len(values) != count:
        raise ParseError('expected %d values, got %d' % (count, len(values)), line_no)

    return values


def _vertex(value, n, line_no):
    if not 1 <= value <= n:
        raise ParseError('vertex %d out of range 1..%d' % (value, n), line_no)

    return value - 1


def parse_instance(text):
    """ Parse an instance file.

    :rtype: menger.graph.MMInstance|menger.graph.MMPInstance
    """
    header = None
    edges, sources, sinks, terminals = [], [], [], {}

    for line_no, parts in _lines(text):
        tag, rest = parts[0], parts[1:]

        if tag == 'p':
            if header is not None:
                raise ParseError('duplicate problem line', line_no)

            if not rest or rest[0] not in ('mm', 'mmp'):
                raise ParseError('malformed header, expected "p mm|mmp <n> <edges> <r> <k>"', line_no)

            header = [rest[0]] + _ints(rest[1:], line_no, 4)
            continue

        if header is None:
            raise ParseError('data before the "p" header', line_no)

        kind, n = header[0], header[1]

        if tag == 'e':
            u, v = _ints(rest, line_no, 2)
            edges.append((_vertex(u, n, line_no), _vertex(v, n, line_no)))

        elif tag in ('a', 'z') and kind == 'mm':
            v = _vertex(_ints(rest, line_no, 1)[0], n, line_no)
            (sources if tag == 'a' else sinks).append(v)

        elif tag == 't' and kind == 'mmp':
            i, s, t = _ints(rest, line_no, 3)

            if not 1 <= i <= header[4]:
                raise ParseError('terminal index %d out of range 1..%d' % (i, header[4]), line_no)

            if i in terminals:
                raise ParseError('terminal pair %d declared twice' % i, line_no)

            terminals[i] = (_vertex(s, n, line_no), _vertex(t, n, line_no))

        else:
            raise ParseError('unexpected line %r in a %s instance' % (' '.join(parts), kind), line_no)

    if header is None:
        raise ParseError('missing "p mm" header')

    kind, n, num_edges, r, k = header

    if len(edges) != num_edges:
        raise ParseError('header declares %d edges, found %d' % (num_edges, len(edges)))

    try:
        graph = Graph(n, edges)

        if kind == 'mmp':
            if sorted(terminals) != list(range(1, k + 1)):
                raise ParseError('expected terminal pairs 1..%d, found %d' % (k, len(terminals)))

            return MMPInstance(graph, [terminals[i] for i in range(1, k + 1)], r)

        return MMInstance(graph, sources, sinks, r, k)

    except ValueError as e:
        if isinstance(e, ParseError):
            raise

        raise ParseError(str(e))


def write_instance(inst):
    g = inst.graph
    is_mmp = isinstance(inst, MMPInstance)

    lines = ['p %s %d %d %d %d' % ('mmp' if is_mmp else 'mm', g.n, g.num_edges, inst.r, inst.k)]
    lines.extend('e %d %d' % (u + 1, v + 1) for u, v in g.edges())

    if is_mmp:
        lines.extend('t %d %d %d' % (i, s + 1, t + 1) for i, (s, t) in enumerate(inst.terminals, 1))

    else:
        lines.extend('a %d' % (v + 1) for v in sorted(inst.A))
        lines.extend('z %d' % (v + 1) for v in sorted(inst.Z))

    return '\n'.join(lines) + '\n'


def parse_solution(text):
    """ Parse a solution file.

    :return: (answer, PathSet or None)
    """
    answer = None
    paths = {}

    for line_no, parts in _lines(text):
        tag, rest = parts[0], parts[1:]

        if tag == 's':
            if answer is not None:
                raise ParseError('duplicate answer line', line_no)

            if rest not in (['yes'], ['no']):
                raise ParseError('answer must be "s yes" or "s no"', line_no)

            answer = rest[0] == 'yes'

        elif tag == 'P':
            if answer is None:
                raise ParseError('path before the answer line', line_no)

            values = _ints(rest, line_no)
            if len(values) < 2:
                raise ParseError('path line needs an id and at least one vertex', line_no)

            if values[0] in paths:
                raise ParseError('path %d declared twice' % values[0], line_no)

            # Range checks against the graph belong to the verifier
            paths[values[0]] = [v - 1 for v in values[1:]]

        else:
            raise ParseError('unexpected line %r' % ' '.join(parts), line_no)

    if answer is None:
        raise ParseError('missing "s yes|no" answer line')

    if not answer:
        if paths:
            raise ParseError('a "no" answer cannot carry paths')

        return False, None

    if sorted(paths) != list(range(1, len(paths) + 1)):
        raise ParseError('path ids must be 1..%d' % len(paths))

    return True, PathSet([paths[i] for i in sorted(paths)])


def write_solution(answer, witness=None):
    lines = ['s yes' if answer else 's no']

    if answer:
        for i, path in enumerate(witness, 1):
            lines.append(' '.join(['P', str(i)] + [str(v + 1) for v in path]))

    return '\n'.join(lines) + '\n'
