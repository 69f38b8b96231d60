import pytest

from hypothesis import strategies as st

from menger.cnf import CnfFormula, parse_dimacs
from menger.graph import Graph


SAMPLE_CNF = """c (x1 | -x2 | x3) & (-x1 | -x2 | x4) & (x2 | -x3 | -x4)
p cnf 4 3
1 -2 3 0
-1 -2 4 0
2 -3 -4 0
"""

CONTRADICTION_CNF = """p cnf 1 2
1 1 1 0
-1 -1 -1 0
"""


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@st.composite
def graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []

    return Graph(n, chosen)


@st.composite
def formulas(draw, max_vars=3, max_clauses=3):
    n = draw(st.integers(min_value=1, max_value=max_vars))
    literal = st.integers(min_value=1, max_value=n).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = draw(st.lists(st.tuples(literal, literal, literal), min_size=1, max_size=max_clauses))

    return CnfFormula(n, clauses)


def pytest_addoption(parser):
    parser.addoption('--slow', action='store_true', help='Run acceptance-sized sweeps too')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--slow'):
        return

    skip_slow = pytest.mark.skip(reason='needs --slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope='module')
def sample_formula():
    return parse_dimacs(SAMPLE_CNF)


@pytest.fixture(scope='module')
def contradiction():
    return parse_dimacs(CONTRADICTION_CNF)


@pytest.fixture
def c8():
    return cycle_graph(8)
