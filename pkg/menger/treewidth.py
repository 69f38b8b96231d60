""" Tree decompositions: min-fill construction, validation, bag expansion, nice form and PACE I/O.
"""
from collections import namedtuple

import networkx as nx

from .exceptions import InvalidDecomposition, ParseError
from .graph import Graph, Violation


LEAF = 'leaf'
INTRODUCE = 'introduce'
INTRODUCE_EDGE = 'introduce-edge'
FORGET = 'forget'
JOIN = 'join'


class TreeDecomposition(object):
    """ Bags indexed by decomposition node ``0..B-1`` plus the decomposition tree (a networkx graph).
    """

    def __init__(self, bags, tree_edges=()):
        if isinstance(bags, dict):
            bags = [bags[node] for node in sorted(bags)]

        self.bags = [frozenset(bag) for bag in bags]

        self.tree = nx.Graph()
        self.tree.add_nodes_from(range(len(self.bags)))
        self.tree.add_edges_from(tree_edges)

    @property
    def width(self):
        return max([len(bag) for bag in self.bags] or [0]) - 1

    @property
    def num_bags(self):
        return len(self.bags)

    def tree_edges(self):
        return sorted(tuple(sorted(edge)) for edge in self.tree.edges())

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.bags == other.bags and self.tree_edges() == other.tree_edges()
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '<TreeDecomposition bags=%d width=%d>' % (self.num_bags, self.width)


NiceNode = namedtuple('NiceNode', ['kind', 'bag', 'vertex', 'edge', 'children'])


class NiceTreeDecomposition(object):
    """ Rooted nice decomposition. Nodes are stored children-first, so ``nodes[-1]`` is the root and
        iterating over :attr:`nodes` is a valid bottom-up order.
    """

    def __init__(self, nodes):
        self.nodes = list(nodes)

    @property
    def root(self):
        return len(self.nodes) - 1

    @property
    def width(self):
        return max(len(node.bag) for node in self.nodes) - 1

    def count(self, kind):
        return sum(1 for node in self.nodes if node.kind == kind)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, item):
        return self.nodes[item]

    def __repr__(self):
        return '<NiceTreeDecomposition nodes=%d width=%d>' % (len(self.nodes), self.width)


def _fill_in(neighbors, v):
    around = sorted(neighbors[v])
    return sum(1 for i, x in enumerate(around) for y in around[i + 1:] if y not in neighbors[x])


def min_fill_decomposition(g):
    """ Decomposition from a min-fill elimination ordering (ties broken by lowest vertex id).

    :rtype: TreeDecomposition
    """
    if g.n == 0:
        return TreeDecomposition([frozenset()])

    neighbors = dict((v, set(g.adjacency[v])) for v in g.vertices)
    order = []
    bags = []

    while neighbors:
        v = min(neighbors, key=lambda x: (_fill_in(neighbors, x), x))
        around = neighbors.pop(v)

        for x in around:
            neighbors[x].discard(v)
            neighbors[x].update(y for y in around if y != x)

        order.append(v)
        bags.append(frozenset(around) | frozenset([v]))

    position = dict((v, i) for i, v in enumerate(order))
    edges = []

    for i, v in enumerate(order[:-1]):
        later = bags[i] - frozenset([v])
        parent = min(position[x] for x in later) if later else i + 1
        edges.append((i, parent))

    return _merge_subset_bags(bags, edges)


def _merge_subset_bags(bags, edges):
    tree = nx.Graph()
    tree.add_nodes_from(range(len(bags)))
    tree.add_edges_from(edges)
    bags = dict(enumerate(bags))

    merged = True
    while merged:
        merged = False

        for node in sorted(tree.nodes()):
            target = next((x for x in sorted(tree.neighbors(node)) if bags[node] <= bags[x]), None)
            if target is None:
                continue

            for other in list(tree.neighbors(node)):
                if other != target:
                    tree.add_edge(target, other)

            tree.remove_node(node)
            del bags[node]
            merged = True
            break

    renumber = dict((node, i) for i, node in enumerate(sorted(bags)))

    return TreeDecomposition(
        [bags[node] for node in sorted(bags)],
        [(renumber[u], renumber[v]) for u, v in tree.edges()],
    )


def validate_td(g, td):
    """ Check the three tree-decomposition axioms (plus tree shape and vertex ids).

    :return: None when valid, otherwise the first :class:`menger.graph.Violation`
    """
    if td.num_bags == 0 or not nx.is_tree(td.tree):
        return Violation('not-a-tree', 'decomposition nodes do not form a tree')

    occurrences = dict((v, []) for v in g.vertices)

    for node, bag in enumerate(td.bags):
        for v in bag:
            if v not in occurrences:
                return Violation('invalid-vertex', 'bag %d contains vertex %r which is not in the graph' % (node, v),
                                 node=node, vertex=v)

            occurrences[v].append(node)

    for v, nodes in sorted(occurrences.items()):
        if not nodes:
            return Violation('vertex-not-covered', 'vertex %d not covered by any bag' % v, vertex=v)

    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            return Violation('edge-not-covered', 'edge %d-%d not covered by any bag' % (u, v), edge=(u, v))

    for v, nodes in sorted(occurrences.items()):
        if not nx.is_connected(td.tree.subgraph(nodes)):
            return Violation('subtree-violated', 'subtree violated: bags containing vertex %d are not connected' % v,
                             vertex=v)

    return None


def _require_valid(g, td):
    violation = validate_td(g, td)

    if violation is not None:
        raise InvalidDecomposition(violation)


def expand_bags(g, td, m):
    """ Replace every bag B by the union of the closed m-balls around its vertices.

        The result decomposes the m-th distance power of `g` twice over: every ``N_m(v)`` lies
        within one expanded bag.
    """
    _require_valid(g, td)

    if m == 0:
        return TreeDecomposition(td.bags, td.tree_edges())

    return TreeDecomposition([frozenset(g.ball_of_set(bag, m)) for bag in td.bags], td.tree_edges())


def _children(td, root=0):
    """ Children lists (ascending) of the tree rooted at `root`, plus a postorder of its nodes.
    """
    children = dict((node, []) for node in td.tree.nodes())
    order = []
    seen = set([root])
    stack = [(root, iter(sorted(td.tree.neighbors(root))))]

    while stack:
        node, pending = stack[-1]
        child = next((x for x in pending if x not in seen), None)

        if child is None:
            stack.pop()
            order.append(node)
            continue

        seen.add(child)
        children[node].append(child)
        stack.append((child, iter(sorted(td.tree.neighbors(child)))))

    return children, order


class _NiceBuilder(object):

    def __init__(self, g):
        self.g = g
        self.nodes = []
        self.introduced = set()

    def add(self, kind, bag, children, vertex=None, edge=None):
        self.nodes.append(NiceNode(kind, frozenset(bag), vertex, edge, tuple(children)))
        return len(self.nodes) - 1

    def forget(self, top, v):
        bag = self.nodes[top].bag

        for u in sorted(bag):
            edge = (min(u, v), max(u, v))

            if u != v and edge not in self.introduced and self.g.has_edge(u, v):
                self.introduced.add(edge)
                top = self.add(INTRODUCE_EDGE, bag, [top], edge=edge)

        return self.add(FORGET, bag - frozenset([v]), [top], vertex=v)

    def introduce(self, top, v):
        return self.add(INTRODUCE, self.nodes[top].bag | frozenset([v]), [top], vertex=v)

    def move(self, top, bag):
        """ Forget what is missing from `bag`, then introduce what is new, in ascending order.
        """
        current = self.nodes[top].bag

        for v in sorted(current - bag):
            top = self.forget(top, v)

        for v in sorted(bag - current):
            top = self.introduce(top, v)

        return top


def make_nice(td, g):
    """ Convert a valid decomposition of `g` into nice form rooted at node 0.

        Every edge of `g` gets exactly one introduce-edge node, placed just before the first of its
        endpoints is forgotten. Leaves and the root have empty bags; joins are binary.

    :rtype: NiceTreeDecomposition
    """
    _require_valid(g, td)

    builder = _NiceBuilder(g)
    children, order = _children(td)
    top = {}

    for node in order:
        bag = td.bags[node]

        if not children[node]:
            top[node] = builder.move(builder.add(LEAF, frozenset(), []), bag)
            continue

        branches = [builder.move(top.pop(child), bag) for child in children[node]]

        current = branches[0]
        for branch in branches[1:]:
            current = builder.add(JOIN, bag, [current, branch])

        top[node] = current

    builder.move(top[0], frozenset())

    return NiceTreeDecomposition(builder.nodes)


# PACE file formats, 1-indexed on disk


def _data_lines(text):
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if line and not line.startswith('c'):
            yield line_no, line.split()


def _ints(parts, line_no):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError('expected integers, got %r' % ' '.join(parts), line_no)


def parse_gr(text):
    """ Read a PACE ``.gr`` graph.

    :rtype: menger.graph.Graph
    """
    header = None
    edges = []

    for line_no, parts in _data_lines(text):
        if parts[0] == 'p':
            if header is not None:
                raise ParseError('duplicate problem line', line_no)

            if len(parts) != 4 or parts[1] != 'tw':
                raise ParseError('malformed header, expected "p tw <n> <m>"', line_no)

            header = _ints(parts[2:], line_no)
            continue

        if header is None:
            raise ParseError('edge before the "p tw" header', line_no)

        values = _ints(parts, line_no)
        if len(values) != 2:
            raise ParseError('edge lines need exactly two vertices', line_no)

        for v in values:
            if not 1 <= v <= header[0]:
                raise ParseError('vertex %d out of range 1..%d' % (v, header[0]), line_no)

        edges.append((values[0] - 1, values[1] - 1))

    if header is None:
        raise ParseError('missing "p tw" header')

    if len(edges) != header[1]:
        raise ParseError('header declares %d edges, found %d' % (header[1], len(edges)))

    return Graph(header[0], edges)


def write_gr(g):
    lines = ['p tw %d %d' % (g.n, g.num_edges)]
    lines.extend('%d %d' % (u + 1, v + 1) for u, v in g.edges())

    return '\n'.join(lines) + '\n'


def parse_td(text):
    """ Read a PACE ``.td`` decomposition. Axioms are checked separately by :func:`validate_td`.

    :rtype: TreeDecomposition
    """
    header = None
    bags = {}
    edges = []

    for line_no, parts in _data_lines(text):
        if parts[0] == 's':
            if header is not None:
                raise ParseError('duplicate solution line', line_no)

            if len(parts) != 5 or parts[1] != 'td':
                raise ParseError('malformed header, expected "s td <bags> <width+1> <n>"', line_no)

            header = _ints(parts[2:], line_no)
            continue

        if header is None:
            raise ParseError('data before the "s td" header', line_no)

        num_bags, _, n = header

        if parts[0] == 'b':
            values = _ints(parts[1:], line_no)
            if not values:
                raise ParseError('bag line without an id', line_no)

            node, vertices = values[0], values[1:]

            if not 1 <= node <= num_bags:
                raise ParseError('bag id %d out of range 1..%d' % (node, num_bags), line_no)

            if node in bags:
                raise ParseError('bag %d declared twice' % node, line_no)

            for v in vertices:
                if not 1 <= v <= n:
                    raise ParseError('bag %d references vertex %d outside 1..%d' % (node, v, n), line_no)

            bags[node] = frozenset(v - 1 for v in vertices)
            continue

        values = _ints(parts, line_no)
        if len(values) != 2:
            raise ParseError('tree edge lines need exactly two bag ids', line_no)

        for node in values:
            if not 1 <= node <= num_bags:
                raise ParseError('tree edge references bag %d outside 1..%d' % (node, num_bags), line_no)

        edges.append((values[0] - 1, values[1] - 1))

    if header is None:
        raise ParseError('missing "s td" header')

    num_bags, declared_size, _ = header

    if len(bags) != num_bags:
        raise ParseError('header declares %d bags, found %d' % (num_bags, len(bags)))

    largest = max([len(bag) for bag in bags.values()] or [0])
    if largest != declared_size:
        raise ParseError('header declares largest bag %d, found %d' % (declared_size, largest))

    return TreeDecomposition([bags[node] for node in range(1, num_bags + 1)], edges)


def write_td(td, n):
    lines = ['s td %d %d %d' % (td.num_bags, td.width + 1, n)]

    for node, bag in enumerate(td.bags, 1):
        lines.append(' '.join(['b', str(node)] + [str(v + 1) for v in sorted(bag)]))

    lines.extend('%d %d' % (u + 1, v + 1) for u, v in td.tree_edges())

    return '\n'.join(lines) + '\n'
