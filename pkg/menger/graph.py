""" Simple undirected graphs, metric Menger instances and the solution verifier.

Vertices are dense integer ids ``0..n-1``. External formats are 1-indexed and converted at the
I/O boundary (see :mod:`menger.formats`).
"""
from collections import deque
from itertools import combinations

from .exceptions import InvalidGraphError


INFINITY = float('inf')


class Graph(object):
    """ Immutable simple undirected graph.

        Breadth-first search trees are memoised per source vertex on demand; the cache only ever
        stores results that are a pure function of the (immutable) graph.
    """

    def __init__(self, n, edges=()):
        if n < 0:
            raise InvalidGraphError('Vertex count must not be negative')

        neighbors = [set() for _ in range(n)]

        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError('Edge %d-%d references a vertex outside 0..%d' % (u, v, n - 1))

            if u == v:
                raise InvalidGraphError('Self-loop at vertex %d' % u)

            if v in neighbors[u]:
                raise InvalidGraphError('Parallel edge %d-%d' % (u, v))

            neighbors[u].add(v)
            neighbors[v].add(u)

        self.n = n
        self.adjacency = tuple(tuple(sorted(x)) for x in neighbors)
        self._distance_cache = {}

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.n == other.n and self.adjacency == other.adjacency
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return '<Graph n=%d m=%d>' % (self.n, self.num_edges)

    def __len__(self):
        return self.n

    @property
    def vertices(self):
        return range(self.n)

    @property
    def num_edges(self):
        return sum(len(x) for x in self.adjacency) // 2

    def edges(self):
        """ Iterate over edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order.
        """
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def check_vertex(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise InvalidGraphError('Invalid vertex id %r (graph has %d vertices)' % (v, self.n))

    def neighbors(self, v):
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adjacency[u]

    def max_degree(self):
        """ Maximum degree, 0 for edgeless (and empty) graphs.
        """
        return max([len(x) for x in self.adjacency] or [0])

    def distances_from(self, source):
        """ BFS distances from `source`; unreachable vertices get ``INFINITY``.

        :rtype: tuple
        """
        self.check_vertex(source)

        cached = self._distance_cache.get(source)
        if cached is not None:
            return cached

        distances = [INFINITY] * self.n
        distances[source] = 0
        queue = deque([source])

        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if distances[v] == INFINITY:
                    distances[v] = distances[u] + 1
                    queue.append(v)

        result = tuple(distances)
        self._distance_cache[source] = result

        return result

    def dist(self, u, v):
        """ Length of a shortest u-v path, ``INFINITY`` when there is none.
        """
        self.check_vertex(v)
        return self.distances_from(u)[v]

    def closed_ball(self, v, m):
        """ Closed m-neighbourhood ``{u : dist(u, v) <= m}``.

        :rtype: frozenset
        """
        if m < 0:
            raise ValueError('Ball radius must not be negative')

        return frozenset(u for u, d in enumerate(self.distances_from(v)) if d <= m)

    def ball_of_set(self, vertices, m, allowed=None):
        """ All vertices within distance `m` of some vertex in `vertices` (multi-source BFS).

        :param allowed: optional container restricting which vertices the search may pass through
        :rtype: set
        """
        depth = {}
        queue = deque()

        for v in vertices:
            self.check_vertex(v)
            if v not in depth:
                depth[v] = 0
                queue.append(v)

        while queue:
            u = queue.popleft()
            if depth[u] == m:
                continue

            for v in self.adjacency[u]:
                if v not in depth and (allowed is None or v in allowed):
                    depth[v] = depth[u] + 1
                    queue.append(v)

        return set(depth)

    def shortest_path(self, source, target, allowed=None):
        """ A shortest source-target path through `allowed` vertices (lowest-id neighbours first).

        :return: list of vertices or None when target is unreachable
        """
        self.check_vertex(source)
        self.check_vertex(target)

        if allowed is not None and (source not in allowed or target not in allowed):
            return None

        parent = {source: None}
        queue = deque([source])

        while queue:
            u = queue.popleft()
            if u == target:
                break

            for v in self.adjacency[u]:
                if v not in parent and (allowed is None or v in allowed):
                    parent[v] = u
                    queue.append(v)

        if target not in parent:
            return None

        path = [target]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])

        return list(reversed(path))

    def relabel(self, permutation):
        """ Isomorphic copy where vertex ``v`` becomes ``permutation[v]``.
        """
        if sorted(permutation) != list(range(self.n)):
            raise InvalidGraphError('Relabelling must be a permutation of 0..%d' % (self.n - 1))

        return Graph(self.n, [(permutation[u], permutation[v]) for u, v in self.edges()])


def dist(g, u, v):
    return g.dist(u, v)


def closed_ball(g, v, m):
    return g.closed_ball(v, m)


def max_degree(g):
    return g.max_degree()


def distance_power(g, m):
    """ Graph on the same vertices with an edge between every pair at distance 1..m.
    """
    edges = []

    for u in g.vertices:
        row = g.distances_from(u)
        edges.extend((u, v) for v in range(u + 1, g.n) if row[v] <= m)

    return Graph(g.n, edges)


class Path(object):
    """ Nonempty vertex sequence; a single vertex is a path of length 0.
    """

    __slots__ = ('vertices', )

    def __init__(self, vertices):
        self.vertices = tuple(vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, item):
        return self.vertices[item]

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.vertices == other.vertices
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return 'Path(%r)' % (list(self.vertices), )

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def length(self):
        return len(self.vertices) - 1

    def defect(self, g):
        """ Describe why this is not a simple path of `g`, or return None.

        :rtype: tuple|None
        """
        if not self.vertices:
            return 'empty-path', 'path has no vertices'

        for v in self.vertices:
            if not isinstance(v, int) or not 0 <= v < g.n:
                return 'invalid-vertex', 'vertex %r is not in the graph' % (v, )

        if len(set(self.vertices)) != len(self.vertices):
            return 'repeated-vertex', 'path repeats a vertex'

        for u, v in zip(self.vertices, self.vertices[1:]):
            if v not in g.adjacency[u]:
                return 'not-adjacent', 'vertices %d and %d are not adjacent' % (u, v)

        return None


class PathSet(object):
    """ Solution witness: k paths, path ids are 1-based via :meth:`path`.
    """

    def __init__(self, paths):
        self.paths = [x if isinstance(x, Path) else Path(x) for x in paths]

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __getitem__(self, item):
        return self.paths[item]

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.paths == other.paths
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'PathSet(%r)' % ([list(x) for x in self.paths], )

    def path(self, i):
        if not 1 <= i <= len(self.paths):
            raise IndexError('Path id %d out of range 1..%d' % (i, len(self.paths)))

        return self.paths[i - 1]

    def as_lists(self):
        return [list(x) for x in self.paths]


def _vertex_set(g, vertices):
    result = frozenset(vertices)

    for v in result:
        g.check_vertex(v)

    return result


class MMInstance(object):
    """ MM(r, k): connect A to Z with k pairwise (r-1)-disjoint paths.
    """

    def __init__(self, graph, A, Z, r, k):
        if r < 1:
            raise InvalidGraphError('r must be at least 1, got %r' % r)

        if k < 1:
            raise InvalidGraphError('k must be at least 1, got %r' % k)

        self.graph = graph
        self.A = _vertex_set(graph, A)
        self.Z = _vertex_set(graph, Z)
        self.r = r
        self.k = k

    def __repr__(self):
        return '<MMInstance n=%d |A|=%d |Z|=%d r=%d k=%d>' % (self.graph.n, len(self.A), len(self.Z), self.r, self.k)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return (self.graph, self.A, self.Z, self.r, self.k) == (other.graph, other.A, other.Z, other.r, other.k)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result


class MMPInstance(object):
    """ MM_p(r, k): path i must connect terminal s_i to t_i.
    """

    def __init__(self, graph, terminals, r):
        terminals = tuple((s, t) for s, t in terminals)

        if not terminals:
            raise InvalidGraphError('At least one terminal pair is required')

        if r < 1:
            raise InvalidGraphError('r must be at least 1, got %r' % r)

        for s, t in terminals:
            graph.check_vertex(s)
            graph.check_vertex(t)

        self.graph = graph
        self.terminals = terminals
        self.r = r

    @property
    def k(self):
        return len(self.terminals)

    def __repr__(self):
        return '<MMPInstance n=%d terminals=%r r=%d>' % (self.graph.n, list(self.terminals), self.r)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return (self.graph, self.terminals, self.r) == (other.graph, other.terminals, other.r)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result


class Violation(object):
    """ First failed condition of a verification, ``code`` is stable for scripting.
    """

    def __init__(self, code, message, **details):
        self.code = code
        self.message = message
        self.details = details

    def __str__(self):
        return '%s: %s' % (self.code, self.message)

    def __repr__(self):
        return '<Violation %s>' % self


def paths_are_m_disjoint(g, p, q, m):
    """ True iff every path connecting a vertex of `p` to a vertex of `q` has length at least m+1.

        With ``m = 0`` this is plain vertex-disjointness.
    """
    if m < 0:
        raise ValueError('m must not be negative')

    reached = g.ball_of_set(list(p), m)

    return not any(v in reached for v in q)


def _check_disjointness(g, paths, r):
    for (i, p), (j, q) in combinations(enumerate(paths, 1), 2):
        if not paths_are_m_disjoint(g, p, q, r - 1):
            return Violation('not-disjoint', 'paths %d,%d not %d-disjoint' % (i, j, r - 1), paths=(i, j))

    return None


def _check_paths(g, paths, expected):
    if len(paths) != expected:
        return Violation('path-count', 'expected %d paths, got %d' % (expected, len(paths)), count=len(paths))

    for i, p in enumerate(paths, 1):
        defect = p.defect(g)
        if defect is not None:
            code, message = defect
            return Violation(code, 'path %d: %s' % (i, message), path=i)

    return None


def verify_mm_solution(inst, sol):
    """ Check a witness for an MM(r, k) instance.

    :return: None when the witness is feasible, otherwise the first :class:`Violation`
    """
    paths = list(sol)

    violation = _check_paths(inst.graph, paths, inst.k)
    if violation is not None:
        return violation

    for i, p in enumerate(paths, 1):
        if p.start not in inst.A:
            return Violation('bad-start', 'path %d starts at %d which is not in A' % (i, p.start), path=i)

        if p.end not in inst.Z:
            return Violation('bad-end', 'path %d ends at %d which is not in Z' % (i, p.end), path=i)

    return _check_disjointness(inst.graph, paths, inst.r)


def verify_mmp_solution(inst, sol):
    """ Check a witness for an MM_p(r, k) instance: path i runs from s_i to t_i.

    :return: None when the witness is feasible, otherwise the first :class:`Violation`
    """
    paths = list(sol)

    violation = _check_paths(inst.graph, paths, inst.k)
    if violation is not None:
        return violation

    for i, (p, (s, t)) in enumerate(zip(paths, inst.terminals), 1):
        if p.start != s:
            return Violation('bad-start', 'path %d starts at %d instead of %d' % (i, p.start, s), path=i)

        if p.end != t:
            return Violation('bad-end', 'path %d ends at %d instead of %d' % (i, p.end, t), path=i)

    return _check_disjointness(inst.graph, paths, inst.r)
