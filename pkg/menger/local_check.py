""" Locally checkable colouring encoding of MM_p(r, k).

A colour is either ``None`` (uncoloured) or ``Color(index, role)`` where the role is 0 for a
length-0 path, 1 for a path endpoint and 2 for an interior vertex. A colouring is valid when the
check passes at every vertex:

* no two coloured vertices of the ball ``N_m(v)`` carry different indices while lying at distance
  at most ``r - 1`` of each other;
* a vertex coloured ``(i, j)`` has exactly ``j`` neighbours coloured with index ``i``.
"""
import json
from collections import deque, namedtuple
from itertools import combinations

from .exceptions import EncodingConflict, GuardExceeded, InvalidWitness
from .config import check_deadline
from .graph import PathSet, verify_mmp_solution


Color = namedtuple('Color', ['index', 'role'])

SINGLE = 0
ENDPOINT = 1
INTERIOR = 2


def locality(r):
    """ Ball radius the check looks at; never below 1 so neighbour counting stays well defined.
    """
    return max(1, r // 2)


class LocalCheckInstance(object):
    """ Allowed colour lists ``allowed[v]`` plus, per vertex, its check ball and the pairs of that
        ball lying at distance at most ``r - 1`` (the only pairs that may clash).
    """

    def __init__(self, graph, k, r, allowed):
        self.graph = graph
        self.k = k
        self.r = r
        self.m_star = locality(r)
        self.allowed = [tuple(x) for x in allowed]

        self.balls = [graph.closed_ball(v, self.m_star) for v in graph.vertices]
        self.close_pairs = [
            tuple((u, w) for u, w in combinations(sorted(ball), 2) if graph.dist(u, w) <= r - 1)
            for ball in self.balls
        ]

    @property
    def n(self):
        return self.graph.n

    def combinations(self):
        """ Size of the full colouring space, the product of the allowed list sizes.
        """
        total = 1
        for options in self.allowed:
            total *= len(options)

        return total

    def __repr__(self):
        return '<LocalCheckInstance n=%d k=%d r=%d m=%d>' % (self.n, self.k, self.r, self.m_star)


def encode_mmp(inst):
    """ Colour lists for an MM_p instance.

    :raises EncodingConflict: when a vertex is a terminal for two different path indices
    """
    fixed = {}

    for i, (s, t) in enumerate(inst.terminals, 1):
        color = Color(i, SINGLE) if s == t else Color(i, ENDPOINT)

        for v in set([s, t]):
            if v in fixed:
                raise EncodingConflict('vertex %d is a terminal of paths %d and %d' % (v, fixed[v].index, i))

            fixed[v] = color

    free = [None] + [Color(i, INTERIOR) for i in range(1, inst.k + 1)]
    allowed = [[fixed[v]] if v in fixed else free for v in inst.graph.vertices]

    return LocalCheckInstance(inst.graph, inst.k, inst.r, allowed)


def check(inst, v, c):
    """ Evaluate the local check of vertex `v` under colouring `c` (indexable by vertex).
    """
    try:
        for u in inst.balls[v]:
            c[u]
    except (KeyError, IndexError):
        raise InvalidWitness('colouring is not total on the ball of vertex %d' % v)

    for u, w in inst.close_pairs[v]:
        cu, cw = c[u], c[w]

        if cu is not None and cw is not None and cu.index != cw.index:
            return False

    own = c[v]
    if own is None:
        return True

    same = sum(1 for u in inst.graph.adjacency[v] if c[u] is not None and c[u].index == own.index)

    return same == own.role


def is_valid_coloring(inst, c):
    return all(check(inst, v, c) for v in inst.graph.vertices)


def solve_local_brute(inst, budget=10 ** 7, deadline=None):
    """ Exhaustive backtracking over the allowed colours, vertices in id order.

        The check of `v` runs as soon as its whole ball is coloured.

    :return: a valid colouring (tuple indexed by vertex) or None
    """
    if inst.combinations() > budget:
        raise GuardExceeded('local_budget', budget, method='local_brute')

    ready = [[] for _ in inst.graph.vertices]
    for v, ball in enumerate(inst.balls):
        ready[max(ball)].append(v)

    coloring = [None] * inst.n
    steps = [0]

    def extend(x):
        if x == inst.n:
            return True

        for color in inst.allowed[x]:
            steps[0] += 1
            if steps[0] % 4096 == 0:
                check_deadline(deadline, method='local_brute')

            coloring[x] = color

            if all(check(inst, v, coloring) for v in ready[x]) and extend(x + 1):
                return True

        coloring[x] = None
        return False

    if extend(0):
        return tuple(coloring)

    return None


def decode_paths(inst, c):
    """ Recover the witness of an MM_p instance from a valid colouring: path i is the component of
        ``s_i`` among the vertices coloured with index i. Other components (cycles) are dropped.

    :rtype: menger.graph.PathSet
    """
    g = inst.graph
    paths = []

    for i, (s, t) in enumerate(inst.terminals, 1):
        members = set(v for v in g.vertices if c[v] is not None and c[v].index == i)

        if s not in members:
            raise InvalidWitness('terminal %d of path %d is not coloured with its index' % (s, i))

        walk = [s]
        previous = None

        while True:
            step = [u for u in g.adjacency[walk[-1]] if u in members and u != previous]

            if walk[-1] == t and not step:
                break

            if len(step) != 1 or step[0] in walk:
                raise InvalidWitness('vertices of index %d around terminal %d do not form a path to %d' % (i, s, t))

            previous = walk[-1]
            walk.append(step[0])

        paths.append(walk)

    witness = PathSet(paths)

    violation = verify_mmp_solution(inst, witness)
    if violation is not None:
        raise InvalidWitness('decoded witness rejected: %s' % violation)

    return witness


def _induced_shortcut(g, path):
    members = set(path)
    parent = {path[0]: None}
    queue = deque([path[0]])

    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v in members and v not in parent:
                parent[v] = u
                queue.append(v)

    walk = [path[-1]]
    while parent[walk[-1]] is not None:
        walk.append(parent[walk[-1]])

    return list(reversed(walk))


def canonical_coloring(inst, witness):
    """ Colour a feasible MM_p witness: endpoints ``(i, 1)`` (or ``(i, 0)`` for a single vertex),
        interior vertices ``(i, 2)``, everything else uncoloured.

        Each path is first shortened to an induced path inside its own vertex set, since a chord
        would give an interior vertex a third same-index neighbour.

    :rtype: tuple
    """
    coloring = [None] * inst.graph.n

    for i, path in enumerate(witness, 1):
        walk = _induced_shortcut(inst.graph, list(path))

        if len(walk) == 1:
            coloring[walk[0]] = Color(i, SINGLE)
            continue

        for v in walk[1:-1]:
            coloring[v] = Color(i, INTERIOR)

        coloring[walk[0]] = coloring[walk[-1]] = Color(i, ENDPOINT)

    return tuple(coloring)


def _color_json(color):
    return 'bottom' if color is None else [color.index, color.role]


def dump_json(inst):
    """ Debug dump of an encoding (1-indexed vertices). Not a stable format.
    """
    return json.dumps({
        'k': inst.k,
        'r': inst.r,
        'm_star': inst.m_star,
        'n': inst.n,
        'allowed': dict((str(v + 1), [_color_json(x) for x in options]) for v, options in enumerate(inst.allowed)),
    }, indent=2, sort_keys=True) + '\n'
