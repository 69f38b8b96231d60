""" Dynamic programming over nice tree decompositions for locally checkable colourings.

Two modes share the bottom-up driver in :class:`DpTable`:

* general: bags are expanded by the check radius so every check scope lies inside one bag; states
  are the colours of the bag vertices and each check runs at exactly one node;
* tw-only (``r <= 3``): bags stay as they are and every bag vertex carries a small aggregate of
  what its already-introduced neighbours look like, so states never depend on the degree.
"""
from collections import namedtuple

from .config import check_deadline
from .exceptions import GuardExceeded, InvalidDecomposition
from .graph import Violation
from .local_check import check
from .treewidth import FORGET, INTRODUCE, INTRODUCE_EDGE, JOIN, LEAF, expand_bags, make_nice


GENERAL = 'dp_general'
TW_ONLY = 'dp_tw'

SATURATION = 3

Aggregate = namedtuple('Aggregate', ['count', 'diff', 'seen', 'conflict'])

EMPTY = Aggregate(0, False, None, False)


class DpTable(object):
    """ Per-node state tables of one DP run. ``tables[t]`` maps a state to the child states it was
        built from; ``orders[t]`` lists the bag of node t in ascending order, aligned with the states.
    """

    def __init__(self, nice, mode):
        self.nice = nice
        self.mode = mode
        self.tables = []
        self.orders = []

    @property
    def accepted(self):
        return () in self.tables[self.nice.root]

    @property
    def total_states(self):
        return sum(len(x) for x in self.tables)

    def colors(self, node, state):
        """ Colour assignment of the bag of `node` encoded by `state`.
        """
        if self.mode == TW_ONLY:
            return dict((v, entry[0]) for v, entry in zip(self.orders[node], state))

        return dict(zip(self.orders[node], state))

    def reconstruct(self, n):
        """ Follow back-links from the accepting root state down to the leaves.

        :rtype: tuple
        """
        coloring = [None] * n
        pending = [(self.nice.root, ())]

        while pending:
            node, state = pending.pop()
            coloring_part = self.colors(node, state)

            for v, color in coloring_part.items():
                coloring[v] = color

            links = self.tables[node][state]
            pending.extend(zip(self.nice[node].children, links))

        return tuple(coloring)


def _insert(order, state, v, value):
    pos = order.index(v)
    return state[:pos] + (value, ) + state[pos:]


def _remove(order, state, v):
    pos = order.index(v)
    return state[:pos] + state[pos + 1:]


def _run(table, step, state_budget, deadline):
    for node_id, node in enumerate(table.nice):
        check_deadline(deadline, method=table.mode)

        order = tuple(sorted(node.bag))
        table.orders.append(order)

        states = step(node_id, node, order)
        if len(states) > state_budget:
            raise GuardExceeded('state_budget', state_budget, method=table.mode)

        table.tables.append(states)

    return table


# General mode


def assign_constraints(inst, nice):
    """ Node at which each vertex check runs: the first node (children-first order) whose bag holds
        the whole check ball.

    :rtype: dict
    """
    at = dict((node_id, []) for node_id in range(len(nice)))

    for v, ball in enumerate(inst.balls):
        node_id = next((t for t, node in enumerate(nice) if ball <= node.bag), None)

        if node_id is None:
            raise InvalidDecomposition(Violation('scope-not-covered', 'no bag holds the check ball of vertex %d' % v,
                                                 vertex=v))

        at[node_id].append(v)

    return at


def prepare_general(inst, td):
    """ Expanded nice decomposition used by :func:`solve_dp_general`.
    """
    return make_nice(expand_bags(inst.graph, td, inst.m_star), inst.graph)


def _general_clash(inst, order, state, v, color):
    """ States that can never extend to a valid colouring: a close pair with different indices, or a
        vertex with more same-index bag neighbours than its role allows.
    """
    g = inst.graph

    for u, other in zip(order, state):
        if other is None or u == v:
            continue

        if other.index != color.index and g.dist(u, v) <= inst.r - 1:
            return True

    colors = dict(zip(order, state))
    colors[v] = color

    for u in [v] + [x for x in g.adjacency[v] if x in colors]:
        own = colors[u]
        if own is None or own.index != color.index:
            continue

        same = sum(1 for x in g.adjacency[u] if x in colors and colors[x] is not None and colors[x].index == own.index)
        if same > own.role:
            return True

    return False


def run_general(inst, nice, state_budget=500000, deadline=None, prune=True):
    """ Fill the general-mode tables over an expanded nice decomposition.

    :rtype: DpTable
    """
    constraints = assign_constraints(inst, nice)
    table = DpTable(nice, GENERAL)

    def step(node_id, node, order):
        children = [table.tables[x] for x in node.children]
        child_orders = [table.orders[x] for x in node.children]
        states = {}

        if node.kind == LEAF:
            states[()] = ()

        elif node.kind == INTRODUCE:
            for state in children[0]:
                for color in inst.allowed[node.vertex]:
                    if prune and color is not None and _general_clash(inst, child_orders[0], state, node.vertex, color):
                        continue

                    states[_insert(order, state, node.vertex, color)] = (state, )

        elif node.kind == INTRODUCE_EDGE:
            for state in children[0]:
                states[state] = (state, )

        elif node.kind == FORGET:
            for state in children[0]:
                projected = _remove(child_orders[0], state, node.vertex)
                if projected not in states:
                    states[projected] = (state, )

        elif node.kind == JOIN:
            right = children[1]
            for state in children[0]:
                if state in right:
                    states[state] = (state, state)

        if constraints[node_id]:
            states = dict(
                (state, link) for state, link in states.items()
                if all(check(inst, v, dict(zip(order, state))) for v in constraints[node_id])
            )

        return states

    return _run(table, step, state_budget, deadline)


def solve_dp_general(inst, td, state_budget=500000, deadline=None, prune=True, nice=None):
    """ Decide a colouring instance with the general (bag expansion) DP.

    :param td: valid decomposition of ``inst.graph``, ignored when `nice` is given
    :param nice: precomputed result of :func:`prepare_general`
    :return: a valid colouring or None
    """
    if nice is None:
        nice = prepare_general(inst, td)

    table = run_general(inst, nice, state_budget=state_budget, deadline=deadline, prune=prune)

    if not table.accepted:
        return None

    return table.reconstruct(inst.n)


# tw-only mode


def _observe(agg, index, r):
    """ Record a coloured neighbour of index `index` on the aggregate of an uncoloured vertex.
    """
    if r != 3:
        return agg

    if agg.seen is None:
        return agg._replace(seen=index)

    if agg.seen != index:
        return agg._replace(conflict=True)

    return agg


def _edge_update(color, agg, other, r):
    if other is None:
        return agg

    if color is None:
        return _observe(agg, other.index, r)

    if color.index == other.index:
        return agg._replace(count=min(SATURATION, agg.count + 1))

    return agg._replace(diff=True)


def _merge(left, right, r):
    seen = left.seen if right.seen is None else right.seen
    conflict = left.conflict or right.conflict

    if r == 3 and left.seen is not None and right.seen is not None and left.seen != right.seen:
        conflict = True

    return Aggregate(min(SATURATION, left.count + right.count), left.diff or right.diff, seen, conflict)


def _alive(color, agg, r):
    if agg.conflict:
        return False

    if color is None:
        return True

    if r >= 2 and agg.diff:
        return False

    return agg.count <= color.role


def run_tw_only(inst, nice, state_budget=500000, deadline=None):
    """ Fill the tw-only tables over a nice decomposition of the unexpanded graph.

    :rtype: DpTable
    """
    if inst.m_star != 1:
        raise ValueError('tw-only mode needs check radius 1 (r <= 3), got r=%d' % inst.r)

    r = inst.r
    table = DpTable(nice, TW_ONLY)

    def step(node_id, node, order):
        children = [table.tables[x] for x in node.children]
        child_orders = [table.orders[x] for x in node.children]
        states = {}

        if node.kind == LEAF:
            states[()] = ()

        elif node.kind == INTRODUCE:
            for state in children[0]:
                for color in inst.allowed[node.vertex]:
                    states[_insert(order, state, node.vertex, (color, EMPTY))] = (state, )

        elif node.kind == INTRODUCE_EDGE:
            u, v = node.edge
            pu, pv = order.index(u), order.index(v)

            for state in children[0]:
                (cu, au), (cv, av) = state[pu], state[pv]
                au, av = _edge_update(cu, au, cv, r), _edge_update(cv, av, cu, r)

                if not (_alive(cu, au, r) and _alive(cv, av, r)):
                    continue

                updated = list(state)
                updated[pu], updated[pv] = (cu, au), (cv, av)
                states[tuple(updated)] = (state, )

        elif node.kind == FORGET:
            pos = child_orders[0].index(node.vertex)

            for state in children[0]:
                color, agg = state[pos]

                if color is not None and agg.count != color.role:
                    continue

                projected = state[:pos] + state[pos + 1:]
                if projected not in states:
                    states[projected] = (state, )

        elif node.kind == JOIN:
            by_colors = {}
            for state in children[1]:
                by_colors.setdefault(tuple(x[0] for x in state), []).append(state)

            for state in children[0]:
                for other in by_colors.get(tuple(x[0] for x in state), []):
                    merged = []

                    for (color, left), (_, right) in zip(state, other):
                        agg = _merge(left, right, r)
                        if not _alive(color, agg, r):
                            break

                        merged.append((color, agg))

                    else:
                        merged = tuple(merged)
                        if merged not in states:
                            states[merged] = (state, other)

        return states

    return _run(table, step, state_budget, deadline)


def solve_dp_tw_only(inst, nice, state_budget=500000, deadline=None):
    """ Decide a colouring instance with check radius 1 by the aggregate DP.

    :param nice: nice decomposition of ``inst.graph`` (see :func:`menger.treewidth.make_nice`)
    :return: a valid colouring or None
    """
    table = run_tw_only(inst, nice, state_budget=state_budget, deadline=deadline)

    if not table.accepted:
        return None

    return table.reconstruct(inst.n)
