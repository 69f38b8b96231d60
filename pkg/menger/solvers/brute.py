import time

from ..config import Guards, check_deadline
from ..exceptions import GuardExceeded
from ..graph import PathSet
from .base import BaseSolver, SolveOutcome


class _PathSearch(object):
    """ Depth-first search over simple s_i-t_i paths in index order.

        Fixing path i removes its (r-1)-ball from the vertices available to later paths. Path i may
        also never enter the (r-1)-ball of a later terminal, and the last path is a plain BFS.
    """

    def __init__(self, mmp, node_budget, deadline):
        self.g = mmp.graph
        self.terminals = mmp.terminals
        self.reach = mmp.r - 1
        self.node_budget = node_budget
        self.deadline = deadline
        self.nodes = 0

        self.blocked = []
        for i in range(mmp.k):
            later = [v for pair in self.terminals[i + 1:] for v in pair]
            self.blocked.append(self.g.ball_of_set(later, self.reach) if later else set())

    def tick(self):
        self.nodes += 1

        if self.nodes > self.node_budget:
            raise GuardExceeded('node_budget', self.node_budget, method='brute')

        if self.nodes % 1024 == 0:
            check_deadline(self.deadline, method='brute')

    def run(self):
        return self.place(0, frozenset(self.g.vertices), [])

    def place(self, i, available, fixed):
        s, t = self.terminals[i]
        allowed = available - self.blocked[i]

        if s not in allowed or t not in allowed:
            return None

        if i == len(self.terminals) - 1:
            self.tick()
            path = self.g.shortest_path(s, t, allowed)

            return fixed + [path] if path is not None else None

        for path in self.simple_paths(s, t, allowed):
            rest = available - self.g.ball_of_set(path, self.reach)
            found = self.place(i + 1, rest, fixed + [path])

            if found is not None:
                return found

        return None

    def simple_paths(self, s, t, allowed):
        if s == t:
            self.tick()
            yield [s]
            return

        path = [s]
        on_path = set(path)
        stack = [iter(self.g.adjacency[s])]

        while stack:
            v = next((x for x in stack[-1] if x in allowed and x not in on_path), None)

            if v is None:
                stack.pop()
                on_path.discard(path.pop())
                continue

            self.tick()

            if v == t:
                yield path + [t]
                continue

            remaining = allowed - on_path
            if self.g.shortest_path(v, t, remaining) is None:
                continue

            path.append(v)
            on_path.add(v)
            stack.append(iter(self.g.adjacency[v]))


def solve_mmp_brute(inst, guards=None, deadline=None):
    """ Exact decision of an MM_p instance by exhaustive path search.

    :rtype: menger.solvers.base.SolveOutcome
    """
    guards = guards if guards is not None else Guards()

    if inst.graph.n > guards.max_vertices:
        raise GuardExceeded('max_vertices', guards.max_vertices, method='brute')

    if deadline is None:
        deadline = guards.deadline()

    started = time.monotonic()
    search = _PathSearch(inst, guards.node_budget, deadline)
    paths = search.run()

    stats = {'method': 'brute', 'nodes': search.nodes, 'elapsed': time.monotonic() - started}

    if paths is None:
        return SolveOutcome(False, None, stats)

    return SolveOutcome(True, PathSet(paths), stats)


class BruteForceSolver(BaseSolver):
    TAG = 'brute'
    NAME = 'Brute force'

    def __init__(self, inst, guards=None, td=None, **kwargs):
        super(BruteForceSolver, self).__init__(inst, guards, td, **kwargs)

        self.stats['nodes'] = 0

    @classmethod
    def detect(cls, inst, guards, td=None):
        return True

    def solve_mmp(self, mmp, deadline):
        outcome = solve_mmp_brute(mmp, self.guards, deadline=deadline)
        self.stats['nodes'] += outcome.stats['nodes']

        return outcome.witness


def solve_mm_brute(inst, guards=None):
    """ Exact decision of an MM instance: brute force over every terminal choice.

    :rtype: menger.solvers.base.SolveOutcome
    """
    return BruteForceSolver(inst, guards=guards).solve()
