from ..dp_engine import GENERAL, TW_ONLY, solve_dp_general, solve_dp_tw_only
from ..exceptions import SolverError
from ..local_check import decode_paths, encode_mmp, locality
from ..treewidth import expand_bags, make_nice, min_fill_decomposition
from .base import BaseSolver


class _DpSolver(BaseSolver):
    """ Shared plumbing: one decomposition of the graph serves every terminal choice.
    """

    def __init__(self, inst, guards=None, td=None, **kwargs):
        super(_DpSolver, self).__init__(inst, guards, td, **kwargs)

        if self.td is None:
            self.td = min_fill_decomposition(inst.graph)

        self._nice = None

    @property
    def nice(self):
        if self._nice is None:
            self._nice = self.build_nice()
            self.stats['width'] = self._nice.width

        return self._nice

    def build_nice(self):
        raise NotImplementedError  # pragma: no cover

    def decide(self, lc, deadline):
        raise NotImplementedError  # pragma: no cover

    def solve_mmp(self, mmp, deadline):
        coloring = self.decide(encode_mmp(mmp), deadline)

        if coloring is None:
            return None

        return decode_paths(mmp, coloring)


class GeneralDpSolver(_DpSolver):
    TAG = GENERAL
    NAME = 'Bag expansion DP'

    def __init__(self, inst, guards=None, td=None, prune=True, **kwargs):
        super(GeneralDpSolver, self).__init__(inst, guards, td, **kwargs)

        self.prune = prune

    @classmethod
    def expanded_width(cls, inst, td=None):
        td = td if td is not None else min_fill_decomposition(inst.graph)
        return expand_bags(inst.graph, td, locality(inst.r)).width

    @classmethod
    def detect(cls, inst, guards, td=None):
        return cls.expanded_width(inst, td) <= guards.max_expanded_width

    def build_nice(self):
        return make_nice(expand_bags(self.inst.graph, self.td, locality(self.inst.r)), self.inst.graph)

    def decide(self, lc, deadline):
        return solve_dp_general(lc, self.td, state_budget=self.guards.state_budget, deadline=deadline,
                                prune=self.prune, nice=self.nice)


class TreewidthDpSolver(_DpSolver):
    TAG = TW_ONLY
    NAME = 'Neighbourhood aggregate DP'

    def __init__(self, inst, guards=None, td=None, **kwargs):
        if locality(inst.r) != 1:
            raise SolverError('%s requires r <= 3, got r=%d' % (self.NAME, inst.r))

        super(TreewidthDpSolver, self).__init__(inst, guards, td, **kwargs)

    @classmethod
    def detect(cls, inst, guards, td=None):
        return inst.r <= 3

    def build_nice(self):
        return make_nice(self.td, self.inst.graph)

    def decide(self, lc, deadline):
        return solve_dp_tw_only(lc, self.nice, state_budget=self.guards.state_budget, deadline=deadline)
