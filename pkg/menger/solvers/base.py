import time
from itertools import combinations, permutations

from ..config import Guards
from ..exceptions import EncodingConflict, InvalidWitness
from ..graph import MMPInstance, verify_mm_solution, verify_mmp_solution


class SolveOutcome(object):
    """ Answer of a solver. `witness` is a PathSet exactly when the answer is yes.
    """

    def __init__(self, answer, witness=None, stats=None):
        self.answer = bool(answer)
        self.witness = witness
        self.stats = stats or {}

        if self.answer != (witness is not None):
            raise ValueError('A witness must be present exactly for yes answers')

    def __bool__(self):
        return self.answer

    def __repr__(self):
        return '<SolveOutcome %s %s>' % ('yes' if self.answer else 'no', self.stats.get('method', ''))


def enumerate_terminal_choices(inst):
    """ MM_p instances whose yes-answers together decide the MM instance.

        Sources are taken as a sorted k-subset of A (path indices are interchangeable), sinks as an
        ordered k-tuple of Z. Choices with two terminals of different indices closer than r are
        skipped since no solution can use them.
    """
    g, k, r = inst.graph, inst.k, inst.r

    for sources in combinations(sorted(inst.A), k):
        for sinks in permutations(sorted(inst.Z), k):
            terminals = list(zip(sources, sinks))
            ends = [(i, v) for i, pair in enumerate(terminals) for v in pair]

            if any(i != j and g.dist(u, v) <= r - 1 for (i, u), (j, v) in combinations(ends, 2)):
                continue

            yield MMPInstance(g, terminals, r)


class BaseSolver(object):
    """ Core solver api: decide an MM instance by deciding its terminal choices one by one.
    """

    TAG = 'base'
    NAME = 'Base solver'

    def __init__(self, inst, guards=None, td=None, **kwargs):
        self.inst = inst
        self.guards = guards if guards is not None else Guards()
        self.td = td
        self.stats = {'method': self.TAG, 'choices': 0}

    @classmethod
    def detect(cls, inst, guards, td=None):
        """ Whether ``auto`` should pick this solver for `inst`.

        :rtype: bool
        """
        raise NotImplementedError  # pragma: no cover

    def solve_mmp(self, mmp, deadline):
        """ Decide one terminal choice.

        :return: a feasible PathSet or None
        """
        raise NotImplementedError  # pragma: no cover

    def solve(self):
        """ Decide the MM instance.

        :rtype: SolveOutcome
        """
        started = time.monotonic()
        deadline = self.guards.deadline()

        for mmp in enumerate_terminal_choices(self.inst):
            self.stats['choices'] += 1

            try:
                witness = self.solve_mmp(mmp, deadline)

            except EncodingConflict:
                continue

            if witness is None:
                continue

            violation = verify_mmp_solution(mmp, witness) or verify_mm_solution(self.inst, witness)
            if violation is not None:
                raise InvalidWitness('%s produced an infeasible witness: %s' % (self.NAME, violation))

            self.stats['elapsed'] = time.monotonic() - started
            return SolveOutcome(True, witness, dict(self.stats))

        self.stats['elapsed'] = time.monotonic() - started
        return SolveOutcome(False, None, dict(self.stats))
