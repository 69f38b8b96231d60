from ..config import METHODS, Guards
from ..exceptions import EncodingConflict, GuardExceeded, InvalidWitness, SolverError
from ..graph import verify_mmp_solution
from .base import SolveOutcome
from .brute import BruteForceSolver
from .dp import GeneralDpSolver, TreewidthDpSolver


class SolverProxy(object):
    SOLVER_HANDLERS = [
        TreewidthDpSolver,
        GeneralDpSolver,
        BruteForceSolver,
    ]

    def __init__(self, inst, method='auto', **init_kwargs):
        self._data = {
            'inst': inst,
            'method': method,
            'init_kwargs': init_kwargs,
        }

        self._real = 'SolverProxy'

    @classmethod
    def init(cls, inst, method='auto', **init_kwargs):
        """ Pick the solver `method` names (or detect one for ``auto``) and initialize
            the handler to use internally.

            :param inst: MM instance to decide
            :rtype: menger.solvers.base.BaseSolver
        """

        return SolverProxy(inst=inst, method=method, **init_kwargs)

    @classmethod
    def detect(cls, inst, method='auto', guards=None, td=None, **init_kwargs):
        if method not in METHODS:
            raise SolverError('Unknown method %r (expected one of %s)' % (method, ', '.join(METHODS)))

        guards = guards if guards is not None else Guards()

        for handler_cls in cls.SOLVER_HANDLERS:
            if method == handler_cls.TAG:
                return handler_cls

            # Found a match
            if method == 'auto' and handler_cls.detect(inst, guards, td=td):
                return handler_cls

        handlers = ', '.join([x.TAG for x in cls.SOLVER_HANDLERS])
        raise SolverError('No suitable solver detected (tried %s)' % handlers)

    # ============
    # Proxy logic
    # ============

    def __getattribute__(self, name):
        real = object.__getattribute__(self, "_real")

        if real == 'SolverProxy':
            data = object.__getattribute__(self, "_data")

            cls = SolverProxy.detect(inst=data['inst'], method=data['method'], **data['init_kwargs'])
            real = cls(inst=data['inst'], **data['init_kwargs'])

            self._real = real

        if name == '_real':
            return real

        return getattr(real, name)

    def __str__(self):  # pragma: no cover
        return str(object.__getattribute__(self, "_real"))

    def __repr__(self):  # pragma: no cover
        return repr(object.__getattribute__(self, "_real"))


def solve_mmp(mmp, method='auto', guards=None, td=None, **init_kwargs):
    """ Decide a single terminal-pair instance with the given method.

    :rtype: menger.solvers.base.SolveOutcome
    """
    solver = SolverProxy.init(mmp, method=method, guards=guards, td=td, **init_kwargs)

    try:
        witness = solver.solve_mmp(mmp, solver.guards.deadline())

    except EncodingConflict:
        witness = None

    if witness is not None and verify_mmp_solution(mmp, witness) is not None:
        raise InvalidWitness('%s produced an infeasible witness' % solver.NAME)

    return SolveOutcome(witness is not None, witness, dict(solver.stats))


def solve_mm(inst, method='auto', guards=None, td=None, **init_kwargs):
    """ Decide an MM instance with the given method (``auto``, ``brute``, ``dp_general`` or ``dp_tw``).

        Tripped guards propagate as :class:`menger.exceptions.GuardExceeded` naming the method.

    :rtype: menger.solvers.base.SolveOutcome
    """
    solver = SolverProxy.init(inst, method=method, guards=guards, td=td, **init_kwargs)

    try:
        return solver.solve()

    except GuardExceeded as e:
        if e.method is None:
            e.method = solver.TAG

        raise
