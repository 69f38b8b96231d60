from .manager import SolverProxy as Solver, solve_mm, solve_mmp
from .base import BaseSolver, SolveOutcome, enumerate_terminal_choices
from .brute import solve_mm_brute, solve_mmp_brute


__all__ = [
    'Solver',
    'BaseSolver',
    'SolveOutcome',
    'enumerate_terminal_choices',
    'solve_mm',
    'solve_mmp',
    'solve_mm_brute',
    'solve_mmp_brute',
]
