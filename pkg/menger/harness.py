""" Roundtrip and cross-validation sweeps tying the solvers, the reduction and the SAT oracle together.

Reports are plain dicts (see :func:`dump_report`) and carry no timings, so a fixed seed always
yields byte-identical output.
"""
import json
import random

from .cnf import all_formulas, evaluate, random_formula, sat_brute_force
from .config import Guards
from .exceptions import EncodingConflict, GuardExceeded, InvalidWitness
from .graph import Graph, MMInstance, verify_mm_solution
from .local_check import encode_mmp, solve_local_brute
from .reduction import MIN_R, build_reduction, extract_assignment
from .solvers import enumerate_terminal_choices, solve_mm, solve_mmp_brute


def random_graph(rng, n, p):
    """ G(n, p) graph drawn from `rng`.
    """
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_mm_instance(rng, max_n=12, probabilities=(0.2, 0.4), max_r=5, max_k=3):
    n = rng.randint(1, max_n)
    graph = random_graph(rng, n, rng.choice(probabilities))

    A = rng.sample(range(n), rng.randint(1, n))
    Z = rng.sample(range(n), rng.randint(1, n))

    return MMInstance(graph, A, Z, r=rng.randint(1, max_r), k=rng.randint(1, max_k))


def ladder_graph(length):
    """ 2 x `length` grid: rungs ``(2i, 2i+1)``, rails ``(2i, 2i+2)`` and ``(2i+1, 2i+3)``.
    """
    edges = [(2 * i, 2 * i + 1) for i in range(length)]

    for i in range(length - 1):
        edges.extend([(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)])

    return Graph(2 * length, edges)


def _formula_corpus(rng, nvars, nclauses, trials, exhaustive):
    if exhaustive:
        for phi in all_formulas(nvars, nclauses):
            yield phi

    for _ in range(trials):
        yield random_formula(rng, rng.randint(1, nvars), rng.randint(1, nclauses))


def run_roundtrip(nvars, nclauses, rs=(3, ), variants=('deg4', ), methods=('auto', ), trials=0, seed=0,
                  exhaustive=False, guards=None):
    """ Compare the SAT oracle with the solvers on reductions of a formula corpus.

        The corpus is every formula of exactly the given size (when `exhaustive`) followed by
        `trials` random formulas of at most that size.

    :rtype: dict
    """
    guards = guards if guards is not None else Guards()
    rng = random.Random(seed)

    report = {
        'seed': seed,
        'formulas': 0,
        'checks': 0,
        'agreements': 0,
        'disagreements': [],
        'extraction_failures': [],
        'guard_trips': [],
    }

    for phi in _formula_corpus(rng, nvars, nclauses, trials, exhaustive):
        report['formulas'] += 1
        satisfiable = sat_brute_force(phi, max_vars=guards.sat_max_vars) is not None

        for r in rs:
            for variant in variants:
                if r < MIN_R[variant]:
                    continue

                inst, cert = build_reduction(phi, r, 2, variant)

                for method in methods:
                    case = {'formula': [list(x) for x in phi.clauses], 'n': phi.num_vars, 'r': r,
                            'variant': variant, 'method': method}
                    report['checks'] += 1

                    try:
                        outcome = solve_mm(inst, method=method, guards=guards)

                    except GuardExceeded as e:
                        report['guard_trips'].append(dict(case, guard=e.guard))
                        continue

                    if outcome.answer != satisfiable:
                        report['disagreements'].append(dict(case, sat=satisfiable, answer=outcome.answer))
                        continue

                    report['agreements'] += 1

                    if outcome.answer:
                        try:
                            assignment = extract_assignment(cert, outcome.witness)
                            ok = evaluate(phi, assignment)
                        except InvalidWitness as e:
                            ok, case['error'] = False, str(e)

                        if not ok:
                            report['extraction_failures'].append(case)

    return report


def _answer(inst, method, guards):
    try:
        return solve_mm(inst, method=method, guards=guards)

    except GuardExceeded:
        return None


def _local_disagreements(inst, guards):
    found = 0

    for mmp in enumerate_terminal_choices(inst):
        try:
            lc = encode_mmp(mmp)
        except EncodingConflict:
            continue

        if lc.combinations() > guards.local_budget:
            continue

        try:
            brute = solve_mmp_brute(mmp, guards).answer
        except GuardExceeded:
            continue

        if brute != (solve_local_brute(lc, guards.local_budget) is not None):
            found += 1

    return found


def run_crossvalidation(trials=500, seed=0, guards=None, local=True, **instance_kwargs):
    """ Compare brute force, both DP modes and (per terminal choice) the colouring brute force on
        seeded random instances. Every yes witness is verified.

    :rtype: dict
    """
    guards = guards if guards is not None else Guards()
    rng = random.Random(seed)

    report = {
        'seed': seed,
        'trials': trials,
        'compared': 0,
        'skipped': 0,
        'disagreements': [],
        'invalid_witnesses': [],
    }

    for trial in range(trials):
        inst = random_mm_instance(rng, **instance_kwargs)
        methods = ['brute', 'dp_general'] + (['dp_tw'] if inst.r <= 3 else [])

        outcomes = dict((method, _answer(inst, method, guards)) for method in methods)
        if any(x is None for x in outcomes.values()):
            report['skipped'] += 1
            continue

        report['compared'] += 1
        answers = dict((method, x.answer) for method, x in outcomes.items())
        case = {'trial': trial, 'n': inst.graph.n, 'r': inst.r, 'k': inst.k}

        if len(set(answers.values())) != 1:
            report['disagreements'].append(dict(case, answers=answers))

        for method, outcome in sorted(outcomes.items()):
            if outcome.answer and verify_mm_solution(inst, outcome.witness) is not None:
                report['invalid_witnesses'].append(dict(case, method=method))

        if local and _local_disagreements(inst, guards):
            report['disagreements'].append(dict(case, answers=answers, local=True))

    return report


def dump_report(report):
    return json.dumps(report, indent=2, sort_keys=True) + '\n'


def report_ok(report):
    return not (report.get('disagreements') or report.get('extraction_failures') or report.get('invalid_witnesses'))
