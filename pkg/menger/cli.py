""" ``menger`` command line.

Exit statuses: 0 yes/ok, 1 no/violation, 2 input error, 3 guard exceeded.
"""
import argparse
import sys

from fabric import colors

from . import format_version, menger_name, menger_version
from .cnf import parse_dimacs
from .config import METHODS, VARIANTS, Guards, RunConfig
from .exceptions import GuardExceeded, MengerError
from .formats import parse_instance, parse_solution, read_text, write_instance, write_solution, write_text
from .graph import MMPInstance, verify_mm_solution, verify_mmp_solution
from .harness import dump_report, report_ok, run_crossvalidation, run_roundtrip
from .reduction import ReductionCertificate, build_reduction, extract_assignment
from .solvers import solve_mm, solve_mmp
from .treewidth import parse_td, validate_td


EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def say(message):
    sys.stderr.write(message + '\n')


def emit(text, path=None):
    """ Machine-readable output goes to `path`, or to stdout uncoloured.
    """
    if path:
        write_text(path, text)

    else:
        sys.stdout.write(text)


def cmd_reduce(config):
    phi = parse_dimacs(read_text(config.path('cnf')))
    inst, cert = build_reduction(phi, config.r, config.k, config.variant)

    emit(write_instance(inst), config.path('out'))

    if config.path('cert'):
        write_text(config.path('cert'), cert.to_json())

    say(colors.green('Reduced %d variables, %d clauses to %d vertices, %d edges (r=%d, k=%d, %s)' % (
        phi.num_vars, phi.num_clauses, inst.graph.n, inst.graph.num_edges, inst.r, inst.k, config.variant,
    )))

    return EXIT_OK


def cmd_solve(config):
    inst = parse_instance(read_text(config.path('instance')))
    td = None

    if config.path('td'):
        td = parse_td(read_text(config.path('td')))
        violation = validate_td(inst.graph, td)

        if violation is not None:
            say(colors.red('Invalid tree decomposition: %s' % violation))
            return EXIT_INPUT

    solve = solve_mmp if isinstance(inst, MMPInstance) else solve_mm
    outcome = solve(inst, method=config.method, guards=config.guards, td=td)

    emit(write_solution(outcome.answer, outcome.witness), config.path('out'))

    method = outcome.stats.get('method', config.method)
    if outcome.answer:
        say(colors.green('yes (%s)' % method))
        return EXIT_OK

    say(colors.red('no (%s)' % method))
    return EXIT_NO


def cmd_verify(config):
    inst = parse_instance(read_text(config.path('instance')))
    answer, witness = parse_solution(read_text(config.path('solution')))

    if not answer:
        say(colors.yellow('Solution answers "no", there is no witness to verify'))
        return EXIT_OK

    verify = verify_mmp_solution if isinstance(inst, MMPInstance) else verify_mm_solution
    violation = verify(inst, witness)

    if violation is not None:
        say(colors.red('violation: %s' % violation))
        return EXIT_NO

    say(colors.green('ok'))
    return EXIT_OK


def cmd_extract(config):
    cert = ReductionCertificate.from_json(read_text(config.path('cert')))
    answer, witness = parse_solution(read_text(config.path('solution')))

    if not answer:
        say(colors.red('Solution answers "no", there is no assignment to extract'))
        return EXIT_INPUT

    emit(extract_assignment(cert, witness).to_dimacs() + '\n', config.path('out'))
    return EXIT_OK


def cmd_roundtrip(config, args):
    report = run_roundtrip(args.nvars, args.nclauses, rs=args.r, variants=args.variants, methods=args.methods,
                           trials=config.trials, seed=config.seed, exhaustive=args.exhaustive, guards=config.guards)

    emit(dump_report(report), config.path('out'))

    if not report_ok(report):
        say(colors.red('%d disagreements, %d extraction failures in %d checks' % (
            len(report['disagreements']), len(report['extraction_failures']), report['checks'],
        )))
        return EXIT_NO

    if report['guard_trips']:
        say(colors.yellow('%d checks skipped by guards' % len(report['guard_trips'])))

    say(colors.green('%d formulas, %d checks, no disagreements' % (report['formulas'], report['checks'])))
    return EXIT_OK


def cmd_crossval(config, args):
    report = run_crossvalidation(trials=config.trials, seed=config.seed, guards=config.guards, local=args.local)

    emit(dump_report(report), config.path('out'))

    if not report_ok(report):
        say(colors.red('%d disagreements, %d invalid witnesses' % (
            len(report['disagreements']), len(report['invalid_witnesses']),
        )))
        return EXIT_NO

    say(colors.green('%d instances compared (%d skipped by guards), no disagreements' % (
        report['compared'], report['skipped'],
    )))
    return EXIT_OK


def _add_guards(parser):
    group = parser.add_argument_group('guards', 'Resource limits (also read from MENGER_<NAME> variables)')

    group.add_argument('--node-budget', type=int, dest='node_budget')
    group.add_argument('--state-budget', type=int, dest='state_budget')
    group.add_argument('--local-budget', type=int, dest='local_budget')
    group.add_argument('--max-vertices', type=int, dest='max_vertices')
    group.add_argument('--max-expanded-width', type=int, dest='max_expanded_width')
    group.add_argument('--time-limit', type=float, dest='time_limit', help='Seconds per solve')


def build_parser():
    parser = argparse.ArgumentParser(prog='menger', description='Metric Menger solvers and hardness reductions.')
    parser.add_argument('--version', action='version',
                        version='%s %s (format %s)' % (menger_name, menger_version, format_version))

    commands = parser.add_subparsers(dest='subcommand')
    commands.required = True

    reduce_cmd = commands.add_parser('reduce', help='Reduce a 3-CNF formula to an MM(r, k) instance')
    reduce_cmd.add_argument('cnf', help='DIMACS CNF file')
    reduce_cmd.add_argument('-r', type=int, required=True)
    reduce_cmd.add_argument('-k', type=int, default=2)
    reduce_cmd.add_argument('--variant', choices=VARIANTS, default='deg4')
    reduce_cmd.add_argument('-o', '--out', help='Instance file (default: stdout)')
    reduce_cmd.add_argument('--cert', help='Certificate JSON file')

    solve_cmd = commands.add_parser('solve', help='Decide an instance')
    solve_cmd.add_argument('instance')
    solve_cmd.add_argument('--method', choices=METHODS, default='auto')
    solve_cmd.add_argument('--td', help='PACE .td decomposition of the instance graph (default: min-fill)')
    solve_cmd.add_argument('-o', '--out', help='Solution file (default: stdout)')

    verify_cmd = commands.add_parser('verify', help='Check a solution against an instance')
    verify_cmd.add_argument('instance')
    verify_cmd.add_argument('solution')

    extract_cmd = commands.add_parser('extract', help='Read a satisfying assignment off a reduction solution')
    extract_cmd.add_argument('cert')
    extract_cmd.add_argument('solution')
    extract_cmd.add_argument('-o', '--out')

    roundtrip_cmd = commands.add_parser('roundtrip', help='SAT oracle vs solvers on reduced formulas')
    roundtrip_cmd.add_argument('--nvars', type=int, default=2)
    roundtrip_cmd.add_argument('--nclauses', type=int, default=2)
    roundtrip_cmd.add_argument('-r', type=int, nargs='+', default=[3])
    roundtrip_cmd.add_argument('--variants', choices=VARIANTS, nargs='+', default=['deg4'])
    roundtrip_cmd.add_argument('--methods', choices=METHODS, nargs='+', default=['auto'])
    roundtrip_cmd.add_argument('--trials', type=int, default=0)
    roundtrip_cmd.add_argument('--seed', type=int, default=0)
    roundtrip_cmd.add_argument('--exhaustive', action='store_true', help='Include every formula of exactly this size')
    roundtrip_cmd.add_argument('-o', '--out', help='Report JSON file (default: stdout)')

    crossval_cmd = commands.add_parser('crossval', help='Compare all solvers on seeded random instances')
    crossval_cmd.add_argument('--trials', type=int, default=500)
    crossval_cmd.add_argument('--seed', type=int, default=0)
    crossval_cmd.add_argument('--no-local', dest='local', action='store_false',
                              help='Skip the colouring brute force comparison')
    crossval_cmd.add_argument('-o', '--out', help='Report JSON file (default: stdout)')

    for sub in (reduce_cmd, solve_cmd, roundtrip_cmd, crossval_cmd):
        _add_guards(sub)

    return parser


COMMANDS = {
    'reduce': cmd_reduce,
    'solve': cmd_solve,
    'verify': cmd_verify,
    'extract': cmd_extract,
}

SWEEPS = {
    'roundtrip': cmd_roundtrip,
    'crossval': cmd_crossval,
}

PATH_ARGS = ('cnf', 'out', 'cert', 'instance', 'td', 'solution')


def make_config(args):
    guards = Guards(**dict(
        (name, getattr(args, name, None))
        for name in ('node_budget', 'state_budget', 'local_budget', 'max_vertices', 'max_expanded_width', 'time_limit')
    ))

    paths = dict((name, getattr(args, name)) for name in PATH_ARGS if getattr(args, name, None) is not None)

    return RunConfig(
        args.subcommand,
        r=args.r if args.subcommand == 'reduce' else None,
        k=getattr(args, 'k', None),
        variant=getattr(args, 'variant', 'deg4'),
        method=getattr(args, 'method', 'auto'),
        seed=getattr(args, 'seed', 0),
        trials=getattr(args, 'trials', 0),
        guards=guards,
        **paths
    )


def main(argv=None):
    args = build_parser().parse_args(argv)

    try:
        config = make_config(args)

        if args.subcommand in SWEEPS:
            return SWEEPS[args.subcommand](config, args)

        return COMMANDS[args.subcommand](config)

    except GuardExceeded as e:
        say(colors.yellow('Guard exceeded: %s' % e))
        return EXIT_GUARD

    except (MengerError, IOError) as e:
        say(colors.red(str(e)))
        return EXIT_INPUT


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
