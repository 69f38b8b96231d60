""" 3-CNF formulas, DIMACS parsing and a brute-force satisfiability oracle.
"""
from itertools import combinations_with_replacement, product

from .exceptions import GuardExceeded, ParseError


class CnfFormula(object):
    """ Conjunction of clauses with exactly three literal slots each (duplicates allowed).

        Literals are signed variable indices: ``3`` is x3, ``-3`` is the negation of x3.
    """

    def __init__(self, num_vars, clauses=()):
        if num_vars < 0:
            raise ValueError('Variable count must not be negative')

        self.num_vars = num_vars
        self.clauses = tuple(tuple(clause) for clause in clauses)

        for j, clause in enumerate(self.clauses, 1):
            if len(clause) != 3:
                raise ValueError('Clause %d has %d literals, expected 3' % (j, len(clause)))

            for literal in clause:
                if literal == 0 or abs(literal) > num_vars:
                    raise ValueError('Clause %d references variable %d outside 1..%d' % (j, abs(literal), num_vars))

    @property
    def num_clauses(self):
        return len(self.clauses)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.num_vars == other.num_vars and self.clauses == other.clauses
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.num_vars, self.clauses))

    def __repr__(self):
        return 'CnfFormula(%d, %r)' % (self.num_vars, [list(x) for x in self.clauses])

    def occurrences(self, literal):
        """ Number of slots holding `literal` (the alpha counts of the gadget construction).
        """
        return sum(clause.count(literal) for clause in self.clauses)


class Assignment(object):
    """ Total map variable -> {0, 1}.
    """

    def __init__(self, values):
        if not isinstance(values, dict):
            values = dict(enumerate(values, 1))

        for var, value in values.items():
            if value not in (0, 1):
                raise ValueError('Variable %d must be 0 or 1, got %r' % (var, value))

        self.values = dict((var, int(value)) for var, value in values.items())

    def __getitem__(self, var):
        return self.values[var]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.values == other.values
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'Assignment(%r)' % (self.as_tuple(), )

    def as_tuple(self):
        return tuple(self.values[var] for var in sorted(self.values))

    def literal_value(self, literal):
        value = self.values[abs(literal)]
        return value if literal > 0 else 1 - value

    def to_dimacs(self):
        """ DIMACS-style model line, e.g. ``v 1 -2 -3 0``.
        """
        literals = [str(var if self.values[var] else -var) for var in sorted(self.values)]
        return ' '.join(['v'] + literals + ['0'])


def parse_dimacs(text):
    """ Parse DIMACS CNF, padding short clauses by repeating their last literal.

    :param text: contents of a ``.cnf`` file
    :rtype: CnfFormula
    """
    header = None
    clauses = []
    pending = []
    pending_line = None

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()

        if not line or line.startswith('c'):
            continue

        if line.startswith('%'):
            # SATLIB end-of-data marker
            break

        if line.startswith('p'):
            parts = line.split()

            if header is not None:
                raise ParseError('duplicate problem line', line_no)

            if len(parts) != 4 or parts[1] != 'cnf':
                raise ParseError('malformed header %r, expected "p cnf <vars> <clauses>"' % line, line_no)

            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError('non-integer header values in %r' % line, line_no)

            if header[0] < 0 or header[1] < 0:
                raise ParseError('negative header values in %r' % line, line_no)

            continue

        if header is None:
            raise ParseError('clause data before the "p cnf" header', line_no)

        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise ParseError('invalid literal %r' % token, line_no)

            if literal == 0:
                clauses.append(_pad_clause(pending, pending_line or line_no))
                pending = []
                pending_line = None
                continue

            if abs(literal) > header[0]:
                raise ParseError('variable %d out of range 1..%d' % (abs(literal), header[0]), line_no)

            if not pending:
                pending_line = line_no

            pending.append(literal)

            if len(pending) > 3:
                raise ParseError('clause has more than 3 literals', pending_line)

    if header is None:
        raise ParseError('missing "p cnf" header')

    if pending:
        # A final clause without the terminating 0
        clauses.append(_pad_clause(pending, pending_line))

    if len(clauses) != header[1]:
        raise ParseError('header declares %d clauses, found %d' % (header[1], len(clauses)))

    return CnfFormula(header[0], clauses)


def _pad_clause(literals, line_no):
    if not literals:
        raise ParseError('empty clause', line_no)

    return tuple(literals) + (literals[-1], ) * (3 - len(literals))


def write_dimacs(phi):
    """ Canonical DIMACS text: header followed by one clause per line.
    """
    lines = ['p cnf %d %d' % (phi.num_vars, phi.num_clauses)]
    lines.extend(' '.join(str(x) for x in clause) + ' 0' for clause in phi.clauses)

    return '\n'.join(lines) + '\n'


def evaluate(phi, a):
    """ True iff every clause has a literal that evaluates to 1 under `a`.
    """
    missing = [var for var in range(1, phi.num_vars + 1) if var not in a.values]
    if missing:
        raise ValueError('Assignment is partial, missing variables %s' % ', '.join(str(x) for x in missing))

    return all(any(a.literal_value(literal) for literal in clause) for clause in phi.clauses)


def sat_brute_force(phi, max_vars=30):
    """ Exhaustive satisfiability oracle.

    :return: the first satisfying :class:`Assignment` in lexicographic order, or None
    """
    if phi.num_vars > max_vars:
        raise GuardExceeded('sat variable guard', max_vars, method='sat_brute_force')

    for bits in product((0, 1), repeat=phi.num_vars):
        assignment = Assignment(bits)

        if evaluate(phi, assignment):
            return assignment

    return None


def all_literals(num_vars):
    return [sign * var for var in range(1, num_vars + 1) for sign in (1, -1)]


def all_clauses(num_vars):
    """ Every clause over `num_vars` variables, up to literal-slot ordering.
    """
    return list(combinations_with_replacement(all_literals(num_vars), 3))


def all_formulas(num_vars, num_clauses):
    """ Every formula with the given dimensions, up to literal-slot and clause ordering.
    """
    for clauses in combinations_with_replacement(all_clauses(num_vars), num_clauses):
        yield CnfFormula(num_vars, clauses)


def random_formula(rng, num_vars, num_clauses):
    """ Uniform random 3-CNF formula drawn from `rng` (a :class:`random.Random`).
    """
    literals = all_literals(num_vars)

    return CnfFormula(num_vars, [tuple(rng.choice(literals) for _ in range(3)) for _ in range(num_clauses)])
