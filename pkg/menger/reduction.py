""" Gadget reduction from 3-CNF satisfiability to MM(r, k).

The graph consists of two halves joined by connector paths:

* the variable half: a tail ``a_1..a_3m`` leading into a chain ``v_0 .. v_n`` where ``v_{i-1}`` and
  ``v_i`` are joined by the two variable paths ``P_{i,0}`` and ``P_{i,1}``;
* the clause half: a tail ``b_1..b_3m`` leading into clause gadgets ``u_j, L_{j,1..3}, u_j'``;
* one exclusion path of ``r - 1`` edges per literal occurrence, joining a vertex of ``P_{i,0}``
  (for the literal ``-x_i``) or ``P_{i,1}`` (for ``x_i``) to the matching literal vertex;
* dummy paths of ``r - 1`` edges from ``a_i`` and from ``b_i`` to the hub ``c_i`` of the i-th
  exclusion path.

``A = {a_1, b_1}``, ``Z = {v_n, u_m'}``. Variant ``deg3`` (``r >= 4``) splits every ``v_i`` into
``w_i-``/``w_i+``, lets the two dummy routes of each hub share their last edge and routes clause
gadgets through two helper vertices, so every vertex has degree at most three.
"""
import json

from .cnf import Assignment
from .exceptions import InvalidWitness, ReductionError
from .graph import Graph, MMInstance, PathSet


DEG4 = 'deg4'
DEG3 = 'deg3'

MIN_R = {
    DEG4: 3,
    DEG3: 4,
}


class GraphBuilder(object):
    """ Incremental graph construction that remembers the role of every vertex.
    """

    def __init__(self):
        self.roles = []
        self.edges = []

    def vertex(self, role):
        self.roles.append(role)
        return len(self.roles) - 1

    def edge(self, u, v):
        self.edges.append((u, v))

    def chain(self, vertices):
        for u, v in zip(vertices, vertices[1:]):
            self.edge(u, v)

    def path(self, start, end, inner, role):
        """ Join `start` to `end` through `inner` fresh vertices, returning the fresh vertices.
        """
        fresh = [self.vertex(role) for _ in range(inner)]
        self.chain([start] + fresh + [end])

        return fresh

    def build(self):
        return Graph(len(self.roles), self.edges)


class ReductionCertificate(object):
    """ Role labelling of a reduction graph, tying gadget vertices back to the source formula.

        ``variable_paths[(i, b)]`` lists the internal vertices of ``P_{i,b}`` in walking order,
        ``v_nodes`` holds ``v_0..v_n`` (``deg4``) or ``w_1-, w_1+, ..., w_n-, w_n+`` (``deg3``),
        ``literal_nodes[(j, l)]`` is the vertex labelled ``L_{j,l}``. Every exclusion path is a dict
        with keys ``occurrence``, ``g1_endpoint``, ``internal``, ``c`` and ``g2_endpoint``; every dummy
        entry is a dict with the ``a`` and ``b`` internal vertex lists.
    """

    def __init__(self, variant, r, k, num_vars, num_clauses, a_tail, b_tail, v_nodes, variable_paths,
                 u_nodes, u_prime_nodes, literal_nodes, exclusion_paths, dummy_paths, helper_nodes=(),
                 padding=()):
        self.variant = variant
        self.r = r
        self.k = k
        self.num_vars = num_vars
        self.num_clauses = num_clauses
        self.a_tail = list(a_tail)
        self.b_tail = list(b_tail)
        self.v_nodes = list(v_nodes)
        self.variable_paths = dict((key, list(value)) for key, value in variable_paths.items())
        self.u_nodes = list(u_nodes)
        self.u_prime_nodes = list(u_prime_nodes)
        self.literal_nodes = dict(literal_nodes)
        self.exclusion_paths = [dict(x) for x in exclusion_paths]
        self.dummy_paths = [dict(x) for x in dummy_paths]
        self.helper_nodes = [list(x) for x in helper_nodes]
        self.padding = [tuple(x) for x in padding]

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.to_dict() == other.to_dict()
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    @property
    def source(self):
        return self.a_tail[0]

    @property
    def clause_source(self):
        return self.b_tail[0]

    @property
    def sink(self):
        return self.v_nodes[-1]

    @property
    def clause_sink(self):
        return self.u_prime_nodes[-1]

    @property
    def chain_start(self):
        return self.v_nodes[0]

    def variable_ends(self, i):
        """ The two vertices joined by ``P_{i,0}`` and ``P_{i,1}``.
        """
        if self.variant == DEG3:
            return self.v_nodes[2 * i - 2], self.v_nodes[2 * i - 1]

        return self.v_nodes[i - 1], self.v_nodes[i]

    def occurrence_literals(self):
        """ Signed literal of every occurrence ``(j, l)``, recovered from the variable path that
            holds the variable-side end of its exclusion path.

        :rtype: dict
        """
        owner = dict((v, key) for key, vertices in self.variable_paths.items() for v in vertices)
        literals = {}

        for path in self.exclusion_paths:
            if path['g1_endpoint'] not in owner:
                raise ReductionError('exclusion path of occurrence %r does not start on a variable path' % (
                    tuple(path['occurrence']),
                ))

            i, b = owner[path['g1_endpoint']]
            literals[tuple(path['occurrence'])] = i if b else -i

        return literals

    def roles(self):
        """ Map every vertex of the reduction graph to its role label.

        :rtype: dict
        """
        labels = {}

        def put(vertex, label):
            if vertex in labels:
                raise ReductionError('vertex %d has two roles: %s and %s' % (vertex, labels[vertex], label))
            labels[vertex] = label

        for i, v in enumerate(self.a_tail, 1):
            put(v, 'a%d' % i)

        for i, v in enumerate(self.b_tail, 1):
            put(v, 'b%d' % i)

        if self.variant == DEG3:
            for i in range(1, self.num_vars + 1):
                left, right = self.variable_ends(i)
                put(left, 'w%d-' % i)
                put(right, 'w%d+' % i)
        else:
            for i, v in enumerate(self.v_nodes):
                put(v, 'v%d' % i)

        for (i, b), vertices in sorted(self.variable_paths.items()):
            for pos, v in enumerate(vertices, 1):
                put(v, 'P%d,%d#%d' % (i, b, pos))

        for j, (u, u_prime) in enumerate(zip(self.u_nodes, self.u_prime_nodes), 1):
            put(u, 'u%d' % j)
            put(u_prime, "u%d'" % j)

        for (j, l), v in sorted(self.literal_nodes.items()):
            put(v, 'L%d,%d' % (j, l))

        for j, helpers in enumerate(self.helper_nodes, 1):
            for pos, v in enumerate(helpers, 1):
                put(v, 'h%d,%d' % (j, pos))

        for i, path in enumerate(self.exclusion_paths, 1):
            for pos, v in enumerate(path['internal'], 1):
                put(v, 'c%d' % i if v == path['c'] else 'x%d#%d' % (i, pos))

        for i, dummy in enumerate(self.dummy_paths, 1):
            for side in ('a', 'b'):
                for pos, v in enumerate(dummy[side], 1):
                    if v not in labels:
                        put(v, 'd%d%s#%d' % (i, side, pos))

        for i, (a, z) in enumerate(self.padding, 1):
            put(a, 'pad-a%d' % i)
            put(z, 'pad-z%d' % i)

        return labels

    def to_dict(self):
        """ JSON-ready form; vertex ids are 1-indexed like every external format.
        """
        def ext(vertices):
            return [v + 1 for v in vertices]

        return {
            'variant': self.variant,
            'r': self.r,
            'k': self.k,
            'n': self.num_vars,
            'm': self.num_clauses,
            'a_tail': ext(self.a_tail),
            'b_tail': ext(self.b_tail),
            'v_nodes': ext(self.v_nodes),
            'variable_paths': [
                {'variable': i, 'value': b, 'internal': ext(vertices)}
                for (i, b), vertices in sorted(self.variable_paths.items())
            ],
            'u_nodes': ext(self.u_nodes),
            'u_prime_nodes': ext(self.u_prime_nodes),
            'literal_nodes': [
                {'clause': j, 'slot': l, 'vertex': v + 1}
                for (j, l), v in sorted(self.literal_nodes.items())
            ],
            'exclusion_paths': [
                {
                    'occurrence': list(path['occurrence']),
                    'g1_endpoint': path['g1_endpoint'] + 1,
                    'internal': ext(path['internal']),
                    'c': path['c'] + 1,
                    'g2_endpoint': path['g2_endpoint'] + 1,
                }
                for path in self.exclusion_paths
            ],
            'dummy_paths': [{'a': ext(x['a']), 'b': ext(x['b'])} for x in self.dummy_paths],
            'helper_nodes': [ext(x) for x in self.helper_nodes],
            'padding': [ext(x) for x in self.padding],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'

    @classmethod
    def from_dict(cls, data):
        def ext(vertices):
            return [v - 1 for v in vertices]

        try:
            return cls(
                variant=data['variant'],
                r=data['r'],
                k=data['k'],
                num_vars=data['n'],
                num_clauses=data['m'],
                a_tail=ext(data['a_tail']),
                b_tail=ext(data['b_tail']),
                v_nodes=ext(data['v_nodes']),
                variable_paths=dict(
                    ((x['variable'], x['value']), ext(x['internal'])) for x in data['variable_paths']
                ),
                u_nodes=ext(data['u_nodes']),
                u_prime_nodes=ext(data['u_prime_nodes']),
                literal_nodes=dict(((x['clause'], x['slot']), x['vertex'] - 1) for x in data['literal_nodes']),
                exclusion_paths=[
                    {
                        'occurrence': tuple(x['occurrence']),
                        'g1_endpoint': x['g1_endpoint'] - 1,
                        'internal': ext(x['internal']),
                        'c': x['c'] - 1,
                        'g2_endpoint': x['g2_endpoint'] - 1,
                    }
                    for x in data['exclusion_paths']
                ],
                dummy_paths=[{'a': ext(x['a']), 'b': ext(x['b'])} for x in data['dummy_paths']],
                helper_nodes=[ext(x) for x in data.get('helper_nodes', [])],
                padding=[ext(x) for x in data.get('padding', [])],
            )

        except (KeyError, TypeError) as e:
            raise ReductionError('Malformed certificate: %s' % e)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise ReductionError('Certificate is not valid JSON: %s' % e)

        return cls.from_dict(data)


def hub_offset(r):
    """ Distance of the hub ``c_i`` from the variable-half end of its exclusion path.
    """
    return r // 2


def expected_vertex_count(phi, r, variant=DEG4):
    """ Closed-form role census of :func:`build_reduction` for ``k = 2``.
    """
    n, m = phi.num_vars, phi.num_clauses
    inner = sum(max(phi.occurrences(-i), 1) + max(phi.occurrences(i), 1) for i in range(1, n + 1))

    if variant == DEG3:
        return 2 * n + inner + 2 * 3 * m + 7 * m + 3 * m * (r - 2) + 3 * m * (2 * r - 5)

    return (n + 1) + inner + 2 * 3 * m + 5 * m + 3 * m * (r - 2) + 6 * m * (r - 2)


def _check_preconditions(phi, r, k, variant):
    if variant not in MIN_R:
        raise ReductionError('Unknown variant %r (expected %s or %s)' % (variant, DEG4, DEG3))

    if r < MIN_R[variant]:
        raise ReductionError('variant %s requires r >= %d, got r=%d' % (variant, MIN_R[variant], r))

    if k < 2:
        raise ReductionError('k must be at least 2, got %d' % k)

    if phi.num_clauses == 0:
        raise ReductionError('formula has no clauses, the construction needs at least one')


def build_reduction(phi, r, k=2, variant=DEG4):
    """ Build the MM(r, k) instance encoding `phi`.

    :param phi: source :class:`menger.cnf.CnfFormula`
    :param r: distance parameter, at least 3 (``deg4``) or 4 (``deg3``)
    :param k: number of paths; values above 2 are reached through :func:`pad_to_k`
    :param variant: ``deg4`` or ``deg3``
    :return: (MMInstance, ReductionCertificate)
    """
    _check_preconditions(phi, r, k, variant)

    n, m = phi.num_vars, phi.num_clauses
    occurrences = [(j, l) for j in range(1, m + 1) for l in range(1, 4)]
    builder = GraphBuilder()

    a_tail = [builder.vertex('a') for _ in occurrences]
    builder.chain(a_tail)

    if variant == DEG3:
        v_nodes = []
        for i in range(1, n + 1):
            v_nodes.extend([builder.vertex('w-'), builder.vertex('w+')])

        for i in range(1, n):
            builder.edge(v_nodes[2 * i - 1], v_nodes[2 * i])

    else:
        v_nodes = [builder.vertex('v') for _ in range(n + 1)]

    builder.edge(a_tail[-1], v_nodes[0])

    certificate = ReductionCertificate(
        variant=variant, r=r, k=2, num_vars=n, num_clauses=m, a_tail=a_tail, b_tail=[], v_nodes=v_nodes,
        variable_paths={}, u_nodes=[], u_prime_nodes=[], literal_nodes={}, exclusion_paths=[], dummy_paths=[],
    )

    for i in range(1, n + 1):
        left, right = certificate.variable_ends(i)

        # P_{i,0} carries the occurrences of -x_i, P_{i,1} those of x_i
        for b, literal in ((0, -i), (1, i)):
            inner = max(phi.occurrences(literal), 1)
            certificate.variable_paths[(i, b)] = builder.path(left, right, inner, 'P')

    b_tail = [builder.vertex('b') for _ in occurrences]
    builder.chain(b_tail)
    certificate.b_tail = b_tail

    previous = b_tail[-1]
    for j in range(1, m + 1):
        u = builder.vertex('u')
        literals = [builder.vertex('L') for _ in range(3)]

        if variant == DEG3:
            h1, h2 = builder.vertex('h'), builder.vertex('h')
            u_prime = builder.vertex("u'")

            for x, y in ((u, h1), (u, literals[2]), (h1, literals[0]), (h1, literals[1]), (h2, literals[0]),
                         (h2, literals[1]), (h2, u_prime), (literals[2], u_prime)):
                builder.edge(x, y)

            certificate.helper_nodes.append([h1, h2])

        else:
            u_prime = builder.vertex("u'")

            for literal in literals:
                builder.edge(u, literal)
                builder.edge(literal, u_prime)

        builder.edge(previous, u)
        previous = u_prime

        certificate.u_nodes.append(u)
        certificate.u_prime_nodes.append(u_prime)

        for l, vertex in enumerate(literals, 1):
            certificate.literal_nodes[(j, l)] = vertex

    used = dict((key, 0) for key in certificate.variable_paths)

    for (j, l) in occurrences:
        literal = phi.clauses[j - 1][l - 1]
        key = (abs(literal), 1 if literal > 0 else 0)

        g1_endpoint = certificate.variable_paths[key][used[key]]
        used[key] += 1

        g2_endpoint = certificate.literal_nodes[(j, l)]
        internal = builder.path(g1_endpoint, g2_endpoint, r - 2, 'x')

        certificate.exclusion_paths.append({
            'occurrence': (j, l),
            'g1_endpoint': g1_endpoint,
            'internal': internal,
            'c': internal[hub_offset(r) - 1],
            'g2_endpoint': g2_endpoint,
        })

    for i, path in enumerate(certificate.exclusion_paths):
        hub = path['c']

        if variant == DEG3:
            # Both routes share the last edge: a_i .. d_i - c_i and b_i .. d_i - c_i
            shared = builder.vertex('d')
            builder.edge(shared, hub)

            a_route = builder.path(a_tail[i], shared, r - 3, 'd') + [shared]
            b_route = builder.path(b_tail[i], shared, r - 3, 'd') + [shared]

        else:
            a_route = builder.path(a_tail[i], hub, r - 2, 'd')
            b_route = builder.path(b_tail[i], hub, r - 2, 'd')

        certificate.dummy_paths.append({'a': a_route, 'b': b_route})

    inst = MMInstance(builder.build(), A=[a_tail[0], b_tail[0]], Z=[certificate.sink, certificate.clause_sink],
                      r=r, k=2)

    if k > 2:
        inst, certificate.padding = _pad(inst, k)
        certificate.k = k

    return inst, certificate


def _pad(inst, k_target):
    n = inst.graph.n
    pairs = [(n + 2 * i, n + 2 * i + 1) for i in range(k_target - 2)]
    graph = Graph(n + 2 * len(pairs), list(inst.graph.edges()) + pairs)

    padded = MMInstance(graph, A=set(inst.A) | set(a for a, _ in pairs), Z=set(inst.Z) | set(z for _, z in pairs),
                        r=inst.r, k=k_target)

    return padded, pairs


def pad_to_k(inst, k_target):
    """ Lift an MM(r, 2) instance to MM(r, k_target) by adding ``k_target - 2`` isolated edges
        whose ends join A and Z. The answer is preserved.
    """
    if k_target < 2:
        raise ReductionError('k_target must be at least 2, got %d' % k_target)

    if inst.k != 2:
        raise ReductionError('pad_to_k expects an instance with k=2, got k=%d' % inst.k)

    if k_target == 2:
        return inst

    return _pad(inst, k_target)[0]


def _walk_traverses(vertices, internal):
    return all(v in vertices for v in internal)


def extract_assignment(cert, sol):
    """ Read the assignment off the path anchored at ``a_1``: ``x_i = 1`` iff it traverses ``P_{i,0}``.

    :rtype: menger.cnf.Assignment
    """
    anchored = [p for p in sol if len(p) and p.start == cert.source]

    if not anchored:
        raise InvalidWitness('no path starts at a_1 (vertex %d)' % (cert.source + 1))

    if len(anchored) > 1:
        raise InvalidWitness('%d paths start at a_1' % len(anchored))

    walk = set(anchored[0])
    values = {}

    for i in range(1, cert.num_vars + 1):
        negative = _walk_traverses(walk, cert.variable_paths[(i, 0)])
        positive = _walk_traverses(walk, cert.variable_paths[(i, 1)])

        if negative == positive:
            raise InvalidWitness('path from a_1 traverses %s of P_%d,0 and P_%d,1' % (
                'both' if negative else 'neither', i, i,
            ))

        values[i] = 1 if negative else 0

    return Assignment(values)


def _clause_route(cert, j, slot):
    u, u_prime = cert.u_nodes[j - 1], cert.u_prime_nodes[j - 1]
    literal = cert.literal_nodes[(j, slot)]

    if cert.variant == DEG3 and slot != 3:
        h1, h2 = cert.helper_nodes[j - 1]
        return [u, h1, literal, h2, u_prime]

    return [u, literal, u_prime]


def build_forward_witness(cert, f):
    """ Construct the two gadget paths (plus padding edges) for a satisfying assignment `f`.

        Literal signs are read off the certificate. The clause path picks the lowest true literal
        slot of every clause.

    :rtype: menger.graph.PathSet
    """
    if sorted(f.values) != list(range(1, cert.num_vars + 1)):
        raise ReductionError('assignment covers variables %s, the certificate has %d' % (
            sorted(f.values), cert.num_vars,
        ))

    literals = cert.occurrence_literals()

    variable_walk = list(cert.a_tail)
    for i in range(1, cert.num_vars + 1):
        left, right = cert.variable_ends(i)

        if variable_walk[-1] != left:
            variable_walk.append(left)

        variable_walk.extend(cert.variable_paths[(i, 1 - f[i])])
        variable_walk.append(right)

    clause_walk = list(cert.b_tail)
    for j in range(1, cert.num_clauses + 1):
        slot = next((l for l in range(1, 4) if f.literal_value(literals[(j, l)])), None)

        if slot is None:
            raise ReductionError('assignment does not satisfy clause %d' % j)

        clause_walk.extend(_clause_route(cert, j, slot))

    return PathSet([variable_walk, clause_walk] + [list(pair) for pair in cert.padding])
