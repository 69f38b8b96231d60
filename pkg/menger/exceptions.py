class MengerError(Exception):
    pass


class InvalidGraphError(MengerError, ValueError):
    pass


class ConfigError(MengerError, ValueError):
    pass


class ReductionError(MengerError, ValueError):
    pass


class InvalidWitness(MengerError, ValueError):
    pass


class EncodingConflict(MengerError):
    """ A vertex is a terminal for two different path indices, so no colour fits it.
    """


class SolverError(MengerError, EnvironmentError):
    pass


class ParseError(MengerError, ValueError):
    def __init__(self, message, line=None):
        self.line = line

        if line is not None:
            message = 'line %d: %s' % (line, message)

        super(ParseError, self).__init__(message)


class GuardExceeded(MengerError, RuntimeError):
    def __init__(self, guard, limit, method=None):
        self.guard = guard
        self.limit = limit
        self.method = method

        super(GuardExceeded, self).__init__(guard, limit)

    def __str__(self):
        message = '%s exceeded (limit %s)' % (self.guard, self.limit)

        if self.method:
            return '%s: %s' % (self.method, message)

        return message


class InvalidDecomposition(MengerError, ValueError):
    def __init__(self, violation):
        self.violation = violation

        super(InvalidDecomposition, self).__init__('Invalid tree decomposition: %s' % violation)
