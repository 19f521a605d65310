"""Exception hierarchy shared by all metacause modules."""


class MetacauseError(Exception):
    """Base class for every error raised by this package."""


class NetworkError(MetacauseError):
    pass


class BimolecularViolation(NetworkError):
    def __init__(self, rule_id, n_premises, line=None):
        self.rule_id = rule_id
        self.n_premises = n_premises
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(
            f"rule {rule_id!r}{where} has {n_premises} premises; at most 2 are allowed")


class DuplicateRuleId(NetworkError):
    def __init__(self, rule_id, line=None):
        self.rule_id = rule_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate rule id {rule_id!r}{where}")


class EmptyPremise(NetworkError):
    def __init__(self, rule_id):
        self.rule_id = rule_id
        super().__init__(f"rule {rule_id!r} has no premises")


class UnknownRule(MetacauseError, KeyError):
    def __str__(self):
        return f"unknown rule reference {self.args[0]!r}"


class UnknownMetabolite(MetacauseError, KeyError):
    def __str__(self):
        return f"unknown metabolite {self.args[0]!r}"


class UnknownLabel(MetacauseError, KeyError):
    def __str__(self):
        return f"label {self.args[1]!r} does not occur in the definition of {self.args[0]!r}"


class InvalidExplanation(MetacauseError):
    pass


class LimitExceeded(MetacauseError):
    """Path enumeration would exceed the configured cap.

    Any verdict that depends on the enumeration is undecided.
    """

    def __init__(self, what, count, limit):
        self.what = what
        self.count = count
        self.limit = limit
        super().__init__(f"{what}: {count} paths exceed the cap of {limit}")


class TargetInSolution(MetacauseError):
    def __init__(self, metabolite):
        self.metabolite = metabolite
        super().__init__(f"target {metabolite!r} belongs to the initial solution")


class NotInSolution(MetacauseError):
    def __init__(self, metabolite):
        self.metabolite = metabolite
        super().__init__(f"{metabolite!r} is not in the initial solution")


class MismatchedSolutions(MetacauseError):
    pass


class OracleDisagreement(MetacauseError):
    """Reachability and enumeration verdicts differ (an internal soundness alarm)."""


class ParseError(MetacauseError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        loc = ""
        if source:
            loc += f"{source}:"
        if line is not None:
            loc += f"{line}:"
            if column is not None:
                loc += f"{column}:"
        super().__init__(f"{loc} {message}" if loc else message)
