"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class McstError(Exception):
    code = "error"
    exit_code = 1

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


class InstanceTooLarge(McstError):
    code = "instance-too-large"
    exit_code = 3


class DisconnectedGraph(McstError):
    code = "disconnected"


class NotCoverable(McstError):
    code = "not-coverable"


class ClassPreconditionFailed(McstError):
    code = "class-precondition-failed"


class TheoremViolated(McstError):
    code = "theorem-violated"


class RepairStuck(McstError):
    code = "repair-stuck"


class NotAPermutation(McstError):
    code = "not-a-permutation"
    exit_code = 2


class NotIntervalOrdering(McstError):
    code = "not-interval-ordering"


class SweepInvariantViolated(McstError):
    code = "sweep-invariant-violated"


class ExpressionError(McstError):
    code = "expression-error"
    exit_code = 2


class TableBlowup(McstError):
    code = "table-blowup"
    exit_code = 3


class NoConnectedFunction(McstError):
    code = "no-connected-function"


class NotGeneratorReady(McstError):
    code = "not-generator-ready"


class AssignmentNotSatisfying(McstError):
    code = "assignment-not-satisfying"


class CoincidentEndpoints(McstError):
    code = "coincident-endpoints"


class FormatError(McstError):
    code = "malformed-input"
    exit_code = 2


class NoApplicableAlgorithm(McstError):
    code = "no-applicable-algorithm"
    exit_code = 2
