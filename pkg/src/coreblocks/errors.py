"""Exception hierarchy. The CLI maps these onto exit codes."""


class CoreBlocksError(Exception):
    pass


class DomainError(CoreBlocksError, ValueError):
    """Input is well formed but outside the domain of the operation (exit 1)."""


class ParseError(CoreBlocksError, ValueError):
    """Malformed literal (exit 2)."""


class InvalidBetaError(DomainError):
    pass


class NotACoreError(DomainError):
    pass


class HypothesisError(DomainError):
    """An evaluator was called outside its hypotheses; `hypothesis` names which one."""

    def __init__(self, hypothesis, msg=None):
        self.hypothesis = hypothesis
        super().__init__(msg or f"hypothesis violated: {hypothesis}")


class ResourceLimitError(CoreBlocksError):
    """A configured desk-scale limit would be exceeded (exit 3)."""
