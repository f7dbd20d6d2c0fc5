"""Exception hierarchy shared across the package."""


class PQSeqError(Exception):
    """Base class for all errors raised by pqseq."""


class ParameterError(PQSeqError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class PreconditionError(PQSeqError):
    """A closed-form result was requested outside its hypotheses."""


class UnsupportedStructure(PQSeqError):
    """A specialised engine cannot handle the given input; use a general one."""


class BudgetExceeded(PQSeqError):
    """An exhaustive search would need more evaluations than allowed."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"exhaustive search needs {required} LC evaluations, budget is {budget}"
        )
