"""Exception types. Every error carries a short machine-readable ``code``."""


class AbelicompError(Exception):
    code = "error"


class InvalidModulus(AbelicompError, ValueError):
    code = "invalid_modulus"


class ShapeError(AbelicompError, ValueError):
    code = "shape"


class RangeError(AbelicompError, IndexError):
    code = "range"


class NotPrime(AbelicompError, ValueError):
    code = "not_prime"


class NotIrreducible(AbelicompError, ValueError):
    code = "not_irreducible"


class DivisionByZero(AbelicompError, ZeroDivisionError):
    code = "division_by_zero"


class DegenerateClass(AbelicompError, ValueError):
    code = "degenerate_class"


class ParseError(AbelicompError, ValueError):
    code = "parse"


class InvalidDigraph(AbelicompError, ValueError):
    code = "invalid_digraph"


class Unsupported(AbelicompError, ValueError):
    code = "unsupported"


class NoTerminal(AbelicompError, ValueError):
    code = "no_terminal"


class PrecisionRefused(AbelicompError, ValueError):
    code = "precision_refused"


class NotGrowing(AbelicompError, ValueError):
    code = "not_growing"


class HypothesisViolated(AbelicompError, ValueError):
    code = "hypothesis_violated"


class NoConvergence(AbelicompError, ArithmeticError):
    code = "no_convergence"

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BudgetExceeded(AbelicompError, RuntimeError):
    code = "budget_exceeded"


class EmptySubset(AbelicompError, ValueError):
    code = "empty_subset"
