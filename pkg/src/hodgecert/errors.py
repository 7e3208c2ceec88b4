"""Exception hierarchy for the certifier.

Two families matter to callers: ParameterError covers rejected inputs and
operations applied outside their stated domain (CLI exit code 1), while
InternalInvariantError covers conditions the underlying theorems guarantee,
so raising one always indicates a bug (CLI exit code 2).
"""


class ParameterError(ValueError):
    """Input rejected, or an operation invoked outside its domain."""


class NotPrimeError(ParameterError):
    """p failed the primality check."""


class DividesDegreeError(ParameterError):
    """p divides the degree n."""


class DegreeTooSmallError(ParameterError):
    """n < 4."""


class ExponentTooSmallError(ParameterError):
    """r < 1."""


class BoundExceededError(ParameterError):
    """n, q, or an intermediate product lies beyond the supported range."""


class HyperellipticExcludedError(ParameterError):
    """q = 2 is representable but outside the certification scope."""


class DegreeNotAboveQError(ParameterError):
    """The multiplicity system requires n > q."""


class PreconditionViolatedError(ParameterError):
    """A constructive witness operation was called where it does not apply."""


class ProductHypothesisFailedError(ParameterError):
    """Product certification needs p odd, p coprime to n(n-1), and n > q."""


class SelfConflictError(ParameterError):
    """An eigenvalue system contains a pair with n_val == m_val."""


class DuplicateMultiplicityError(ParameterError):
    """An eigenvalue system repeats an n_val; the subset bound needs them distinct."""


class InternalInvariantError(RuntimeError):
    """A theorem-guaranteed condition failed; this is a bug, not bad input."""


class InternalContradictionError(InternalInvariantError):
    """Both shifted Bezout candidates failed, which the construction rules out."""


class BoundViolatedError(InternalInvariantError):
    """A maximal compatible subset missed the half-of-system cardinality bound."""


class OracleDisagreementError(InternalInvariantError):
    """Constructive path and exhaustive oracle disagree at some grid point."""


class EquivalenceFailedError(InternalInvariantError):
    """A claimed arithmetic equivalence has a counterexample."""


class LevelInconclusiveError(InternalInvariantError):
    """A per-level certificate came back undetermined despite product hypotheses."""


class ParityImpossibleError(InternalInvariantError):
    """A dimension formula produced an odd numerator; cannot happen for valid params."""
