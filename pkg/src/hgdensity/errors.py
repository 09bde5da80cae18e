"""Exception types for mathematical hypothesis violations."""


class HypothesisError(ValueError):
    """A mathematical precondition of an operation was violated."""


class IntegralParameter(HypothesisError):
    """One of a, b, c, a-c, b-c is an integer, so the density formula does not apply."""


class PrimeTooSmall(HypothesisError):
    """The prime does not exceed the parameter modulus m."""


class NotAUnit(HypothesisError):
    """An argument that must be coprime to the modulus is not."""


class ShapeMismatch(RuntimeError):
    """A computed bounded-residue set matched none of the enumerated shapes.

    This would contradict the subgroup-lattice classification for primes of
    the form 2*q**r + 1 and must never be silently absorbed.
    """


class CaseViolation(RuntimeError):
    """A computed density contradicts the case pattern for primes 2*q + 1."""
