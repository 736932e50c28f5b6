"""Exception hierarchy for contract violations.

Errors fall into two families: bad input (shape/field mismatches, failed
preconditions the caller is responsible for) and theorem violations, which
can only arise from an implementation bug and are therefore fatal.
"""


class GrbialgError(Exception):
    """Base class for all library errors."""


class FieldMismatch(GrbialgError):
    """Operands live over different fields."""


class DimensionMismatch(GrbialgError):
    """Matrix shapes or ambient dimensions do not line up."""


class ImageNotContained(GrbialgError):
    """Corestriction failed: image(f) is not inside the target subspace."""


class KernelNotContained(GrbialgError):
    """Factorization through a quotient failed: S is not inside ker(f)."""


class NotSubcoalgebra(GrbialgError):
    """The given subspace is not a subcoalgebra."""


class NotIdeal(GrbialgError):
    """The given subspace is not a two-sided ideal."""


class NotSubbialgebra(GrbialgError):
    """The given subspace is not a subbialgebra."""


class NotQuotientMap(GrbialgError):
    """The given projection is not a bialgebra epimorphism."""


class CorestrictFailure(GrbialgError):
    """A map guaranteed to corestrict did not; implementation bug signal."""


class FactorFailure(GrbialgError):
    """A map guaranteed to factor through a quotient did not."""


class BraidingDoesNotDescend(GrbialgError):
    """The braiding does not map the required subspaces into each other."""


class ExactnessFailure(GrbialgError):
    """An exact-sequence witness failed; implementation bug signal."""


class ActionAxiomFailure(GrbialgError):
    """Module action maps violate the action axioms."""


class CoactionAxiomFailure(GrbialgError):
    """Comodule coaction maps violate the coaction axioms."""


class ConstructionMismatch(GrbialgError):
    """Two constructions of the same canonical map disagree; bug signal."""


class AgreementFailure(GrbialgError):
    """Equivalent conditions of a characterization theorem disagree.

    Carries the offending report in ``args[1]`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InputFormatError(GrbialgError):
    """Malformed input document (shapes, scalars, missing keys)."""
