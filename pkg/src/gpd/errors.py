"""Exception hierarchy.

Every error raised by the library derives from :class:`GroupoidError`, so
callers (the CLI in particular) can catch one type.  Errors that carry a
counterexample keep it in ``witness``.
"""


class GroupoidError(ValueError):
    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness

    def as_dict(self):
        return {
            "error": type(self).__name__,
            "message": str(self),
            "witness": _jsonable(self.witness),
        }


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return repr(obj)


# groupoid validation
class ValidationError(GroupoidError):
    pass


class InvalidReference(ValidationError):
    pass


class MissingComposite(ValidationError):
    pass


class IllTypedComposite(ValidationError):
    pass


class ConflictingComposite(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class NoUnit(ValidationError):
    pass


class NoInverse(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class InvalidAction(ValidationError):
    pass


class EmptyRestriction(GroupoidError):
    pass


class NotComposable(GroupoidError):
    pass


# functors
class NotAFunctor(ValidationError):
    pass


class NotNatural(ValidationError):
    pass


class DomainMismatch(GroupoidError):
    pass


class CodomainMismatch(GroupoidError):
    pass


class NotAnEquivalence(GroupoidError):
    pass


# fiber products
class MismatchedInputs(GroupoidError):
    pass


class WiringMismatch(GroupoidError):
    pass


# generalized morphisms and their arrows
class InvalidMorphism(ValidationError):
    pass


class ModeMismatch(GroupoidError):
    pass


class BaseMismatch(GroupoidError):
    pass


class NotFullMode(GroupoidError):
    pass


class InternalNoSplitting(GroupoidError):
    """A splitting that must exist for validated inputs was not found."""


class InternalNoLift(GroupoidError):
    """A lift through a full-equivalence that must exist was not found."""


# automorphisms
class NotAutomorphism(GroupoidError):
    pass


class NontrivialCenter(GroupoidError):
    pass


class NotAutomorphismSlice(GroupoidError):
    pass


class NotHomomorphism(GroupoidError):
    pass


class GroupAxiomFailure(GroupoidError):
    pass
