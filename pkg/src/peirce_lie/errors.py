"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for malformed or invalid input, 1 for a mathematical failure.
"""


class PeirceLieError(Exception):
    exit_code = 1

    def __init__(self, message="", certificate=None):
        super().__init__(message)
        self.certificate = certificate


class InputError(PeirceLieError, ValueError):
    exit_code = 2


# -- scalars -----------------------------------------------------------------

class DivisionByZero(PeirceLieError, ZeroDivisionError):
    pass


class FieldMismatch(InputError):
    pass


# -- algebras ----------------------------------------------------------------

class AlgebraMismatch(InputError):
    pass


class NotAssociative(InputError):
    pass


class NotUnital(InputError):
    pass


class NotInDomain(InputError):
    pass


# -- frames and gradings -----------------------------------------------------

class FrameError(InputError):
    pass


class NotIdempotent(FrameError):
    pass


class NotOrthogonal(FrameError):
    pass


class NotComplete(FrameError):
    pass


class PeirceMismatch(FrameError):
    pass


class NotFull(PeirceLieError):
    pass


class GradingFailure(PeirceLieError):
    pass


class NoDecomposition(PeirceLieError):
    pass


class NotSurjective(PeirceLieError):
    pass


class NotGraded(PeirceLieError):
    pass


class NotHomomorphism(PeirceLieError):
    pass


# -- map laws ----------------------------------------------------------------

class DomainNotBracketClosed(PeirceLieError):
    pass


class DomainNotProductClosed(PeirceLieError):
    pass


class NotSpecialization(PeirceLieError):
    pass


class InconsistentSystem(PeirceLieError):
    pass


class NotMultiplicative(PeirceLieError):
    pass


class AnnihilatorNonzero(PeirceLieError):
    pass


class NotGenerated(PeirceLieError):
    pass


class PreconditionFailed(PeirceLieError):
    pass


class WellDefinednessFailure(PeirceLieError):
    pass


class RepresentationFailure(PeirceLieError):
    pass


class CharTwo(InputError):
    pass
