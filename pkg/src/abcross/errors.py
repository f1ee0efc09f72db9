"""Exception types and the small check-result record shared by all modules."""

from __future__ import annotations

from typing import NamedTuple


class AbCrossError(Exception):
    """Base class for every error raised by this package."""


class IllDefinedHom(AbCrossError, ValueError):
    pass


class DomainMismatch(AbCrossError, ValueError):
    pass


class SizeExceeded(AbCrossError):
    pass


class NotNormalized(AbCrossError, ValueError):
    pass


class NotACocycle(AbCrossError, ValueError):
    pass


class InvalidTwisting(AbCrossError, ValueError):
    pass


class InvalidMorphism(AbCrossError, ValueError):
    pass


class InvalidFunctor(AbCrossError, ValueError):
    pass


class InvalidExtension(AbCrossError, ValueError):
    pass


class BaseMismatch(AbCrossError, ValueError):
    pass


class NotMono(AbCrossError, ValueError):
    pass


class Check(NamedTuple):
    """Outcome of a validation: truthy iff ``ok``.

    On failure ``condition`` names the violated law and ``witness`` holds the
    arguments at which it fails.
    """

    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Check(True)


def fail(condition: str, *witness) -> Check:
    return Check(False, condition, tuple(witness))
