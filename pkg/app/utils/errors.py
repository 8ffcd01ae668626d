class SeshadriError(Exception):
    """Base class for every error raised by the utils package."""


class PreconditionError(SeshadriError, ValueError):
    """An input violates the stated hypothesis of an operation."""


class SearchSpaceError(PreconditionError):
    """The oracle caps leave nothing to enumerate."""


class BoundsDidNotMeetError(SeshadriError):
    """Upper and lower bounds stayed apart under the given search caps."""


class InternalConsistencyError(SeshadriError, AssertionError):
    """A proven statement was contradicted. Always a bug."""


def require(condition: bool, message: str):
    if not condition:
        raise PreconditionError(message)
