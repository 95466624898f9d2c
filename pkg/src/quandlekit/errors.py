"""Exception hierarchy shared by every module."""


class QuandleKitError(Exception):
    """Base class for all package errors."""


class MalformedTable(QuandleKitError):
    pass


class MalformedInput(QuandleKitError):
    pass


class SearchBudgetExceeded(QuandleKitError):
    pass


class OrderCapExceeded(QuandleKitError):
    pass


class CapExceeded(QuandleKitError):
    """Coset enumeration did not close within the coset cap."""


class CentralityViolation(QuandleKitError):
    """The meridian is not central in the chosen subgroup."""


class ParseError(QuandleKitError):
    pass


class PairingError(ParseError):
    pass
