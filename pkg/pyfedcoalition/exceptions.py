class Error(Exception):
    """base exception class"""

class FedCoalitionError(Error):
    """Generic error for pyfedcoalition"""

class InvalidInputError(FedCoalitionError):
    """Node ids, coalitions, partitions or specs that break their invariants"""

class PreconditionError(InvalidInputError):
    """An operation was called on a state that no longer satisfies its contract"""

class InstanceParseError(InvalidInputError):
    """Malformed instance document"""

class InstanceValidationError(InvalidInputError):
    """Well-formed instance document with invalid graph content"""

class SizeLimitError(FedCoalitionError):
    """Input larger than a configured guard"""

class EnumerationLimitError(FedCoalitionError):
    """Cycle or path enumeration produced more results than allowed"""
