class HookIdentitiesError(Exception):
    """Base exception for hook-identities"""

    pass


class ConfigurationError(HookIdentitiesError):
    """Configuration related errors"""

    pass


class BudgetError(ConfigurationError):
    """Requested caps exceed the configured limits"""

    pass


class PartitionError(HookIdentitiesError):
    """Malformed or out-of-family partition input"""

    pass


class WordError(HookIdentitiesError):
    """Boundary word violates the median convention"""

    pass


class DecompositionError(HookIdentitiesError):
    """Littlewood decomposition / core vector errors"""

    pass


class VCodingError(HookIdentitiesError):
    """V-coding invariant violations"""

    pass


class DivisionError(HookIdentitiesError):
    """Exact division left a nonzero remainder"""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class SeriesError(HookIdentitiesError):
    """Truncated series operation is undefined"""

    pass


class TauError(HookIdentitiesError):
    """A tau map vanished at a needed argument"""

    def __init__(self, argument: int):
        super().__init__(f"tau vanishes at argument {argument}")
        self.argument = argument


class UnknownIdentityError(HookIdentitiesError):
    """No verifier registered under the requested name"""

    pass
