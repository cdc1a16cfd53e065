"""Typed errors raised by the algebra layers and mapped to exit codes by the CLI."""

USER_ERROR = 1
RESOURCE_ERROR = 2
INTERNAL_ERROR = 3


class SuperringError(Exception):
    exit_code = USER_ERROR
    kind = "error"

    def __init__(self, message=None):
        self.message = message or self.__doc__ or self.kind
        super().__init__(self.message)

    def to_dict(self):
        return {"type": "error", "kind": self.kind, "message": self.message}


class AmbientMismatch(SuperringError):
    """operands live in different rings"""
    kind = "ambient_mismatch"


class TrivialRing(SuperringError):
    """defining ideal contains 1"""
    kind = "trivial_ring"


class ZeroInput(SuperringError):
    """element is zero in the ring"""
    kind = "zero_input"


class NotHomogeneous(SuperringError):
    """element is not homogeneous"""
    kind = "not_homogeneous"


class NotPrime(SuperringError):
    """ideal is not (certified) prime"""
    kind = "not_prime"


class NonRationalPoint(SuperringError):
    """maximal ideal is not a rational point"""
    kind = "non_rational_point"


class ZerodivisorDenominator(SuperringError):
    """denominator is a zerodivisor"""
    kind = "zerodivisor_denominator"


class ZeroIdeal(SuperringError):
    """fractional superideal is zero"""
    kind = "zero_ideal"


class NoUnitCandidate(SuperringError):
    """no even non-zerodivisor found in the fractional superideal"""
    kind = "no_unit_candidate"


class UnknownName(SuperringError):
    """unknown name"""
    kind = "unknown_name"


class CommandError(SuperringError):
    """malformed command"""
    kind = "command_error"


class ParseError(SuperringError):
    kind = "parse_error"

    def __init__(self, source, position=None, message=None, line=1):
        self.source = source
        self.position = position
        self.line = line
        super().__init__(message or "syntax error")

    def to_dict(self):
        data = super().to_dict()
        if self.position is not None:
            data["line"] = self.line
            data["column"] = self.position[0] + 1
        return data

    def shifted(self, source, shift):
        """The same error located inside a longer source text."""
        position = None if self.position is None else (self.position[0] + shift, self.position[1] + shift)
        return ParseError(source, position, self.message, self.line)


class ResourceLimit(SuperringError):
    """resource cap exceeded"""
    exit_code = RESOURCE_ERROR
    kind = "resource_limit"


class InternalError(SuperringError):
    exit_code = INTERNAL_ERROR
    kind = "internal"
