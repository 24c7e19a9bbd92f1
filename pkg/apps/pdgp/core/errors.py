"""Error hierarchy; each error class carries the CLI exit code it maps to."""

from __future__ import annotations


class PdgpError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code: int = 1


# ---------------------------------------------------------------------------
# Input errors (exit 2)
# ---------------------------------------------------------------------------
class ParseError(PdgpError):
    """Malformed input: graph text, edge list, chord word or parameter."""

    exit_code = 2


class SelfLoop(ParseError):
    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class VertexOutOfRange(ParseError):
    def __init__(self, vertex: int, n: int) -> None:
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for n={n}")


class SameVertex(ParseError):
    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"operation needs two distinct vertices, got {vertex} twice")


class BadOccurrenceCount(ParseError):
    def __init__(self, token: str, count: int) -> None:
        self.token = token
        self.count = count
        super().__init__(f"chord label {token!r} occurs {count} times, expected 2")


class EmptyInput(ParseError):
    def __init__(self, what: str = "input") -> None:
        super().__init__(f"empty {what}")


class BadParameter(ParseError):
    pass


class KOutOfRange(ParseError):
    def __init__(self, k: int, n: int) -> None:
        self.k = k
        self.n = n
        super().__init__(f"k={k} out of range for n={n} (need 1 <= k <= n)")


class NonMultiplicativeInvariant(ParseError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"invariant {name!r} is not multiplicative over disjoint union")


# ---------------------------------------------------------------------------
# Resource / arithmetic errors
# ---------------------------------------------------------------------------
class SizeCapExceeded(PdgpError):
    """Input larger than the configured (or hard) size cap."""

    exit_code = 3

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class CoefficientOverflow(PdgpError):
    """A polynomial coefficient left the signed 127-bit range."""

    exit_code = 4

    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(f"coefficient overflow ({value.bit_length()} bits)")


class VerificationMismatch(PdgpError):
    """Two computations that must agree did not; commands return its exit code."""

    exit_code = 5
