"""Small shared values: the -inf scattering number and size-cap errors."""

from __future__ import annotations

import functools

__all__ = ["NEG_INF", "NegInf", "TooLarge"]


class TooLarge(ValueError):
    """Input exceeds the size cap of an exponential-time routine."""


@functools.total_ordering
class NegInf:
    """Scattering number of a complete graph.

    Orders below every integer but supports no arithmetic, so an accidental
    ``2 - sc`` fails loudly instead of producing a wrong number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, float)):
            return True
        return NotImplemented

    def __reduce__(self):
        return (NegInf, ())


NEG_INF = NegInf()
