"""Exact MV-algebra and series-algebra toolkit.

Rationals cross the boundary as strings such as "3/4"; use ``to_fraction``
and ``from_fraction`` to convert.
"""

from fractions import Fraction

from ._core import (
    BudgetExceeded,
    CarrierError,
    DeltaUnsupported,
    ParseError,
    PLFunc,
    decide,
    evaluate,
    gamma_xi,
    holds,
    identity_corpus,
    pl_delta,
    radical,
    spectrum,
    uniform_dist,
    xi_chain_iso,
)

try:
    from ._core import run_cli
except ImportError:
    run_cli = None

__all__ = [
    "BudgetExceeded",
    "CarrierError",
    "DeltaUnsupported",
    "ParseError",
    "PLFunc",
    "decide",
    "evaluate",
    "from_fraction",
    "gamma_xi",
    "holds",
    "identity_corpus",
    "pl_delta",
    "radical",
    "run_cli",
    "spectrum",
    "to_fraction",
    "uniform_dist",
    "xi_chain_iso",
]


def to_fraction(text: str) -> Fraction:
    return Fraction(text)


def from_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
