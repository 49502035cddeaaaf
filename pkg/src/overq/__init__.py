"""Exact over q-binomial coefficients and checks of their identities."""

from overq.errors import BudgetExceeded, DomainError, NonUnitConstantTerm, OutOfRange
from overq.kernels import BACKEND
from overq.qbinomial import (
    Method,
    gaussian,
    over_binom,
    over_limit,
    over_qbinomial,
    over_term,
    qtrinomial,
)
from overq.series import INFINITY, PochSpec, QSeries, XQSeries

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DomainError",
    "INFINITY",
    "Method",
    "NonUnitConstantTerm",
    "OutOfRange",
    "PochSpec",
    "QSeries",
    "XQSeries",
    "gaussian",
    "over_binom",
    "over_limit",
    "over_qbinomial",
    "over_term",
    "qtrinomial",
]
