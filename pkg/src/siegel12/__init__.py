"""Exact reconstruction of the degree-12 weight-12 Siegel cusp form as a
rational combination of the 24 Niemeier theta series."""

__version__ = "1.0.0"

from .cuspform import CuspForm  # noqa: F401
from .niemeier import MissingDataError  # noqa: F401
