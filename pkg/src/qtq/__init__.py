"""Exact q,t-series for quasihomogeneous Hilbert schemes, cyclic quiver varieties and their fixed points."""

from .qt_algebra import QPoly, TSeries, expand_product, series_eq
from .partitions import YoungDiagram, enumerate_diagrams, enumerate_tuples
from .quiver_fixed import FixedPoint, FramingData

__all__ = [
    "QPoly",
    "TSeries",
    "expand_product",
    "series_eq",
    "YoungDiagram",
    "enumerate_diagrams",
    "enumerate_tuples",
    "FixedPoint",
    "FramingData",
]
__version__ = "0.1.0"
