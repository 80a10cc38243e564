"""Alternating sign trapezoids, column strict shifted plane partitions,
(s,t)-trees and non-intersecting lattice paths, with their joint
three-statistic generating functions computed by three independent routes
(direct enumeration, operator formula, binomial determinant) in exact
arithmetic."""

from . import cssp, detform, exactalg, operatorform, pathfam, sttree, trapezoid
from .exactalg import Gf, MPoly, binomial, det_fraction_free

__version__ = "0.1.0"

__all__ = [
    "Gf", "MPoly", "binomial", "det_fraction_free",
    "cssp", "detform", "exactalg", "operatorform", "pathfam", "sttree",
    "trapezoid",
]
