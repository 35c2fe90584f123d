"""Graded cyclotomic Hecke algebras in exact arithmetic.

Modules, bottom up: ``scalars`` (fields, rational functions, Laurent
polynomials), ``combin`` (tableau combinatorics), ``hecke`` (the algebra and
its Murphy bases), ``seminormal`` (semisimple lift and specialisation),
``klr`` (KLR generators inside the Hecke algebra) and ``graded`` (psi bases,
cell modules, decomposition matrices, trace forms).
"""

from .combin import QuiverData, StandardTableau
from .scalars import Laurent, PrimeField, RationalField, make_field

__all__ = ["QuiverData", "StandardTableau", "Laurent", "PrimeField", "RationalField", "make_field"]
__version__ = "0.1.0"
