"""Sparse noncommutative polynomial arithmetic over an exact cyclotomic
field, with straightening-rule rewriting, tensor-square products, a local
confluence checker with bounded completion, and a degree-bounded
linear-algebra ideal-membership oracle."""

from qborel.ncalg.poly import Algebra, NcPoly, TensorPoly, word_key
from qborel.ncalg.rules import RuleSystem, RewriteBudgetError
from qborel.ncalg.ideal import IdealOracle, derive_rules

__all__ = ["Algebra", "NcPoly", "TensorPoly", "word_key", "RuleSystem",
           "RewriteBudgetError", "IdealOracle", "derive_rules"]
