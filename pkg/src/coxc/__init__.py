"""Coxeter-group presentations of reversible and quantum gate sets.

Submodules:

- ``coxeter``: Coxeter matrices, exact root arithmetic, word reduction, Dehn rewriting
- ``gates``: gate semantics and Coxeter matrix extraction
- ``sat``: DIMACS formulas, oracle circuit compilation, identity checks
- ``scheduler``: dependence DAGs, word splitting, Cheeger partitions
- ``relations``: three-generator relator mining
- ``swaptest``: swap-test probability model and state-vector overlaps
"""

from .coxeter import INF, CoxeterGraph, CoxeterMatrix, dehn_reduce, reduce, words_equal
from .errors import CoxcError
from .gates import Gate, extract_coxeter_matrix, gate, product_order

__all__ = [
    "INF",
    "CoxcError",
    "CoxeterGraph",
    "CoxeterMatrix",
    "Gate",
    "dehn_reduce",
    "extract_coxeter_matrix",
    "gate",
    "product_order",
    "reduce",
    "words_equal",
]
