"""Richardson elements for parabolic subgroups of orthogonal and symplectic groups.

Each parabolic ``P(d)`` is given by a symmetric dimension vector ``d``.  The
package draws a line diagram for ``d``, reads off a nilpotent element
``x = sum eps(i, j) e_{i,j}`` of the nilradical, and checks with exact
integer arithmetic that the ``P``-orbit of ``x`` is dense.
"""

from .classify import classify, classify_orth, classify_symp, cross_validate, enumerate_richardson_partitions
from .diagram import assemble, decompose, render_dot, render_text
from .dimvec import DimensionVector, make_dimvec, normalize, parabolic_data, proper_dimvecs
from .element import element_from_diagram, is_nice, richardson_element, richardson_type, support
from .kinds import Kind
from .liealg import LieElement, chevalley_basis, exact_rank
from .partitions import Partition, collapse, dominance_leq, dual
from .verify import full_report, jordan_partition

__all__ = [
    "DimensionVector",
    "Kind",
    "LieElement",
    "Partition",
    "assemble",
    "chevalley_basis",
    "classify",
    "classify_orth",
    "classify_symp",
    "collapse",
    "cross_validate",
    "decompose",
    "dominance_leq",
    "dual",
    "element_from_diagram",
    "enumerate_richardson_partitions",
    "exact_rank",
    "full_report",
    "is_nice",
    "jordan_partition",
    "make_dimvec",
    "normalize",
    "parabolic_data",
    "proper_dimvecs",
    "render_dot",
    "render_text",
    "richardson_element",
    "richardson_type",
    "support",
]
