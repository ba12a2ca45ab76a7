"""Heterotopy algebras: a three-dimensional analogue of Temperley-Lieb diagrams.

Diagrams between two systems of circles are classified up to heterotopy by
admissible colourings of a joined region tree; this package enumerates those
classes and multiplies them exactly over Q[p, q].
"""

from .algebra import (
    AlgebraElement,
    Coefficient,
    CompositionOutcome,
    coeff_add,
    coeff_mul,
    coeff_scale,
    compose,
    compose_h,
    compose_single,
    monomial,
    parse_coefficient,
    partition_compose_oracle,
)
from .boundary import (
    BOTTOM,
    ROOT,
    TOP,
    BoundaryConfig,
    Edge,
    JoinedTree,
    ParseError,
    RegionTree,
    join,
    parse_boundary,
    region_tree,
    render_boundary,
)
from .colouring import (
    HClass,
    PartitionError,
    ShClass,
    chain,
    enumerate_h_classes,
    enumerate_sh_classes,
    h_class_of,
    h_orbit,
    identity_class,
    is_admissible,
    make_sh_class,
    parse_blocks,
)
from .symmetry import (
    ConfigMismatch,
    EdgePermutation,
    SymmetryGroup,
    apply,
    automorphism_group,
    compose_perms,
    inverse,
)
from .tables import (
    LawReport,
    MultiplicationTable,
    check_laws,
    dimensions,
    multiplication_table,
    parse_table,
    serialize_table,
)

__version__ = "0.1.0"
