"""Exact counting and classification of finite-index subgroups of the
modular group (and of the free product of Z with Z/2Z) through a calculus of
trivalent diagrams: finite sets of arcs acted on by a rotation and an
involution.

The main entry points:

- `series`: exact truncated power series and the Euler/Moebius transforms;
- `cycleindex`: cycle index series, dense and separable-factored;
- `diagram`: the diagram data model and its decision procedures
  (morphism existence, isomorphism, conjugacy, normality);
- `census`: exhaustive brute-force enumeration at small size;
- `counting`: the generating-series pipelines (subgroup counts, conjugacy
  class counts, dense and fast routes);
- `cli`: the `trivalent` command-line tool.
"""

from .series import (
    TruncSeries,
    euler_phi,
    euler_transform,
    inverse_euler_transform,
    moebius_mu,
)
from .cycleindex import (
    CycleType,
    DenseCycleIndex,
    FactoredCycleIndex,
    all_permutations_factored,
    count_commuting_order_p,
    cycles_dense,
    cycles_of_length_dense,
    permutations_of_order_dividing,
)
from .diagram import (
    BicoloredGraph,
    Diagram,
    DiagramParseError,
    PointedDiagram,
    automorphism_order,
    automorphisms,
    barycentric_graph,
    canonical_code,
    canonical_representative,
    conjugate_subgroups,
    is_normal,
    parse_diagram_text,
    pointed_isomorphic,
    pointed_morphism,
    subgroup_includes,
)
from .census import CensusReport, enumerate_normal, enumerate_size
from .counting import (
    SeriesBundle,
    conjugacy_class_series,
    conjugacy_class_series_dense,
    connected_egf,
    disconnected_egf,
    disconnected_egf_by_recurrence,
    disconnected_types_series,
    series_bundle,
    subgroup_series,
)

__version__ = "0.1.0"

__all__ = [
    "TruncSeries",
    "euler_phi",
    "euler_transform",
    "inverse_euler_transform",
    "moebius_mu",
    "CycleType",
    "DenseCycleIndex",
    "FactoredCycleIndex",
    "all_permutations_factored",
    "count_commuting_order_p",
    "cycles_dense",
    "cycles_of_length_dense",
    "permutations_of_order_dividing",
    "BicoloredGraph",
    "Diagram",
    "DiagramParseError",
    "PointedDiagram",
    "automorphism_order",
    "automorphisms",
    "barycentric_graph",
    "canonical_code",
    "canonical_representative",
    "conjugate_subgroups",
    "is_normal",
    "parse_diagram_text",
    "pointed_isomorphic",
    "pointed_morphism",
    "subgroup_includes",
    "CensusReport",
    "enumerate_normal",
    "enumerate_size",
    "SeriesBundle",
    "conjugacy_class_series",
    "conjugacy_class_series_dense",
    "connected_egf",
    "disconnected_egf",
    "disconnected_egf_by_recurrence",
    "disconnected_types_series",
    "series_bundle",
    "subgroup_series",
]
