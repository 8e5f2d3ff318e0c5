"""Checks that embody the structural results about strongly regular q-ary graphs."""

from qsrg.analysis.classical import (
    ClassicalGraph,
    ClassicalSrgParams,
    collapse,
    connected_components,
    verify_classical_srg,
)
from qsrg.analysis.design import (
    DesignCounterexample,
    SubspaceDesign,
    design_from_point_lists,
    neighborhood_design,
    verify_design,
)
from qsrg.analysis.identity import IdentityCheck, parameter_identity, projective_count_decompose
from qsrg.analysis.incidence import BipartiteIncidence, IncidenceMetrics, girth_and_diameter, incidence_metrics
from qsrg.analysis.polarity import (
    congruent_up_to_scalar,
    is_alternating,
    recover_alternating_form,
    transform_graph,
)

__all__ = [
    "BipartiteIncidence",
    "ClassicalGraph",
    "ClassicalSrgParams",
    "DesignCounterexample",
    "IdentityCheck",
    "IncidenceMetrics",
    "SubspaceDesign",
    "collapse",
    "congruent_up_to_scalar",
    "connected_components",
    "design_from_point_lists",
    "girth_and_diameter",
    "incidence_metrics",
    "is_alternating",
    "neighborhood_design",
    "parameter_identity",
    "projective_count_decompose",
    "recover_alternating_form",
    "transform_graph",
    "verify_classical_srg",
    "verify_design",
]
