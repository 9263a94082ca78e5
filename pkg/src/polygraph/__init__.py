"""Graph products of left LCM monoids, their inverse hulls, and polygraph
monoid arithmetic."""

from .graph import (
    ComponentSpec,
    Graph,
    GraphError,
    GraphProduct,
    are_adjacent,
    format_graph,
    parse_graph,
)
from .gproduct import (
    ComponentElement,
    GPElement,
    component_embed,
    final_component,
    hclf,
    identity,
    initial_component,
    lclm,
    left_divide,
    make_element,
    multiply,
    normal_form,
    right_divide,
)
from .ihull import (
    IHElement,
    IHPair,
    Relation,
    ZERO,
    check_relations,
    eval_word,
    generate_presentation,
    green_H,
    green_L,
    green_R,
    ih_identity,
    ih_inverse,
    ih_multiply,
    is_idempotent,
    max_above,
    natural_le,
    parse_ihelement,
)
from .ragroup import GroupWord, eta, group_identity, group_reduce

__all__ = [
    "ComponentElement",
    "ComponentSpec",
    "GPElement",
    "Graph",
    "GraphError",
    "GraphProduct",
    "GroupWord",
    "IHElement",
    "IHPair",
    "Relation",
    "ZERO",
    "are_adjacent",
    "check_relations",
    "component_embed",
    "eta",
    "eval_word",
    "final_component",
    "format_graph",
    "generate_presentation",
    "green_H",
    "green_L",
    "green_R",
    "group_identity",
    "group_reduce",
    "hclf",
    "identity",
    "ih_identity",
    "ih_inverse",
    "ih_multiply",
    "initial_component",
    "is_idempotent",
    "lclm",
    "left_divide",
    "make_element",
    "max_above",
    "multiply",
    "natural_le",
    "normal_form",
    "parse_graph",
    "parse_ihelement",
    "right_divide",
]
