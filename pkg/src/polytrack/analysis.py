"""Lemma checkers for completed front-tracking runs."""

from polytrack._internal.character.diamonds import (
    InteractionDiamond,
    check_diamond_preservation,
    interaction_diamonds,
)
from polytrack._internal.character.districts import (
    District,
    DistrictNetwork,
    block_type,
    build_districts,
    check_district_decay,
    format_block_type,
)
from polytrack._internal.character.edge_character import (
    EdgeCharacter,
    check_character_constancy,
    check_volume_ordering,
    classify_edge,
    classify_edges,
)
from polytrack._internal.functional.complete_diamonds import (
    CompleteDiamond,
    DiamondKind,
    Point,
    find_complete_diamonds,
)
from polytrack._internal.functional.density_bound import check_density_bound
from polytrack._internal.functional.density_functional import (
    CompleteDiamondSet,
    FunctionalSample,
    a_of_t,
    complete_diamonds,
)
from polytrack._internal.functional.diamond_inequalities import (
    check_diamond_inequalities,
    rarefaction_margin,
)
from polytrack._internal.functional.lifespan import (
    CharacteristicBlowup,
    LifespanDiagnostic,
    characteristic_blowup,
    exact_blowup_time,
    initial_gradient_fields,
    lifespan_bound,
    lifespan_diagnostic,
    riccati_coefficient,
)
from polytrack._internal.harness.trace_analyser import (
    combine_outcomes,
    min_density_series,
)

__all__ = [
    "InteractionDiamond",
    "check_diamond_preservation",
    "interaction_diamonds",
    "District",
    "DistrictNetwork",
    "block_type",
    "build_districts",
    "check_district_decay",
    "format_block_type",
    "EdgeCharacter",
    "check_character_constancy",
    "check_volume_ordering",
    "classify_edge",
    "classify_edges",
    "CompleteDiamond",
    "DiamondKind",
    "Point",
    "find_complete_diamonds",
    "check_density_bound",
    "CompleteDiamondSet",
    "FunctionalSample",
    "a_of_t",
    "complete_diamonds",
    "check_diamond_inequalities",
    "rarefaction_margin",
    "CharacteristicBlowup",
    "LifespanDiagnostic",
    "characteristic_blowup",
    "exact_blowup_time",
    "initial_gradient_fields",
    "lifespan_bound",
    "lifespan_diagnostic",
    "riccati_coefficient",
    "combine_outcomes",
    "min_density_series",
]
