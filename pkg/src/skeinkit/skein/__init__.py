"""Temperley-Lieb algebra, Jones-Wenzl projectors and bracket engines."""

from .bracket import (bracket_state_sum, bracket_sweep, bracket_sweep_fraction,
                      width_budget)
from .slices import (SliceProgram, cable_program, replace_projectors_with_identity,
                     slice_with_origins, to_slice_program)
from .tl import (TLElement, all_matchings, count_through_strands, fused_element,
                 jones_wenzl, jones_wenzl_two_sided, tl_multiply)

__all__ = [
    "SliceProgram", "TLElement", "all_matchings", "bracket_state_sum",
    "bracket_sweep", "bracket_sweep_fraction", "cable_program",
    "count_through_strands", "fused_element", "jones_wenzl",
    "jones_wenzl_two_sided", "replace_projectors_with_identity",
    "slice_with_origins", "tl_multiply", "to_slice_program", "width_budget",
]

from .fusion import (FusionTerm, complement_through_strands,  # noqa: E402
                     fusion_coefficient, fusion_expand)

__all__ += ["FusionTerm", "complement_through_strands", "fusion_coefficient",
            "fusion_expand"]
