"""
Power structures on GW(k): a_*, McGarraghy symmetric powers and morphism checks
"""

from gwpower.structures.a_star import AStructure, a_generator, a_n, cup_product_vanishes, get_a_structure, torsion_term
from gwpower.structures.disc_probe import probe_discriminant_exponent
from gwpower.structures.mcgarraghy import NonFactorialStructure, mcgarraghy_sym
from gwpower.structures.morphisms import MAP_NAMES, named_map, respects_check

__all__ = [
    "AStructure",
    "a_generator",
    "a_n",
    "cup_product_vanishes",
    "get_a_structure",
    "torsion_term",
    "probe_discriminant_exponent",
    "NonFactorialStructure",
    "mcgarraghy_sym",
    "MAP_NAMES",
    "named_map",
    "respects_check",
]
