"""
Command-line surface: shared grammar, catalog, commands and rendering
"""

from gwpower.cli.catalog import Catalog, CatalogEntry, load_catalog
from gwpower.cli.grammar import parse_expression, parse_gw, parse_variety, print_tree

__all__ = ["Catalog", "CatalogEntry", "load_catalog", "parse_expression", "parse_gw", "parse_variety", "print_tree"]
