"""
Named example classes shipped with the package
"""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from gwpower.cli.grammar import parse_expression, parse_gw, parse_variety, scalar_literals
from gwpower.core.config import get_settings
from gwpower.exceptions import CatalogError, ParseError
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField
from gwpower.motivic.classes import VarietyClass
from gwpower.utils.helpers import get_package_root, load_json


class CatalogEntry(BaseModel):
    kind: Literal["gw", "variety"] = Field(..., description="Grammar the expression is written in")
    expr: str = Field(..., min_length=1)
    description: str = ""


class Catalog(BaseModel):
    """Named expressions; every entry parses under its grammar"""

    entries: Dict[str, CatalogEntry] = Field(default_factory=dict)

    class Config:
        json_schema_extra = {
            "example": {
                "entries": {
                    "P2": {"kind": "variety", "expr": "P^2", "description": "Projective plane"},
                    "chi-P2": {"kind": "gw", "expr": "H + <1>", "description": "chi_c of the projective plane"},
                }
            }
        }

    def entry(self, name: str) -> CatalogEntry:
        if name not in self.entries:
            raise CatalogError(f"unknown catalog entry '{name}' (known: {', '.join(sorted(self.entries))})")
        return self.entries[name]

    def defined_over(self, name: str, field: BaseField) -> bool:
        """Whether every square-class scalar of the entry is a unit of `field`"""
        entry = self.entry(name)
        return all(field.is_unit(value) for value in scalar_literals(parse_expression(entry.expr, entry.kind)))

    def available(self, field: BaseField) -> List[str]:
        return [name for name in self.entries if self.defined_over(name, field)]

    def resolve(self, name: str, field: BaseField, kind: Optional[str] = None) -> Union[GwElement, VarietyClass]:
        """Evaluate an entry over `field`, checking its kind when one is required"""
        entry = self.entry(name)
        if kind is not None and entry.kind != kind:
            raise CatalogError(f"catalog entry '{name}' is a {entry.kind} expression, expected {kind}")
        if not self.defined_over(name, field):
            raise CatalogError(f"catalog entry '{name}' is not defined over {field.label}")
        if entry.kind == "gw":
            return parse_gw(entry.expr, field)
        return parse_variety(entry.expr, field)


def default_catalog_path() -> Path:
    """CATALOG_PATH from the environment, else the packaged catalog"""
    configured = get_settings().CATALOG_PATH
    return Path(configured) if configured else get_package_root() / "data" / "catalog.json"


def load_catalog(path: Optional[str] = None) -> Catalog:
    """
    Load and validate a catalog file

    Args:
        path: JSON file; defaults to `default_catalog_path()`

    Returns:
        Catalog whose every expression has been parsed once

    Raises:
        CatalogError: Missing file, malformed JSON/schema, or an entry that does not parse
    """
    catalog_path = Path(path) if path else default_catalog_path()
    if not catalog_path.exists():
        raise CatalogError(f"catalog file not found: {catalog_path}")
    try:
        catalog = Catalog.model_validate(load_json(str(catalog_path)))
    except (ValueError, ValidationError) as e:
        raise CatalogError(f"invalid catalog {catalog_path}: {e}") from e

    for name, entry in catalog.entries.items():
        try:
            parse_expression(entry.expr, entry.kind)
        except ParseError as e:
            raise CatalogError(f"entry '{name}' does not parse: {e}") from e
    logger.debug(f"Loaded {len(catalog.entries)} catalog entries from {catalog_path}")
    return catalog


__all__ = ["CatalogEntry", "Catalog", "default_catalog_path", "load_catalog"]
