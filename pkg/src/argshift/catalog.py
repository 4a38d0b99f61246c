"""Catalog files: JSON descriptions of Lie algebras with optional expected values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .liealg import LieAlgebra, validate
from .poly import Polynomial, parse_polynomial
from .semiinv import SemiInvariant, verify_semiinvariant


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    dim: int
    algebra: LieAlgebra
    casimirs: list[Polynomial] = field(default_factory=list)
    semi_invariants: list[SemiInvariant] = field(default_factory=list)
    expected: dict = field(default_factory=dict)


def bundled_catalog_path() -> Path:
    return Path(str(resources.files("argshift") / "data" / "catalog.json"))


def _parse_brackets(raw: dict, dim: int, name: str) -> dict:
    out = {}
    for key, coeffs in raw.items():
        try:
            i, j = (int(s) for s in key.split(","))
            out[(i - 1, j - 1)] = {int(k) - 1: Fraction(v) for k, v in coeffs.items()}
        except (ValueError, AttributeError) as exc:
            raise CatalogError(f"{name}: bad bracket entry {key!r}: {exc}") from None
    return out


def parse_entry(obj: dict) -> CatalogEntry:
    for key in ("name", "dim", "brackets"):
        if key not in obj:
            raise CatalogError(f"catalog entry is missing {key!r}")
    name, dim = obj["name"], obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise CatalogError(f"{name}: dim must be a positive integer")
    L = validate(_parse_brackets(obj["brackets"], dim, name), dim, name=name)

    casimirs = []
    for text in obj.get("casimirs", []):
        f = parse_polynomial(text, dim)
        w = verify_semiinvariant(L, f) if f else None
        if w is None or any(w):
            raise CatalogError(f"{name}: casimir {text!r} is not an invariant")
        casimirs.append(f)
    semis = []
    for text in obj.get("semi_invariants", []):
        g = parse_polynomial(text, dim)
        w = verify_semiinvariant(L, g) if g else None
        if w is None:
            raise CatalogError(f"{name}: {text!r} is not a semi-invariant")
        semis.append(SemiInvariant(g, w))
    L.casimirs = tuple(casimirs)
    L.known_semi_invariants = tuple(s.poly for s in semis)
    return CatalogEntry(name, dim, L, casimirs, semis, dict(obj.get("expected", {})))


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    """Read a catalog file: a JSON list of entries, ``{"algebras": [...]}``, or one entry."""
    path = bundled_catalog_path() if path is None else Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(data, dict):
        data = data["algebras"] if "algebras" in data else [data]
    if not isinstance(data, list):
        raise CatalogError(f"{path}: expected a list of algebras")
    return [parse_entry(obj) for obj in data]
