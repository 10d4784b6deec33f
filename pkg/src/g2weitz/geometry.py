"""Geometry input files.

A geometry file is a JSON document:

    {
      "dim": 7,
      "structure": ["1/2*e17", ..., "0"],      # the coframe differentials
      "phi": "e127+e347-e567+...",             # degree-3 structure form
      "associative_span": [5, 6, 7],           # optional
      "convention": "plus" | "minus",          # optional; inferred if absent
      "comment": "..."                         # optional, ignored
    }

Loading runs the gates in order: schema, notation, Jacobi identity, metric
compatibility.  Failures raise GeometryError; nothing is silently defaulted.
"""

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .g2algebra import G2Data
from .liealgebra import LieAlgebraStructure, jacobi_check
from .notation import parse_form


class GeometryError(ValueError):
    pass


@dataclass
class GeometryFile:
    dim: int
    structure: list
    phi: str
    associative_span: Optional[list] = None
    convention: Optional[str] = None
    comment: Optional[str] = None


def bundled_path(name):
    """Filesystem path of a geometry shipped with the package."""
    return resources.files("g2weitz").joinpath("data", name)


BUNDLED = ("flat_r7.json", "n28_times_r.json", "solv_s.json")


def load_geometry(path):
    """Load and gate a geometry file; returns (algebra, structure, span)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise GeometryError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GeometryError(f"{path} is not valid JSON: {exc}") from exc
    return geometry_from_dict(raw, source=str(path))


def geometry_from_dict(raw, source="<dict>"):
    for field in ("dim", "structure", "phi"):
        if field not in raw:
            raise GeometryError(f"{source}: missing field {field!r}")
    dim = raw["dim"]
    if not isinstance(dim, int) or dim != 7:
        raise GeometryError(f"{source}: only dimension 7 geometries are supported")
    structure = raw["structure"]
    if not isinstance(structure, list) or len(structure) != dim:
        raise GeometryError(f"{source}: structure list must have {dim} entries")
    try:
        differentials = [parse_form(s, dim, degree=2) for s in structure]
        phi = parse_form(raw["phi"], dim, degree=3)
    except ValueError as exc:
        raise GeometryError(f"{source}: {exc}") from exc

    algebra = LieAlgebraStructure.from_structure_forms(differentials)
    if not jacobi_check(algebra):
        raise GeometryError(f"{source}: structure constants violate the Jacobi identity")

    try:
        g2 = G2Data.from_phi(phi)
    except ValueError as exc:
        raise GeometryError(f"{source}: {exc}") from exc

    declared = raw.get("convention")
    if declared is not None and declared != g2.convention:
        raise GeometryError(
            f"{source}: declared convention {declared!r} but the form satisfies "
            f"the {g2.convention!r} relation"
        )

    span = raw.get("associative_span")
    if span is not None:
        if (
            not isinstance(span, list)
            or len(span) != 3
            or any(not isinstance(i, int) for i in span)
        ):
            raise GeometryError(f"{source}: associative_span must be three integers")
        span = tuple(span)
    return algebra, g2, span
