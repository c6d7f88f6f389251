"""Combinatorial dessins for real trigonal curves on ruled surfaces.

Disk maps with colored, directed decorations; the move calculus relating
them; skeleton extraction and realization; block gluing; deformation-class
search; and bundled chamber atlases with real-scheme parsing.
"""

__version__ = "0.1.0"

from .dessin import (
    Dessin,
    ValidationReport,
    canonical_key,
    check,
    isomorphic,
    mirror_dessin,
    predicates,
    regions,
    segments,
    validate,
)
from .diskmap import DiskMap, build_map, canonical_code

__all__ = [
    "DiskMap",
    "build_map",
    "canonical_code",
    "Dessin",
    "ValidationReport",
    "validate",
    "check",
    "segments",
    "regions",
    "predicates",
    "canonical_key",
    "isomorphic",
    "mirror_dessin",
    "__version__",
]
