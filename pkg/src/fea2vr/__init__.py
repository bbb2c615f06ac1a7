"""fea2vr: FEA solver listings -> viewer-ready triangle mesh.

Parses node/element/surface-node/result text listings, extracts the model
skin via per-element node maps, and writes a compact JSON mesh with
per-vertex scalar fields, ready for interactive visual and audio
inspection in the bundled viewer.
"""

from .errors import (
    ConversionError,
    ElementError,
    Fea2vrError,
    ListingError,
    VrMeshFormatError,
)
from .listing import (
    ElementRecord,
    NodeRecord,
    ParseWarning,
    parse_element_list,
    parse_node_list,
    parse_result_list,
    parse_surface_node_list,
)
from .mesh import ConversionReport, ScalarField, VrMesh
from .model import ElementClass, classify, compute_node_map, parse_type_mapping
from .pipeline import BuildOptions, build_mesh, remap_field, renumber

__version__ = "0.1.0"

__all__ = [
    "BuildOptions",
    "ConversionError",
    "ConversionReport",
    "ElementClass",
    "ElementError",
    "ElementRecord",
    "Fea2vrError",
    "ListingError",
    "NodeRecord",
    "ParseWarning",
    "ScalarField",
    "VrMesh",
    "VrMeshFormatError",
    "build_mesh",
    "classify",
    "compute_node_map",
    "parse_element_list",
    "parse_node_list",
    "parse_result_list",
    "parse_surface_node_list",
    "parse_type_mapping",
    "remap_field",
    "renumber",
    "__version__",
]
