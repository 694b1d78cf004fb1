"""I-графы и обобщённые графы Петерсена: построение, классификация, экспорт."""

from igc_graphs.export import EXPORT_FORMATS, ExportFormatError, export
from igc_graphs.graph import (
    Graph,
    build_igraph,
    build_petersen,
    connected_components,
    girth,
    swap_rims,
)
from igc_graphs.spec import (
    Convention,
    GraphError,
    IGraphSpec,
    InvalidSpecError,
    is_connected_tuple,
    is_gpg_tuple,
    iter_specs,
    max_step,
)

__all__ = [
    "Convention",
    "GraphError",
    "InvalidSpecError",
    "ExportFormatError",
    "IGraphSpec",
    "Graph",
    "build_igraph",
    "build_petersen",
    "connected_components",
    "girth",
    "swap_rims",
    "is_gpg_tuple",
    "is_connected_tuple",
    "iter_specs",
    "max_step",
    "export",
    "EXPORT_FORMATS",
]
