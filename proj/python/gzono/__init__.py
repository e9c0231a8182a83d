"""Face vectors of graphical zonotopes, quadrilateral flips and n-gon triangulations.

Graphs use 1-based vertex labels. Sign vectors are strings over '0', '+', '-'
indexed by edge order, where '+' orients edge ij (i < j) from i to j.
"""

from ._core import (
    CapExceeded,
    Graph,
    ParseError,
    apply_flip,
    count_acyclic_orientations,
    count_full_caterpillar_vectors,
    covectors,
    face_vector,
    face_vector_formula,
    fan_triangulation,
    find_flip_quads,
    flip_bijection,
    flip_equivalence_search,
    is_covector,
    ngon_table,
    parse_graph,
    polygon_triangulations,
    read_graph,
    total_faces,
    tree_shape_corpus,
    verify_flip,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "ParseError",
    "apply_flip",
    "count_acyclic_orientations",
    "count_full_caterpillar_vectors",
    "covectors",
    "face_vector",
    "face_vector_formula",
    "fan_triangulation",
    "find_flip_quads",
    "flip_bijection",
    "flip_equivalence_search",
    "is_covector",
    "ngon_table",
    "parse_graph",
    "polygon_triangulations",
    "read_graph",
    "total_faces",
    "tree_shape_corpus",
    "verify_flip",
]

__version__ = "0.1.0"
