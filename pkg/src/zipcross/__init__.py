"""Exact crossing numbers of small multigraphs, scaled up by splitting along
minimal edge cuts of size at most three (zip products)."""

from .canon import canonical_key, isomorphic
from .cuts import EdgeCut, Bundle, enumerate_min_cuts, find_bundle, find_coherent_bundles
from .graph import (
    MultiGraph,
    contract_set,
    cross_identify,
    delete_edge,
    delete_vertex,
    join_independent,
    make_graph,
    simplify,
    subdivide,
    cartesian_product,
)
from .mcr import minor_crossing_number, mcr_zip_check, tree_product_bound
from .planar import CrossingCertificate, crossing_number, euler_lower_bound, is_planar, verify_certificate
from .zipping import (
    ZipSpec,
    cr_via_decomposition,
    decompose_internally_4ec,
    extract_critical_subgraph,
    is_crossing_critical,
    split_at_cut,
    zip_cover,
    zip_product,
)

__all__ = [
    "Bundle",
    "CrossingCertificate",
    "EdgeCut",
    "MultiGraph",
    "ZipSpec",
    "canonical_key",
    "cartesian_product",
    "contract_set",
    "cr_via_decomposition",
    "cross_identify",
    "crossing_number",
    "decompose_internally_4ec",
    "delete_edge",
    "delete_vertex",
    "enumerate_min_cuts",
    "euler_lower_bound",
    "extract_critical_subgraph",
    "find_bundle",
    "find_coherent_bundles",
    "is_crossing_critical",
    "is_planar",
    "isomorphic",
    "join_independent",
    "make_graph",
    "mcr_zip_check",
    "minor_crossing_number",
    "simplify",
    "split_at_cut",
    "subdivide",
    "tree_product_bound",
    "verify_certificate",
    "zip_cover",
    "zip_product",
]
