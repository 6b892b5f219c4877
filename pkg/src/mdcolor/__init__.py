"""Monochromatic disconnection (MD) colorings of graphs.

An edge coloring is an MD-coloring when every two vertices are split by the
removal of a single color class; md(G) is the largest number of colors such a
coloring can use.
"""

from mdcolor.certificate import ClosureCertificate, check_certificate, md1_certificate
from mdcolor.coloring import EdgeColoring, canonicalize, separating_colors, verify_md
from mdcolor.errors import DomainError, FormatError
from mdcolor.graph import Graph, block_decomposition, build_graph, complement, components
from mdcolor.solver import MdResult, md_decide, md_exact, upper_bound

__all__ = [
    "ClosureCertificate",
    "DomainError",
    "EdgeColoring",
    "FormatError",
    "Graph",
    "MdResult",
    "block_decomposition",
    "build_graph",
    "canonicalize",
    "check_certificate",
    "complement",
    "components",
    "md1_certificate",
    "md_decide",
    "md_exact",
    "separating_colors",
    "upper_bound",
    "verify_md",
]
