"""Exact posets, P-partitions, generating functions and distributive lattices,
with verifiers for correlation inequalities on linear extensions."""
from .enumeration import (count_linear_extensions, count_p_partitions, enumerate_linear_extensions,
                          enumerate_p_partitions, maj_generating_function, order_polynomial)
from .genfun import order_poly, profile_gf, schur_poly
from .kernels import active as kernel_backend
from .lattice import ad_check, build_lattice, verify_lattice
from .poly import MultiPoly
from .poset import (Poset, antichain, build_poset, chain, dual, from_relations, induced_subposet,
                    linear_sum, parallel_sum, parse_poset_text, skew_shape_poset)

__all__ = [
    "MultiPoly", "Poset", "ad_check", "antichain", "build_lattice", "build_poset", "chain",
    "count_linear_extensions", "count_p_partitions", "dual", "enumerate_linear_extensions",
    "enumerate_p_partitions", "from_relations", "induced_subposet", "kernel_backend", "linear_sum",
    "maj_generating_function", "order_poly", "order_polynomial", "parallel_sum", "parse_poset_text",
    "profile_gf", "schur_poly", "skew_shape_poset", "verify_lattice",
]
