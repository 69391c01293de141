"""Exact rational homology, intersection homology, image homology IM and
kernel cohomology KER of finite simplicial complexes."""

from .exactla import (DimensionMismatch, QMatrix, Rational, Subspace, annihilator, apply_to_subspace, image_basis,
                      kernel_basis, preimage, rank, subspace_contains, subspace_equal, subspace_intersection,
                      subspace_sum)
from .simplicial import (Chain, ChainMap, ComplexError, SimplicialComplex, SimplicialMap, barycentric_subdivision,
                         boundary_matrix, build_complex, collapse_subcomplex, cone, connected_components,
                         disjoint_union, identify_vertices, last_vertex_map, link, product, suspension)
from .homology import (CohomologySpace, HomologySpace, betti_numbers, coboundary, cohomology, cup_product,
                       exactness_defects, homology, induced_cohomology_map, induced_map, mv_connecting, mv_sequence,
                       pairing_matrix)
from .stratify import (Perversity, Stratification, StratificationError, canonical_stratification,
                       custom_perversity, is_pseudomanifold, is_rational_homology_manifold, make_stratification,
                       middle_perversity, parse_perversity, refine_stratification, top_perversity,
                       trivial_stratification, upper_middle_perversity, zero_perversity)
from .imcore import (allowable_chain_group, allowable_test, check_annihilator_identity, check_ideal,
                     check_invariance, check_ker_pullback, check_pushforward, check_smooth, components,
                     image_homology, intersection_homology, iota_image, irreducible_components, kernel_cohomology,
                     kernel_cohomology_via_iota, mv_im_check, rank_table)
from . import corpus
from .documents import DocumentError, complex_from_document, complex_to_document, load_complex, load_map

__version__ = "0.1.0"
