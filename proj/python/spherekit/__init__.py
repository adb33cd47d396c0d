"""Toolkit for balanced simplicial complexes.

Exact simplicial homology (integer, rational, mod p), recognition
predicates (spheres, balls, manifolds, neighborliness, flag symmetry),
canonical forms and automorphism groups, ear decompositions and shellings,
and isomorph-free censuses of balanced spheres.
"""

from ._spherekit import (
    Complex,
    InputError,
    PreconditionError,
    are_isomorphic,
    automorphism_group,
    boundary_complex,
    canonical_form,
    construct,
    construction_names,
    dehn_sommerville,
    deletion,
    enumerate_balanced_spheres,
    find_ear_decomposition,
    find_proper_coloring,
    find_shelling,
    homology,
    is_closed_manifold,
    is_homology_ball,
    is_homology_sphere,
    is_k_neighborly,
    join,
    link,
    rank_selected,
    star,
)

__all__ = [
    "Complex",
    "InputError",
    "PreconditionError",
    "are_isomorphic",
    "automorphism_group",
    "boundary_complex",
    "canonical_form",
    "construct",
    "construction_names",
    "dehn_sommerville",
    "deletion",
    "enumerate_balanced_spheres",
    "find_ear_decomposition",
    "find_proper_coloring",
    "find_shelling",
    "homology",
    "is_closed_manifold",
    "is_homology_ball",
    "is_homology_sphere",
    "is_k_neighborly",
    "join",
    "link",
    "rank_selected",
    "star",
]
