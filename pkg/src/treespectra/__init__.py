"""Exact and numeric certificates for trees whose Laplacian reaches the
maximal eigenvalue multiplicity p-1 (p = number of pendant vertices).

The package decides when the bound is attained, lists the attaining
eigenvalues, constructs explicit eigenvector bases, classifies the
multiplicity of the eigenvalue 1, and sweeps all small trees with every
verdict cross-checked between independent exact and floating-point routes.
"""

__version__ = "0.1.0"

from .trees import (
    Tree,
    TreePath,
    VertexClassification,
    from_edge_list,
    single_vertex,
    parse_edge_list_text,
    classify_vertices,
    distance,
    path_between,
    glue_at_vertex,
    remove_branch,
    nodes_mod3,
)
from .exact import (
    LambdaParam,
    IntPolynomial,
    laplacian,
    rational_nullity,
    char_poly,
    cyclotomic,
    minimal_poly_lambda,
    root_multiplicity,
    multiplicity_exact,
)
from .numeric import (
    Spectrum,
    eigen_symmetric,
    cluster_multiplicity,
    residual_norm,
    numeric_rank,
)
from .construct import (
    EigenPair,
    ConstructionTrace,
    path_eigenpair,
    path_internal_zero_vector,
    extend_by_zeros,
    prune_pendant_zero,
    nullspace_with_zeros,
    eigenbasis_extremal,
    signless_pattern_vector,
)
from .classify import (
    CongruenceCertificate,
    FamilyFlags,
    GammaWitness,
    ClassificationReport,
    pendant_distance_gcd,
    admissible_q,
    is_extremal,
    extremal_lambda_set,
    has_unit_extremal,
    family_membership,
    in_gamma,
    classify_m1,
)
from .census import (
    ORDER_CAP,
    CatalogEntry,
    free_trees,
    canonical_form,
    canonical_relabel,
    prufer_count_oracle,
    tree_name,
    build_catalog,
)
from . import errors

__all__ = [
    "__version__",
    "errors",
    # trees
    "Tree",
    "TreePath",
    "VertexClassification",
    "from_edge_list",
    "single_vertex",
    "parse_edge_list_text",
    "classify_vertices",
    "distance",
    "path_between",
    "glue_at_vertex",
    "remove_branch",
    "nodes_mod3",
    # exact
    "LambdaParam",
    "IntPolynomial",
    "laplacian",
    "rational_nullity",
    "char_poly",
    "cyclotomic",
    "minimal_poly_lambda",
    "root_multiplicity",
    "multiplicity_exact",
    # numeric
    "Spectrum",
    "eigen_symmetric",
    "cluster_multiplicity",
    "residual_norm",
    "numeric_rank",
    # construct
    "EigenPair",
    "ConstructionTrace",
    "path_eigenpair",
    "path_internal_zero_vector",
    "extend_by_zeros",
    "prune_pendant_zero",
    "nullspace_with_zeros",
    "eigenbasis_extremal",
    "signless_pattern_vector",
    # classify
    "CongruenceCertificate",
    "FamilyFlags",
    "GammaWitness",
    "ClassificationReport",
    "pendant_distance_gcd",
    "admissible_q",
    "is_extremal",
    "extremal_lambda_set",
    "has_unit_extremal",
    "family_membership",
    "in_gamma",
    "classify_m1",
    # census
    "ORDER_CAP",
    "CatalogEntry",
    "free_trees",
    "canonical_form",
    "canonical_relabel",
    "prufer_count_oracle",
    "tree_name",
    "build_catalog",
]
