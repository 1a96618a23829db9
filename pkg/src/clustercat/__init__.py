"""Exact cluster categories of simply-laced Dynkin quivers.

The usual entry point is :class:`ClusterCategory`::

    >>> from clustercat import DynkinType, alternating_orientation, ClusterCategory, enumerate_tilting_sets
    >>> q, _ = alternating_orientation(DynkinType.parse("A3"))
    >>> cc = ClusterCategory(q)
    >>> len(cc), len(enumerate_tilting_sets(cc))
    (9, 14)
"""

from .cluster import (
    Seed,
    check_exchange_conjecture,
    denominator_vector,
    enumerate_seeds,
    matrix_from_quiver,
    mutate_matrix,
    mutate_seed,
    verify_cluster_tilting_bijection,
)
from .dynkin import (
    Bipartition,
    DynkinType,
    Orientation,
    almost_positive_roots,
    alternating_orientation,
    compatibility_degree,
    coxeter_data,
    euler_form,
    positive_roots,
    root_label,
)
from .errors import ClusterCatError
from .homs import ext1_c, ext_mod, hom_c, hom_mod
from .knitting import (
    ClusterCategory,
    DerivedObject,
    Module,
    ShiftedProjective,
    TranslationQuiver,
    cluster_ar_quiver,
    knit_module_ar_quiver,
    zq_window,
)
from .laurent import LaurentPoly
from .mesh import end_quiver, linearize
from .tilting import complements, enumerate_tilting_sets, exchange_graph
from .triangles import exchange_triangles

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "ClusterCatError",
    "ClusterCategory",
    "DerivedObject",
    "DynkinType",
    "LaurentPoly",
    "Module",
    "Orientation",
    "Seed",
    "ShiftedProjective",
    "TranslationQuiver",
    "almost_positive_roots",
    "alternating_orientation",
    "check_exchange_conjecture",
    "cluster_ar_quiver",
    "compatibility_degree",
    "complements",
    "coxeter_data",
    "denominator_vector",
    "end_quiver",
    "enumerate_seeds",
    "enumerate_tilting_sets",
    "euler_form",
    "exchange_graph",
    "exchange_triangles",
    "ext1_c",
    "ext_mod",
    "hom_c",
    "hom_mod",
    "knit_module_ar_quiver",
    "linearize",
    "matrix_from_quiver",
    "mutate_matrix",
    "mutate_seed",
    "positive_roots",
    "root_label",
    "verify_cluster_tilting_bijection",
    "zq_window",
]
