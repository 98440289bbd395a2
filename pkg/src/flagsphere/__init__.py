"""Flag simplicial spheres: construction, certification and search."""

from .certification import (
    CertificationReport,
    contractible_edges,
    enumerate_induced_equators,
    is_suspension,
    question_1_5_report,
)
from .complex import (
    Graph,
    SimplicialComplex,
    boundary_complex,
    clique_complex,
    cone,
    cross_polytope,
    from_facets,
    induced,
    is_flag,
    join,
    link,
    minimal_nonfaces,
    one_skeleton,
    suspension,
)
from .constructions import delta_12_33, diamond, gamma1, gamma2, k_fold_join, tau
from .homology import Field, betti_numbers, euler_characteristic, lbt_check
from .io import read_complex, write_complex
from .isomorphism import is_isomorphic
from .recognition import certify_3_sphere, is_closed_3_manifold, verify_shelling
from .search import MoveLog, WalkConfig, harvest, random_walk
from .vectors import face_vectors, f_vector

__all__ = [
    "CertificationReport", "Field", "Graph", "MoveLog", "SimplicialComplex", "WalkConfig",
    "betti_numbers", "boundary_complex", "certify_3_sphere", "clique_complex", "cone",
    "contractible_edges", "cross_polytope", "delta_12_33", "diamond", "enumerate_induced_equators",
    "euler_characteristic", "f_vector", "face_vectors", "from_facets", "gamma1", "gamma2",
    "harvest", "induced", "is_closed_3_manifold", "is_flag", "is_isomorphic", "is_suspension",
    "join", "k_fold_join", "lbt_check", "link", "minimal_nonfaces", "one_skeleton",
    "question_1_5_report", "random_walk", "read_complex", "suspension", "tau",
    "verify_shelling", "write_complex",
]
