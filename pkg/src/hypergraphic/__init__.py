"""Quasisymmetric invariants of hypergraphs and f-polynomials of hypergraphic polytopes."""

from .families import (
    complete,
    from_graph,
    one_skeleton,
    permutohedron_f,
    pitman_stanley,
    simplicial_complex,
    uniform,
    uniform_f_formula,
)
from .flags import (
    Composition,
    SetComposition,
    canonical_weight,
    compositions_of,
    enumerate_set_compositions,
    type_of,
)
from .hopf import (
    HopfElement,
    TensorElement,
    antipode,
    coproduct,
    counit,
    product,
    psi_q,
    zeta,
    zeta_q,
    zeta_q_alpha,
)
from .hypergraph import (
    EMPTY,
    GuardError,
    Hypergraph,
    canonical_form,
    connected_components,
    contract,
    disjoint_union,
    new_hypergraph,
    rank,
    restrict,
    split_by_flag,
    split_rank,
)
from .polytope import (
    FaceRecord,
    HypergraphicPolytope,
    affine_dim,
    enumerate_faces,
    f_polynomial_geometric,
    face_of_flag,
    geometric_rank,
    minkowski_vertices,
)
from .qsym import Q, QPoly, QSymM, concat, f_polynomial_from_enumerator, linear_combine, plus_one, ps_eval, quasi_shuffle

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name not in {"families", "flags", "hopf", "hypergraph", "polytope", "qsym"}]
