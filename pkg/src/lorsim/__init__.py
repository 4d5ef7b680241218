"""Weakly-irreducible Lorentz stabilizer algebras and their geometry.

The package implements, with exact rational arithmetic wherever a rank or
membership decision is made:

* the Minkowski space of signature (1, n+1) in an isotropic frame, its
  light cone and the boundary chart identifying the punctured boundary of
  hyperbolic space with Euclidean E (`minkowski`);
* the Lie algebra of eta-skew maps preserving an isotropic line, as
  triples (scalar, skew, translation), with brackets, closures,
  projections and exponentials (`liealg`);
* two independent deciders for weak irreducibility, one through invariant
  affine subspaces of the boundary action, one through invariant subspaces
  of the ambient representation (`invariance`);
* the four-type classification of weakly-irreducible subalgebras with
  constructors and exact round trips (`classify`);
* the dictionary to similarity transformations of E, including screw
  dilations and screw isometries (`simgroup`);
* the hyperboloid model with constructive transport elements and the
  simple-transitivity and non-transitivity witnesses (`hyperbolic`).
"""

from .minkowski import MinkowskiSpace, QSqrt2
from .liealg import (
    LieTriple,
    Subalgebra,
    bracket,
    center_and_commutant,
    dilation_matrix,
    embed_matrix,
    exp_triple,
    full_algebra,
    lie_closure,
    project_parts,
    rotation_matrix,
    so_basis,
    subalgebra_from_matrices,
    translation_matrix,
    triple_a,
    triple_from_matrix,
    triple_k,
    triple_n,
)
from .invariance import (
    AffineField,
    InvariantCertificate,
    WIVerdict,
    affine_action,
    common_invariant_subspaces,
    find_invariant_affine,
    find_invariant_V_subspace,
    is_weakly_irreducible,
)
from .classify import (
    Classification,
    GroupModel,
    catalog_B,
    classify,
    construct_type1,
    construct_type2,
    construct_type3,
    construct_type4,
    group_type_of,
)
from .simgroup import (
    ScrewGroup,
    SimTransform,
    boundary_action,
    extract_sim,
    flow_check,
    screw_element,
)
from .hyperbolic import (
    HPoint,
    TransitiveGroupSpec,
    TransportResult,
    freeness_report,
    nontransitivity_witness_KN,
    on_hyperboloid,
    preserves_q_coefficient,
    random_hyperbolic_point,
    simply_transitive_check,
    stabilizer_point,
    transport,
)
from .errors import (
    ChartDomainError,
    DimensionMismatchError,
    EmptyAlgebraError,
    LorsimError,
    NotClosedError,
    NotInNormalPositionError,
    NotIsotropicError,
    NotSkewError,
    NotWeaklyIrreducibleError,
    TransportError,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
