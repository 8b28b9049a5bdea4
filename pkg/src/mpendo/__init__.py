"""Exact combinatorics of endoscopy for the metaplectic group Sp~(2n).

Modules: ``exactalg`` (exact scalars, mu_2^k and mu_8 harmonic analysis),
``endodata`` (elliptic and Levi endoscopic data, class correspondence),
``realtori`` (real tori, cohomology, kappa characters, geometric inversion),
``realspectral`` (packets, the spectral transfer matrix and its inversion),
``cli`` and ``serialize`` (deterministic JSON front end), ``suites`` (the
named verification suites).
"""

from .exactalg import (
    Cyclotomic8,
    HalfInt,
    Rational,
    SignVector,
    UnityRoot8,
    all_sign_vectors,
    character_eval,
    fourier_delta,
)
from .endodata import (
    CentralTwist,
    EmbeddingParam,
    EndoDatum,
    LeviDatum,
    LeviEndoClass,
    StableClassSO,
    StableClassSp,
    canonical_eigenvalue,
    central_twist,
    correspond,
    enumerate_elliptic,
    enumerate_embeddings,
    enumerate_levi,
    iota,
    is_g_regular,
    mu_route,
    symmetry_swap,
)
from .realtori import (
    CohClass,
    CompactSplit,
    FactorModel,
    TorusType,
    build_matrices,
    h1,
    inv_position,
    kappa0,
    kappa_T,
    torus_types,
    verify_geometric_inversion,
)
from .realspectral import (
    EllipticParam,
    HCParam,
    InfChar,
    KappaRestriction,
    Packet,
    adjoint_delta_spectral,
    complex_bijection,
    constants,
    delta_spectral,
    is_nonzero_limit,
    merge,
    normal_form,
    packet,
    singletons_and_pairs,
    split_bijection,
    split_bijection_inverse,
    verify_spectral_inversion,
)

__version__ = "0.1.0"
