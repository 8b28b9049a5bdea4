"""Real maximal tori of Sp(2n, R) and geometric transfer-factor inversion.

A maximal torus is isomorphic to (C^x)^m x (S^1)^r x (R^x)^s for a unique
triple with 2m + r + s = n, and H^1(R, T) = mu_2^r.  The quotient of the
stable Weyl group by the rational Weyl group is canonically the same mu_2^r,
so stable-versus-ordinary conjugacy, the invariant inv, and the endoscopic
sign characters kappa_{T,0} and kappa_T all reduce to sign-vector algebra.

The factor matrices pair the 2^r conjugacy classes inside a stable class
against the 2^r characters of mu_2^r.  With free mu_8 base constants c_kappa,

    B[kappa][w] = c_kappa * kappa(w)          (cocycle condition)
    A[w][kappa] = 2^{-r} * conj(B[kappa][w])  (adjoint factor)

and A*B = B*A = 1 exactly in Q(zeta_8).  The analytic values of the factors
never enter: the identity holds for every choice of the constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactalg import Cyclotomic8, SignVector, UnityRoot8, all_sign_vectors, character_eval

# H^1(R, T) classes and stable-Weyl cosets are both sign vectors of length r.
CohClass = SignVector


@dataclass(frozen=True)
class TorusType:
    """Isomorphism type (C^x)^m x (S^1)^r x (R^x)^s of a maximal torus."""

    m: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.r < 0 or self.s < 0:
            raise ValueError("torus type entries must be non-negative")

    @property
    def rank(self) -> int:
        return 2 * self.m + self.r + self.s


@dataclass(frozen=True)
class CompactSplit:
    """How the r compact circle factors split across T' x T''."""

    r_prime: int
    r_dprime: int

    @property
    def r(self) -> int:
        return self.r_prime + self.r_dprime


@dataclass(frozen=True)
class H1Group:
    """H^1(R, T) = mu_2^r with its element list in binary order."""

    r: int
    order: int
    elements: tuple[SignVector, ...]


@dataclass(frozen=True)
class FactorModel:
    """Free mu_8 constants modelling the factors on one stable class.

    ``base_constants[j]`` is the value at the base point for the j-th
    character of mu_2^r (binary order).
    """

    rank: int
    base_constants: tuple[UnityRoot8, ...]

    def __post_init__(self) -> None:
        if len(self.base_constants) != 1 << self.rank:
            raise ValueError("need one base constant per character of mu_2^r")


def torus_types(n: int) -> list[TorusType]:
    """All triples (m, r, s) with 2m + r + s = n; m then r descending."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    out = []
    for m in range(n // 2, -1, -1):
        rest = n - 2 * m
        for r in range(rest, -1, -1):
            out.append(TorusType(m, r, rest - r))
    return out


def h1(t: TorusType) -> H1Group:
    """The cohomology group mu_2^r; full 2^n only for the anisotropic torus."""
    return H1Group(t.r, 1 << t.r, tuple(all_sign_vectors(t.r)))


def kappa0(t: TorusType, x: CohClass) -> int:
    """The character kappa_{T,0}: product of all r sign coordinates."""
    if len(x) != t.r:
        raise ValueError(f"class has length {len(x)}, torus has r = {t.r}")
    value = 1
    for b in x.bits:
        value *= b
    return value


def kappa_T(split: CompactSplit, x: CohClass) -> int:
    """The endoscopic character kappa_T: project to T'' and multiply.

    Equals kappa_{T,0} composed with pr'', hence the product of the last
    r'' coordinates only; for split = (0, r) it is kappa_{T,0} itself.
    """
    if len(x) != split.r:
        raise ValueError(f"class has length {len(x)}, split has r = {split.r}")
    value = 1
    for b in x.bits[split.r_prime:]:
        value *= b
    return value


def inv_position(w: CohClass) -> CohClass:
    """inv(w delta w^{-1}, delta) = w under the coset identification.

    The identity map, exposed so call sites read like the cocycle condition.
    """
    return w


def build_matrices(
    model: FactorModel,
) -> tuple[list[list[Cyclotomic8]], list[list[Cyclotomic8]]]:
    """The factor matrix B and its adjoint A over Q(zeta_8).

    B[j][i] = c_j * kappa_j(w_i) pairs the j-th character against the i-th
    class in the stable class; A[i][j] = 2^{-r} * conj(B[j][i]) with
    |H^1(R, T)| = 2^r (H^1(R, Sp) is trivial, so the full pointed set is
    the torus cohomology).
    """
    r = model.rank
    classes = list(all_sign_vectors(r))
    characters = classes
    half_r = Fraction(1, 1 << r)
    b_rows: list[list[Cyclotomic8]] = []
    for j, chi in enumerate(characters):
        c_j = Cyclotomic8.from_root(model.base_constants[j])
        b_rows.append(
            [c_j.scale(character_eval(chi, w)) for w in classes]
        )
    a_rows = [
        [b_rows[j][i].conj().scale(half_r) for j in range(len(characters))]
        for i in range(len(classes))
    ]
    return a_rows, b_rows


def matrices_are_inverse(
    a: list[list[Cyclotomic8]], b: list[list[Cyclotomic8]]
) -> bool:
    """Exact check that A*B and B*A are both the identity."""
    size = len(a)
    for x, y in ((a, b), (b, a)):
        for i in range(size):
            for k in range(size):
                acc = Cyclotomic8.zero()
                for j in range(size):
                    acc = acc + x[i][j] * y[j][k]
                if i == k:
                    if not acc.is_one:
                        return False
                elif not acc.is_zero:
                    return False
    return True


def verify_geometric_inversion(model: FactorModel) -> bool:
    """A*B = B*A = 1 exactly, by full matrix multiplication in Q(zeta_8)."""
    a, b = build_matrices(model)
    return matrices_are_inverse(a, b)


def _character_negation_table(r: int) -> np.ndarray:
    """neg[j, i] = 1 where the j-th character is -1 at the i-th class."""
    size = 1 << r
    idx = np.arange(size)
    anded = idx[:, None] & idx[None, :]
    parity = np.zeros_like(anded)
    for bit in range(r):
        parity ^= (anded >> bit) & 1
    return parity


def factor_exponents(model: FactorModel) -> np.ndarray:
    """mu_8 exponents of the entries B[j][i]; the whole matrix is pure roots."""
    r = model.rank
    exps = np.array([c.exponent for c in model.base_constants], dtype=np.int64)
    return (exps[:, None] + 4 * _character_negation_table(r)) % 8


def fast_geometric_inversion(
    model: FactorModel, perturb: tuple[int, int] | None = None
) -> bool:
    """Bulk version of the inversion check, exploiting that every entry of
    B is a pure eighth root of unity.

    Products are accumulated as integer histograms of mu_8 exponents, which
    is exact; the optional ``perturb`` multiplies the entry B[j][i] by
    zeta_8 before checking (the adjoint matrix stays that of the model).
    Agrees with :func:`verify_geometric_inversion` wherever both run.
    """
    r = model.rank
    exponents = factor_exponents(model)
    perturbed = exponents
    if perturb is not None:
        perturbed = exponents.copy()
        j0, i0 = perturb
        perturbed[j0, i0] = (perturbed[j0, i0] + 1) % 8
    # Unscaled adjoint exponents: A[i][j] is 2^{-r} zeta^(-E[j][i]).
    adjoint = (-exponents.T) % 8
    return _pure_product_is_scaled_identity(adjoint, perturbed, r) and (
        _pure_product_is_scaled_identity(perturbed, adjoint, r)
    )


def _pure_product_is_scaled_identity(
    left: np.ndarray, right: np.ndarray, r: int
) -> bool:
    """Whether the product of two pure-root matrices is 2^r times the
    identity, by exact per-entry histograms of exponents."""
    size = 1 << r
    terms = (left[:, :, None] + right[None, :, :]) % 8  # axes (i, j, k)
    cell = np.arange(size)[:, None, None] * size + np.arange(size)[None, None, :]
    flat = (cell * 8 + terms).ravel()
    counts = np.bincount(flat, minlength=size * size * 8).reshape(size * size, 8)
    coeffs = counts[:, :4] - counts[:, 4:]
    expected = np.zeros((size * size, 4), dtype=coeffs.dtype)
    expected[:: size + 1, 0] = size
    return np.array_equal(coeffs, expected)
