"""Elliptic endoscopic data for Sp~(2n) and the correspondence of classes.

An elliptic datum is an ordered pair (n', n'') with n' + n'' = n; its
endoscopic group is SO(2n'+1) x SO(2n''+1), and there is no symmetry
n' <-> n''.  Semisimple stable classes are matched through eigenvalue
multisets, with the double prime side twisted by -1:

    gamma'  ~  a'_{n'}, ..., a'_1, 1, 1/a'_1, ..., 1/a'_{n'}
    gamma'' ~  a''_{n''}, ..., a''_1, 1, 1/a''_1, ..., 1/a''_{n''}
    delta   ~  a'_*, 1/a'_*, -a''_*, -1/a''_*

Levi data, the ordered decompositions s = (I', I'') gluing a Levi-level
datum into an elliptic one, and the order-two twist z[s] comparing the two
routes from the Levi endoscopic group down to Sp(2n) all live here.  Classes
are kept split with exact rational eigenvalues, so all identities are
decidable multiset equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence


def _as_fraction(value: Fraction | int) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


def canonical_eigenvalue(value: Fraction) -> Fraction:
    """Canonical representative of the pair {e, 1/e}.

    Keeps the member with |numerator| >= denominator; +1 and -1 are their
    own inverses and stay put.  Idempotent by construction.
    """
    e = _as_fraction(value)
    if e.numerator == 0:
        raise ValueError("eigenvalues must be nonzero")
    if abs(e.numerator) < e.denominator:
        return Fraction(e.denominator, e.numerator)
    return e


@dataclass(frozen=True)
class EndoDatum:
    """Elliptic endoscopic datum (n', n'') for Sp~(2n), n = n' + n''."""

    n_prime: int
    n_dprime: int

    def __post_init__(self) -> None:
        if self.n_prime < 0 or self.n_dprime < 0:
            raise ValueError("endoscopic ranks must be non-negative")

    @property
    def n(self) -> int:
        return self.n_prime + self.n_dprime

    def swapped(self) -> "EndoDatum":
        return EndoDatum(self.n_dprime, self.n_prime)


@dataclass(frozen=True)
class LeviDatum:
    """Conjugacy class of Levi subgroups: GL blocks (n_i) and a flat Sp rank."""

    gl_blocks: tuple[int, ...]
    flat_rank: int

    def __post_init__(self) -> None:
        if any(b <= 0 for b in self.gl_blocks):
            raise ValueError("GL block sizes must be positive")
        if self.flat_rank < 0:
            raise ValueError("flat rank must be non-negative")

    @property
    def rank(self) -> int:
        return sum(self.gl_blocks) + self.flat_rank

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(len(self.gl_blocks)))


@dataclass(frozen=True)
class EmbeddingParam:
    """Ordered decomposition s = (I', I'') of the GL index set."""

    i_prime: tuple[int, ...]
    i_dprime: tuple[int, ...]

    def __post_init__(self) -> None:
        if set(self.i_prime) & set(self.i_dprime):
            raise ValueError("I' and I'' must be disjoint")

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.i_prime + self.i_dprime))


@dataclass(frozen=True)
class CentralTwist:
    """The order-two element z[s]: +1 on blocks in I', -1 on blocks in I''."""

    signs: tuple[int, ...]


def _canonical_multiset(values: Iterable[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sorted(canonical_eigenvalue(v) for v in values))


@dataclass(frozen=True)
class StableClassSO:
    """Semisimple stable class of SO(2m+1) as a canonical eigenvalue multiset.

    Entries represent the pairs {e, 1/e}; the fixed eigenvalue 1 is implicit
    and never stored.
    """

    eigen: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Fraction | int]) -> "StableClassSO":
        return cls(_canonical_multiset(values))

    @property
    def rank(self) -> int:
        return len(self.eigen)


@dataclass(frozen=True)
class StableClassSp:
    """Semisimple stable class of Sp(2n): n canonical entries for the pairs {e, 1/e}."""

    eigen: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Fraction | int]) -> "StableClassSp":
        return cls(_canonical_multiset(values))

    @property
    def rank(self) -> int:
        return len(self.eigen)


def enumerate_elliptic(n: int) -> list[EndoDatum]:
    """The n+1 ordered pairs (n', n - n'), in increasing n' order."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    return [EndoDatum(k, n - k) for k in range(n + 1)]


def _partitions_desc(total: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of ``total`` as weakly decreasing tuples."""
    if total == 0:
        return [()]
    cap = total if cap is None else min(cap, total)
    out: list[tuple[int, ...]] = []
    for head in range(cap, 0, -1):
        for rest in _partitions_desc(total - head, head):
            out.append((head,) + rest)
    return out


def enumerate_levi(n: int) -> list[LeviDatum]:
    """One representative per conjugacy class of Levi subgroups of Sp(2n).

    Deterministic order: flat rank descending, then lexicographic on the
    descending block tuple.
    """
    if n < 0:
        raise ValueError("rank must be non-negative")
    out: list[LeviDatum] = []
    for used in range(n + 1):
        blocks = sorted(_partitions_desc(used))
        out.extend(LeviDatum(b, n - used) for b in blocks)
    return out


def enumerate_embeddings(
    levi: LeviDatum, m_prime: int, m_dprime: int
) -> list[tuple[EmbeddingParam, EndoDatum]]:
    """All 2^|I| ordered decompositions s = (I', I'') with their attached datum.

    The attached elliptic datum sums block sizes, not block counts:
    (n', n'') = (m' + sum_{i in I'} n_i, m'' + sum_{i in I''} n_i); it always
    satisfies n' + n'' = rank of the ambient group.
    """
    if m_prime < 0 or m_dprime < 0 or m_prime + m_dprime != levi.flat_rank:
        raise ValueError(
            f"(m', m'') = ({m_prime}, {m_dprime}) must be a non-negative "
            f"decomposition of the flat rank {levi.flat_rank}"
        )
    k = len(levi.gl_blocks)
    out = []
    for mask in range(1 << k):
        i_dprime = tuple(i for i in range(k) if (mask >> i) & 1)
        i_prime = tuple(i for i in range(k) if not (mask >> i) & 1)
        s = EmbeddingParam(i_prime, i_dprime)
        datum = EndoDatum(
            m_prime + sum(levi.gl_blocks[i] for i in i_prime),
            m_dprime + sum(levi.gl_blocks[i] for i in i_dprime),
        )
        out.append((s, datum))
    return out


def central_twist(s: EmbeddingParam) -> CentralTwist:
    """z[s]: sign +1 on indices in I', -1 on indices in I''."""
    size = len(s.i_prime) + len(s.i_dprime)
    signs = [0] * size
    for i in s.i_prime:
        signs[i] = 1
    for i in s.i_dprime:
        signs[i] = -1
    return CentralTwist(tuple(signs))


def correspond(
    gamma_prime: StableClassSO, gamma_dprime: StableClassSO, datum: EndoDatum
) -> StableClassSp:
    """Image delta of (gamma', gamma'') under the correspondence of classes.

    delta carries the eigenvalue pairs of gamma' untouched and those of
    gamma'' twisted by -1; the implicit SO eigenvalues 1 are dropped.
    """
    if gamma_prime.rank != datum.n_prime or gamma_dprime.rank != datum.n_dprime:
        raise ValueError(
            f"class ranks ({gamma_prime.rank}, {gamma_dprime.rank}) do not "
            f"match the datum ({datum.n_prime}, {datum.n_dprime})"
        )
    return StableClassSp.of(
        list(gamma_prime.eigen) + [-a for a in gamma_dprime.eigen]
    )


def negate_class(cls: StableClassSp) -> StableClassSp:
    """The class of -delta: every eigenvalue pair negated."""
    return StableClassSp.of(-e for e in cls.eigen)


def class_is_regular(cls: StableClassSp) -> bool:
    """True iff the 2n eigenvalues {e, 1/e} are pairwise distinct.

    For canonical entries this reduces to: no entry is +1 or -1, and no two
    stored entries coincide (e = 1/f is impossible when |e|, |f| > 1).
    """
    if any(abs(e) == 1 for e in cls.eigen):
        return False
    return len(set(cls.eigen)) == len(cls.eigen)


def is_g_regular(
    gamma_prime: StableClassSO, gamma_dprime: StableClassSO, datum: EndoDatum
) -> bool:
    """Whether the image of (gamma', gamma'') is a regular class of Sp(2n)."""
    return class_is_regular(correspond(gamma_prime, gamma_dprime, datum))


def iota(datum: EndoDatum) -> Fraction:
    """The coefficient iota(G~, G^!) = 1/|Z of the dual endoscopic group|."""
    if datum.n == 0:
        return Fraction(1)
    if datum.n_prime == 0 or datum.n_dprime == 0:
        return Fraction(1, 2)
    return Fraction(1, 4)


def symmetry_swap(
    gamma_prime: StableClassSO, gamma_dprime: StableClassSO, datum: EndoDatum
) -> tuple[StableClassSp, bool]:
    """Witness for the swap symmetry of the correspondence.

    Swapping the two SO factors and the datum matches the negated class:
    -correspond(gamma', gamma'', (n', n'')) = correspond(gamma'', gamma', (n'', n')).
    Returns the common class and a pass flag.
    """
    negated = negate_class(correspond(gamma_prime, gamma_dprime, datum))
    swapped = correspond(gamma_dprime, gamma_prime, datum.swapped())
    return swapped, negated == swapped


@dataclass(frozen=True)
class LeviEndoClass:
    """Semisimple class of the Levi endoscopic group M^!.

    M^! = prod_i GL(n_i) x SO(2m'+1) x SO(2m''+1); per-block GL conjugacy
    data is a raw eigenvalue multiset (no {e, 1/e} folding), the two SO
    factors are stable classes.
    """

    blocks: tuple[tuple[Fraction, ...], ...]
    so_prime: StableClassSO
    so_dprime: StableClassSO

    @classmethod
    def of(
        cls,
        blocks: Sequence[Sequence[Fraction | int]],
        so_prime: StableClassSO,
        so_dprime: StableClassSO,
    ) -> "LeviEndoClass":
        return cls(
            tuple(tuple(sorted(_as_fraction(v) for v in block)) for block in blocks),
            so_prime,
            so_dprime,
        )

    def twist(self, z: CentralTwist) -> "LeviEndoClass":
        """Translate by the central element: block i scaled by z.signs[i]."""
        if len(z.signs) != len(self.blocks):
            raise ValueError("twist length does not match the number of blocks")
        scaled = tuple(
            tuple(sorted(sign * v for v in block))
            for sign, block in zip(z.signs, self.blocks)
        )
        return LeviEndoClass(scaled, self.so_prime, self.so_dprime)


MuRoute = Literal["via_endoscopic_group", "via_levi"]


def mu_route(
    gamma: LeviEndoClass, levi: LeviDatum, s: EmbeddingParam, route: MuRoute
) -> StableClassSp:
    """Push a class of M^! down to a stable class of Sp(2n), two ways.

    ``via_endoscopic_group`` feeds the GL blocks into the two SO factors
    according to s = (I', I'') and applies the elliptic correspondence for
    the attached (n', n'').  ``via_levi`` applies the Levi correspondence
    (GL blocks pass through, the flat part uses (m', m'')) and then induces
    up.  The two routes differ exactly by the twist z[s].
    """
    if len(gamma.blocks) != len(levi.gl_blocks):
        raise ValueError("class has the wrong number of GL blocks")
    for block, size in zip(gamma.blocks, levi.gl_blocks):
        if len(block) != size:
            raise ValueError("GL block eigenvalue count does not match the block size")
    m_prime, m_dprime = gamma.so_prime.rank, gamma.so_dprime.rank
    if m_prime + m_dprime != levi.flat_rank:
        raise ValueError("SO ranks of the class do not sum to the flat rank")
    if set(s.index_set) != set(levi.index_set):
        raise ValueError("embedding parameter does not match the Levi index set")

    if route == "via_endoscopic_group":
        big_prime = StableClassSO.of(
            list(gamma.so_prime.eigen)
            + [v for i in s.i_prime for v in gamma.blocks[i]]
        )
        big_dprime = StableClassSO.of(
            list(gamma.so_dprime.eigen)
            + [v for i in s.i_dprime for v in gamma.blocks[i]]
        )
        datum = EndoDatum(big_prime.rank, big_dprime.rank)
        return correspond(big_prime, big_dprime, datum)

    if route == "via_levi":
        flat = correspond(
            gamma.so_prime, gamma.so_dprime, EndoDatum(m_prime, m_dprime)
        )
        return StableClassSp.of(
            list(flat.eigen) + [v for block in gamma.blocks for v in block]
        )

    raise ValueError(f"unknown route: {route!r}")
