"""Archimedean spectral transfer for Sp~(2n, R), combinatorially.

Infinitesimal characters of the relevant limits of discrete series have a
normal form [a_1 >= ... >= a_n > 0] with every a_i in Z + 1/2 and no value
repeated more than twice.  Entries split into "pairs" (repeated twice) and
"singletons"; the L-packet above an admissible lambda has exactly
2^{#singletons} members, the canonical representatives fixing every pair as
(+a, -a) and letting singleton signs run free.

The elliptic parameters (n', n'', phi) with phi a pair of strictly
decreasing piles merge onto lambda, and the fiber over lambda is in
bijection with the characters kappa of mu_2^{#singletons}: a singleton goes
to the prime pile when its kappa coordinate is +1 and to the double prime
pile otherwise, while each pair contributes one copy to each pile.

The transfer matrix Delta(phi, pi) takes values in {-1, 0, +1}; its adjoint
is |packet|^{-1} times it, and the two orthogonality identities are checked
by exact integer arithmetic.  The base sign here follows a declared
convention: Delta at the base member is (-1)^{sum (mu_j + 1/2)} over the
signed entries mu_j routed to the double prime pile, with each pair
contributing its negative entry.  Only the relative signs across a packet
are intrinsic, and those follow the kappa character on singleton flips;
any global sign per packet cancels in both inversion identities.

Over the complex field the covering splits and the story collapses: orbits
of torus characters under signed permutations match packets one to one and
the transfer matrix is the Kronecker delta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .endodata import EndoDatum
from .exactalg import HalfInt, SignVector, all_sign_vectors

# Restrictions of the endoscopic character to the singleton coordinates.
KappaRestriction = SignVector


@dataclass(frozen=True)
class InfChar:
    """Infinitesimal character in normal form: weakly decreasing, positive,
    all entries in Z + 1/2."""

    entries: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        for a in self.entries:
            if a.twice <= 0:
                raise ValueError(f"entries must be positive: {a}")
            if not a.is_half_odd:
                raise ValueError(f"entries must lie in Z + 1/2: {a}")
        if any(
            self.entries[i] < self.entries[i + 1]
            for i in range(len(self.entries) - 1)
        ):
            raise ValueError("entries must be weakly decreasing")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_admissible(self) -> bool:
        """No value may occur more than twice."""
        return all(
            self.entries.count(a) <= 2 for a in set(self.entries)
        )


def normal_form(raw: Iterable[HalfInt], require_admissible: bool = True) -> InfChar:
    """Sort absolute values into the normal form, rejecting bad input.

    Zero entries, integral entries, and (when admissibility is requested)
    values occurring more than twice are all errors, never coerced.
    """
    values = [abs(a) for a in raw]
    if any(a.is_zero for a in values):
        raise ValueError("infinitesimal character entries must be nonzero")
    lam = InfChar(tuple(sorted(values, reverse=True)))
    if require_admissible and not lam.is_admissible:
        raise ValueError(
            "inadmissible: some value occurs more than twice in "
            f"[{', '.join(str(a) for a in lam.entries)}]"
        )
    return lam


def singletons_and_pairs(lam: InfChar) -> tuple[tuple[HalfInt, ...], tuple[HalfInt, ...]]:
    """Partition the entries by multiplicity (1 vs 2), order preserved."""
    if not lam.is_admissible:
        raise ValueError("inadmissible infinitesimal character")
    singles, pairs = [], []
    i = 0
    while i < lam.n:
        if i + 1 < lam.n and lam.entries[i + 1] == lam.entries[i]:
            pairs.append(lam.entries[i])
            i += 2
        else:
            singles.append(lam.entries[i])
            i += 1
    return tuple(singles), tuple(pairs)


@dataclass(frozen=True)
class HCParam:
    """Harish-Chandra parameter: signed entries aligned with the base."""

    signed: tuple[HalfInt, ...]
    base: InfChar

    def __post_init__(self) -> None:
        if tuple(abs(a) for a in self.signed) != self.base.entries:
            raise ValueError("absolute values must match the base entries in order")


@dataclass(frozen=True)
class Packet:
    """L-packet above an admissible lambda: canonical representatives only."""

    lam: InfChar
    members: tuple[HCParam, ...]


@dataclass(frozen=True)
class EllipticParam:
    """Elliptic parameter (n', n'', phi): two strictly decreasing piles."""

    datum: EndoDatum
    pile_prime: tuple[HalfInt, ...]
    pile_dprime: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        for pile in (self.pile_prime, self.pile_dprime):
            for a in pile:
                if a.twice <= 0 or not a.is_half_odd:
                    raise ValueError(f"pile entries must be positive half-odd: {a}")
            if any(pile[i] <= pile[i + 1] for i in range(len(pile) - 1)):
                raise ValueError("piles must be strictly decreasing")
        if (len(self.pile_prime), len(self.pile_dprime)) != (
            self.datum.n_prime,
            self.datum.n_dprime,
        ):
            raise ValueError("pile lengths must match the endoscopic datum")


def is_nonzero_limit(p: HCParam) -> bool:
    """Nonzero as a limit of discrete series: signed entries pairwise distinct.

    A repeated signed value is a singularity against a compact simple root;
    opposite signs on a repeated absolute value are fine.
    """
    return len(set(p.signed)) == len(p.signed)


def is_packet_member(p: HCParam) -> bool:
    """Canonical representative test: pairs fixed as (+a, -a), singletons free."""
    entries = p.base.entries
    i = 0
    while i < len(entries):
        if i + 1 < len(entries) and entries[i + 1] == entries[i]:
            if p.signed[i] != entries[i] or p.signed[i + 1] != -entries[i]:
                return False
            i += 2
        else:
            i += 1
    return True


def packet(lam: InfChar) -> Packet:
    """The 2^{#singletons} canonical members, sign vectors in binary order."""
    singles, _ = singletons_and_pairs(lam)
    k = len(singles)
    members = []
    for eps in all_sign_vectors(k):
        sign_of = dict(zip(singles, eps.bits))
        signed: list[HalfInt] = []
        open_pairs: set[HalfInt] = set()
        for a in lam.entries:
            if lam.entries.count(a) == 2:
                if a in open_pairs:
                    signed.append(-a)
                else:
                    signed.append(a)
                    open_pairs.add(a)
            else:
                signed.append(a if sign_of[a] == 1 else -a)
        members.append(HCParam(tuple(signed), lam))
    return Packet(lam, tuple(members))


def merge(phi: EllipticParam) -> InfChar:
    """Merge the two piles into the normal form; always admissible."""
    return normal_form(phi.pile_prime + phi.pile_dprime)


def split_bijection(lam: InfChar, kappa: KappaRestriction) -> EllipticParam:
    """Forward direction of the (lambda, kappa) <-> (n', n'', phi) bijection.

    A singleton goes to the prime pile when its kappa coordinate is +1,
    to the double prime pile when it is -1; every pair is divided equally.
    """
    singles, pairs = singletons_and_pairs(lam)
    if len(kappa) != len(singles):
        raise ValueError(
            f"kappa has length {len(kappa)}, expected {len(singles)} singletons"
        )
    pile_prime = list(pairs)
    pile_dprime = list(pairs)
    for a, sign in zip(singles, kappa.bits):
        (pile_prime if sign == 1 else pile_dprime).append(a)
    pile_prime.sort(reverse=True)
    pile_dprime.sort(reverse=True)
    datum = EndoDatum(len(pile_prime), len(pile_dprime))
    return EllipticParam(datum, tuple(pile_prime), tuple(pile_dprime))


def split_bijection_inverse(phi: EllipticParam) -> tuple[InfChar, KappaRestriction]:
    """Recover (lambda, kappa): kappa reads off pile membership per singleton."""
    lam = merge(phi)
    singles, _ = singletons_and_pairs(lam)
    dprime = set(phi.pile_dprime)
    kappa = SignVector(tuple(-1 if a in dprime else 1 for a in singles))
    return lam, kappa


def elliptic_fiber(lam: InfChar) -> list[EllipticParam]:
    """All elliptic parameters above lambda, kappa in binary order."""
    singles, _ = singletons_and_pairs(lam)
    return [
        split_bijection(lam, kappa) for kappa in all_sign_vectors(len(singles))
    ]


def delta_spectral(phi: EllipticParam, p: HCParam) -> int:
    """The transfer factor Delta(phi, pi) in {-1, 0, +1}.

    Zero unless the piles of phi merge onto the base of p and p is a
    canonical packet member.  Otherwise the sign is (-1)^{sum (mu_j + 1/2)}
    over the double prime pile, where a singleton routed there contributes
    p's signed entry of that absolute value and every pair contributes its
    negative entry (see the module docstring for the convention).
    """
    lam = merge(phi)
    if lam != p.base or not is_packet_member(p):
        return 0
    singles, pairs = singletons_and_pairs(lam)
    single_sign = {}
    for a, v in zip(p.base.entries, p.signed):
        if a in singles:
            single_sign[a] = v
    total = 0
    dprime = set(phi.pile_dprime)
    for a in singles:
        if a in dprime:
            mu = single_sign[a]
            total += (mu.twice + 1) // 2
    for a in pairs:
        total += ((-a).twice + 1) // 2
    return -1 if total % 2 else 1


def adjoint_delta_spectral(p: HCParam, phi: EllipticParam) -> Fraction:
    """Delta(pi, phi) = |packet|^{-1} * Delta(phi, pi); real, so no conjugate."""
    value = delta_spectral(phi, p)
    if value == 0:
        return Fraction(0)
    singles, _ = singletons_and_pairs(p.base)
    return Fraction(value, 1 << len(singles))


def spectral_transfer_matrix(
    lam: InfChar,
) -> tuple[list[EllipticParam], list[HCParam], list[list[int]]]:
    """Fiber, packet, and the full matrix Delta(phi, pi) above lambda."""
    phis = elliptic_fiber(lam)
    members = list(packet(lam).members)
    matrix = [[delta_spectral(phi, p) for p in members] for phi in phis]
    return phis, members, matrix


def _scaled_products_are_identity(matrix: Sequence[Sequence[int]], scale: int) -> bool:
    """Both D^t*D and D*D^t equal scale * identity, in exact integers."""
    size = len(matrix)
    rows = [list(row) for row in matrix]
    cols = [list(col) for col in zip(*rows)] if size else []
    for vectors in (cols, rows):
        for a in range(size):
            va = vectors[a]
            for b in range(a, size):
                vb = vectors[b]
                total = sum(x * y for x, y in zip(va, vb))
                if total != (scale if a == b else 0):
                    return False
    return True


def verify_spectral_inversion(lam: InfChar) -> bool:
    """Both orthogonality identities for the fiber and packet above lambda.

    Sum over phi of Delta(pi, phi) Delta(phi, pi1) = [pi = pi1] and the
    transposed identity; the |packet|^{-1} scale is cleared so the check
    runs in exact integers.
    """
    _, members, matrix = spectral_transfer_matrix(lam)
    return _scaled_products_are_identity(matrix, len(members))


def constants(n: int) -> tuple[list[int], InfChar, InfChar]:
    """rho = [n, ..., 1] and the half-odd rho of the endoscopic side, which
    is also the infinitesimal character of the Weil representation."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    rho = list(range(n, 0, -1))
    half_odd = InfChar(tuple(HalfInt(2 * k - 1) for k in range(n, 0, -1)))
    return rho, half_odd, half_odd


def admissible_infchars(max_n: int, max_entry_twice: int = 13) -> Iterator[InfChar]:
    """Every admissible lambda with n <= max_n and entries <= max_entry_twice/2.

    Entries run over the half-odd values 1/2, 3/2, ..., each with
    multiplicity at most two; includes the empty character.
    """
    values = [HalfInt(t) for t in range(max_entry_twice, 0, -2)]
    for mults in itertools.product((0, 1, 2), repeat=len(values)):
        if sum(mults) > max_n:
            continue
        entries: list[HalfInt] = []
        for v, m in zip(values, mults):
            entries.extend([v] * m)
        yield InfChar(tuple(entries))


# --- the complex case ---------------------------------------------------

# A unitary character of the diagonal torus (C^x)^n: per coordinate a
# circle weight k in Z and an exact surrogate t for the continuous part.
ComplexChar = tuple[tuple[int, Fraction], ...]


def canonical_complex_orbit(chars: Iterable[tuple[int, Fraction]]) -> ComplexChar:
    """Canonical representative of the signed-permutation orbit.

    Each coordinate is flipped to make (k, t) >= (-k, -t) lexicographically,
    then the coordinates are sorted decreasingly.
    """
    normalized = []
    for k, t in chars:
        t = Fraction(t)
        if (k, t) < (-k, -t):
            k, t = -k, -t
        normalized.append((k, t))
    return tuple(sorted(normalized, reverse=True))


def complex_delta(phi: ComplexChar, pi: ComplexChar) -> int:
    """Transfer factor over C: 1 when the orbits match, else 0."""
    return 1 if canonical_complex_orbit(phi) == canonical_complex_orbit(pi) else 0


def complex_bijection(n: int, chars: Iterable[tuple[int, Fraction]]) -> ComplexChar:
    """The packet index matched to a torus-character orbit: its canonical form."""
    chars = tuple(chars)
    if len(chars) != n:
        raise ValueError(f"expected {n} coordinates, got {len(chars)}")
    return canonical_complex_orbit(chars)
