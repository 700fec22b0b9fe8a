"""Brill-Noether permutations and splitting types.

gamma_rd builds the finitary permutation cutting out the classical locus of
line bundles with at least r+1 sections; the splitting-type machinery builds
the bigrassmannian affine permutation of a nondecreasing k-tuple via the
residual/periodic decomposition alpha(n) = rho(n) + 1 + k*pi(n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters, BadPeriod
from .perm import Perm, inverse, make_affine, make_finitary


@dataclass(frozen=True)
class SplittingType:
    k: int
    entries: tuple  # nondecreasing integers e_1 <= ... <= e_k

    def __post_init__(self):
        if self.k < 2:
            raise BadPeriod(f"splitting types need k >= 2, got {self.k}")
        if len(self.entries) != self.k:
            raise BadParameters(
                f"expected {self.k} entries, got {len(self.entries)}"
            )
        if any(a > b for a, b in zip(self.entries, self.entries[1:])):
            raise BadParameters(f"entries must be nondecreasing: {self.entries}")


@dataclass(frozen=True)
class ResidualPeriodic:
    k: int
    rho: tuple  # permutation of 0..k-1, extended k-periodically
    pi: tuple  # k-periodic integer function on residues


def gamma_rd(r: int, chi: int) -> Perm:
    """The permutation whose transmission locus is the classical locus of
    bundles with r+1 sections, at Euler characteristic chi."""
    if r < max(0, chi + 1):
        raise BadParameters(f"need r >= max(0, chi+1), got r={r}, chi={chi}")
    w = r - chi  # number of negative window positions
    lo = -w
    vals = [n + w + 1 for n in range(lo, 0)] + [n - r for n in range(0, r + 1)]
    return make_finitary(chi, lo, vals)


def splitting_u(e: SplittingType) -> int:
    """Expected codimension sum_{m,n} max(0, e_m - e_n - 1)."""
    return sum(
        max(0, em - en - 1) for em in e.entries for en in e.entries
    )


def splitting_x(e: SplittingType, m: int) -> int:
    """Section-count profile sum_n max(e_n + 1 + m, 0)."""
    return sum(max(en + 1 + m, 0) for en in e.entries)


def splitting_d(e: SplittingType, g: int) -> int:
    """Degree g - 1 + sum(e_n + 1) attached to the splitting type at genus g."""
    return g - 1 + sum(en + 1 for en in e.entries)


def rho_pi_decompose(p: Perm) -> ResidualPeriodic:
    """The unique (rho, pi) with p(n) = rho(n) + 1 + k*pi(n), rho residual."""
    k = p.period
    if k < 2:
        raise BadPeriod("decomposition requires period >= 2")
    rho = []
    pi = []
    for n in range(k):
        v = p(n) - 1
        r = v % k
        rho.append(r)
        pi.append((v - r) // k)
    return ResidualPeriodic(k, tuple(rho), tuple(pi))


def recompose(rp: ResidualPeriodic) -> Perm:
    return make_affine(
        rp.k, [rp.rho[n] + 1 + rp.k * rp.pi[n] for n in range(rp.k)]
    )


def is_bigrassmannian(p: Perm) -> bool:
    """Increasing on 0..k-1 with inverse increasing on 1..k."""
    k = p.period
    if k < 2:
        raise BadPeriod("bigrassmannian test requires period >= 2")
    if any(p(n) >= p(n + 1) for n in range(k - 1)):
        return False
    q = inverse(p)
    return all(q(n) < q(n + 1) for n in range(1, k))


def _residual_for(pi) -> tuple:
    """The unique residual permutation making rho + 1 + k*pi bigrassmannian:
    larger pi values come first in rho's value order, ties broken by index."""
    k = len(pi)
    return tuple(
        sum(1 for m in range(k) if pi[m] > pi[n])
        + sum(1 for m in range(n) if pi[m] == pi[n])
        for n in range(k)
    )


def gamma_splitting(e: SplittingType) -> Perm:
    """The bigrassmannian permutation of a splitting type."""
    k = e.k
    pi = tuple(-e.entries[k - 1 - n] - 1 for n in range(k))
    rho = _residual_for(pi)
    return recompose(ResidualPeriodic(k, rho, pi))


def splitting_type_of(p: Perm) -> SplittingType:
    """Sort (-pi(0)-1, ..., -pi(k-1)-1) nondecreasingly."""
    rp = rho_pi_decompose(p)
    return SplittingType(p.period, tuple(sorted(-x - 1 for x in rp.pi)))


def inv_pi_bound(p: Perm) -> int:
    """Lower bound on inv_k from the periodic part alone; attained by
    bigrassmannian permutations."""
    rp = rho_pi_decompose(p)
    return sum(
        max(0, rp.pi[n] - rp.pi[m] - 1)
        for m in range(p.period)
        for n in range(p.period)
    )
