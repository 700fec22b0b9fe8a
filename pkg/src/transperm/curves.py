"""Combinatorial model of line bundles on genus-1 torsion curves and chains.

A genus-1 component with torsion order k carries a degree-d bundle that is
either generic (transmission iota_{d-1}) or the torsion class m (transmission
iota_{d-1} sigma_{m-1}).  Chains fold componentwise transmissions with the
Demazure product; transmission loci are enumerated both by brute force over
class assignments and through reduced tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .demazure import demazure_fold
from .errors import BadPeriod, PeriodMismatch, ShiftMismatch
from .perm import (
    Perm,
    bruhat_leq,
    compose,
    inv_count,
    iota,
    make_affine,
    sigma,
)
from .words import reduced_tuples

GENERIC = None  # class marker for the dense stratum of a Picard component


@dataclass(frozen=True)
class G1Bundle:
    k: int  # torsion order, 0 or >= 2
    d: int  # degree
    cls: object = GENERIC  # None, or an integer torsion residue


@dataclass(frozen=True)
class ChainSpec:
    k: int
    components: tuple  # of G1Bundle, all sharing k

    def __post_init__(self):
        if any(c.k != self.k for c in self.components):
            raise PeriodMismatch("chain components must share the torsion order")


def genus1_tau(b: G1Bundle) -> Perm:
    """The transmission permutation of a single genus-1 component."""
    if b.cls is GENERIC:
        return iota(b.d - 1, b.k)
    return compose(iota(b.d - 1, b.k), sigma(b.cls - 1, b.k))


def chain_tau(c: ChainSpec) -> Perm:
    """Demazure fold of the per-component transmissions."""
    return demazure_fold([genus1_tau(b) for b in c.components])


def _class_choices(k: int):
    return [GENERIC] + list(range(k))


def wtau_points_bruteforce(k: int, degrees, tau: Perm):
    """All class assignments whose chain transmission dominates tau."""
    degrees = list(degrees)
    if k < 2:
        raise BadPeriod("brute-force enumeration requires k >= 2")
    if tau.period != k:
        raise PeriodMismatch(f"tau has period {tau.period}, expected {k}")
    ell = len(degrees)
    if tau.chi != sum(degrees) - ell:
        raise ShiftMismatch(
            f"tau shift {tau.chi} != total degree minus length {sum(degrees) - ell}"
        )
    out = set()
    for classes in product(_class_choices(k), repeat=ell):
        spec = ChainSpec(
            k, tuple(G1Bundle(k, d, c) for d, c in zip(degrees, classes))
        )
        if bruhat_leq(tau, chain_tau(spec)):
            out.add(spec)
    return out


def _factor_to_bundle(k: int, d: int, beta: Perm) -> G1Bundle:
    """Invert genus1_tau on an inv <= 1 factor of shift d-1."""
    if inv_count(beta) == 0:
        return G1Bundle(k, d, GENERIC)
    delta = compose(iota(-beta.chi, k), beta)  # a single sigma_j
    if k:
        js = [m for m in range(k) if delta == sigma(m, k)]
    else:
        js = [delta.lo] if delta == sigma(delta.lo, 0) else []
    if len(js) != 1:
        raise ShiftMismatch(f"factor {beta!r} is not a genus-1 transmission")
    return G1Bundle(k, d, (js[0] + 1) % k if k else js[0] + 1)


def wtau_points_via_words(k: int, degrees, tau: Perm):
    """Stratum labels of the transmission locus, from reduced tuples with
    per-factor inversion count at most 1 (genus-1 components)."""
    degrees = list(degrees)
    if tau.period != k:
        raise PeriodMismatch(f"tau has period {tau.period}, expected {k}")
    ell = len(degrees)
    if tau.chi != sum(degrees) - ell:
        raise ShiftMismatch(
            f"tau shift {tau.chi} != total degree minus length {sum(degrees) - ell}"
        )
    shifts = [d - 1 for d in degrees]
    out = set()
    for tup in reduced_tuples(tau, shifts, max_inv_per_factor=1):
        bundles = tuple(
            _factor_to_bundle(k, d, beta)
            for d, beta in zip(degrees, tup.factors)
        )
        out.add(ChainSpec(k, bundles))
    return out


def expand_strata(specs):
    """Close a set of stratum labels under specializing Generic components to
    every torsion class; the result is comparable with the brute-force set."""
    out = set()
    for spec in specs:
        choice_lists = []
        for b in spec.components:
            if b.cls is GENERIC:
                choice_lists.append(
                    [GENERIC] + list(range(spec.k)) if spec.k else [GENERIC]
                )
            else:
                choice_lists.append([b.cls])
        for classes in product(*choice_lists):
            out.add(
                ChainSpec(
                    spec.k,
                    tuple(
                        G1Bundle(b.k, b.d, c)
                        for b, c in zip(spec.components, classes)
                    ),
                )
            )
    return out


# -- generality report ------------------------------------------------------


@dataclass(frozen=True)
class GeneralityCheck:
    window: tuple
    shift: int
    inv: int
    locus_size: int
    full_stratum: bool
    ok: bool


@dataclass(frozen=True)
class MismatchDemo:
    k: int
    k_prime: int
    inv_kprime: int
    locus_size: int
    flagged: bool


@dataclass(frozen=True)
class GeneralityReport:
    k: int
    bound: int
    checks: tuple
    mismatch: MismatchDemo
    passed: bool


def enumerate_affine(k: int, bound: int):
    """All extended k-affine permutations with |w(i) - i| <= bound."""
    out = []

    def rec(i, used, window):
        if i == k:
            out.append(make_affine(k, window))
            return
        for v in range(i - bound, i + bound + 1):
            if v % k in used:
                continue
            used.add(v % k)
            window.append(v)
            rec(i + 1, used, window)
            window.pop()
            used.discard(v % k)

    rec(0, set(), [])
    return out


def _single_component_locus(k: int, alpha: Perm):
    """Classes of a single genus-1 k-torsion component dominating alpha."""
    d = alpha.chi + 1
    return {
        c
        for c in _class_choices(k)
        if bruhat_leq(alpha, genus1_tau(G1Bundle(k, d, c)))
    }


def embed_affine(p: Perm, k_prime: int) -> Perm:
    """View a period-k permutation inside the period k' group, for k | k'."""
    if k_prime % p.period or k_prime < p.period:
        raise PeriodMismatch(f"{p.period} does not divide {k_prime}")
    return make_affine(k_prime, [p(i) for i in range(k_prime)])


def genus1_generality_report(k: int, bound: int) -> GeneralityReport:
    """Verify the inv-vs-codimension pattern of single genus-1 components.

    For every alpha with window extent <= bound and degree in range: the locus
    is everything iff inv = 0, a single torsion point iff inv = 1, and empty
    iff inv >= 2.  Also demonstrates the k | k' failure: sigma_0 of period k
    has inv 2 in period 2k yet a nonempty codimension-1 locus.
    """
    if k < 2:
        raise BadPeriod("the report requires k >= 2")
    checks = []
    for alpha in enumerate_affine(k, bound):
        if not (-bound <= alpha.chi + 1 <= bound):
            continue
        locus = _single_component_locus(k, alpha)
        inv = inv_count(alpha)
        if inv == 0:
            ok = len(locus) == k + 1
        elif inv == 1:
            ok = len(locus) == 1 and GENERIC not in locus
        else:
            ok = not locus
        checks.append(
            GeneralityCheck(
                window=alpha.window,
                shift=alpha.chi,
                inv=inv,
                locus_size=len(locus),
                full_stratum=len(locus) == k + 1,
                ok=ok,
            )
        )
    # mismatched torsion order: sigma^k_0 inside period k' = 2k
    k_prime = 2 * k
    alpha = embed_affine(sigma(0, k), k_prime)
    inv_kp = inv_count(alpha)
    locus = {
        c
        for c in _class_choices(k)
        if bruhat_leq(alpha, embed_affine(genus1_tau(G1Bundle(k, 1, c)), k_prime))
    }
    demo = MismatchDemo(
        k=k,
        k_prime=k_prime,
        inv_kprime=inv_kp,
        locus_size=len(locus),
        flagged=inv_kp >= 2 and bool(locus),
    )
    passed = all(c.ok for c in checks) and demo.flagged
    return GeneralityReport(k, bound, tuple(checks), demo, passed)
