"""The acceptance corpus: nine runnable criteria with pinned tolerances.

Every criterion is exact (integer identities); the only tolerances are the
stated wall-clock budgets.  `run_and_print` backs the CLI `selftest`
subcommand; tests/test_acceptance.py runs each criterion through pytest.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass

from .bn import (
    SplittingType,
    gamma_rd,
    gamma_splitting,
    is_bigrassmannian,
    recompose,
    rho_pi_decompose,
    ResidualPeriodic,
    splitting_type_of,
    splitting_u,
    splitting_x,
)
from .curves import (
    enumerate_affine,
    expand_strata,
    genus1_generality_report,
    wtau_points_bruteforce,
    wtau_points_via_words,
)
from .demazure import (
    demazure,
    demazure_by_max_oracle,
    tabulate,
)
from .errors import TranspermError
from .formats import format_perm, parse_perm, perm_from_json, perm_to_json
from .perm import (
    Perm,
    compose,
    essential_set,
    identity,
    inv_count,
    inverse,
    iota,
    make_affine,
    make_finitary,
    shift,
    sigma,
    slipface,
)
from .words import (
    hecke_word_count,
    hecke_words_naive,
    reduced_word_count,
    reduced_words,
)

SEED = 20260826


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _bitangent() -> Perm:
    return make_finitary(1, -1, [1, -1, 0, -2])


def random_perm(rng: random.Random, k: int) -> Perm:
    """A random permutation with window extent <= 6."""
    if k == 0:
        chi = rng.randint(-2, 2)
        length = rng.randint(0, 4)
        lo = rng.randint(-2, 2)
        vals = list(range(lo - chi, lo - chi + length))
        rng.shuffle(vals)
        return make_finitary(chi, lo, vals)
    rho = list(range(k))
    rng.shuffle(rho)
    window = [rho[i] + k * rng.randint(-1, 1) for i in range(k)]
    return make_affine(k, window)


# -- criteria ---------------------------------------------------------------


def criterion_1():
    """Twice-marked plane-quartic and generic-bundle slipface values."""
    tau = _bitangent()
    i3 = iota(3, 0)
    # warm the code paths before timing
    slipface(tau, 1, 0)
    t0 = time.perf_counter()
    assert slipface(tau, 1, 0) == 3
    assert slipface(tau, -1, 2) == 1
    ti = inverse(tau)
    assert slipface(ti, 0, 1) == 1
    assert slipface(ti, 2, -1) == 3
    assert inv_count(tau) == 5
    assert slipface(i3, 1, 0) == 4
    assert slipface(i3, -2, 3) == 0
    assert slipface(inverse(i3), 3, -1) == 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 0.001, f"took {elapsed * 1000:.3f} ms"
    return f"8 exact values in {elapsed * 1e6:.0f} us"


def criterion_2():
    """Min-plus product equals the Bruhat-max oracle on both small corpora."""
    t0 = time.perf_counter()
    finite = [make_finitary(0, 0, p) for p in itertools.permutations([0, 1, 2])]
    pairs = 0
    for a in finite:
        for b in finite:
            assert demazure(a, b) == demazure_by_max_oracle(a, b), (a, b)
            pairs += 1
    affine = [
        p
        for p in enumerate_affine(2, 9)
        if p.chi == 0 and inv_count(p) <= 4
    ]
    for a in affine:
        for b in affine:
            assert demazure(a, b) == demazure_by_max_oracle(a, b), (a, b)
            pairs += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 10, f"took {elapsed:.1f} s"
    return f"{pairs} oracle-checked pairs"


def _sis_formula(n, m, k, a, b):
    hit = a + n == b and ((b == m + 1) if k == 0 else ((b - m - 1) % k == 0))
    return max(a - b + n, 0) + (1 if hit else 0)


def criterion_3():
    """Randomized identity suite: duality, shift homomorphism, associativity,
    submodularity/asymptotics, and the shifted-swap closed form."""
    rng = random.Random(SEED)
    ks = (0, 2, 3)
    checks = 0
    # duality on a 13x13 box
    for _ in range(1000):
        p = random_perm(rng, rng.choice(ks))
        q = inverse(p)
        a0 = rng.randint(-8, 2)
        b0 = rng.randint(-8, 2)
        for a in range(a0, a0 + 13):
            for b in range(b0, b0 + 13):
                assert slipface(p, a, b) - slipface(q, b, a) == p.chi + a - b
        checks += 1
    # shift homomorphism under both products
    for _ in range(1000):
        k = rng.choice(ks)
        a, b = random_perm(rng, k), random_perm(rng, k)
        assert shift(compose(a, b)) == a.chi + b.chi
        assert shift(demazure(a, b)) == a.chi + b.chi
        checks += 1
    # star-associativity
    for _ in range(1000):
        k = rng.choice(ks)
        a, b, c = (random_perm(rng, k) for _ in range(3))
        assert demazure(a, demazure(b, c)) == demazure(demazure(a, b), c)
        checks += 1
    # submodularity and asymptotics of tabulated slipfaces
    for _ in range(1000):
        p = random_perm(rng, rng.choice(ks))
        tabulate(p).validate()
        checks += 1
    # shifted-swap closed form
    for k in ks:
        for n in range(-3, 4):
            ms = range(k) if k else range(-3, 4)
            for m in ms:
                p = compose(iota(n, k), sigma(m, k))
                for a in range(-6, 7):
                    for b in range(-6, 7):
                        assert slipface(p, a, b) == _sis_formula(n, m, k, a, b)
                checks += 1
    return f"{checks} randomized identity checks"


def criterion_4():
    """Section-count permutation grid laws."""
    t0 = time.perf_counter()
    cells = 0
    for r in range(0, 5):
        for chi in range(r - 5, r):
            g = gamma_rd(r, chi)
            assert inv_count(g) == (r + 1) * (r - chi)
            assert essential_set(g) == {(1, 0)}
            assert slipface(g, 1, 0) == r + 1
            assert shift(g) == chi
            cells += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 1, f"took {elapsed:.2f} s"
    return f"{cells} grid cells"


def _all_splitting_types(k, lo=-3, hi=1):
    return [
        SplittingType(k, e)
        for e in itertools.combinations_with_replacement(range(lo, hi + 1), k)
    ]


def criterion_5():
    """Splitting-type grid: bigrassmannian laws and the unique residual."""
    t0 = time.perf_counter()
    cells = 0
    for k in (2, 3, 4):
        for e in _all_splitting_types(k):
            g = gamma_splitting(e)
            assert is_bigrassmannian(g)
            assert inv_count(g) == splitting_u(e)
            for a in range(-3, 3):
                for b in range(-3, 3):
                    if -5 <= a - b <= 5:
                        assert slipface(g, 1 + a * k, b * k) == splitting_x(e, a - b)
            assert splitting_type_of(g) == e
            # the residual permutation is the unique bigrassmannian recomposition
            pi = rho_pi_decompose(g).pi
            found = [
                rho
                for rho in itertools.permutations(range(k))
                if is_bigrassmannian(recompose(ResidualPeriodic(k, rho, pi)))
            ]
            assert found == [rho_pi_decompose(g).rho]
            cells += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 30, f"took {elapsed:.1f} s"
    return f"{cells} splitting types"


def criterion_6():
    """Genus-1 inversion/codimension pattern and the divisor-mismatch flag."""
    t0 = time.perf_counter()
    n = 0
    for k in (2, 3):
        rep = genus1_generality_report(k, 3)
        assert rep.passed, [c for c in rep.checks if not c.ok]
        assert rep.mismatch.flagged
        assert rep.mismatch.inv_kprime == 2
        n += len(rep.checks)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10, f"took {elapsed:.1f} s"
    return f"{n} single-component checks"


def _small_affine_corpus(k, max_inv, chi=0):
    """All period-k elements with the given shift and inv <= max_inv,
    enumerated with a self-certified window bound."""
    bound = 6
    while True:
        els = [
            p
            for p in enumerate_affine(k, bound)
            if p.chi == chi and inv_count(p) <= max_inv
        ]
        if all(p.extent() <= bound - 2 for p in els):
            return els
        bound += 2  # pragma: no cover


def criterion_7():
    """Chain enumeration two ways, and the reduced-word bijection."""
    t0 = time.perf_counter()
    taus = 0
    for k in (2, 3):
        corpus = _small_affine_corpus(k, 3)
        for ell in (1, 2, 3):
            degrees = [1] * ell
            for tau in corpus:
                brute = wtau_points_bruteforce(k, degrees, tau)
                words = wtau_points_via_words(k, degrees, tau)
                assert expand_strata(words) == brute, (k, ell, tau)
                if inv_count(tau) == ell:
                    assert len(words) == len(brute) == reduced_word_count(tau)
                taus += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, f"took {elapsed:.1f} s"
    return f"{taus} (k, chain, tau) cases"


def criterion_8():
    """Word counting: longest elements, Hecke counts vs naive folds."""
    t0 = time.perf_counter()
    s3 = make_finitary(0, 0, [2, 1, 0])
    s4 = make_finitary(0, 0, [3, 2, 1, 0])
    assert reduced_word_count(s3) == 2
    assert reduced_word_count(s4) == 16
    assert len(reduced_words(s4)) == 16
    cases = 0
    # k = 0: targets supported on {0..3}
    corpus0 = [
        make_finitary(0, 0, p)
        for p in itertools.permutations(range(4))
        if inv_count(make_finitary(0, 0, p)) <= 3
    ]
    # k = 2: shift-0 targets
    corpus2 = _small_affine_corpus(2, 3)
    for k, corpus, alphabet in ((0, corpus0, range(-1, 5)), (2, corpus2, range(2))):
        for g in range(5):
            tally = hecke_words_naive(k, g, alphabet)
            for p in corpus:
                assert hecke_word_count(p, g) == tally.get(p, 0), (k, g, p)
                cases += 1
        for p in corpus:
            assert hecke_word_count(p, inv_count(p)) == reduced_word_count(p)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, f"took {elapsed:.1f} s"
    return f"{cases} Hecke tallies"


def _cli_corpus():
    return [
        identity(0),
        identity(3),
        iota(3, 0),
        iota(-2, 4),
        sigma(0, 0),
        sigma(5, 0),
        sigma(1, 2),
        sigma(2, 3),
        _bitangent(),
        gamma_rd(2, -1),
        gamma_splitting(SplittingType(2, (-2, 0))),
        gamma_splitting(SplittingType(3, (-2, -1, 1))),
        make_affine(2, [3, -2]),
        make_finitary(-1, 2, [5, 3, 4]),
    ]


def criterion_9():
    """CLI round-trips and the exit-code contract."""
    import contextlib
    import io

    from . import cli

    t0 = time.perf_counter()
    for p in _cli_corpus():
        text = format_perm(p)
        assert parse_perm(text) == p, text
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = cli.run(["show", text])
        assert code == 0 and out.getvalue().strip() == text
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = cli.run(["--json", "show", text])
        assert code == 0
        assert perm_from_json(json.loads(out.getvalue())) == p
        assert perm_from_json(perm_to_json(p)) == p
    # exit-code contract on malformed inputs
    err = io.StringIO()
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(err):
        assert cli.run(["show", "garbage"]) == 2
        assert cli.run(["no-such-command"]) == 2
        assert cli.run(["compose", "s0@0", "s0@2"]) == 3
    elapsed = time.perf_counter() - t0
    assert elapsed < 10, f"took {elapsed:.1f} s"
    return f"{len(_cli_corpus())} round-trips + 3 malformed inputs"


CRITERIA = [
    (1, "pinned-value reproduction", criterion_1),
    (2, "Demazure oracle equivalence", criterion_2),
    (3, "randomized identity suite", criterion_3),
    (4, "section-count permutation grid", criterion_4),
    (5, "splitting-type grid", criterion_5),
    (6, "genus-1 generality report", criterion_6),
    (7, "chain/word bijection", criterion_7),
    (8, "word counts", criterion_8),
    (9, "CLI contract", criterion_9),
]


def run_all():
    results = []
    for number, name, fn in CRITERIA:
        t0 = time.perf_counter()
        try:
            detail = fn() or ""
            ok = True
        except (AssertionError, TranspermError) as exc:
            detail = str(exc)
            ok = False
        results.append(
            CriterionResult(number, name, ok, detail, time.perf_counter() - t0)
        )
    return results


def run_and_print() -> bool:
    results = run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} criterion {r.number}: {r.name} ({r.seconds:.2f}s) {r.detail}")
    ok = all(r.passed for r in results)
    print("selftest:", "PASS" if ok else "FAIL")
    return ok
