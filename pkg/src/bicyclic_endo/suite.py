"""The exact, deterministic verification checks behind ``bicyclic-endo suite``."""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

import numpy as np

from .bicyclic_ext import BicyclicExtension
from .cayley import OUT, check_associativity
from .conv_iso import (
    ConvIso,
    ConvSemigroup,
    compose,
    iso_J,
    iso_J_inv,
    maximal_chains,
    maximal_idempotents,
    up_set,
)
from .endomorphism import (
    Shift,
    Table,
    apply,
    classify_injective,
    injective_endo_monoid_check,
    table_of,
    verify_endomorphism,
)
from .matrix_units import (
    congruence_freeness_check,
    end_structure_report,
    enumerate_endomorphisms,
    naive_endomorphisms,
)
from .zero import ZERO


class CheckResult(NamedTuple):
    number: int
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} [{self.number:2d}] {self.name}: {self.detail}"


def check_assoc_inverse(ns=(1, 2, 3), W=8) -> CheckResult:
    parts, ok = [], True
    for n in ns:
        S = BicyclicExtension.F(n)
        elements, table = S.cayley(W)
        rep = check_associativity(table)
        inverse_ok = all(
            S.mul(S.mul(x, S.inv(x)), x) == x and S.mul(S.mul(S.inv(x), x), S.inv(x)) == S.inv(x)
            for x in elements
        )
        ok &= rep.ok and inverse_ok
        parts.append(f"F_{n}: {rep.checked} triples, {rep.skipped} skipped, inverse laws {inverse_ok}")
    return CheckResult(1, "associativity and inverse laws", ok, "; ".join(parts))


def check_iso_J(ns=(1, 2, 3, 4), W=8) -> CheckResult:
    """n is the rank bound of I_omega^n(conv); the source is B_omega^{F_(n-1)}."""
    ok, pairs = True, 0
    for n in ns:
        S = BicyclicExtension.F(n - 1)
        elements = S.window(W)
        images = {x: iso_J(x, n) for x in elements}
        for x in elements:
            if iso_J_inv(images[x], n) != x:
                ok = False
        for a in ConvSemigroup(n).window(W):
            if iso_J(iso_J_inv(a, n), n) != a:
                ok = False
        for x in elements:
            for y in elements:
                pairs += 1
                if iso_J(S.mul(x, y), n) != compose(images[x], images[y]):
                    ok = False
    return CheckResult(2, "J is an isomorphism", ok, f"{pairs} pairs over n={list(ns)}, W={W}")


def check_shift_endomorphisms(P=4, ns=(1, 2, 3, 4), W=12) -> CheckResult:
    ok, failures, checked = True, 0, 0
    for n in ns:
        for S in (ConvSemigroup(n), BicyclicExtension.F(n - 1)):
            for p in range(P + 1):
                v = verify_endomorphism(Shift(p), S, W)
                checked += v.checked
                if not v.ok or v.skipped:
                    ok = False
                    failures += 1
    return CheckResult(
        3, "shifts are endomorphisms", ok, f"{checked} pairs checked, {failures} failures"
    )


def mutate(table: Table, count: int, seed: int) -> list[tuple]:
    """``count`` distinct single-entry mutations (key, new value) of a table."""
    rng = random.Random(seed)
    keys = sorted(table.mapping, key=lambda x: x.sort_key())
    pool = sorted(set(keys) | set(table.mapping.values()), key=lambda x: x.sort_key())
    seen, out = set(), []
    while len(out) < count:
        x = rng.choice(keys)
        y = rng.choice(pool)
        if y == table.mapping[x] or (x, y) in seen:
            continue
        seen.add((x, y))
        out.append((x, y))
    return out


def check_classifier(ns=(2, 3), shifts=range(6), W=12, mutations=50) -> CheckResult:
    ok, killed, total = True, 0, 0
    for n in ns:
        S = ConvSemigroup(n)
        for i0 in shifts:
            t = table_of(Shift(i0), S, W)
            if classify_injective(t, n).i0 != i0:
                ok = False
            for x, y in mutate(t, mutations, seed=1000 * n + i0):
                m = dict(t.mapping)
                m[x] = y
                total += 1
                if not classify_injective(Table(W, m), n).ok:
                    killed += 1
    ok &= killed == total
    return CheckResult(
        4, "injective classifier round trip", ok, f"mutation kill rate {killed}/{total}"
    )


def check_shift_monoid(P=16, W=12, ns=(2, 3)) -> CheckResult:
    ok, parts = True, []
    for n in ns:
        r = injective_endo_monoid_check(P, W, n)
        ok &= r["ok"]
        parts.append(f"n={n}: laws {not r['law_failures']}, surjective only {r['window_surjective']}")
    return CheckResult(5, "shift monoid is (omega,+)", ok, "; ".join(parts))


def zero_moving_candidates(n=2, W=8) -> list[Table]:
    """Tables sending 0 to a nonzero idempotent, built around each idempotent target."""
    S = ConvSemigroup(n)
    elements = S.window(W)
    idempotents = [e for e in S.idempotents(W) if e is not ZERO]
    cands = []
    for e in idempotents:
        base = {ZERO: e}
        cands.append(Table(W, {x: e for x in elements}))
        for p in (0, 1):
            cands.append(Table(W, {**{x: apply(Shift(p), x) for x in elements}, **base}))
        idem = {x: e if S.is_idempotent(x) else ZERO for x in elements}
        cands.append(Table(W, {**idem, **base}))
        cands.append(Table(W, {**{x: compose(x, e) for x in elements}, **base}))
        cands.append(Table(W, {**{x: compose(compose(e, x), e) for x in elements}, **base}))
        for f in up_set(e, n):
            if f != e:
                top = {x: f if x is not ZERO and x.k == n else e for x in elements}
                cands.append(Table(W, {**top, **base}))
                nonzero_idem = {
                    x: f if x is not ZERO and S.is_idempotent(x) else e for x in elements
                }
                cands.append(Table(W, {**nonzero_idem, **base}))
    return cands


def check_zero_moving(n=2, W=8) -> CheckResult:
    S = ConvSemigroup(n)
    cands = zero_moving_candidates(n, W)
    passed = [t for t in cands if verify_endomorphism(t, S, W).ok]
    ok = all(t.is_constant() for t in passed) and bool(passed)
    return CheckResult(
        6,
        "endomorphisms moving zero are constant",
        ok,
        f"{len(cands)} candidates, {len(passed)} verified, all constant: {ok}",
    )


def check_chains(ns=(1, 2, 3, 4), W=6) -> CheckResult:
    ok, parts = True, []
    for n in ns:
        chains = maximal_chains(W, n)
        lengths = {len(c) for c in chains}
        L0 = [ZERO] + [ConvIso(0, 0, k) for k in range(1, n + 1)]
        L1 = [ZERO] + [ConvIso(1, 1, k) for k in range(1, n + 1)]
        tops = sorted({c[-1] for c in chains}, key=lambda x: x.sort_key())
        M = maximal_idempotents(W - n + 1, n)
        this = (
            lengths == {n + 1}
            and L0 in chains
            and L1 in chains
            and tops == M
            and all(up_set(e, n) == [e] for e in M)
            and up_set(ConvIso(0, 0, 1), n) == [ConvIso(0, 0, k) for k in range(1, n + 1)]
        )
        ok &= this
        parts.append(f"n={n}: {len(chains)} chains of length {sorted(lengths)}")
    return CheckResult(7, "maximal chains and up-sets", ok, "; ".join(parts))


def check_matrix_endos(lams=(2, 3, 4)) -> CheckResult:
    ok, parts = True, []
    for lam in lams:
        r = end_structure_report(lam)
        this = r["ok"] and r["endomorphisms"] == math.factorial(lam) + lam + 1
        this &= r["automorphisms"] == math.factorial(lam)
        ok &= this
        parts.append(f"lambda={lam}: {r['endomorphisms']} endos, {r['automorphisms']} autos")
    naive = naive_endomorphisms(2)
    cross = sorted(e.images for e in naive) == sorted(e.images for e in enumerate_endomorphisms(2))
    ok &= cross
    parts.append(f"naive 5^5 cross-check {cross}")
    return CheckResult(8, "End(B_lambda) structure", ok, "; ".join(parts))


def check_congruence_free(lams=(2, 3)) -> CheckResult:
    results = [congruence_freeness_check(lam) for lam in lams]
    ok = all(r["congruence_free"] for r in results)
    detail = "; ".join(f"lambda={r['lambda']}: {r['congruences']} congruences" for r in results)
    return CheckResult(9, "B_lambda is congruence-free", ok, detail)


def principal_ideals(table) -> np.ndarray:
    """Row y is the in-window part of S^1 y S^1."""
    size = table.shape[0]
    out = np.zeros((size, size), dtype=bool)
    for y in range(size):
        left = np.zeros(size, dtype=bool)
        left[y] = True
        col = table[:, y]
        left[col[col != OUT]] = True
        both = table[left]
        out[y] = left
        out[y, both[both != OUT]] = True
    return out


def check_combinatorial_DJ(ns=(1, 2, 3), W=6) -> CheckResult:
    ok, parts = True, []
    for n in ns:
        S = BicyclicExtension.F(n)
        elements, table = S.cayley(W)
        ideals = principal_ideals(table)
        # x J y iff their principal ideals coincide
        J = (ideals[:, None, :] == ideals[None, :, :]).all(axis=2)
        lr = S.lr_pairs(W)
        h_ok = d_ok = j_ok = True
        for a, x in enumerate(elements):
            for b, y in enumerate(elements):
                rels = S.green(x, y)
                if "H" in rels and x != y:
                    h_ok = False
                if ("D" in rels) != S.d_related_chase(x, y, W, lr):
                    d_ok = False
                if ("D" in rels) != bool(J[a, b]):
                    j_ok = False
        ok &= h_ok and d_ok and j_ok
        parts.append(f"F_{n}: H trivial {h_ok}, D by F-part = L∘R chase {d_ok}, D = J {j_ok}")
    return CheckResult(10, "combinatorial and D = J", ok, "; ".join(parts))


CHECKS = [
    check_assoc_inverse,
    check_iso_J,
    check_shift_endomorphisms,
    check_classifier,
    check_shift_monoid,
    check_zero_moving,
    check_chains,
    check_matrix_endos,
    check_congruence_free,
    check_combinatorial_DJ,
]


def _run(check):
    return check()


def run_suite(jobs: int = 1) -> list[CheckResult]:
    if jobs <= 1:
        return [check() for check in CHECKS]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, CHECKS))
