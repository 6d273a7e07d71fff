"""The acceptance checks, runnable as a unit (``gdet selftest``)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, totient

from .detengine import det_exact, det_matrix_oracle
from .groupring import GroupSpec, RingElement, ring_mul, swap
from .intpoly import cyclotomic, resultant, resultant_sylvester
from .laws import Status, classify, necessary_conditions
from .search import SearchSpec, search_box, verify_lambda
from .witnesses import (
    witness_basic,
    witness_divisibility_sharpness,
    witness_prime,
    witness_Q4p_cube,
    witness_Q4p_frontier,
    witness_Q4p_two_powers,
)

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "lambda_table"]

SEED = 20240611
Q4P_PRIMES = (3, 5, 7, 11, 13)


@dataclass
class CriterionResult:
    id: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _rand_element(rng: random.Random, G: GroupSpec, lo: int, hi: int) -> RingElement:
    return RingElement.from_vector(G, [rng.randint(lo, hi) for _ in range(G.order)])


def _box(G: GroupSpec, lo: int, hi: int):
    from itertools import product

    for vec in product(range(lo, hi + 1), repeat=G.order):
        yield RingElement.from_vector(G, vec)


@lru_cache(maxsize=4)
def _criterion1_inputs(count: int) -> tuple[tuple[GroupSpec, tuple[RingElement, ...]], ...]:
    rng = random.Random(SEED)
    out = [(GroupSpec.dicyclic(2), tuple(_box(GroupSpec.dicyclic(2), -1, 1)))]
    for G in (
        GroupSpec.dicyclic(3),
        GroupSpec.dicyclic(5),
        GroupSpec.dicyclic(6),
        GroupSpec.dihedral(6),
        GroupSpec.cyclic(12),
    ):
        out.append((G, tuple(_rand_element(rng, G, -5, 5) for _ in range(count))))
    return tuple(out)


def criterion_engines(scale: float = 1.0) -> tuple[bool, str]:
    count = max(1, int(1000 * scale))
    bad, total = [], 0
    for G, elems in _criterion1_inputs(count):
        for a in elems:
            total += 1
            if det_exact(a) != det_matrix_oracle(a):
                bad.append((G.name, a.vector()))
    return not bad, f"{total} elements, {len(bad)} disagreements" + (f", first {bad[0]}" if bad else "")


def lambda_table(n: int) -> int:
    """The case table for odd n, read row by row."""
    for q, val in ((3, 3), (5, 5), (7, 7), (11, 11), (13, 13)):
        if n % q:
            return val
    return 16


def criterion_lambda(scale: float = 1.0) -> tuple[bool, str]:
    notes, ok = [], True
    for G, want in ((GroupSpec.dicyclic(2), 7), (GroupSpec.dicyclic(3), 5)):
        r = search_box(SearchSpec(G, 1))
        good = r.exhausted and abs(r.best_value) == want
        ok &= good
        notes.append(f"{G.name} box {r.best_value}")
    for n in (3, 5, 9, 15, 105, 1155, 15015):
        rep = verify_lambda(n)
        good = rep.value == lambda_table(n) and abs(rep.witness.verify()) == rep.value
        ok &= good
        notes.append(f"n={n}:{rep.value}" + ("" if good else "!"))
    return ok, ", ".join(notes)


def _witness_grid():
    for n in (3, 5, 7):
        yield lambda n=n: witness_basic(GroupSpec.dicyclic(n), "sixteen")
        yield lambda n=n: witness_basic(GroupSpec.dicyclic(n), "two_n_minus_one")
    for n in (3, 5, 7, 9, 15):
        ps = [q for q in (3, 5, 7, 11, 13, 17, 19, 23) if n % q][:3]
        for q in ps:
            yield lambda n=n, q=q: witness_prime(n, q)
    for p in Q4P_PRIMES:
        for k in (4, 6, 7, 9):
            yield lambda p=p, k=k: witness_Q4p_two_powers(p, k)
        for m in range(-2, 3):
            yield lambda p=p, m=m: witness_Q4p_cube(p, m)
        for t in (0, 1):
            yield lambda p=p, t=t: witness_Q4p_frontier(p, "neg_2_5_p_2tplus4", t=t)
        yield lambda p=p: witness_Q4p_frontier(p, "half_p2plus1_2_5")
        for mu in (1, 2):
            yield lambda p=p, mu=mu: witness_Q4p_frontier(p, "neg_half_2_4_p3_mu", mu=mu)
    for p in (5, 13):
        yield lambda p=p: witness_Q4p_frontier(p, "p5_sum_of_squares")
    yield lambda: witness_Q4p_frontier(5, "p5_special")
    for n in (4, 6, 9):
        yield lambda n=n: witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_n_sq")
    for n in (9, 27, 6, 12):
        yield lambda n=n: witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_p_shift")
        yield lambda n=n: witness_divisibility_sharpness(GroupSpec.dicyclic(n), "odd_p_dicyclic")
        for m in (-1, 0, 1, 2):
            yield lambda n=n, m=m: witness_divisibility_sharpness(GroupSpec.dicyclic(n), "two_power_dicyclic", m=m)
        if n % 2 == 0:
            yield lambda n=n: witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_4_shift")
            yield lambda n=n: witness_divisibility_sharpness(GroupSpec.dicyclic(n), "four_x_minus_1")


def criterion_witnesses(scale: float = 1.0) -> tuple[bool, str]:
    total, bad = 0, []
    for make in _witness_grid():
        total += 1
        try:
            make()  # checked mode recomputes value and valuation
        except Exception as exc:  # noqa: BLE001 - report every failure
            bad.append(str(exc))
    return not bad, f"{total} witnesses, {len(bad)} failures" + (f": {bad[0]}" if bad else "")


def criterion_soundness(scale: float = 1.0) -> tuple[bool, str]:
    rng = random.Random(SEED + 4)
    count = max(1, int(10_000 * scale))
    checked, bad = 0, []
    pools = [(G, elems) for G, elems in _criterion1_inputs(max(1, int(1000 * scale)))]
    for n in (2, 3, 4, 5, 6):
        G = GroupSpec.dicyclic(n)
        pools.append((G, [_rand_element(rng, G, -2, 2) for _ in range(count)]))
    for G, elems in pools:
        for a in elems:
            d = det_exact(a)
            if d == 0:
                continue
            checked += 1
            if necessary_conditions(G, d).status is Status.OUT:
                bad.append((G.name, d))
    return not bad, f"{checked} nonzero determinants, {len(bad)} exclusions" + (f", first {bad[0]}" if bad else "")


def criterion_sets(scale: float = 1.0) -> tuple[bool, str]:
    notes, ok = [], True
    for G, sid in ((GroupSpec.dicyclic(2), "Q8"), (GroupSpec.dicyclic(3), "Q12")):
        r = search_box(SearchSpec(G, 1, mode="spectrum"))
        out = [v for v in r.values if classify(sid, v).status is not Status.IN]
        ok &= r.exhausted and not out
        notes.append(f"{G.name}: {len(r.values)} values, {len(out)} not In")
    small = [32 * m for m in (-3, -1, 1, 3)]
    out_small = all(classify("Q4p", v, 3).status is Status.OUT for v in small)
    w = witness_Q4p_frontier(3, "half_p2plus1_2_5")
    at5 = all(classify("Q4p", s * 160, 3).status is Status.IN for s in (1, -1))
    at5 &= w.verify() == 160 and det_exact(swap(w.element)) == -160
    ok &= out_small and at5
    notes.append(f"Q4p p=3: 2^5 m Out for odd |m|<5 {out_small}, In at 5 with witness {at5}")
    return ok, "; ".join(notes)


def _formula(d: int, m: int) -> int:
    ratio, rem = divmod(m, d)
    if rem == 0:
        fac = factorint(ratio)
        if len(fac) == 1:
            (q, _), = fac.items()
            return q ** int(totient(d))
    return 1


def criterion_cyclotomic(scale: float = 1.0) -> tuple[bool, str]:
    bad = []
    pairs = 0
    for m in range(2, 41):
        for d in range(1, m):
            pairs += 1
            a, b = cyclotomic(d), cyclotomic(m)
            r = resultant(a, b)
            if r != resultant_sylvester(a, b) or abs(r) != _formula(d, m):
                bad.append((d, m))
    return not bad, f"{pairs} pairs, {len(bad)} mismatches" + (f", first {bad[0]}" if bad else "")


def criterion_algebra(scale: float = 1.0) -> tuple[bool, str]:
    rng = random.Random(SEED + 7)
    count = max(1, int(500 * scale))
    fails = {"mult": 0, "swap": 0, "square": 0}
    for family in ("cyclic", "dihedral", "dicyclic"):
        for _ in range(count):
            G = GroupSpec(family, rng.randint(1, 8))
            a, b = _rand_element(rng, G, -3, 3), _rand_element(rng, G, -3, 3)
            if det_exact(ring_mul(a, b)) != det_exact(a) * det_exact(b):
                fails["mult"] += 1
    for _ in range(count):
        n = rng.randint(1, 8)
        a = _rand_element(rng, GroupSpec.dicyclic(n), -3, 3)
        if det_exact(swap(a)) != (-1) ** n * det_exact(a):
            fails["swap"] += 1
        f = [rng.randint(-3, 3) for _ in range(2 * n)]
        q = det_exact(RingElement.from_coeffs(GroupSpec.dicyclic(n), f))
        z = det_exact(RingElement.from_coeffs(GroupSpec.cyclic(2 * n), f))
        if q != z * z:
            fails["square"] += 1
    detail = f"{3 * count} products, {count} swaps, {count} g=0 elements; failures {fails}"
    return not any(fails.values()), detail


CRITERIA = (
    (1, "engine equivalence", criterion_engines),
    (2, "lambda values", criterion_lambda),
    (3, "witness regression", criterion_witnesses),
    (4, "law soundness", criterion_soundness),
    (5, "characterized-set sweeps", criterion_sets),
    (6, "cyclotomic resultants", criterion_cyclotomic),
    (7, "multiplicativity and symmetry", criterion_algebra),
)


def run_criterion(cid: int, scale: float = 1.0) -> CriterionResult:
    for i, name, fn in CRITERIA:
        if i == cid:
            t = time.perf_counter()
            try:
                ok, detail = fn(scale)
            except Exception as exc:  # noqa: BLE001 - a crash is a failed criterion
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(i, name, ok, detail, time.perf_counter() - t)
    raise ValueError(f"no criterion {cid}")


def run_all(scale: float = 1.0, ids=None) -> list[CriterionResult]:
    return [run_criterion(i, scale) for i, _, _ in CRITERIA if ids is None or i in ids]
