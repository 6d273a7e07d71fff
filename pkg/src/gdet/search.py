"""Box and random searches over group-ring elements with small coefficients.

Determinants are evaluated in bulk modulo 31-bit primes p = 1 mod N, where
the N-th roots of unity exist in Z/p, and recovered by CRT under an a-priori
magnitude bound.  Every value that ends up in a report is recomputed with
``det_exact``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

import numpy as np
from sympy import factorint, isprime

from .arith import VerificationError, is_odd_prime, valuation
from .detengine import det_exact
from .groupring import Family, GroupSpec, RingElement
from .laws import LambdaReport, Status, lambda_formula, necessary_conditions
from .linalg import crt_signed
from .witnesses import witness_basic, witness_coprime

__all__ = [
    "MODES",
    "SearchSpec",
    "SpectrumEntry",
    "SearchReport",
    "batch_determinants",
    "search_box",
    "search_frontier",
    "verify_lambda",
    "frontier_match",
    "thread_count",
]

MODES = ("min_nontrivial", "spectrum", "frontier")
SHARD = 1 << 16


@dataclass(frozen=True)
class SearchSpec:
    group: GroupSpec
    coeff_bound: int = 1
    mode: str = "min_nontrivial"
    value_cap: int | None = None
    budget: int | None = None
    # coefficients range over [coeff_min, coeff_bound]; default -coeff_bound
    coeff_min: int | None = None
    sampling: str = "lex"
    seed: int = 0
    frontier_p: int | None = None
    screen: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.sampling not in ("lex", "random"):
            raise ValueError(f"sampling must be lex or random, got {self.sampling!r}")
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be at least 1")
        if self.lo > self.coeff_bound:
            raise ValueError("empty coefficient range")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget must be positive")
        if self.sampling == "random" and self.budget is None:
            raise ValueError("random sampling needs a budget")
        if self.mode == "frontier":
            if not is_odd_prime(self.frontier_p):
                raise ValueError("frontier mode needs an odd prime p")
            if self.group != GroupSpec.dicyclic(self.frontier_p):
                raise ValueError("frontier mode searches Q_{4p}")

    @property
    def lo(self) -> int:
        return -self.coeff_bound if self.coeff_min is None else self.coeff_min

    @property
    def base(self) -> int:
        return self.coeff_bound - self.lo + 1

    @property
    def box_size(self) -> int:
        return self.base**self.group.order


@dataclass(frozen=True)
class SpectrumEntry:
    value: int
    multiplicity: int
    example: tuple[int, ...]


@dataclass
class SearchReport:
    spec: SearchSpec
    best_value: int | None
    best_element: RingElement | None
    spectrum: list[SpectrumEntry]
    exhausted: bool
    elements_visited: int
    violations: list[int] = field(default_factory=list)

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.spectrum]


def thread_count() -> int:
    env = os.environ.get("GDET_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"GDET_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# -- modular evaluation ----------------------------------------------------


class _Field:
    """Z/p with a fixed primitive N-th root of unity and its power table."""

    def __init__(self, p: int, N: int):
        self.p = p
        q = (p - 1) // N
        for g in range(2, p):
            w = pow(g, q, p)
            if all(pow(w, N // r, p) != 1 for r in factorint(N)):
                break
        self.w = w
        pw = [pow(w, k, p) for k in range(N)]
        self.V = np.array([[pw[i * j % N] for j in range(N)] for i in range(N)], dtype=np.int64)
        self.pw = np.array(pw, dtype=np.int64)


_fields: dict[int, list[_Field]] = {}


def _fields_for(N: int, count: int) -> list[_Field]:
    """The first ``count`` primes p = 1 mod N below 2^31, descending."""
    have = _fields.setdefault(N, [])
    p = ((1 << 31) - 2) // N * N + 1
    if have:
        p = have[-1].p - N
    while len(have) < count:
        if isprime(p):
            have.append(_Field(p, N))
        p -= N
    return have[:count]


def _magnitude_bound(G: GroupSpec, lo: int, hi: int) -> int:
    c = max(abs(lo), abs(hi))
    N = G.x_modulus
    if G.family is Family.CYCLIC:
        # |prod f(zeta)| <= (mean |f|^2)^(N/2) = ||f||^N
        return (N * c * c) ** ((N + 1) // 2)
    return (G.order * c * c) ** N


def _residues(G: GroupSpec, X: np.ndarray, F: _Field) -> np.ndarray:
    p, N = F.p, G.x_modulus
    ev = X[:, :N] @ F.V % p
    neg = (-np.arange(N)) % N
    if G.family is Family.CYCLIC:
        vals = ev
    else:
        eg = X[:, N:] @ F.V % p
        gg = eg * eg[:, neg] % p
        if G.family is Family.DICYCLIC:
            gg = gg * F.pw[(G.n * np.arange(N)) % N] % p
        vals = (ev * ev[:, neg] - gg) % p
    acc = vals[:, 0].copy()
    for j in range(1, N):
        acc = acc * vals[:, j] % p
    return acc


def batch_determinants(G: GroupSpec, X: np.ndarray, bound: int | None = None) -> list[int] | np.ndarray:
    """Exact determinants of the rows of X (coefficient vectors in word order)."""
    X = np.asarray(X, dtype=np.int64)
    if bound is None:
        bound = _magnitude_bound(G, int(X.min(initial=0)), int(X.max(initial=0)))
    N = G.x_modulus
    fields, acc = [], 1
    while acc <= 2 * bound:
        fields = _fields_for(N, len(fields) + 1)
        acc *= fields[-1].p
    res = [_residues(G, X, F) for F in fields]
    if len(fields) == 1:
        p = fields[0].p
        r = res[0]
        return np.where(r > p // 2, r - p, r)
    if len(fields) == 2:
        p1, p2 = fields[0].p, fields[1].p
        inv = pow(p1, -1, p2)
        t = (res[1] - res[0]) % p2 * inv % p2
        x = res[0] + p1 * t
        M = p1 * p2
        return np.where(x > M // 2, x - M, x)
    moduli = [F.p for F in fields]
    return [crt_signed([int(r[i]) for r in res], moduli) for i in range(X.shape[0])]


def _screen(G: GroupSpec, X: np.ndarray) -> np.ndarray:
    """|B(1) B(-1)|, a divisor of every determinant (0 means det = 0)."""
    N = G.x_modulus
    sign = np.where(np.arange(N) % 2, -1, 1)
    f1, fm = X[:, :N].sum(axis=1), X[:, :N] @ sign
    if G.family is Family.CYCLIC:
        m1, m2 = f1, fm
    else:
        g1, gm = X[:, N:].sum(axis=1), X[:, N:] @ sign
        s = (-1) ** G.n if G.family is Family.DICYCLIC else 1
        m1, m2 = f1 * f1 - g1 * g1, fm * fm - s * gm * gm
    if N % 2:
        m2 = np.ones_like(m1)
    return np.abs(m1 * m2)


# -- enumeration -----------------------------------------------------------


def _digits(start: int, count: int, base: int, width: int, lo: int) -> np.ndarray:
    """Rows start..start+count-1 of the lexicographic box, first coordinate slowest."""
    idx = np.arange(start, start + count, dtype=object if base**width >= 1 << 62 else np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for col in range(width - 1, -1, -1):
        out[:, col] = (idx % base).astype(np.int64)
        idx = idx // base
    return out + lo


def frontier_match(v: int, p: int) -> bool:
    """v = +-2^5 p^l m with l in {0, 3, 5}, gcd(m, 2p) = 1 and |m| < (p^2+1)/2."""
    if v == 0 or valuation(2, v) != 5:
        return False
    ell = valuation(p, v)
    m = abs(v) // (32 * p**ell)
    return ell in (0, 3, 5) and gcd(m, 2 * p) == 1 and m < (p * p + 1) // 2


@dataclass
class _Partial:
    best: tuple | None = None  # (|v|, v, order key, vector)
    spectrum: dict = field(default_factory=dict)  # value -> [count, order key, vector]


def _process(spec: SearchSpec, X: np.ndarray, offset: int, bound: int, cutoff: int | None) -> _Partial:
    G = spec.group
    out = _Partial()
    keep = np.arange(X.shape[0])
    # The screen divides det but cannot see a zero cofactor, so it may only
    # discard rows when det = 0 is not itself a value of interest.
    if spec.screen and spec.mode == "min_nontrivial":
        s = _screen(G, X)
        mask = s != 0
        if cutoff is not None:
            mask &= s <= cutoff
        keep = np.nonzero(mask)[0]
        X = X[keep]
    if X.shape[0] == 0:
        return out
    d = batch_determinants(G, X, bound)
    if spec.mode == "min_nontrivial":
        d = np.asarray(d, dtype=object) if isinstance(d, list) else d
        a = np.abs(d)
        ok = np.nonzero(a >= 2)[0]
        if ok.size:
            amin = a[ok].min()
            tie = ok[a[ok] == amin]
            vmin = min(d[tie])
            j = int(tie[d[tie] == vmin][0])
            out.best = (int(amin), int(vmin), offset + int(keep[j]), tuple(int(c) for c in X[j]))
        return out
    if isinstance(d, np.ndarray):
        vals, first, counts = np.unique(d, return_index=True, return_counts=True)
        items = zip(vals.tolist(), first.tolist(), counts.tolist())
    else:
        seen: dict[int, list[int]] = {}
        for i, v in enumerate(d):
            e = seen.setdefault(v, [i, 0])
            e[1] += 1
        items = ((v, i, c) for v, (i, c) in seen.items())
    for v, i, c in items:
        if spec.value_cap is not None and abs(v) > spec.value_cap:
            continue
        if spec.mode == "frontier" and not frontier_match(v, spec.frontier_p):
            continue
        out.spectrum[v] = [c, offset + int(keep[i]), tuple(int(x) for x in X[i])]
    return out


def _merge(acc: _Partial, part: _Partial) -> None:
    if part.best is not None and (acc.best is None or part.best[:3] < acc.best[:3]):
        acc.best = part.best
    for v, (c, key, vec) in part.spectrum.items():
        cur = acc.spectrum.get(v)
        if cur is None:
            acc.spectrum[v] = [c, key, vec]
        else:
            cur[0] += c
            if key < cur[1]:
                cur[1], cur[2] = key, vec


def _batches(spec: SearchSpec):
    """Yield (offset, count) for lexicographic shards, or sampled blocks."""
    total = spec.box_size if spec.budget is None else min(spec.box_size, spec.budget)
    if spec.sampling == "random":
        total = spec.budget
    for start in range(0, total, SHARD):
        yield start, min(SHARD, total - start)


def search_box(spec: SearchSpec, threads: int | None = None) -> SearchReport:
    """Enumerate the coefficient box (or a deterministic prefix / seeded sample)."""
    G = spec.group
    width, base, lo = G.order, spec.base, spec.lo
    bound = _magnitude_bound(G, lo, spec.coeff_bound)
    threads = thread_count() if threads is None else max(1, threads)
    batches = list(_batches(spec))
    visited = sum(c for _, c in batches)
    rng = np.random.default_rng(spec.seed) if spec.sampling == "random" else None

    def rows(start: int, count: int) -> np.ndarray:
        if rng is not None:
            return samples[start // SHARD]
        return _digits(start, count, base, width, lo)

    if rng is not None:
        # drawn up front in a fixed order so the sample does not depend on threads
        samples = [rng.integers(lo, spec.coeff_bound + 1, size=(c, width), dtype=np.int64) for _, c in batches]

    acc = _Partial()
    if spec.mode == "min_nontrivial":
        # the running best prunes conservatively: |B(1)B(-1)| > best forces |det| > best
        for start, count in batches:
            cutoff = acc.best[0] if acc.best else None
            _merge(acc, _process(spec, rows(start, count), start, bound, cutoff))
    else:
        def job(b):
            return _process(spec, rows(*b), b[0], bound, None)

        if threads > 1 and len(batches) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                parts = list(ex.map(job, batches))
        else:
            parts = [job(b) for b in batches]
        for part in parts:
            _merge(acc, part)

    best_value = best_element = None
    if acc.best is not None:
        best_value = acc.best[1]
        best_element = RingElement.from_vector(G, acc.best[3])
        if det_exact(best_element) != best_value:
            raise VerificationError(f"bulk value {best_value} disagrees with det_exact")
    spectrum = []
    for v in sorted(acc.spectrum):
        c, _, vec = acc.spectrum[v]
        if det_exact(RingElement.from_vector(G, vec)) != v:
            raise VerificationError(f"bulk value {v} disagrees with det_exact at {vec}")
        spectrum.append(SpectrumEntry(v, c, vec))
    check = [best_value] if best_value is not None else []
    check += [e.value for e in spectrum]
    violations = sorted({v for v in check if necessary_conditions(G, v).status is Status.OUT})
    exhausted = spec.sampling == "lex" and visited == spec.box_size
    return SearchReport(spec, best_value, best_element, spectrum, exhausted, visited, violations)


def search_frontier(
    p: int,
    coeff_bound: int = 1,
    budget: int | None = None,
    coeff_min: int | None = None,
    threads: int | None = None,
) -> SearchReport:
    """Search Q_{4p} for values +-2^5 p^l m (l in {0,3,5}) with |m| below (p^2+1)/2."""
    spec = SearchSpec(
        GroupSpec.dicyclic(p),
        coeff_bound,
        mode="frontier",
        budget=budget,
        coeff_min=coeff_min,
        frontier_p=p,
    )
    return search_box(spec, threads)


def verify_lambda(n: int) -> LambdaReport:
    """Minimal non-trivial determinant of Q_{4n}, n odd, with a checked witness."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    G = GroupSpec.dicyclic(n)
    rep = lambda_formula(G)
    if rep.value == 16:
        w = witness_basic(G, "sixteen")
    else:
        w = witness_coprime(n, rep.value)
    if abs(w.claimed) != rep.value:
        raise VerificationError(f"witness value {w.claimed} does not attain {rep.value}")
    excluded = {abs(c["value"]) for c in rep.certificate}
    if excluded != set(range(2, rep.value)):
        raise VerificationError("certificate does not cover every smaller magnitude")
    rep.witness = w
    return rep
