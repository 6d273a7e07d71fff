"""Necessary conditions on determinant values, complete characterizations of
a few small value sets, and the minimal non-trivial determinant of Q_{4n}.

Verdicts are three-valued.  ``Out`` is a proof of non-membership, ``In`` a
proof of membership (a characterization or a coprimality result applies),
and ``Unknown`` means the available laws do not decide the value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from sympy import factorint, isprime

from .arith import is_odd_prime, smallest_prime_not_dividing, strip, valuation
from .groupring import Family, GroupSpec

__all__ = [
    "Status",
    "Verdict",
    "LambdaReport",
    "SETS",
    "check_divisibility",
    "check_odd_residue",
    "check_square_cofactor",
    "necessary_conditions",
    "classify",
    "characterized_set",
    "lambda_formula",
]


class Status(str, Enum):
    IN = "In"
    OUT = "Out"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    code: str
    message: str
    decomposition: dict | None = None

    @property
    def excluded(self) -> bool:
        return self.status is Status.OUT


@dataclass
class LambdaReport:
    group: GroupSpec
    value: int
    exact: bool
    p0: int
    certificate: list[dict] = field(default_factory=list)
    note: str = ""
    witness: object | None = None


SETS = ("Zp", "Z2p", "D2p", "D4p", "Q8", "Q12", "Q4p")


def _v(status: Status, code: str, message: str, dec: dict | None = None) -> Verdict:
    return Verdict(status, code, message, dec)


def _decompose(M: int, p: int | None) -> dict:
    primes = [2] if p in (None, 2) else [2, p]
    exps, m = strip(M, primes)
    dec = {"k": exps[2], "m": m}
    if len(primes) == 2:
        dec["l"] = exps[p]
    return dec


# -- necessary divisibility ------------------------------------------------


def _divisibility_violation(G: GroupSpec, M: int) -> tuple[str, str] | None:
    n = G.n
    fac = factorint(n)
    for q in sorted(set(fac) | {2}):
        if M % q:
            continue
        a = fac.get(q, 0)
        have = valuation(q, M)
        if G.family is Family.CYCLIC:
            if a == 0:
                continue
            need, code = (a + 2, "DIV_CYC_2") if q == 2 and a >= 2 else (a + 1, "DIV_CYC_P")
        elif G.family is Family.DIHEDRAL:
            if q == 2:
                need = 2 if a == 0 else 4 if a == 1 else 2 * a + 4
                code = "DIV_DIH_2"
            elif a:
                need, code = 2 * a + 1, "DIV_DIH_P"
            else:
                continue
        else:
            if q == 2:
                need, code = (4, "DIV_2_16") if a == 0 else (2 * a + 6, "DIV_2_2A6")
            elif a:
                need, code = 2 * a + 1, "DIV_P_2A1"
            else:
                continue
        if have < need:
            return code, f"{q} divides {M} in {G} so {q}^{need} must, but only {q}^{have} does"
    return None


def _complete_set(G: GroupSpec) -> tuple[str, int | None] | None:
    n = G.n
    if G.family is Family.CYCLIC:
        if isprime(n):
            return "Zp", n
        if n % 2 == 0 and is_odd_prime(n // 2):
            return "Z2p", n // 2
    elif G.family is Family.DIHEDRAL:
        if is_odd_prime(n):
            return "D2p", n
        if n % 2 == 0 and is_odd_prime(n // 2):
            return "D4p", n // 2
    else:
        if n == 2:
            return "Q8", None
        if n == 3:
            return "Q12", None
    return None


def check_divisibility(G: GroupSpec, M: int) -> Verdict:
    """Necessary divisibility laws for M to be a determinant of G.

    When no law is violated the verdict is In only if a complete
    characterization or a coprimality result settles M; otherwise Unknown.
    """
    if M == 0:
        raise ValueError("M = 0 is always a determinant; the divisibility laws need M != 0")
    bad = _divisibility_violation(G, M)
    if bad:
        return _v(Status.OUT, *bad)
    known = _complete_set(G)
    if known:
        return classify(known[0], M, known[1])
    n = G.n
    if G.family is Family.DICYCLIC and n % 2 and is_odd_prime(n):
        return classify("Q4p", M, n)
    unit = gcd(M, 2 * n) == 1
    if G.family is Family.CYCLIC and gcd(M, n) == 1:
        return _v(Status.IN, "COPRIME", f"every integer coprime to {n} is a determinant of {G}")
    if G.family is Family.DIHEDRAL and unit and (n % 2 or M % 4 == 1):
        return _v(Status.IN, "COPRIME", f"{M} is coprime to {2 * n}" + ("" if n % 2 else " and 1 mod 4"))
    if G.family is Family.DICYCLIC and n % 2 and unit:
        return _v(Status.IN, "COPRIME", f"{M} is coprime to {2 * n}")
    return _v(Status.UNKNOWN, "LAWS_PASS", f"{M} passes every divisibility law for {G}")


def check_odd_residue(G: GroupSpec, M: int) -> Verdict:
    """Residue laws for odd values when n is even (sign-sensitive)."""
    if G.family is not Family.DICYCLIC or G.n % 2:
        raise ValueError(f"odd residue laws need a dicyclic group with n even, got {G}")
    if M % 2 == 0:
        raise ValueError(f"odd residue laws need an odd value, got {M}")
    r = M % 8
    if r in (3, 7):
        return _v(Status.OUT, "RES_MOD8", f"{M} is {r} mod 8; odd values must be 1 or 5 mod 8")
    if r == 5 and valuation(2, G.n) == 1:
        fac = factorint(abs(M))
        if len(fac) == 1:
            (q, beta), = fac.items()
            alpha = valuation(q, G.n) if G.n % q == 0 else 0
            if alpha and beta < 4 * alpha + 3:
                return _v(
                    Status.OUT,
                    "RES_QPOW",
                    f"{M} = ±{q}^{beta} with {q}^{alpha} || n needs exponent >= {4 * alpha + 3}",
                )
    return _v(Status.UNKNOWN, "RES_PASS", f"{M} is not excluded by the residue laws")


def check_square_cofactor(G: GroupSpec, M: int) -> Verdict:
    """For 2 || n an odd value that is 5 mod 8 has a square factor k^2, k = 3 mod 4.

    Such a k exists exactly when some prime q = 3 mod 4 has q^2 | M.
    """
    if G.family is not Family.DICYCLIC or valuation(2, G.n) != 1:
        raise ValueError(f"square cofactor law needs a dicyclic group with 2 || n, got {G}")
    if M % 8 != 5:
        return _v(Status.UNKNOWN, "RES_K2_NA", f"{M} is not 5 mod 8")
    if any(q % 4 == 3 and e >= 2 for q, e in factorint(abs(M)).items()):
        return _v(Status.UNKNOWN, "RES_K2_PASS", f"{M} has a square factor k^2 with k = 3 mod 4")
    return _v(Status.OUT, "RES_K2", f"{M} is 5 mod 8 but has no square factor k^2 with k = 3 mod 4")


def necessary_conditions(G: GroupSpec, M: int) -> Verdict:
    """All laws that apply to G, most specific verdict first."""
    if M == 0:
        return _v(Status.IN, "ZERO", "the zero element has determinant 0")
    v = check_divisibility(G, M)
    if v.excluded or not (G.family is Family.DICYCLIC and G.n % 2 == 0 and M % 2):
        return v
    r = check_odd_residue(G, M)
    if r.excluded:
        return r
    if valuation(2, G.n) == 1:
        s = check_square_cofactor(G, M)
        if s.excluded:
            return s
    return v


# -- complete characterizations --------------------------------------------


def _need_prime(setid: str, p: int | None, odd: bool = True) -> int:
    ok = is_odd_prime(p) if odd else (isinstance(p, int) and isprime(p))
    if not ok:
        raise ValueError(f"set {setid} needs {'an odd ' if odd else 'a '}prime p, got {p!r}")
    return p


def _exp_ok(e: int, allowed_min: int, extra: tuple[int, ...] = ()) -> bool:
    return e == 0 or e >= allowed_min or e in extra


def classify(setid: str, M: int, p: int | None = None) -> Verdict:
    """Membership of M in one of the characterized value sets."""
    if setid not in SETS:
        raise ValueError(f"unknown set {setid!r}; choose from {', '.join(SETS)}")
    if setid in ("Q8", "Q12"):
        if p is not None:
            raise ValueError(f"set {setid} takes no prime parameter")
    else:
        p = _need_prime(setid, p, odd=setid != "Zp")
    if not isinstance(M, int):
        raise ValueError(f"value must be an integer, got {M!r}")
    if M == 0:
        return _v(Status.IN, "ZERO", "the zero element has determinant 0")
    return _CLASSIFIERS[setid](M, p)


def _zp(M: int, p: int) -> Verdict:
    a = valuation(p, M)
    dec = {"a": a, "m": M // p**a}
    if _exp_ok(a, 2):
        return _v(Status.IN, "ZP_FORM", f"{p}-adic exponent {a} is 0 or at least 2", dec)
    return _v(Status.OUT, "ZP_EXP", f"{p} || {M}", dec)


def _z2p(M: int, p: int) -> Verdict:
    dec = _decompose(M, p)
    if not _exp_ok(dec["k"], 2):
        return _v(Status.OUT, "Z2P_EXP2", f"2 || {M}", dec)
    if not _exp_ok(dec["l"], 2):
        return _v(Status.OUT, "Z2P_EXPP", f"{p} || {M}", dec)
    return _v(Status.IN, "Z2P_FORM", "exponents of 2 and p are each 0 or at least 2", dec)


def _d2p(M: int, p: int) -> Verdict:
    dec = _decompose(M, p)
    if not _exp_ok(dec["k"], 2):
        return _v(Status.OUT, "D2P_EXP2", f"2 || {M}", dec)
    if not _exp_ok(dec["l"], 3):
        return _v(Status.OUT, "D2P_EXPP", f"{p}^{dec['l']} || {M} with exponent 1 or 2", dec)
    return _v(Status.IN, "D2P_FORM", "exponent of 2 is 0 or >= 2, of p is 0 or >= 3", dec)


def _d4p(M: int, p: int) -> Verdict:
    dec = _decompose(M, p)
    if not _exp_ok(dec["l"], 3):
        return _v(Status.OUT, "D4P_EXPP", f"{p}^{dec['l']} || {M} with exponent 1 or 2", dec)
    k = dec["k"]
    if k == 0:
        if M % 4 == 1:
            return _v(Status.IN, "D4P_ODD", f"{M} is odd and 1 mod 4", dec)
        return _v(Status.OUT, "D4P_MOD4", f"odd value {M} is 3 mod 4", dec)
    if k == 4 or k >= 6:
        return _v(Status.IN, "D4P_EVEN", f"2-adic exponent {k} is 4 or at least 6", dec)
    return _v(Status.OUT, "D4P_EXP2", f"2-adic exponent {k} is not 4 or at least 6", dec)


def _q8(M: int, p: None) -> Verdict:
    dec = _decompose(M, None)
    if M % 2 == 0:
        if dec["k"] >= 8:
            return _v(Status.IN, "Q8_EVEN", f"2^8 | {M}", dec)
        return _v(Status.OUT, "Q8_EVEN", f"even value with 2^{dec['k']} || {M}, needs 2^8", dec)
    r = M % 8
    if r == 1:
        return _v(Status.IN, "Q8_1MOD8", f"{M} = 8m+1", dec)
    if r == 5:
        sq = [q for q, e in factorint(abs(M)).items() if q % 4 == 3 and e >= 2]
        if sq:
            return _v(Status.IN, "Q8_5MOD8", f"{M} = (8m-3)*{sq[0]}^2 with {sq[0]} = 3 mod 4", dec)
        return _v(Status.OUT, "Q8_5MOD8", f"{M} is 5 mod 8 without a square of a prime 3 mod 4", dec)
    return _v(Status.OUT, "RES_MOD8", f"{M} is {r} mod 8", dec)


def _q12(M: int, p: None) -> Verdict:
    dec = _decompose(M, 3)
    a, b, m = dec["k"], dec["l"], dec["m"]
    if not _exp_ok(b, 3):
        return _v(Status.OUT, "DIV_P_2A1", f"3^{b} || {M}; 3 | M forces 3^3 | M", dec)
    if a in (1, 2, 3):
        return _v(Status.OUT, "DIV_2_16", f"2^{a} || {M}; 2 | M forces 16 | M", dec)
    if a != 5:
        return _v(Status.IN, "Q12_FORM", f"2-adic exponent {a} is 0, 4 or at least 6", dec)
    if b == 4 or b >= 6:
        return _v(Status.IN, "Q12_FORM", f"2^5 3^{b} m with 3-adic exponent {b}", dec)
    fac = factorint(abs(m))
    if any(q % 12 == 5 for q in fac):
        q = min(q for q in fac if q % 12 == 5)
        return _v(Status.IN, "Q12_P5MOD12", f"cofactor has the prime {q} = 5 mod 12", dec)
    sq = [q for q, e in fac.items() if q % 6 == 5 and e >= 2]
    if sq:
        return _v(Status.IN, "Q12_PSQ", f"cofactor has {sq[0]}^2 with {sq[0]} = 5 mod 6", dec)
    return _v(
        Status.OUT,
        "Q12_2_5",
        f"2^5 3^{b} m needs a prime 5 mod 12 or the square of a prime 5 mod 6 in m = {m}",
        dec,
    )


def _q4p(M: int, p: int) -> Verdict:
    dec = _decompose(M, p)
    k, ell, m = dec["k"], dec["l"], dec["m"]
    half = (p * p + 1) // 2
    if k in (1, 2, 3):
        return _v(Status.OUT, "DIV_2_16", f"2^{k} || {M}; 2 | M forces 16 | M", dec)
    if k == 5 and abs(M) < 32 * half:
        # ell in {1, 2} is excluded anyway and ell >= 3 makes the cofactor >= p^3
        return _v(
            Status.OUT,
            "Q4P_M_TOO_SMALL",
            f"2^5 || {M} and the odd cofactor {abs(M) // 32} is below (p^2+1)/2 = {half}",
            dec,
        )
    if ell in (1, 2):
        return _v(Status.OUT, "DIV_P_2A1", f"{p}^{ell} || {M}; {p} | M forces {p}^3 | M", dec)
    if k != 5:
        return _v(Status.IN, "Q4P_ACHIEVED", f"2-adic exponent {k} is 0, 4 or at least 6", dec)
    if ell == 4 or ell >= 6:
        return _v(Status.IN, "Q4P_ACHIEVED", f"2^5 p^{ell} m with {p}-adic exponent {ell}", dec)
    # k = 5 and ell in {0, 3, 5}
    if ell == 0 or (p % 4 == 3) or (p > 5 and ell == 3):
        if abs(m) < half:
            if ell == 0 or p % 4 == 3:
                return _v(
                    Status.OUT,
                    "Q4P_M_TOO_SMALL",
                    f"2^5 p^{ell} m with |m| = {abs(m)} below (p^2+1)/2 = {half}",
                    dec,
                )
            return _v(
                Status.UNKNOWN,
                "Q4P_FRONTIER_OPEN",
                f"2^5 p^3 m with p = 1 mod 4, p > 5 and |m| = {abs(m)} < {half} is undecided",
                dec,
            )
    else:
        # p = 1 mod 4 and either ell = 5, or p = 5 and ell = 3
        return _v(
            Status.IN,
            "Q4P_P_MULTIPLES",
            f"every multiple of 2^5 p^{ell} coprime to 2p is reached (p = {p})",
            dec,
        )
    if m % half == 0:
        return _v(
            Status.IN,
            "Q4P_CLOSURE",
            f"product of the 2^5 p^{ell} (p^2+1)/2 construction with a unit of value {m // half}",
            dec,
        )
    if p == 3:
        v = _q12(M, None)
        return Verdict(v.status, v.code, v.message, dec)
    return _v(
        Status.UNKNOWN,
        "Q4P_UNRESOLVED",
        f"2^5 p^{ell} m with |m| = {abs(m)} >= {half} is not a multiple of {half}; undecided",
        dec,
    )


_CLASSIFIERS = {
    "Zp": _zp,
    "Z2p": _z2p,
    "D2p": _d2p,
    "D4p": _d4p,
    "Q8": _q8,
    "Q12": _q12,
    "Q4p": _q4p,
}


def characterized_set(G: GroupSpec) -> tuple[str, int | None] | None:
    """The (set id, p) whose complete characterization describes G, if any."""
    return _complete_set(G)


# -- minimal non-trivial determinant ---------------------------------------


def lambda_formula(G: GroupSpec) -> LambdaReport:
    """Smallest |det| >= 2 for Q_{4n}: exact for n odd, an upper bound for n even."""
    if G.family is not Family.DICYCLIC:
        raise ValueError(f"lambda formula covers dicyclic groups only, got {G}")
    n = G.n
    p0 = smallest_prime_not_dividing(2 * n)
    if n % 2:
        value = min(16, p0)
        cert = []
        for v in range(2, value):
            for s in (1, -1):
                verdict = check_divisibility(G, s * v)
                if not verdict.excluded:
                    raise AssertionError(f"{s * v} not excluded for {G}: {verdict}")
                cert.append({"value": s * v, "code": verdict.code, "reason": verdict.message})
        return LambdaReport(G, value, True, p0, cert, "min(16, p0)")
    t = valuation(2, n)
    bound = min(2 ** (2 ** (t + 2)), p0 * p0)
    if n == 2:
        cert = []
        for v in range(2, 7):
            for s in (1, -1):
                verdict = classify("Q8", s * v)
                cert.append({"value": s * v, "code": verdict.code, "reason": verdict.message})
        return LambdaReport(G, 7, True, p0, cert, "Q_8 value set is fully known; -7 is attained")
    return LambdaReport(G, bound, False, p0, [], "upper bound min(2^(2^(t+2)), p0^2) for 2^t || n")
