"""Closed-form h-super connectivity values for star-type networks.

Everything is exact integer arithmetic. Branch identifiers:

* ``eq1_1``       kappa of S_{n,k}, 0 <= h <= n-k:   n + h(k-2) - 1
* ``eq1_2_low``   lambda of S_{n,k}, h <= min(k-2, n/2-1): (n-h-1)(h+1)
* ``eq1_2_high``  lambda of S_{n,k}, otherwise (still h <= n-k): (n-k+1)(k-1)
* ``eq3_5``       both measures, n-k <= h <= n-2:    (h+1)!(n-h-1)/(n-k)!
* ``lemma2_1``    star graph S_n:                     (h+1)!(n-h-1)
* ``cor3_5``      AN_n, 2 <= h <= n-2:                (h+1)!(n-h-1)/2
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, StructureError
from .perm import factorial_checked as fact
from .topology import FamilyParams

BRANCHES = ("eq1_1", "eq1_2_low", "eq1_2_high", "eq3_5", "lemma2_1", "cor3_5")
MAX_FORMULA_N = 20


@dataclass(frozen=True)
class FormulaResult:
    value: int
    branch: str

    def __str__(self) -> str:
        return f"{self.value} ({self.branch})"


def _check(p: FamilyParams) -> None:
    if not 3 <= p.n <= MAX_FORMULA_N:
        raise DomainError(f"n={p.n} outside 3..{MAX_FORMULA_N}")
    FamilyParams(p.n, p.k, p.h).validate(need_h=True)


def eq1_1(n: int, k: int, h: int) -> int:
    return n + h * (k - 2) - 1


def eq1_2(n: int, k: int, h: int) -> tuple[int, str]:
    # h <= n/2 - 1 compared exactly as 2h <= n - 2
    if h <= k - 2 and 2 * h <= n - 2:
        return (n - h - 1) * (h + 1), "eq1_2_low"
    return (n - k + 1) * (k - 1), "eq1_2_high"


def eq3_5(n: int, k: int, h: int) -> int:
    num = fact(h + 1) * (n - h - 1)
    den = fact(n - k)
    if num % den:
        raise StructureError(f"(h+1)!(n-h-1) not divisible by (n-k)! at n={n}, k={k}, h={h}")
    return num // den


def _overlap_guard(n: int, k: int, h: int) -> None:
    """At h = n-k every branch must give (n-k+1)(k-1)."""
    expect = (n - k + 1) * (k - 1)
    got = {"eq1_1": eq1_1(n, k, h), "eq1_2": eq1_2(n, k, h)[0], "eq3_5": eq3_5(n, k, h)}
    if any(v != expect for v in got.values()):
        raise StructureError(f"branches disagree at h=n-k for n={n}, k={k}: {got} vs {expect}")


def kappa_nkstar_formula(p: FamilyParams) -> FormulaResult:
    """kappa_s^(h)(S_{n,k}) for 2 <= k <= n-1, 0 <= h <= n-2."""
    _check(p)
    n, k, h = p.n, p.k, p.h
    if h < n - k:
        return FormulaResult(eq1_1(n, k, h), "eq1_1")
    if h == n - k:
        _overlap_guard(n, k, h)
    return FormulaResult(eq3_5(n, k, h), "eq3_5")


def lambda_nkstar_formula(p: FamilyParams) -> FormulaResult:
    """lambda_s^(h)(S_{n,k}) for 2 <= k <= n-1, 0 <= h <= n-2."""
    _check(p)
    n, k, h = p.n, p.k, p.h
    if h < n - k:
        value, branch = eq1_2(n, k, h)
        return FormulaResult(value, branch)
    if h == n - k:
        _overlap_guard(n, k, h)
    return FormulaResult(eq3_5(n, k, h), "eq3_5")


def star_formula(n: int, h: int) -> FormulaResult:
    """kappa = lambda = (h+1)!(n-h-1) on the star graph S_n."""
    if not 2 <= n <= MAX_FORMULA_N:
        raise DomainError(f"n={n} outside 2..{MAX_FORMULA_N}")
    if not 0 <= h <= n - 2:
        raise DomainError(f"need 0 <= h <= n-2, got h={h}")
    return FormulaResult(fact(h + 1) * (n - h - 1), "lemma2_1")


def an_formula(n: int, h: int, measure: str = "kappa") -> FormulaResult:
    """Values on the alternating group network AN_n (isomorphic to S_{n,n-2}).

    For 2 <= h <= n-2 this is half of the star value. For h in {0, 1} the
    value comes from the low-h (n,k)-star formulas with k = n-2, which need
    n >= 4 so that k >= 2.
    """
    if not 4 <= n <= MAX_FORMULA_N:
        raise DomainError(f"n={n} outside 4..{MAX_FORMULA_N}")
    if h in (0, 1):
        p = FamilyParams(n, n - 2, h)
        if measure == "kappa":
            return kappa_nkstar_formula(p)
        if measure == "lambda":
            return lambda_nkstar_formula(p)
        raise DomainError(f"unknown measure {measure!r}")
    if not 2 <= h <= n - 2:
        raise DomainError(f"need 0 <= h <= n-2, got h={h}")
    num = fact(h + 1) * (n - h - 1)
    if num % 2:
        raise StructureError("odd numerator in the AN_n formula")
    return FormulaResult(num // 2, "cor3_5")


def formula(family: str, n: int, h: int, k: int | None = None, measure: str = "kappa") -> FormulaResult:
    """Dispatch by family name (``nkstar``, ``star``, ``an``)."""
    if measure not in ("kappa", "lambda"):
        raise DomainError(f"unknown measure {measure!r}")
    if family == "nkstar":
        if k is None:
            raise DomainError("nkstar needs k")
        p = FamilyParams(n, k, h)
        return kappa_nkstar_formula(p) if measure == "kappa" else lambda_nkstar_formula(p)
    if family == "star":
        return star_formula(n, h)
    if family == "an":
        return an_formula(n, h, measure)
    raise DomainError(f"no formula for family {family!r}")
