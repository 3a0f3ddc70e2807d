"""k-arrangements on {1..n} with lexicographic ranking and the star-graph moves.

Digits are 1-based, ranks are 0-based. Lexicographic order on digit
sequences is the canonical order used for vertex numbering everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, perm as _count_arrangements
from typing import Iterator, Sequence

from .errors import DomainError

MAX_N = 20


@dataclass(frozen=True, order=True)
class Arrangement:
    """A sequence of distinct digits drawn from 1..ambient_n.

    Ordering compares ``digits`` first, so sorting a list of arrangements
    with the same ambient ``n`` gives lexicographic order.
    """

    digits: tuple[int, ...]
    ambient_n: int

    def __post_init__(self) -> None:
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        k, n = len(digits), self.ambient_n
        if not 1 <= k <= n:
            raise DomainError(f"arrangement length {k} not in 1..{n}")
        if len(set(digits)) != k:
            raise DomainError(f"repeated digit in {digits}")
        if any(d < 1 or d > n for d in digits):
            raise DomainError(f"digit outside 1..{n} in {digits}")

    @property
    def k(self) -> int:
        return len(self.digits)

    @property
    def n(self) -> int:
        return self.ambient_n

    def prefix(self, length: int) -> tuple[int, ...]:
        return self.digits[:length]

    def suffix(self, start: int) -> tuple[int, ...]:
        """Digits from 1-based position ``start + 1`` onward."""
        return self.digits[start:]

    def unused(self) -> tuple[int, ...]:
        """Symbols of 1..n not present, ascending."""
        used = set(self.digits)
        return tuple(s for s in range(1, self.ambient_n + 1) if s not in used)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def label(self) -> str:
        return format_label(self)

    def __str__(self) -> str:
        return format_label(self)


def _check_nk(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n={n} outside 1..{MAX_N}")
    if not 1 <= k <= n:
        raise DomainError(f"k={k} outside 1..{n}")


def count_arrangements(n: int, k: int) -> int:
    """|P(n,k)| = n!/(n-k)!."""
    _check_nk(n, k)
    return _count_arrangements(n, k)


def enumerate_arrangements(n: int, k: int) -> list[Arrangement]:
    """All of P(n,k) in lexicographic order."""
    _check_nk(n, k)
    return [Arrangement(p, n) for p in itertools.permutations(range(1, n + 1), k)]


def rank(a: Arrangement) -> int:
    """0-based lexicographic index of ``a`` within P(n, len(a))."""
    n, k = a.ambient_n, a.k
    remaining = list(range(1, n + 1))
    r = 0
    for pos, d in enumerate(a.digits):
        idx = remaining.index(d)
        # arrangements of the remaining k-pos-1 slots from n-pos-1 symbols
        r += idx * _count_arrangements(n - pos - 1, k - pos - 1)
        remaining.pop(idx)
    return r


def unrank(r: int, n: int, k: int) -> Arrangement:
    total = count_arrangements(n, k)
    if not 0 <= r < total:
        raise DomainError(f"rank {r} outside 0..{total - 1}")
    remaining = list(range(1, n + 1))
    digits = []
    for pos in range(k):
        block = _count_arrangements(n - pos - 1, k - pos - 1)
        idx, r = divmod(r, block)
        digits.append(remaining.pop(idx))
    return Arrangement(tuple(digits), n)


def swap_digit(a: Arrangement, i: int) -> Arrangement:
    """Exchange the 1st and i-th digit (1-based ``i`` in 2..k)."""
    if not 2 <= i <= a.k:
        raise DomainError(f"swap position {i} outside 2..{a.k}")
    d = list(a.digits)
    d[0], d[i - 1] = d[i - 1], d[0]
    return Arrangement(tuple(d), a.ambient_n)


def replace_first(a: Arrangement, s: int) -> Arrangement:
    """Replace the first digit by the unused symbol ``s``."""
    if not 1 <= s <= a.ambient_n:
        raise DomainError(f"symbol {s} outside 1..{a.ambient_n}")
    if s in a.digits:
        raise DomainError(f"symbol {s} already used in {format_label(a)}")
    return Arrangement((s,) + a.digits[1:], a.ambient_n)


def inversions(digits: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(digits)), 2) if digits[i] > digits[j])


def parity(p: Arrangement) -> str:
    """'even' or 'odd'; only defined for full permutations (k = n)."""
    if p.k != p.ambient_n:
        raise DomainError("parity needs a full permutation (k = n)")
    return "odd" if inversions(p.digits) % 2 else "even"


def compose(p: Arrangement, g: Sequence[int]) -> Arrangement:
    """Right action on positions: result[i] = p[g[i]], ``g`` given 1-based."""
    if sorted(g) != list(range(1, p.k + 1)):
        raise DomainError(f"{tuple(g)} is not a permutation of 1..{p.k}")
    return Arrangement(tuple(p.digits[j - 1] for j in g), p.ambient_n)


def cycles_to_permutation(n: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """One-line form (1-based) of a product of disjoint cycles."""
    img = list(range(n + 1))
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= n or x in seen:
                raise DomainError(f"bad cycle {tuple(cyc)} for n={n}")
            seen.add(x)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a] = b
    return tuple(img[1:])


def format_label(a: Arrangement) -> str:
    return ".".join(str(d) for d in a.digits)


def parse_label(text: str, n: int | None = None) -> Arrangement:
    """Parse ``"2.1.3"``. When ``n`` is omitted the largest digit is used."""
    try:
        digits = tuple(int(part) for part in text.strip().split("."))
    except ValueError:
        raise DomainError(f"malformed arrangement label {text!r}") from None
    if n is None:
        n = max(digits)
    return Arrangement(digits, n)


def factorial_checked(m: int) -> int:
    """m! for 0 <= m <= 20 (stays inside signed 64-bit range)."""
    if not 0 <= m <= MAX_N:
        raise DomainError(f"factorial argument {m} outside 0..{MAX_N}")
    return factorial(m)
