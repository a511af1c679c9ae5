"""Orbit counts ``d_n`` for the enveloping monoid of type ``A_n``.

Indexing: ``d_n`` is the number of essential pairs on the rank-``n`` diagram
``A_n``, i.e. for ``G0 = SL_{n+1}``; ``d_2 = 11`` is the lattice of
``Env(SL_3)``.  ``d_n = 2^n + e_n`` where ``e_n`` counts the pairs with
``J`` nonempty.  All arithmetic uses Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import build_diagram
from .envlattice import count_essential_pairs

# denominator and numerator of sum d_n x^n
GF_DENOMINATOR = (1, -5, 6, -4)
GF_NUMERATOR = (1, -2, 2)


@lru_cache(maxsize=None)
def _e_table(n: int) -> tuple[int, ...]:
    e = [0, 1]
    for m in range(2, n + 1):
        acc = 2 * e[m - 1] + (m - 1) * 2**m + 1
        for s in range(1, m):
            acc += (2 ** (s + 1) - 2) * e[m - (s + 1)]
        e.append(acc)
    return tuple(e[: n + 1])


def e_seq(n: int) -> int:
    """``e_n = 2e_{n-1} + sum_{s=1}^{n-1} (2^{s+1}-2) e_{n-s-1} + (n-1)2^n + 1``; ``e_0=0, e_1=1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _e_table(max(n, 1))[n]


def e_seq_unreorganized(n: int) -> int:
    """The same numbers from the first-derived form of the recurrence,
    ``e_n = 2e_{n-1} + 2^n - 1 + sum_{s=1}^{n-1} 2(2^s-1)(e_{n-s-1} + 2^{n-s-1})``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    e = [0, 1]
    for m in range(2, n + 1):
        acc = 2 * e[m - 1] + 2**m - 1
        for s in range(1, m):
            acc += 2 * (2**s - 1) * (e[m - (s + 1)] + 2 ** (m - (s + 1)))
        e.append(acc)
    return e[n]


def d_seq(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return 1 if n == 0 else 2**n + e_seq(n)


@lru_cache(maxsize=None)
def _d_gf_table(n: int) -> tuple[int, ...]:
    d = [1, 3, 11]
    for m in range(3, n + 1):
        d.append(5 * d[m - 1] - 6 * d[m - 2] + 4 * d[m - 3])
    return tuple(d[: n + 1])


def d_via_gf(n: int) -> int:
    """Coefficient of ``x^n`` in ``(1-2x+2x^2)/(1-5x+6x^2-4x^3)``.

    The denominator gives ``d_n = 5d_{n-1} - 6d_{n-2} + 4d_{n-3}`` for ``n >= 3``
    (the numerator has degree 2); seeds are the first three series coefficients.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _d_gf_table(max(n, 2))[n]


def d_via_enumeration(n: int, cap: int | None = None) -> int:
    """Number of essential pairs on ``A_n``; ``d_0 = 1`` (the empty diagram)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return count_essential_pairs(build_diagram("A", n), cap)


def series_mul(a, b, order: int) -> list[int]:
    """Product of two power series truncated to degree ``order``."""
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def gf_identity_check(N: int) -> bool:
    """Check both generating-function identities to order ``N`` exactly.

    ``E(x)(1-2x)(1-5x+6x^2-4x^3) = x`` and
    ``D(x)(1-5x+6x^2-4x^3) = 1-2x+2x^2`` as truncated series.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    e = [e_seq(n) for n in range(N + 1)]
    d = [d_seq(n) for n in range(N + 1)]
    denom_e = series_mul([1, -2], list(GF_DENOMINATOR), N)
    lhs_e = series_mul(e, denom_e, N)
    rhs_e = [0, 1][: N + 1] + [0] * max(0, N - 1)
    lhs_d = series_mul(d, list(GF_DENOMINATOR), N)
    rhs_d = (list(GF_NUMERATOR) + [0] * N)[: N + 1]
    return lhs_e == rhs_e and lhs_d == rhs_d


@dataclass(frozen=True)
class OrbitCountSeries:
    max_n: int
    e_values: tuple[int, ...]
    d_values: tuple[int, ...]


def orbit_count_series(max_n: int) -> OrbitCountSeries:
    return OrbitCountSeries(max_n, tuple(e_seq(n) for n in range(max_n + 1)),
                            tuple(d_seq(n) for n in range(max_n + 1)))
