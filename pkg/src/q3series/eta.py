"""Euler products E(q^r), eta-quotients, and the classical cube expansions.

E(q^r) = prod_{m>=1} (1 - q^{rm}) expands with pentagonal-number support,
and E(q^r)^3 with triangular-number support; both are sparse, which is
what makes high-order expansion of every quotient in this package cheap.
An EtaQuotientSpec is the formal object  q^s * prod_k E(q^{r_k})^{e_k}.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .series import TruncatedSeries, mul_sparse, solve_monic_sparse


def euler_terms(r: int, order: int) -> list[tuple[int, int]]:
    """Sparse terms of E(q^r) below `order`: exponents r*k(3k+-1)/2, signs (-1)^k."""
    if r < 1:
        raise ValueError("scale must be positive")
    out = [(0, 1)]
    k = 1
    while True:
        g1 = r * k * (3 * k - 1) // 2
        g2 = r * k * (3 * k + 1) // 2
        if g1 >= order and g2 >= order:
            break
        sign = 1 if k % 2 == 0 else -1
        if g1 < order:
            out.append((g1, sign))
        if g2 < order:
            out.append((g2, sign))
        k += 1
    out.sort()
    return out


def jacobi_cube_terms(r: int, order: int) -> list[tuple[int, int]]:
    """Sparse terms of E(q^r)^3: (-1)^n (2n+1) at exponent r*n(n+1)/2."""
    out = []
    n = 0
    while True:
        e = r * n * (n + 1) // 2
        if e >= order:
            break
        out.append((e, (2 * n + 1) if n % 2 == 0 else -(2 * n + 1)))
        n += 1
    return out


def euler_series(r: int, order: int) -> TruncatedSeries:
    """E(q^r) as a truncated series, built from its pentagonal support."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return TruncatedSeries.from_terms(euler_terms(r, order), order)


def jacobi_cube(order: int) -> TruncatedSeries:
    """E(q)^3 written through its odd-weight triangular-number expansion."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return TruncatedSeries.from_terms(jacobi_cube_terms(1, order), order)


def p_cap_series(order: int) -> TruncatedSeries:
    """The bilateral level-3 theta sum: sum over all integers n of
    (-1)^n (6n+1) q^{n(3n+1)/2}.

    Together with E(q^9)^3 it splits E(q)^3 by exponent residue mod 3.
    The summation range |n| <= ceil(sqrt(2*order/3)) + 2 covers every
    exponent below the window.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    bound = math.isqrt(2 * order // 3 + 1) + 2
    terms = []
    for n in range(-bound, bound + 1):
        e = n * (3 * n + 1) // 2
        if e < order:
            sign = 1 if n % 2 == 0 else -1
            terms.append((e, sign * (6 * n + 1)))
    return TruncatedSeries.from_terms(terms, order)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Formal product q^power_of_q * prod E(q^scale)^exponent.

    Factors with equal scales are merged and zero exponents dropped, so
    two specs denoting the same product compare equal.
    """

    power_of_q: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for scale, exponent in self.factors:
            if scale < 1:
                raise ValueError(f"scale {scale} must be positive")
            merged[scale] = merged.get(scale, 0) + exponent
        cleaned = tuple(sorted((r, e) for r, e in merged.items() if e != 0))
        object.__setattr__(self, "factors", cleaned)

    def __str__(self) -> str:
        parts = []
        if self.power_of_q:
            parts.append(f"q^{self.power_of_q}")
        parts.extend(f"E({r})^{e}" for r, e in self.factors)
        return " * ".join(parts) if parts else "1"

    _TOKEN = re.compile(
        r"^\s*(?:q\^(?P<qpow>-?\d+)|E\((?P<scale>\d+)\)(?:\^(?P<exp>-?\d+))?|(?P<one>1))\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse the plain-text grammar ``q^s * E(r1)^e1 * E(r2)^e2 ...``."""
        power = 0
        factors = []
        for token in text.split("*"):
            m = cls._TOKEN.match(token)
            if not m:
                raise ValueError(f"cannot parse quotient token {token.strip()!r}")
            if m.group("qpow") is not None:
                power += int(m.group("qpow"))
            elif m.group("scale") is not None:
                e = m.group("exp")
                factors.append((int(m.group("scale")), int(e) if e is not None else 1))
        return cls(power, tuple(factors))


def eta_quotient(spec: EtaQuotientSpec, order: int) -> TruncatedSeries:
    """Exact expansion of a quotient spec, valid below `order`.

    Positive powers multiply in the sparse Euler factors; negative powers
    divide them out by back-substitution.  Both directions stay in exact
    integer arithmetic because every factor is monic.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    rel = order - spec.power_of_q
    if rel < 1:
        raise ValueError("window ends below the leading power of q")
    dense = [0] * rel
    dense[0] = 1
    for scale, exponent in spec.factors:
        terms = euler_terms(scale, rel)
        for _ in range(exponent, 0, -1):
            dense = mul_sparse(dense, terms, rel)
        for _ in range(exponent, 0):
            dense = solve_monic_sparse(terms, dense, rel)
    return TruncatedSeries(spec.power_of_q, dense, order)
