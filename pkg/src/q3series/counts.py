"""The three counting functions and their expansion engines.

Definitions, as ordinary generating functions:

* three-color partitions          1 / E(q)^3
* l-regular partition triples     E(q^l)^3 / E(q)^3
* 2-color partition triples       1 / (E(q)^3 * E(q^l)^3)
  (every part in three colors, parts divisible by l in three more)

All three reduce to one shared dense expansion of 1/E(q)^3 followed by a
single sparse multiply or divide, so the caches below hold one long array
per (kind, l).  A deliberately dumb unbounded-knapsack enumerator over
colored parts provides the independent oracle for small n; it shares no
code with the series route.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import modseries
from .eta import jacobi_cube_terms
from .series import TruncatedSeries, mul_sparse, solve_monic_sparse


class Kind(Enum):
    P3 = "p3"
    REGULAR_TRIPLE = "regular"
    TWO_COLOR_TRIPLE = "twocolor"


@dataclass(frozen=True)
class CountingFunction:
    kind: Kind
    ell: int | None = None

    def __post_init__(self):
        if self.kind is Kind.P3:
            object.__setattr__(self, "ell", None)
        else:
            if self.ell is None or self.ell < 1:
                raise ValueError(f"{self.kind.value} needs a positive modulus parameter")

    def label(self) -> str:
        return self.kind.value if self.ell is None else f"{self.kind.value}({self.ell})"


# -- exact engine ------------------------------------------------------

_lock = threading.Lock()
_inv_cube: list[int] = [1]  # coefficients of 1/E(q)^3, grown on demand
# bounded: exact expansions of the parameterized functions are wide (one
# long list of huge integers each), so only the most recent few stay live
_exact_cache: "OrderedDict[tuple[Kind, int | None], list[int]]" = OrderedDict()
_EXACT_CACHE_SLOTS = 12


def _inv_cube_exact(order: int) -> list[int]:
    """1/E(q)^3 to `order`, by back-substitution against the sparse cube.

    The recurrence only ever looks backwards, so the cached list is
    extended in place instead of being recomputed.
    """
    global _inv_cube
    b = _inv_cube
    if len(b) < order:
        terms = jacobi_cube_terms(1, order)[1:]
        for n in range(len(b), order):
            acc = 1 if n == 0 else 0
            for g, c in terms:
                if g > n:
                    break
                acc -= c * b[n - g]
            b.append(acc)
    return b[:order]


def count_values(fn: CountingFunction, order: int) -> list[int]:
    """Exact coefficients 0..order-1 of the counting function."""
    if order < 1:
        raise ValueError("order must be >= 1")
    with _lock:
        key = (fn.kind, fn.ell)
        cached = _exact_cache.get(key)
        if cached is not None and len(cached) >= order:
            _exact_cache.move_to_end(key)
            return cached[:order]
        base = _inv_cube_exact(order)
        if fn.kind is Kind.P3:
            return base[:order]
        if fn.kind is Kind.REGULAR_TRIPLE:
            vals = mul_sparse(base[:order], jacobi_cube_terms(fn.ell, order), order)
        else:
            vals = solve_monic_sparse(jacobi_cube_terms(fn.ell, order), base[:order], order)
        _exact_cache[key] = vals
        _exact_cache.move_to_end(key)
        while len(_exact_cache) > _EXACT_CACHE_SLOTS:
            _exact_cache.popitem(last=False)
        return vals


def count_series(fn: CountingFunction, order: int) -> TruncatedSeries:
    """Exact truncated series of the counting function."""
    return TruncatedSeries(0, count_values(fn, order), order)


# -- reduced engine ----------------------------------------------------

_mod_cache: dict[tuple[Kind, int | None], np.ndarray] = {}


def count_values_mod(fn: CountingFunction, order: int, exponent: int = modseries.STANDARD_EXPONENT) -> np.ndarray:
    """Coefficients 0..order-1 reduced mod 3**exponent.

    One array per (kind, l) is cached at the standard exponent; requests
    at a smaller exponent reduce the cached residues.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if exponent > modseries.STANDARD_EXPONENT:
        raise ValueError(f"exponent {exponent} above the standard reduced precision")
    mod_std = 3**modseries.STANDARD_EXPONENT
    with _lock:
        key = (fn.kind, fn.ell)
        arr = _mod_cache.get(key)
        if arr is None or len(arr) < order:
            one = np.zeros(1, dtype=np.int64)
            one[0] = 1
            base = modseries.solve_monic_sparse_mod(jacobi_cube_terms(1, order), one, order, mod_std)
            if fn.kind is Kind.P3:
                arr = base
            elif fn.kind is Kind.REGULAR_TRIPLE:
                arr = modseries.mul_sparse_mod(base, jacobi_cube_terms(fn.ell, order), order, mod_std)
            else:
                arr = modseries.solve_monic_sparse_mod(jacobi_cube_terms(fn.ell, order), base, order, mod_std)
            _mod_cache[key] = arr
    if exponent == modseries.STANDARD_EXPONENT:
        return arr[:order]
    return arr[:order] % (3**exponent)


def warm_mod_cache(fn: CountingFunction, order: int) -> None:
    """Pre-extend the reduced cache so later calls only slice."""
    count_values_mod(fn, order)


# -- independent oracle ------------------------------------------------

ENUMERATION_LIMIT = 30


def enumerate_count(fn: CountingFunction, n: int) -> int:
    """Count directly by dynamic programming over colored parts.

    Items are (part size, color) pairs: every part size in three colors,
    and for the two-color-triple function three extra colors on parts
    divisible by l; the regular-triple function strikes multiples of l
    entirely.  No series arithmetic is involved.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is guarded at n <= {ENUMERATION_LIMIT}")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1):
        if fn.kind is Kind.REGULAR_TRIPLE and part % fn.ell == 0:
            colors = 0
        elif fn.kind is Kind.TWO_COLOR_TRIPLE and part % fn.ell == 0:
            colors = 6
        else:
            colors = 3
        for _ in range(colors):
            for total in range(part, n + 1):
                ways[total] += ways[total - part]
    return ways[n]
