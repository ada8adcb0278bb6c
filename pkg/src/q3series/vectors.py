"""Coefficient-vector families attached to the dissection identities.

Every family starts from the base vectors x_k (x_1 = (9, 0, 0, ...)) and
descends by one huffing step per level; a step sends a vector ``v`` to

    new[j] = sum_i v[i] * m(4*i + b, i + j + c)

with small offsets (b, c) fixed by the family and the parity of the
current level.  The band of the m-table makes every such sum finite and
keeps all supports finite, roughly tripling per level.

Each family obeys a 3-adic lower bound of the shape

    pi3(value at j) >= 3*alpha + f + floor((9j - 10) / 2) + [j == 1]

with the per-family, per-parity term f tabulated below; constructors
assert the bound on every materialized entry.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from .arith3 import pi3
from .hmatrix import m_entry
from .report import Report


class Family(Enum):
    X = "x"  # base vectors feeding every other family
    R = "r"  # odd-power single-product dissections
    S = "s"  # even-power single-product dissections (one-step recurrence)
    Y = "y"  # odd residue-class dissections
    Z = "z"  # even residue-class dissections
    U = "u"  # odd-power two-product dissections (one-step recurrence)
    V = "v"  # even-power two-product dissections
    W = "w"  # residue-class two-product dissections


# (row offset b, column offset c) for row 4i+b, column i+j+c,
# keyed by family and by the parity bit (level % 2) of the level stepped from.
_STEP = {
    Family.X: {1: (0, 0), 0: (1, 0)},
    Family.R: {1: (-1, -1), 0: (-3, -1)},
    Family.S: {1: (0, 0), 0: (0, 0)},
    Family.Y: {1: (-1, -1), 0: (-2, -1)},
    Family.Z: {1: (0, 0), 0: (1, 0)},
    Family.U: {1: (1, 0), 0: (1, 0)},
    Family.V: {1: (0, 0), 0: (2, 0)},
    Family.W: {1: (1, 0), 0: (0, 0)},
}

# f in the lower bound, as a function of (level index, parity), expressed
# through beta = number of completed level pairs; see valuation_bound.
_BOUND_F = {
    Family.X: lambda beta, odd: 2 if odd else 4,
    Family.R: lambda beta, odd: 2 * beta + 2,
    Family.S: lambda beta, odd: 2 * beta + 2,
    Family.Y: lambda beta, odd: beta + 2,
    Family.Z: lambda beta, odd: (3 * beta + 4) if odd else (3 * beta + 6),
    Family.U: lambda beta, odd: beta + 2,
    Family.V: lambda beta, odd: (2 * beta + 2) if odd else (2 * beta + 4),
    Family.W: lambda beta, odd: (3 * beta + 2) if odd else (3 * beta + 3),
}

def _beta_of(family: Family, mu: int) -> tuple[int, bool]:
    """Map a level index to (beta, is_odd_level) under the family's convention.

    Levels pair up as mu = 2*beta+1 / 2*beta+2 except for the one-step
    families S and U, where mu = beta + 1.
    """
    if family in (Family.S, Family.U):
        return mu - 1, True
    if mu % 2 == 1:
        return (mu - 1) // 2, True
    return (mu - 2) // 2, False


def valuation_bound(family: Family, alpha: int, mu: int, j: int) -> int:
    """Stated 3-adic lower bound for entry j of the family at (alpha, mu).

    For the base family the level is the vector index k itself and must
    equal 2*alpha+1 or 2*alpha+2.
    """
    if j < 1 or mu < 1 or alpha < 0:
        raise ValueError("alpha >= 0, mu >= 1, j >= 1 required")
    if family is Family.X:
        if mu not in (2 * alpha + 1, 2 * alpha + 2):
            raise ValueError(f"base vector level {mu} does not match alpha={alpha}")
        odd = mu % 2 == 1
        f = _BOUND_F[family](0, odd)
    else:
        beta, odd = _beta_of(family, mu)
        f = _BOUND_F[family](beta, odd)
    return 3 * alpha + f + (9 * j - 10) // 2 + (1 if j == 1 else 0)


def bound_violations(values, family: Family, alpha: int, mu: int, first_j: int = 1):
    """Entries whose 3-adic valuation misses the stated lower bound."""
    out = []
    for k, v in enumerate(values):
        j = first_j + k
        need = valuation_bound(family, alpha, mu, j)
        actual = pi3(v)
        if actual < max(need, 0):
            out.append({"j": j, "value": v, "valuation": actual.value, "required": need})
    return out


@dataclass(frozen=True)
class CoeffVector:
    """Entries 1..jmax of one family vector; indices beyond jmax that lie
    outside the finite support are zero."""

    family: Family
    alpha: int
    mu: int
    jmax: int
    values: tuple[int, ...]

    def value(self, j: int) -> int:
        if j < 1:
            raise ValueError("entries are 1-based")
        if j > self.jmax:
            raise ValueError(f"entry {j} not materialized (jmax={self.jmax})")
        return self.values[j - 1]

    def __post_init__(self):
        bad = bound_violations(self.values, self.family, self.alpha, self.mu)
        if bad:
            raise ValueError(f"valuation bound violated: {bad[:3]}")


def _step_vector(prev: list[int], b: int, c: int, jcap: int) -> list[int]:
    """Apply one huffing step; the result is trimmed to its support or jcap."""
    out = []
    for j in range(1, jcap + 1):
        acc = 0
        for i, v in enumerate(prev, start=1):
            if v:
                acc += v * m_entry(4 * i + b, i + j + c)
        out.append(acc)
    while out and out[-1] == 0:
        out.pop()
    return out


def _support_caps(seed_len: int, levels: int) -> list[int]:
    caps = [seed_len]
    for _ in range(levels - 1):
        caps.append(3 * caps[-1] + 2)
    return caps


_x_lock = threading.Lock()
_x_cache: list[list[int]] = [[9]]  # full supports of x_1, x_2, ...


def _x_levels(k: int) -> list[int]:
    """Full support of the base vector x_k (supports stay small: 1, 3, 10, 30, ...)."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if k > 8:
        raise ValueError("base vectors beyond k=8 are not needed at desk scale")
    with _x_lock:
        while len(_x_cache) < k:
            lvl = len(_x_cache)  # stepping from x_lvl to x_{lvl+1}
            b, c = _STEP[Family.X][lvl % 2]
            cap = 3 * len(_x_cache[-1]) + 2
            _x_cache.append(_step_vector(_x_cache[-1], b, c, cap))
        return list(_x_cache[k - 1])


def x_vector(k: int, jmax: int) -> CoeffVector:
    """Base vector x_k padded or truncated to jmax entries."""
    vals = _x_levels(k)
    vals = (vals + [0] * jmax)[:jmax]
    alpha = (k - 1) // 2
    return CoeffVector(Family.X, alpha, k, jmax, tuple(vals))


def _seed_level(family: Family, alpha: int) -> list[int]:
    if family is Family.Z:
        return _x_levels(2 * alpha + 2)
    return _x_levels(2 * alpha + 1)


_fam_lock = threading.Lock()
_fam_cache: dict[tuple[Family, int], list[list[int]]] = {}
_fam_caps: dict[tuple[Family, int], list[int]] = {}


def _family_levels(family: Family, alpha: int, mu: int, jneed: int) -> list[int]:
    """Level mu of the family, materialized at least to min(jneed, support).

    Backward demand: producing entries 1..J of a level consumes entries
    1..3J of the previous one (the m-band kills everything farther out),
    so the chain is recomputed top-down with tripling targets whenever
    the cached prefix is too short.
    """
    if family is Family.X:
        raise ValueError("use x_vector for the base family")
    key = (family, alpha)
    with _fam_lock:
        seed = _seed_level(family, alpha)
        caps = _support_caps(len(seed), mu)
        # windows each level must be materialized to; demands[i] <= caps[i],
        # and anything beyond caps[i] is provably zero.
        demands = [0] * mu
        demands[-1] = min(jneed, caps[-1])
        for lvl in range(mu - 2, -1, -1):
            demands[lvl] = min(3 * demands[lvl + 1] + 2, caps[lvl])
        levels = _fam_cache.get(key, [seed])
        have = _fam_caps.get(key, [len(seed)])
        if len(levels) < mu or any(have[i] < demands[i] for i in range(mu)):
            levels = [seed]
            have = [len(seed)]
            for lvl in range(1, mu):
                b, c = _STEP[family][lvl % 2]
                target = demands[lvl]
                levels.append(_step_vector(levels[-1], b, c, target))
                have.append(target)
            _fam_cache[key] = levels
            _fam_caps[key] = have
        # trailing zeros are trimmed; padding past the computed window is
        # sound because demands[mu-1] >= min(jneed, caps[mu-1])
        return list(levels[mu - 1])


def family_vector(family: Family, alpha: int, mu: int, jmax: int) -> CoeffVector:
    """Family vector at (alpha, mu) with entries 1..jmax.

    Level 1 is the family's base seed (x_{2 alpha + 1}, or x_{2 alpha + 2}
    for the even residue-class family); higher levels follow the family's
    alternating huffing step.
    """
    if family is Family.X:
        return x_vector(mu, jmax)
    vals = _family_levels(family, alpha, mu, jmax)
    vals = (vals + [0] * jmax)[:jmax]
    return CoeffVector(family, alpha, mu, jmax, tuple(vals))


def check_valuation_bounds(family: Family, alpha_max: int, mu_max: int, jmax: int) -> Report:
    """Assert the family's lower bound on every entry of a parameter grid.

    Violations become report entries rather than exceptions so that a
    whole grid can be surveyed in one pass.
    """
    rep = Report(case=f"valuation-bounds-{family.value}",
                 params={"alpha_max": alpha_max, "mu_max": mu_max, "jmax": jmax})
    if family is Family.X:
        grid = [((k - 1) // 2, k) for k in range(1, mu_max + 1)]
    else:
        grid = [(a, mu) for a in range(alpha_max + 1) for mu in range(1, mu_max + 1)]
    for alpha, mu in grid:
        if family is Family.X:
            vals = (_x_levels(mu) + [0] * jmax)[:jmax]
        else:
            vals = (_family_levels(family, alpha, mu, jmax) + [0] * jmax)[:jmax]
        rep.checked += len(vals)
        for bad in bound_violations(vals, family, alpha, mu):
            bad.update({"alpha": alpha, "mu": mu})
            rep.failures.append(bad)
    return rep.finalize()
