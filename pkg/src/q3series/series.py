"""Exact truncated Laurent series over Python integers.

A series is stored densely: ``coeffs[i]`` is the coefficient of
``q**(offset + i)`` and every coefficient at an exponent below ``offset``
is zero.  ``order`` is the truncation guarantee: coefficients are correct
for all exponents strictly below it.  Values are immutable after
construction, so series can be shared freely between threads.

Truncation bookkeeping follows the usual rules for exact windows:

* ``a + b``     keeps ``min(a.order, b.order)``
* ``a * b``     keeps ``min(a.order + b.offset, b.order + a.offset)``
* ``1 / a``     keeps ``a.order - 2 * v`` where ``v`` is the valuation of ``a``

Callers that need a result correct to order N must build the operands
with enough headroom; nothing here silently reuses garbage coefficients.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class TruncatedSeries:
    __slots__ = ("offset", "coeffs", "order")

    def __init__(self, offset: int, coeffs: Sequence[int], order: int):
        coeffs = tuple(coeffs)
        if order - offset != len(coeffs):
            raise ValueError(
                f"window mismatch: order-offset={order - offset}, got {len(coeffs)} coefficients"
            )
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(order: int) -> "TruncatedSeries":
        return TruncatedSeries(order, (), order)

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_terms([(0, 1)], order)

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, int]], order: int) -> "TruncatedSeries":
        """Build a series from (exponent, coefficient) pairs.

        Exponents at or beyond `order` are outside the representable
        window and rejected.
        """
        terms = [(e, c) for e, c in terms if c != 0]
        for e, _ in terms:
            if e >= order:
                raise ValueError(f"exponent {e} is outside the window (order {order})")
        if not terms:
            return TruncatedSeries.zero(order)
        offset = min(e for e, _ in terms)
        coeffs = [0] * (order - offset)
        for e, c in terms:
            coeffs[e - offset] += c
        return TruncatedSeries(offset, coeffs, order)

    # -- basic accessors ----------------------------------------------

    def coeff(self, exponent: int) -> int:
        """Coefficient of q**exponent; exponents >= order are not known."""
        if exponent >= self.order:
            raise ValueError(f"exponent {exponent} is beyond truncation order {self.order}")
        if exponent < self.offset:
            return 0
        return self.coeffs[exponent - self.offset]

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, None for the zero window."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.offset + i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def terms(self) -> list[tuple[int, int]]:
        return [(self.offset + i, c) for i, c in enumerate(self.coeffs) if c]

    def agrees_with(self, other: "TruncatedSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality on the common valid window."""
        stop = min(self.order, other.order)
        if upto is not None:
            stop = min(stop, upto)
        start = min(self.offset, other.offset)
        return all(self.coeff(e) == other.coeff(e) for e in range(start, stop))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.agrees_with(other)

    __hash__ = None  # mathematically-equal windows compare equal; not hashable

    def __repr__(self) -> str:
        shown = self.terms()[:6]
        body = " + ".join(f"{c}*q^{e}" for e, c in shown) or "0"
        more = " + ..." if len(self.terms()) > 6 else ""
        return f"<series {body}{more} + O(q^{self.order})>"

    # -- ring operations ----------------------------------------------

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.offset, [-c for c in self.coeffs], self.order)

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        offset = min(self.offset, other.offset)
        coeffs = [0] * (order - offset)
        for s in (self, other):
            hi = min(s.order, order)
            for e in range(s.offset, hi):
                coeffs[e - offset] += s.coeffs[e - s.offset]
        return TruncatedSeries(offset, coeffs, order)

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(-other)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        offset = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        n = order - offset
        if n <= 0:
            return TruncatedSeries.zero(order)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            lim = n - i
            for j, b in enumerate(other.coeffs[:lim]):
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(offset, out, order)

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(self.offset, [k * c for c in self.coeffs], self.order)

    def shift(self, s: int) -> "TruncatedSeries":
        """Multiply by q**s."""
        return TruncatedSeries(self.offset + s, self.coeffs, self.order + s)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the leading coefficient must be a unit (+-1).

        Eta-quotients all satisfy this, which keeps every computation in
        exact integer arithmetic.
        """
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("cannot invert the zero series")
        lead = self.coeff(v)
        if lead not in (1, -1):
            raise ValueError(f"leading coefficient {lead} is not a unit; inverse would leave Z[[q]]")
        n = self.order - v  # relative precision available at the valuation
        if n <= 0:
            raise ValueError("window too small to invert at this valuation")
        a = [self.coeff(v + k) for k in range(n)]
        b = [0] * n
        b[0] = lead
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * b[k - j]
            b[k] = -lead * acc
        return TruncatedSeries(-v, b, n - v)

    def pow(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse().pow(-e)
        if e == 0:
            return TruncatedSeries.one(self.order - self.offset)
        result = None
        base = self
        k = e
        while k:
            if k & 1:
                result = base if result is None else result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __pow__ = pow

    # -- exponent surgery ---------------------------------------------

    def substitute_power(self, r: int) -> "TruncatedSeries":
        """Replace q by q**r (r >= 1); exponent k becomes r*k."""
        if r < 1:
            raise ValueError("substitution power must be >= 1")
        if r == 1:
            return self
        order = r * (self.order - 1) + 1
        if not self.coeffs:
            return TruncatedSeries.zero(order)
        offset = r * self.offset
        coeffs = [0] * (order - offset)
        for i, c in enumerate(self.coeffs):
            if c:
                coeffs[r * i] = c
        return TruncatedSeries(offset, coeffs, order)

    def extract_progression(self, r: int, s: int, rescale: bool) -> "TruncatedSeries":
        """Keep coefficients at exponents congruent to s mod r.

        With ``rescale`` the exponent r*n+s maps to n (the power of q and
        the shift s are divided out); otherwise exponents are kept as-is,
        matching the huffing-style operator.
        """
        if r < 1 or not 0 <= s < r:
            raise ValueError("need r >= 1 and 0 <= s < r")
        if not rescale:
            coeffs = [c if (self.offset + i - s) % r == 0 else 0
                      for i, c in enumerate(self.coeffs)]
            return TruncatedSeries(self.offset, coeffs, self.order)
        # first represented exponent congruent to s (mod r)
        first = self.offset + ((s - self.offset) % r)
        new_offset = (first - s) // r
        new_order = -((-(self.order - s)) // r)  # ceil((order - s) / r)
        n = new_order - new_offset
        if n <= 0:
            return TruncatedSeries.zero(new_order)
        coeffs = [0] * n
        e = first
        k = new_offset
        while e < self.order:
            coeffs[k - new_offset] = self.coeffs[e - self.offset]
            e += r
            k += 1
        return TruncatedSeries(new_offset, coeffs, new_order)


# -- sparse kernels ----------------------------------------------------
#
# The expensive expansions in this package are all of the form
# "dense series times or divided by a very sparse one" (theta-style gap
# sequences).  These two helpers are the exact-integer work horses; the
# reduced-modulus twins live in modseries.


def mul_sparse(dense: Sequence[int], terms: Sequence[tuple[int, int]], order: int) -> list[int]:
    """Convolve a dense coefficient list with sparse (gap, coeff) terms."""
    out = [0] * order
    for g, c in terms:
        if g >= order:
            break
        lim = order - g
        if c == 1:
            for i, d in enumerate(dense[:lim]):
                if d:
                    out[i + g] += d
        elif c == -1:
            for i, d in enumerate(dense[:lim]):
                if d:
                    out[i + g] -= d
        else:
            for i, d in enumerate(dense[:lim]):
                if d:
                    out[i + g] += c * d
    return out


def solve_monic_sparse(terms: Sequence[tuple[int, int]], rhs: Sequence[int], order: int) -> list[int]:
    """Solve a * b = rhs for b, where a is sparse and monic (a[0] == 1).

    Sequential back-substitution: b[n] = rhs[n] - sum a[g] * b[n-g].
    """
    if not terms or terms[0] != (0, 1):
        raise ValueError("sparse operand must be monic with constant term 1")
    tail = [(g, c) for g, c in terms[1:] if g < order]
    b = [0] * order
    nrhs = len(rhs)
    for n in range(order):
        acc = rhs[n] if n < nrhs else 0
        for g, c in tail:
            if g > n:
                break
            bb = b[n - g]
            if bb:
                acc -= c * bb
        b[n] = acc
    return b
