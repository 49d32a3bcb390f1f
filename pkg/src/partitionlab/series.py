"""Exact truncated formal power series over the integers.

A TruncatedSeries holds coefficients c_0..c_N of a series modulo
q^(N+1).  Everything is exact integer arithmetic; there is no float
anywhere in this module.  Operations require equal truncation orders --
mixing orders silently would lose precision, so it raises instead.

The module also provides constructors for the q-objects the rest of the
package is built from: Pochhammer-style products (1 +- q^a)(1 +- q^(a+d))...,
the pentagonal-number series, the truncated triangular-number theta,
Gaussian binomial polynomials and the weighted geometric kernel
sum_m m q^(k m).
"""

from dataclasses import dataclass

from . import kernels

INFINITE = None  # factor count for unbounded Pochhammer products


@dataclass(frozen=True)
class ProductSpec:
    """One geometric family of product factors (1 + sign*q^(offset + j*step)).

    sign=-1, offset=1, step=1 gives the Euler product (q;q)_inf;
    sign=+1 gives the corresponding (-q^offset; q^step)_inf factors.
    """

    sign: int
    offset: int
    step: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 1:
            raise ValueError("offset must be >= 1")
        if self.step < 1:
            raise ValueError("step must be >= 1")


class TruncatedSeries:
    """Dense, immutable integer series truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order):
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order):
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff, exponent, order):
        """The series coeff*q^exponent (zero if exponent exceeds the order)."""
        if order < 0:
            raise ValueError("order must be >= 0")
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n):
        if not 0 <= n <= self.order:
            raise IndexError("exponent %d outside 0..%d" % (n, self.order))
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        shown = []
        for e, c in enumerate(self._coeffs):
            if c:
                shown.append("%+d*q^%d" % (c, e))
            if len(shown) == 6:
                shown.append("...")
                break
        body = " ".join(shown) if shown else "0"
        return "TruncatedSeries(order=%d, %s)" % (self.order, body)

    def _check_order(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(
                "truncation order mismatch: %d != %d" % (self.order, other.order)
            )

    def __add__(self, other):
        self._check_order(other)
        return TruncatedSeries([x + y for x, y in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        self._check_order(other)
        return TruncatedSeries([x - y for x, y in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return TruncatedSeries([-x for x in self._coeffs])

    def __mul__(self, other):
        self._check_order(other)
        return TruncatedSeries(kernels.convolve(list(self._coeffs), list(other._coeffs)))

    def invert(self):
        """Series inverse; requires constant term +1 or -1."""
        return TruncatedSeries(kernels.invert_unit(list(self._coeffs)))

    def shifted(self, exponent):
        """Multiply by q^exponent, truncating at the same order."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        n = len(self._coeffs)
        if exponent >= n:
            return TruncatedSeries([0] * n)
        out = [0] * n
        out[exponent:] = self._coeffs[: n - exponent]
        return TruncatedSeries(out)

    def mul_binomial(self, sign, exponent):
        """Multiply by (1 + sign*q^exponent) in O(order) time."""
        out = list(self._coeffs)
        _mul_binomial_inplace(out, sign, exponent)
        return TruncatedSeries(out)

    def div_binomial(self, sign, exponent):
        """Divide by (1 + sign*q^exponent) in O(order) time."""
        out = list(self._coeffs)
        _div_binomial_inplace(out, sign, exponent)
        return TruncatedSeries(out)


def _mul_binomial_inplace(c, sign, exponent):
    if exponent < 1:
        raise ValueError("binomial exponent must be >= 1")
    for i in range(len(c) - 1, exponent - 1, -1):
        c[i] += sign * c[i - exponent]


def _div_binomial_inplace(c, sign, exponent):
    # (1 + s*q^e) * out = c  =>  out_i = c_i - s*out_(i-e)
    if exponent < 1:
        raise ValueError("binomial exponent must be >= 1")
    for i in range(exponent, len(c)):
        c[i] -= sign * c[i - exponent]


def product(specs, order):
    """Truncated product over a list of (ProductSpec, count) pairs.

    count is the number of factors taken from the family (j = 0..count-1)
    or INFINITE, in which case exactly the factors with exponent <= order
    are multiplied (all later ones are 1 modulo q^(order+1)).  An empty
    list gives the multiplicative identity.
    """
    c = [0] * (order + 1)
    c[0] = 1
    for spec, count in specs:
        if not isinstance(spec, ProductSpec):
            raise TypeError("expected a ProductSpec")
        if count is INFINITE:
            e = spec.offset
            while e <= order:
                _mul_binomial_inplace(c, spec.sign, e)
                e += spec.step
        else:
            if count < 0:
                raise ValueError("factor count must be >= 0")
            for j in range(count):
                e = spec.offset + j * spec.step
                if e <= order:
                    _mul_binomial_inplace(c, spec.sign, e)
    return TruncatedSeries(c)


def euler_product(order):
    """(q;q)_inf = prod_{j>=1} (1 - q^j), truncated."""
    return product([(ProductSpec(-1, 1, 1), INFINITE)], order)


def partition_gf(order):
    """1/(q;q)_inf; coefficient of q^n is the number of partitions of n."""
    return euler_product(order).invert()


def distinct_parts_gf(order):
    """prod_{j>=1} (1 + q^j); coefficient of q^n counts distinct-part partitions."""
    return product([(ProductSpec(1, 1, 1), INFINITE)], order)


def pentagonal_number(j):
    """Generalized pentagonal number j(3j-1)/2 for any integer j."""
    return j * (3 * j - 1) // 2


def pentagonal_series(order, ell=None):
    """sum_j (-1)^j q^(j(3j-1)/2) over j = -(ell-1)..ell, or all of Z.

    With ell=None the full bilateral sum is taken (every j with a
    pentagonal exponent <= order), which by Euler's pentagonal number
    theorem equals euler_product(order).
    """
    c = [0] * (order + 1)
    if ell is None:
        c[0] = 1
        j = 1
        while True:
            g_pos = pentagonal_number(j)
            g_neg = pentagonal_number(-j)
            if g_pos > order and g_neg > order:
                break
            sign = -1 if j % 2 else 1
            if g_pos <= order:
                c[g_pos] += sign
            if g_neg <= order:
                c[g_neg] += sign
            j += 1
    else:
        if ell < 1:
            raise ValueError("ell must be >= 1")
        for j in range(-(ell - 1), ell + 1):
            g = pentagonal_number(j)
            if g <= order:
                c[g] += -1 if j % 2 else 1
    return TruncatedSeries(c)


def geometric_kernel(k, order):
    """sum_{m>=0} m*q^(k*m): coefficient of q^e is e/k when k | e, else 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return TruncatedSeries(
        [e // k if e % k == 0 else 0 for e in range(order + 1)]
    )


def gaussian_binomial(n, ell, order):
    """Gaussian binomial [n, ell]_q as a truncated series.

    Computed by the q-Pascal recurrence
    [n, ell] = [n-1, ell-1] + q^ell * [n-1, ell]; zero when ell < 0 or
    ell > n.  The underlying polynomial has degree ell*(n-ell) and may
    be cut off by the truncation order.
    """
    if ell < 0 or ell > n:
        return TruncatedSeries.zero(order)
    # rows[j] holds [m, j] for the current m, as a plain list
    rows = [[0] * (order + 1) for _ in range(ell + 1)]
    rows[0][0] = 1
    for m in range(1, n + 1):
        for j in range(min(ell, m), 0, -1):
            prev = rows[j - 1]
            cur = rows[j]
            new = prev[:]
            for i in range(j, order + 1):
                new[i] += cur[i - j]
            rows[j] = new
    return TruncatedSeries(rows[ell])


def triangular_number(j):
    return j * (j + 1) // 2


def theta_truncated(ell, order):
    """sum_{j=0}^{2*ell-1} (-1)^(j(j+1)/2) q^(j(j+1)/2), truncated."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    c = [0] * (order + 1)
    for j in range(2 * ell):
        t = triangular_number(j)
        if t <= order:
            c[t] += -1 if t % 2 else 1
    return TruncatedSeries(c)
