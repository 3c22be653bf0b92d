"""Truncated power series over the rationals, with the transforms used by
unlabeled enumeration.

Everything here is exact: coefficients are `fractions.Fraction` values, kept
in lowest terms by construction, and no operation ever rounds.  A series
carries an explicit truncation order; binary operations require equal orders
so that precision mistakes fail loudly instead of silently re-truncating.

exp and log are computed by the usual first-order ODE recurrences on
coefficients (g' = f'·g and l'·f = f'), which cost O(N^2) rational
operations.  That is entirely adequate for truncation orders in the
hundreds, which is as far as this package ever pushes a dense series.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _exact(value) -> Fraction:
    # floats are rejected rather than converted: Fraction(0.1) would be the
    # exact binary expansion, which is never what an exact pipeline means
    if isinstance(value, float):
        raise TypeError("refusing float coefficient %r; use Fraction or int" % value)
    return Fraction(value)


class TruncSeries:
    """A power series in one variable truncated at an inclusive order N.

    Immutable.  `coeffs[n]` is the coefficient of t^n for n = 0..N.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("truncation order must be >= 0, got %d" % order)
        coeffs = tuple(_exact(c) for c in coeffs)
        if len(coeffs) > order + 1:
            raise ValueError(
                "got %d coefficients for truncation order %d" % (len(coeffs), order)
            )
        if len(coeffs) < order + 1:
            coeffs = coeffs + (_ZERO,) * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (_ONE,))

    @classmethod
    def from_terms(cls, order: int, terms: dict) -> "TruncSeries":
        """Build a series from an {exponent: coefficient} mapping.

        Exponents beyond the truncation order are rejected rather than
        silently dropped.
        """
        coeffs = [_ZERO] * (order + 1)
        for e, c in terms.items():
            if not 0 <= e <= order:
                raise ValueError("exponent %d out of range 0..%d" % (e, order))
            coeffs[e] = _exact(c)
        return cls(order, coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError("coefficient index %d out of range 0..%d" % (n, self.order))
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*t^%d" % (c, n))
            if len(terms) > 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return "TruncSeries(order=%d, %s)" % (self.order, body)

    def _check_order(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries, got %r" % type(other).__name__)
        if self.order != other.order:
            raise ValueError(
                "truncation order mismatch: %d != %d" % (self.order, other.order)
            )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_order(other)
        n = self.order
        f, g = self.coeffs, other.coeffs
        out = [_ZERO] * (n + 1)
        for i, fi in enumerate(f):
            if not fi:
                continue
            for j in range(n + 1 - i):
                gj = g[j]
                if gj:
                    out[i + j] += fi * gj
        return TruncSeries(n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "TruncSeries":
        c = _exact(c)
        return TruncSeries(self.order, [c * a for a in self.coeffs])

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term.

        Uses the coefficient recurrence n·g_n = sum_{k=1..n} k·f_k·g_{n-k}
        derived from g' = f'·g; never touches floating point.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a zero constant term")
        n = self.order
        f = self.coeffs
        g = [_ONE] + [_ZERO] * n
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m + 1):
                fk = f[k]
                if fk:
                    acc += k * fk * g[m - k]
            g[m] = acc / m
        return TruncSeries(n, g)

    def log(self) -> "TruncSeries":
        """log of a series with constant term one; inverse of `exp`."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        f = self.coeffs
        l = [_ZERO] * (n + 1)
        for m in range(1, n + 1):
            acc = m * f[m]
            for k in range(1, m):
                fk = f[m - k]
                if fk and l[k]:
                    acc -= k * l[k] * fk
            l[m] = acc / m
        return TruncSeries(n, l)

    def substitute_power(self, k: int) -> "TruncSeries":
        """Return f(t^k) at the same truncation order."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1, got %d" % k)
        if k == 1:
            return self
        n = self.order
        out = [_ZERO] * (n + 1)
        for i in range(n // k + 1):
            out[k * i] = self.coeffs[i]
        return TruncSeries(n, out)

    def euler_operator(self) -> "TruncSeries":
        """Apply t·d/dt: the coefficient of t^n becomes n times itself.

        On an exponential generating series of connected structures this
        distinguishes a base point, turning counts into pointed counts.
        """
        return TruncSeries(
            self.order, [n * c for n, c in enumerate(self.coeffs)]
        )

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coefficients(self) -> list:
        """Coefficients as plain ints; raises if any is non-integral."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError("coefficient of t^%d is not an integer: %s" % (n, c))
            out.append(c.numerator)
        return out


def euler_transform(f: TruncSeries) -> TruncSeries:
    """Connected types to all-structures types: exp(sum_{n>=1} f(t^n)/n).

    If f counts isomorphism types of connected structures by size, the result
    counts types of arbitrary disjoint unions of them.  Requires f(0) = 0.
    """
    if f.coeffs[0] != 0:
        raise ValueError("euler_transform requires a zero constant term")
    n = f.order
    acc = [_ZERO] * (n + 1)
    for d in range(1, n + 1):
        inv_d = Fraction(1, d)
        for i in range(1, n // d + 1):
            c = f.coeffs[i]
            if c:
                acc[d * i] += inv_d * c
    return TruncSeries(n, acc).exp()


def inverse_euler_transform(g: TruncSeries) -> TruncSeries:
    """All-structures types to connected types; exact inverse of
    `euler_transform` at equal truncation.

    Computes sum_{n>=1} mu(n)/n · log(g)(t^n), using that log commutes with
    power substitution.  Requires g(0) = 1.  Summands with n beyond the
    truncation order vanish, so the finite sum is exact.
    """
    if g.coeffs[0] != 1:
        raise ValueError("inverse_euler_transform requires constant term 1")
    n = g.order
    lg = g.log().coeffs
    mu = moebius_sieve(n) if n >= 1 else [0, 0]
    out = [_ZERO] * (n + 1)
    for d in range(1, n + 1):
        m = mu[d]
        if not m:
            continue
        md = Fraction(m, d)
        for i in range(1, n // d + 1):
            c = lg[i]
            if c:
                out[d * i] += md * c
    return TruncSeries(n, out)


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("euler_phi is defined for n >= 1, got %d" % n)
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def moebius_mu(n: int) -> int:
    """The Moebius function: (-1)^k on squarefree n with k prime factors, else 0."""
    if n < 1:
        raise ValueError("moebius_mu is defined for n >= 1, got %d" % n)
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def moebius_sieve(n: int) -> list:
    """Moebius function values mu(0..n) computed by a linear sieve."""
    if n < 1:
        return [0] * (n + 1)
    mu = [0] * (n + 1)
    mu[1] = 1
    least = [0] * (n + 1)
    primes = []
    for i in range(2, n + 1):
        if least[i] == 0:
            least[i] = i
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if p > least[i] or i * p > n:
                break
            least[i * p] = p
            mu[i * p] = 0 if i % p == 0 else -mu[i]
    return mu
