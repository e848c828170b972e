"""Exact scalars: the rationals, prime fields F_p and simple extensions k[t]/(m(t)).

Matrix code never touches :class:`Scalar` objects.  Entries are stored "raw":

* ``Q``    -- ``gmpy2.mpq``
* ``F_p``  -- integers in ``[0, p)`` (``int64`` arrays when ``p < 2**20``)
* ``k[t]/(m)`` -- :class:`ExtElement`, a coefficient tuple on ``1, t, ..., t^(d-1)``

and each :class:`Field` knows how to coerce, reduce, invert and print them.
:class:`Scalar` pairs a raw value with its field for the public arithmetic API.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from gmpy2 import mpq, is_prime

from .errors import DivisionByZero, FieldMismatch, ParseError, Unsupported

_INT64_PRIME_BOUND = 2**20


class Field:
    characteristic = 0
    degree = 1
    dtype = object
    base = None
    zero = None
    one = None

    @property
    def spec(self):
        raise NotImplementedError

    @property
    def is_finite(self):
        return self.characteristic != 0

    @property
    def order(self):
        if not self.is_finite:
            return None
        return self.characteristic**self.degree

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Field({self.spec!r})"

    def __str__(self):
        return self.spec

    # scalar level

    def reduce(self, x):
        return x

    def is_zero(self, x):
        return x == 0

    def normalize(self, arr):
        return arr

    # array level

    def zeros(self, shape):
        if self.dtype is not object:
            return np.zeros(shape, dtype=self.dtype)
        a = np.empty(shape, dtype=object)
        a.fill(self.zero)
        return a

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def asarray(self, data, shape=None):
        """Coerce a nested sequence (or array) of convertible values into a field array."""
        src = np.asarray(data, dtype=object)
        if shape is not None:
            src = src.reshape(shape)
        out = self.zeros(src.shape)
        for idx, v in np.ndenumerate(src):
            out[idx] = self.coerce(v)
        return out

    def from_int(self, n):
        return self.coerce(int(n))

    def elements(self):
        raise Unsupported(f"{self.spec} is infinite")


class Rationals(Field):
    characteristic = 0
    zero = mpq(0)
    one = mpq(1)

    @property
    def spec(self):
        return "Q"

    def coerce(self, x):
        if isinstance(x, np.integer):
            x = int(x)
        if isinstance(x, str):
            x = x.strip()
            try:
                return mpq(x)
            except ValueError as exc:
                raise ParseError(f"bad rational {x!r}") from exc
        if isinstance(x, (list, tuple, ExtElement)):
            raise ParseError(f"not a rational scalar: {x!r}")
        return mpq(x)

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / mpq(x)

    def format(self, x):
        return str(mpq(x))

    def parse(self, token):
        return self.coerce(token)

    def random_element(self, rng):
        return mpq(rng.randint(-4, 4), rng.randint(1, 3))


class PrimeField(Field):
    def __init__(self, p):
        if p < 2 or not is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.dtype = np.int64 if p < _INT64_PRIME_BOUND else object
        self.zero = 0
        self.one = 1

    @property
    def spec(self):
        return f"F{self.p}"

    def reduce(self, x):
        return int(x) % self.p

    def normalize(self, arr):
        return arr % self.p

    def coerce(self, x):
        p = self.p
        if isinstance(x, (int, np.integer)):
            return int(x) % p
        if isinstance(x, str):
            x = x.strip()
            try:
                if "/" in x:
                    a, b = x.split("/")
                    return int(a) * self.inv(int(b) % p) % p
                return int(x) % p
            except ValueError as exc:
                raise ParseError(f"bad F{p} scalar {x!r}") from exc
        if isinstance(x, type(mpq(0))):
            return int(x.numerator) * self.inv(int(x.denominator) % p) % p
        raise ParseError(f"not an F{p} scalar: {x!r}")

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise DivisionByZero(f"division by zero in F{self.p}")
        return pow(x, -1, self.p)

    def format(self, x):
        return str(int(x) % self.p)

    def parse(self, token):
        return self.coerce(token)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return list(range(self.p))


class ExtElement:
    """Element of a simple extension, stored as reduced coefficients on the power basis."""

    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def _coeffs(self, other):
        if isinstance(other, ExtElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.c
        return self.field.coerce(other).c

    def __add__(self, other):
        red = self.field.base.reduce
        return ExtElement(self.field, tuple(red(a + b) for a, b in zip(self.c, self._coeffs(other))))

    __radd__ = __add__

    def __sub__(self, other):
        red = self.field.base.reduce
        return ExtElement(self.field, tuple(red(a - b) for a, b in zip(self.c, self._coeffs(other))))

    def __rsub__(self, other):
        red = self.field.base.reduce
        return ExtElement(self.field, tuple(red(b - a) for a, b in zip(self.c, self._coeffs(other))))

    def __neg__(self):
        red = self.field.base.reduce
        return ExtElement(self.field, tuple(red(-a) for a in self.c))

    def __mul__(self, other):
        return ExtElement(self.field, self.field._mul(self.c, self._coeffs(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, ExtElement) else self.field.coerce(other)
        return self * self.field.inv(other)

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.field.inv(self)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.field == other.field and self.c == other.c
        try:
            return self.c == self.field.coerce(other).c
        except (ParseError, FieldMismatch):
            return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field.spec, self.c))

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def __repr__(self):
        return f"ExtElement({self.field.format(self)})"


class SimpleExtension(Field):
    """k[t]/(m(t)) over Q or F_p, with m monic and irreducible of degree >= 2."""

    def __init__(self, base, minpoly):
        if isinstance(base, SimpleExtension):
            raise Unsupported("towers of extensions are not supported")
        minpoly = tuple(base.coerce(c) for c in minpoly)
        while len(minpoly) > 1 and base.is_zero(minpoly[-1]):
            minpoly = minpoly[:-1]
        d = len(minpoly) - 1
        if d < 2:
            raise ParseError("minimal polynomial must have degree >= 2")
        if minpoly[-1] != base.one:
            raise ParseError("minimal polynomial must be monic")
        _check_irreducible(base, minpoly)
        self.base = base
        self.minpoly = minpoly
        self.degree = d
        self.characteristic = base.characteristic
        self.zero = ExtElement(self, tuple([base.zero] * d))
        self.one = ExtElement(self, (base.one,) + tuple([base.zero] * (d - 1)))
        self.gen = ExtElement(self, (base.zero, base.one) + tuple([base.zero] * (d - 2)))

    @property
    def spec(self):
        return f"{self.base.spec}[t]/{format_poly(self.base, self.minpoly)}"

    @property
    def order(self):
        if not self.is_finite:
            return None
        return self.base.order**self.degree

    def _mul(self, a, b):
        base, d, m = self.base, self.degree, self.minpoly
        prod = [base.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] = prod[i + j] + x * y
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == 0:
                continue
            for i in range(d):
                prod[k - d + i] = prod[k - d + i] - c * m[i]
        return tuple(base.reduce(x) for x in prod[:d])

    def embed(self, x):
        """Image of a raw base-field value."""
        return ExtElement(self, (self.base.reduce(x),) + tuple([self.base.zero] * (self.degree - 1)))

    def coerce(self, x):
        if isinstance(x, ExtElement):
            if x.field is not self and x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x
        if isinstance(x, (list, tuple)):
            if len(x) > self.degree:
                raise ParseError(f"too many coefficients for {self.spec}: {x!r}")
            cs = [self.base.coerce(v) for v in x] + [self.base.zero] * (self.degree - len(x))
            return ExtElement(self, tuple(cs))
        return self.embed(self.base.coerce(x))

    def is_zero(self, x):
        return not x

    def inv(self, x):
        x = self.coerce(x)
        if not x:
            raise DivisionByZero(f"division by zero in {self.spec}")
        d, base = self.degree, self.base
        # column j of the multiplication-by-x matrix is x * t^j
        cols = []
        power = self.one
        for _ in range(d):
            cols.append((x * power).c)
            power = power * self.gen
        rhs = [base.one] + [base.zero] * (d - 1)
        rows = [[cols[j][i] for j in range(d)] + [rhs[i]] for i in range(d)]
        return ExtElement(self, tuple(_solve_square(base, rows)))

    def format(self, x):
        return [self.base.format(v) for v in self.coerce(x).c]

    def parse(self, token):
        return self.coerce(token)

    def random_element(self, rng):
        return ExtElement(self, tuple(self.base.random_element(rng) for _ in range(self.degree)))

    def elements(self):
        return [ExtElement(self, c) for c in itertools.product(self.base.elements(), repeat=self.degree)]

    def components(self, x):
        """Base-field coordinates of ``x`` on the power basis."""
        return self.coerce(x).c


def _solve_square(base, rows):
    """Gauss-Jordan on a small augmented square system over ``base`` (nonsingular)."""
    n = len(rows)
    rows = [list(r) for r in rows]
    for c in range(n):
        p = next(r for r in range(c, n) if rows[r][c] != 0)
        rows[c], rows[p] = rows[p], rows[c]
        inv = base.inv(rows[c][c])
        rows[c] = [base.reduce(v * inv) for v in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [base.reduce(a - f * b) for a, b in zip(rows[r], rows[c])]
    return [rows[i][n] for i in range(n)]


# --------------------------------------------------------------------------
# polynomials and irreducibility


def format_poly(base, coeffs):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        neg = base.characteristic == 0 and c < 0
        mag = base.format(-c if neg else c)
        if k == 0:
            body = mag
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == "1" else f"{mag}*{mono}"
        terms.append(("-" if neg else "+") + body)
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s[0] == "+" else s


_TERM = re.compile(r"^(?P<coef>[-+]?[0-9/]*)\*?(?P<var>t(\^(?P<exp>[0-9]+))?)?$")


def parse_poly(base, text):
    """Parse ``c_k*t^k + ...`` into a coefficient tuple (low degree first)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    s = s.replace("-", "+-")
    coeffs = {}
    for term in filter(None, s.split("+")):
        m = _TERM.match(term)
        if not m or (not m.group("coef") and not m.group("var")):
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        coef = m.group("coef")
        if coef in ("", "+"):
            coef = "1"
        elif coef == "-":
            coef = "-1"
        if not m.group("var"):
            k = 0
        else:
            k = int(m.group("exp") or 1)
        coeffs[k] = base.reduce(coeffs.get(k, base.zero) + base.coerce(coef))
    deg = max(coeffs)
    return tuple(coeffs.get(k, base.zero) for k in range(deg + 1))


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _ptrim([x % p for x in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _ptrim(a)
    return a


def _pmulmod(a, b, m, p):
    prod = [0] * max(len(a) + len(b) - 1, 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _pmod(prod, m, p)


def _ppow(a, e, m, p):
    result, base = [1], _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim([x % p for x in a]), _ptrim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_power(m, p, k):
    h = [0, 1]
    for _ in range(k):
        h = _ppow(h, p, m, p)
    return h


def _is_irreducible_fp(m, p):
    # Rabin: x^(p^d) = x mod m, and gcd(x^(p^(d/q)) - x, m) = 1 for primes q | d
    m = [int(c) % p for c in m]
    d = len(m) - 1
    x = [0, 1]
    if _pmod(_frobenius_power(m, p, d), m, p) != _pmod(x, m, p):
        return False
    for q in _prime_factors(d):
        h = _frobenius_power(m, p, d // q)
        diff = h + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, diff, p)) != 1:
            return False
    return True


def _divisors(n):
    n = abs(n)
    small, large = [], []
    q = 1
    while q * q <= n:
        if n % q == 0:
            small.append(q)
            if q * q != n:
                large.append(n // q)
        q += 1
    return small + large[::-1]


def _has_rational_root(coeffs):
    den = 1
    for c in coeffs:
        den = den * int(c.denominator) // _gcd(den, int(c.denominator))
    ints = [int(c * den) for c in coeffs]
    if ints[0] == 0:
        return True
    for r in _divisors(ints[0]):
        for s in _divisors(ints[-1]):
            for cand in (mpq(r, s), mpq(-r, s)):
                if sum(mpq(a) * cand**k for k, a in enumerate(ints)) == 0:
                    return True
    return False


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _check_irreducible(base, minpoly):
    d = len(minpoly) - 1
    if isinstance(base, PrimeField):
        if not _is_irreducible_fp(minpoly, base.p):
            raise ParseError(f"{format_poly(base, minpoly)} is reducible over {base.spec}")
        return
    if d > 3:
        raise Unsupported("irreducibility over Q is only checked up to degree 3")
    if _has_rational_root(minpoly):
        raise ParseError(f"{format_poly(base, minpoly)} is reducible over Q")


# --------------------------------------------------------------------------
# construction and field spec strings


_Q = Rationals()


def rationals():
    return _Q


@lru_cache(maxsize=None)
def prime_field(p):
    return PrimeField(int(p))


@lru_cache(maxsize=None)
def _extension(base, minpoly_key):
    return SimpleExtension(base, minpoly_key)


def simple_extension(base, minpoly):
    """Cached constructor: equal (base, minpoly) pairs give the same field object."""
    if isinstance(minpoly, str):
        minpoly = parse_poly(base, minpoly)
    key = tuple(base.coerce(c) for c in minpoly)
    if isinstance(base, PrimeField):
        key = tuple(int(c) for c in key)
    return _extension(base, key)


_FIELD_RE = re.compile(r"^(?P<base>Q|F(?P<p>[0-9]+))(\[t\]/(?P<poly>.+))?$")


def parse_field_spec(text):
    """Parse ``Q``, ``F5``, ``F2[t]/t^2+t+1`` or ``Q[t]/t^2+1``."""
    m = _FIELD_RE.match(text.replace(" ", ""))
    if not m:
        raise ParseError(f"bad field spec {text!r}")
    base = rationals() if m.group("base") == "Q" else prime_field(int(m.group("p")))
    if m.group("poly") is None:
        return base
    return simple_extension(base, parse_poly(base, m.group("poly")))


# --------------------------------------------------------------------------
# public scalar API


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: object

    @classmethod
    def of(cls, field, x):
        return cls(field, field.coerce(x))

    def _check(self, other):
        if not isinstance(other, Scalar):
            return Scalar.of(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value + o.value))

    def __sub__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value - o.value))

    def __mul__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * o.value))

    def __truediv__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * self.field.inv(o.value)))

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (ParseError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, str(self.field.format(self.value))))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __repr__(self):
        return f"Scalar({self.field.spec}, {self.field.format(self.value)})"


_OPS = {"+": Scalar.__add__, "-": Scalar.__sub__, "−": Scalar.__sub__,
        "*": Scalar.__mul__, "×": Scalar.__mul__, "/": Scalar.__truediv__, "÷": Scalar.__truediv__}


def scalar_arith(a, b, op):
    """Exact ``a op b`` for ``op`` in ``+ - * /``."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def embed_scalar(a, ext):
    if not isinstance(ext, SimpleExtension) or ext.base != a.field:
        raise FieldMismatch(f"{ext} is not an extension of {a.field}")
    return Scalar(ext, ext.embed(a.value))
