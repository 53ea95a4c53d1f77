"""Exact coefficient arithmetic.

Every number in this package is exact: a big rational (``fractions.Fraction``,
aliased ``Rat``) or a reduced rational function of the formal level variable
``k`` (``RatFunc``).  A computation session fixes one of the two modes up
front; ``domain(None)`` gives the generic mode, ``domain(k0)`` the mode
specialized at the integer level ``k0``.

Rational functions are stored as a pair of primitive integer polynomials
(dense, low degree first) with gcd 1 and a positive leading denominator
coefficient.  All rational content lives in the integer coefficients, so the
inner loops of the normal-ordering engines run on plain Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

Rat = Fraction

__all__ = [
    "Rat",
    "UniPoly",
    "RatFunc",
    "RF_ZERO",
    "RF_ONE",
    "RF_K",
    "SpecializationError",
    "comb_z",
    "domain",
    "GenericDomain",
    "LevelDomain",
    "ratfunc_normalize",
    "specialize",
]


def comb_z(m, i):
    """Binomial coefficient C(m, i) for any integer m and i >= 0."""
    if i < 0:
        return 0
    if m >= 0:
        return comb(m, i)
    return (-1) ** i * comb(-m + i - 1, i)


# ---------------------------------------------------------------------------
# Dense integer polynomials in one symbol, low degree first, trailing zeros
# trimmed.  The zero polynomial is the empty tuple.
# ---------------------------------------------------------------------------

IP_ZERO = ()
IP_ONE = (1,)


def ip_trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def ip_add(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return ip_trim(out)


def ip_neg(a):
    return tuple(-x for x in a)


def ip_sub(a, b):
    return ip_add(a, ip_neg(b))


def ip_mul(a, b):
    if not a or not b:
        return IP_ZERO
    if len(a) == 1:
        x = a[0]
        return tuple(x * y for y in b)
    if len(b) == 1:
        y = b[0]
        return tuple(x * y for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ip_trim(out)


def ip_mul_int(a, c):
    if c == 0 or not a:
        return IP_ZERO
    if c == 1:
        return a
    return tuple(x * c for x in a)


def ip_pow(a, e):
    out = IP_ONE
    base = a
    while e:
        if e & 1:
            out = ip_mul(out, base)
        base = ip_mul(base, base)
        e >>= 1
    return out


def ip_eval(a, x):
    """Evaluate at x (int or Fraction), Horner."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def ip_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def ip_divexact(a, b):
    """Exact division in Z[x]; raises ArithmeticError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return IP_ZERO
    if len(b) == 1:
        d = b[0]
        if d == 1:
            return a
        out = []
        for c in a:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(q)
        return tuple(out)
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] -= q * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return ip_trim(out)


def _ip_valuation(a):
    v = 0
    while v < len(a) and a[v] == 0:
        v += 1
    return v


def _ip_shift_down(a, v):
    return a[v:] if v else a


def _reconstruct(x, xi):
    """Balanced base-xi digits of the integer x, as a polynomial tuple."""
    out = []
    half = xi // 2
    while x:
        d = x % xi
        if d > half:
            d -= xi
        out.append(d)
        x = (x - d) // xi
    return ip_trim(out)


def _ip_gcd_subresultant(f, g):
    """Primitive gcd of primitive f, g via the subresultant PRS."""
    if len(f) < len(g):
        f, g = g, f
    while True:
        if not g:
            pp = _ip_primitive_pos(f)
            return pp
        if len(g) == 1:
            return IP_ONE
        # pseudo-remainder of f by g
        df, dg = len(f) - 1, len(g) - 1
        lg = g[-1]
        rem = list(ip_mul_int(f, lg ** (df - dg + 1)))
        for i in range(df, dg - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c // lg
            for j in range(dg + 1):
                rem[i - dg + j] -= q * g[j]
        f, g = g, _ip_primitive_pos(ip_trim(rem))


def _ip_primitive_pos(a):
    if not a:
        return a
    c = ip_content(a)
    if a[-1] < 0:
        c = -c
    if c != 1:
        a = tuple(x // c for x in a)
    return a


def _ip_coprime_by_eval(a, b):
    """True means certainly coprime (as primitive polynomials); False is inconclusive."""
    xi = 2 * max(max(abs(c) for c in a), max(abs(c) for c in b)) + 29
    for _ in range(3):
        va, vb = ip_eval(a, xi), ip_eval(b, xi)
        if va and vb and gcd(va, vb) == 1:
            return True
        xi = xi * 3 + 17
    return False


def ip_gcd(a, b):
    """Gcd in Z[x] including integer content, normalized to positive lead."""
    if a and a[-1] == 0:
        a = ip_trim(a)
    if b and b[-1] == 0:
        b = ip_trim(b)
    if not a:
        return _ip_primitive_pos(b) if b and b[-1] < 0 else (b or IP_ZERO)
    if not b:
        return a if a[-1] > 0 else ip_neg(a)
    ca, cb = ip_content(a), ip_content(b)
    c = gcd(ca, cb)
    a = tuple(x // ca for x in a) if ca != 1 else a
    b = tuple(x // cb for x in b) if cb != 1 else b
    if a[-1] < 0:
        a = ip_neg(a)
    if b[-1] < 0:
        b = ip_neg(b)
    va, vb = _ip_valuation(a), _ip_valuation(b)
    v = min(va, vb)
    a, b = _ip_shift_down(a, va), _ip_shift_down(b, vb)
    if len(a) == 1 or len(b) == 1:
        g = IP_ONE
    elif a == b:
        g = a
    else:
        g = _ip_gcd_heuristic(a, b)
    if v:
        g = (0,) * v + g
    return ip_mul_int(g, c)


def _ip_gcd_heuristic(a, b):
    """Gcd of primitive positive-lead a, b by evaluation at a large point.

    Every candidate is certified by exact division plus a coprimality check of
    the cofactors, so a wrong answer is impossible; on repeated failure we fall
    back to the subresultant remainder sequence.
    """
    xi = 2 * min(max(abs(c) for c in a), max(abs(c) for c in b)) + 29
    for _ in range(6):
        va, vb = ip_eval(a, xi), ip_eval(b, xi)
        if va and vb:
            h = gcd(va, vb)
            if h == 1:
                return IP_ONE
            cand = _ip_primitive_pos(_reconstruct(h, xi))
            if cand and len(cand) > 1:
                try:
                    qa = ip_divexact(a, cand)
                    qb = ip_divexact(b, cand)
                except ArithmeticError:
                    qa = None
                if qa is not None and _ip_coprime_by_eval(qa, qb):
                    return cand
            elif cand == IP_ONE or len(cand) == 1:
                # h reconstructs to a constant: the true gcd evaluates into h,
                # so it must be constant too.
                return IP_ONE
        xi = xi * 7 // 3 + 31
    return _ip_gcd_subresultant(a, b)


def ip_format(a, symbol="k"):
    if not a:
        return "0"
    parts = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        if deg == 0:
            mono = str(abs(c))
        else:
            base = symbol if deg == 1 else f"{symbol}^{deg}"
            mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append((" + " if c > 0 else " - ") + mono)
    return "".join(parts)


# ---------------------------------------------------------------------------
# UniPoly: dense univariate polynomial over Q, the public-facing polynomial
# type (exact-arithmetic API and the univariate checks on Groebner output).
# ---------------------------------------------------------------------------


class UniPoly:
    """Univariate polynomial with Fraction coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_map(cls, m):
        if not m:
            return cls()
        deg = max(m)
        cs = [Fraction(0)] * (deg + 1)
        for d, c in m.items():
            cs[d] = Fraction(c)
        return cls(cs)

    @classmethod
    def const(cls, c):
        return cls((Fraction(c),))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (() if other == 0 else (Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_unipoly(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UniPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_int_tuple(self):
        """Clear denominators: returns (int tuple, common denominator)."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return tuple(int(c * den) for c in self.coeffs), den

    @classmethod
    def from_int_tuple(cls, t):
        return cls(tuple(Fraction(c) for c in t))

    def divexact(self, other):
        a, da = self.to_int_tuple()
        b, db = other.to_int_tuple()
        # (a/da) / (b/db) = (a*db) / (b*da)
        num = ip_mul_int(a, db)
        q, r = _ip_divmod_q(num, b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return UniPoly(tuple(Fraction(c) / da for c in q))

    def gcd(self, other):
        a, _ = self.to_int_tuple()
        b, _ = other.to_int_tuple()
        return UniPoly.from_int_tuple(ip_gcd(a, b)).monic()

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def format(self, symbol="k"):
        t, den = self.to_int_tuple()
        s = ip_format(t, symbol)
        if den == 1:
            return s
        return f"({s})/{den}"

    def __repr__(self):
        return f"UniPoly({self.format()})"


def _as_unipoly(x):
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.const(x)
    return None


def _ip_divmod_q(a, b):
    """Division with rational quotient coefficients cleared lazily; returns
    integer-scaled quotient only when exact.  Helper for UniPoly.divexact."""
    if not b:
        raise ZeroDivisionError
    rem = [Fraction(c) for c in a]
    db = len(b) - 1
    if not a:
        return IP_ZERO, ()
    if len(a) - 1 < db:
        return IP_ZERO, ip_trim(tuple(rem))
    lb = b[-1]
    out = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c / lb
        out[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] -= q * b[j]
    rem = [c for c in rem[:db]]
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(out), tuple(rem)


# ---------------------------------------------------------------------------
# RatFunc: reduced rational function in k over Q.
# ---------------------------------------------------------------------------


class SpecializationError(ArithmeticError):
    pass


class RatFunc:
    """Reduced fraction of integer polynomials in the level symbol k.

    Invariants: gcd(n, d) = 1 in Z[x] (including integer contents), d is never
    zero, and the leading coefficient of d is positive.  Zero is ()/(1,).
    """

    __slots__ = ("n", "d")

    def __init__(self, n, d=IP_ONE, _raw=False):
        if _raw:
            self.n = n
            self.d = d
            return
        n = ip_trim(n)
        d = ip_trim(d)
        if not d:
            raise ZeroDivisionError("zero denominator in rational function")
        if not n:
            self.n, self.d = IP_ZERO, IP_ONE
            return
        g = ip_gcd(n, d)
        if g != IP_ONE:
            n = ip_divexact(n, g)
            d = ip_divexact(d, g)
        if d[-1] < 0:
            n, d = ip_neg(n), ip_neg(d)
        self.n = n
        self.d = d

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, i):
        return cls((i,) if i else IP_ZERO, IP_ONE, _raw=True)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls(
            (q.numerator,) if q.numerator else IP_ZERO,
            (q.denominator,),
            _raw=True,
        )

    @classmethod
    def poly(cls, int_coeffs):
        return cls(ip_trim(tuple(int_coeffs)), IP_ONE, _raw=True)

    # -- structure ----------------------------------------------------------

    @property
    def num(self):
        return UniPoly.from_int_tuple(self.n)

    @property
    def den(self):
        return UniPoly.from_int_tuple(self.d)

    def is_polynomial(self):
        return self.d == IP_ONE

    def __bool__(self):
        return bool(self.n)

    def __eq__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self.n == o.n and self.d == o.d

    def __hash__(self):
        if self.d == IP_ONE and len(self.n) <= 1:
            return hash(Fraction(self.n[0] if self.n else 0))
        return hash((self.n, self.d))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        if self.d == IP_ONE and o.d == IP_ONE:
            return RatFunc(ip_add(self.n, o.n), IP_ONE, _raw=True)
        if not self.n:
            return o
        if not o.n:
            return self
        if self.d == o.d:
            return RatFunc(ip_add(self.n, o.n), self.d)
        g = ip_gcd(self.d, o.d)
        if g == IP_ONE:
            num = ip_add(ip_mul(self.n, o.d), ip_mul(o.n, self.d))
            return RatFunc(num, ip_mul(self.d, o.d), _raw=True) if num else RF_ZERO
        d1 = ip_divexact(self.d, g)
        d2 = ip_divexact(o.d, g)
        num = ip_add(ip_mul(self.n, d2), ip_mul(o.n, d1))
        h = ip_gcd(num, g)
        den = ip_mul(d1, o.d)
        if h != IP_ONE:
            num = ip_divexact(num, h)
            den = ip_divexact(den, h)
        if den and den[-1] < 0:
            num, den = ip_neg(num), ip_neg(den)
        if not num:
            return RF_ZERO
        return RatFunc(num, den, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(ip_neg(self.n), self.d, _raw=True)

    def __sub__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is int:
            if other == 0 or not self.n:
                return RF_ZERO
            if other == 1:
                return self
            if self.d == IP_ONE:
                return RatFunc(ip_mul_int(self.n, other), IP_ONE, _raw=True)
            return RatFunc(ip_mul_int(self.n, other), self.d)
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        if not self.n or not o.n:
            return RF_ZERO
        if self.d == IP_ONE and o.d == IP_ONE:
            return RatFunc(ip_mul(self.n, o.n), IP_ONE, _raw=True)
        g1 = ip_gcd(self.n, o.d)
        g2 = ip_gcd(o.n, self.d)
        n1 = ip_divexact(self.n, g1) if g1 != IP_ONE else self.n
        d2 = ip_divexact(o.d, g1) if g1 != IP_ONE else o.d
        n2 = ip_divexact(o.n, g2) if g2 != IP_ONE else o.n
        d1 = ip_divexact(self.d, g2) if g2 != IP_ONE else self.d
        return RatFunc(ip_mul(n1, n2), ip_mul(d1, d2), _raw=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        if not o.n:
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc(o.d, o.n)

    def __rtruediv__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return RF_ONE / self ** (-e)
        return RatFunc(ip_pow(self.n, e), ip_pow(self.d, e), _raw=True)

    # -- specialization and text --------------------------------------------

    def specialize(self, k0):
        """Exact value at the level k0; raises when the denominator vanishes."""
        dv = ip_eval(self.d, k0)
        if dv == 0:
            raise SpecializationError(
                f"denominator {ip_format(self.d)} vanishes at k = {k0}"
            )
        return Fraction(ip_eval(self.n, k0), 1) / Fraction(dv, 1)

    def format(self):
        if self.d == IP_ONE:
            return ip_format(self.n)
        ns = ip_format(self.n)
        ds = ip_format(self.d)
        if len(self.n) <= 1 and self.n and self.n[0] > 0:
            left = ns
        else:
            left = f"({ns})"
        if len(self.d) <= 1:
            return f"{left}/{ds}"
        return f"{left}/({ds})"

    def __repr__(self):
        return f"RatFunc({self.format()})"


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return RatFunc.from_int(x)
    if isinstance(x, Fraction):
        return RatFunc.from_fraction(x)
    return None


RF_ZERO = RatFunc.from_int(0)
RF_ONE = RatFunc.from_int(1)
RF_K = RatFunc.poly((0, 1))


def ratfunc_normalize(num, den):
    """Reduced, sign-normalized rational function num/den (UniPoly inputs)."""
    if not den:
        raise ZeroDivisionError("zero denominator in rational function")
    a, da = num.to_int_tuple()
    b, db = den.to_int_tuple()
    return RatFunc(ip_mul_int(a, db), ip_mul_int(b, da))


def specialize(s, k0):
    """Exact evaluation of a generic scalar at integer level k0."""
    if isinstance(s, RatFunc):
        return s.specialize(k0)
    return Fraction(s)


# ---------------------------------------------------------------------------
# Computation domains.  A domain fixes the scalar mode for a whole session:
# generic (rational functions of k) or specialized at an integer level.
# States produced by the engines may carry plain ints mixed with domain
# scalars; canonical() settles everything into the domain type.
# ---------------------------------------------------------------------------


class GenericDomain:
    is_generic = True
    level = None

    def __init__(self):
        self.k = RF_K
        self.zero = RF_ZERO
        self.one = RF_ONE

    def scalar(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc.from_int(x)
        if isinstance(x, Fraction):
            return RatFunc.from_fraction(x)
        if isinstance(x, UniPoly):
            t, den = x.to_int_tuple()
            return RatFunc(t, (den,))
        raise TypeError(f"cannot coerce {x!r} to a generic scalar")

    def fmt(self, s):
        return self.scalar(s).format()

    def parse(self, text):
        from . import exprs

        return exprs.parse_scalar(text, self)

    def __repr__(self):
        return "GenericDomain()"


class LevelDomain:
    is_generic = False

    def __init__(self, level):
        self.level = int(level)
        self.k = Fraction(self.level)
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def scalar(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, RatFunc):
            return x.specialize(self.level)
        if isinstance(x, UniPoly):
            return x(self.level)
        raise TypeError(f"cannot coerce {x!r} to a level-{self.level} scalar")

    def fmt(self, s):
        s = self.scalar(s)
        return str(s)

    def parse(self, text):
        from . import exprs

        return exprs.parse_scalar(text, self)

    def __repr__(self):
        return f"LevelDomain({self.level})"


def domain(level=None):
    """Scalar domain for a session: generic when level is None."""
    return GenericDomain() if level is None else LevelDomain(level)
