"""Exact coefficient rings: Q, Q(w) with w = exp(2*pi*i/3), and Laurent
polynomials in one symbol over Q.

Everything here is immutable and exact; there is no floating point in this
module.  Division is either field division or exact ring division that raises
``ExactDivisionError`` when a remainder would appear.
"""

from __future__ import annotations

from fractions import Fraction


class ExactDivisionError(ArithmeticError):
    """Raised when an exact ring division leaves a remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


def _as_number(x):
    """Normalize to int when possible (int arithmetic is much cheaper than
    Fraction); int and Fraction compare and hash interchangeably."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational number")


def _num_div(a, b):
    """Exact rational division preferring int // int."""
    if isinstance(a, int) and isinstance(b, int) and b and a % b == 0:
        return a // b
    return Fraction(a) / b


class Cyclotomic3:
    """Element a + b*w of Q(w), where w is a primitive cube root of unity.

    Reduction w^2 = -1 - w is applied on construction of every product, so a
    w^2 term is never stored.  The field norm is a^2 - a*b + b^2, zero only
    for the zero element.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _as_number(a))
        object.__setattr__(self, "b", _as_number(b))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic3 is immutable")

    # -- basic predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic3):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic3(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic3(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        cross = b1 * b2
        return Cyclotomic3(a1 * a2 - cross, a1 * b2 + b1 * a2 - cross)

    __rmul__ = __mul__

    def conj(self) -> Cyclotomic3:
        """Complex conjugation, w -> w^2.  Equals q -> 1/q at q = w."""
        return Cyclotomic3(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = a^2 - a*b + b^2 (a rational number)."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inv(self) -> Cyclotomic3:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return Cyclotomic3(_num_div(c.a, n), _num_div(c.b, n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = Cyclotomic3(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Cyclotomic3({self.a!r}, {self.b!r})"

    def __str__(self):
        return encode_cyclotomic3(self)


W = Cyclotomic3(0, 1)            # w = exp(2*pi*i/3)
W2 = Cyclotomic3(-1, -1)         # w^2 = conj(w) = 1/w
CYC_ONE = Cyclotomic3(1)
CYC_ZERO = Cyclotomic3(0)


def omega_power(n: int) -> Cyclotomic3:
    return (CYC_ONE, W, W2)[n % 3]


class LaurentQ:
    """Laurent polynomial in a single symbol with Fraction coefficients.

    The symbol is nameless at this level; it stands for the deformation
    parameter q in the spin-chain modules and for t in the factorial-ratio
    formulas.  No zero coefficients are stored.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _as_number(v)
                if v:
                    c[e] = v
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentQ is immutable")

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> LaurentQ:
        return cls({exp: coeff})

    @classmethod
    def const(cls, coeff) -> LaurentQ:
        return cls({0: coeff})

    def is_zero(self) -> bool:
        return not self.c

    def is_monomial(self) -> bool:
        return len(self.c) == 1

    def _coerce(self, other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self.c)
        for e, v in o.c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        return LaurentQ(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in o.c.items():
                e = e1 + e2
                nv = c.get(e, 0) + v1 * v2
                if nv:
                    c[e] = nv
                else:
                    c.pop(e, None)
        return LaurentQ(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = LaurentQ.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self) -> LaurentQ:
        """Inverse; defined only for monomials (the units of the ring)."""
        if len(self.c) != 1:
            raise ExactDivisionError("only monomials are invertible in Q[q,1/q]")
        (e, v), = self.c.items()
        return LaurentQ({-e: _num_div(1, v)})

    def star(self) -> LaurentQ:
        """The involution q -> 1/q."""
        return LaurentQ({-e: v for e, v in self.c.items()})

    def exact_div(self, other) -> LaurentQ:
        """Exact division in Q[q, 1/q]; raises on a nonzero remainder."""
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentQ()
        shift = min(self.c) - min(o.c)
        num = {e - min(self.c): v for e, v in self.c.items()}
        den = {e - min(o.c): v for e, v in o.c.items()}
        dd = max(den)
        lead = den[dd]
        quo = {}
        while num:
            nd = max(num)
            if nd < dd:
                raise ExactDivisionError(
                    "Laurent division remainder", LaurentQ(num))
            qe, qv = nd - dd, _num_div(num[nd], lead)
            quo[qe] = qv
            for e, v in den.items():
                t = e + qe
                nv = num.get(t, 0) - qv * v
                if nv:
                    num[t] = nv
                else:
                    num.pop(t, None)
        return LaurentQ({e + shift: v for e, v in quo.items()})

    def subs_fraction(self, x) -> Fraction:
        """Evaluate at a nonzero rational point."""
        x = _as_fraction(x)
        out = Fraction(0)
        for e, v in self.c.items():
            out += v * x ** e
        return out

    def subs_omega(self) -> Cyclotomic3:
        """Evaluate at the combinatorial point q = w."""
        out = CYC_ZERO
        for e, v in self.c.items():
            out = out + omega_power(e) * v
        return out

    def degree(self) -> int:
        if not self.c:
            raise ValueError("degree of zero polynomial")
        return max(self.c)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        return f"LaurentQ({self.c!r})"

    def __str__(self):
        return encode_laurent(self)


def t_number(i: int, step: int = 1) -> LaurentQ:
    """[i] in base t^step, i.e. 1 + t^step + ... + t^((i-1)*step)."""
    if i < 0:
        raise ValueError("t-number index must be nonnegative")
    return LaurentQ({j * step: 1 for j in range(i)})


def t_factorial(n: int, step: int = 1) -> LaurentQ:
    """[n]! in base t^step; evaluates to n! at t = 1."""
    out = LaurentQ.const(1)
    for i in range(1, n + 1):
        out = out * t_number(i, step)
    return out


def laurent_gcd(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Monic gcd of the polynomial parts (Laurent units dropped)."""
    x = {e - min(a.c): v for e, v in a.c.items()} if a.c else {}
    y = {e - min(b.c): v for e, v in b.c.items()} if b.c else {}
    while y:
        # x mod y by long division
        dd = max(y)
        lead = y[dd]
        r = dict(x)
        while r and max(r) >= dd:
            nd = max(r)
            f = _num_div(r[nd], lead)
            for e, v in y.items():
                t = e + nd - dd
                nv = r.get(t, 0) - f * v
                if nv:
                    r[t] = nv
                else:
                    r.pop(t, None)
        x, y = y, ({e - min(r): v for e, v in r.items()} if r else {})
    if not x:
        return LaurentQ()
    lead = x[max(x)]
    return LaurentQ({e: _num_div(v, lead) for e, v in x.items()})


class RationalQ:
    """Element of Q(q), stored as a Laurent-polynomial fraction.

    Kept lazily normalized: equality and zero tests never require a normal
    form, and gcd reduction happens only when denominators drift or on
    encoding.  In the qKZ pipelines denominators are powers of (q - 1/q), so
    additions almost always share a denominator.
    """

    __slots__ = ("num", "den")
    _NORM_SPAN = 48

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentQ.const(num)
        if den is None:
            den = LaurentQ.const(1)
        elif isinstance(den, (int, Fraction)):
            den = LaurentQ.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q)")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalQ is immutable")

    @staticmethod
    def _wrap(num, den):
        if den.c and len(den.c) == 1:
            # unit denominator: fold it into the numerator
            (e, v), = den.c.items()
            num = LaurentQ({k - e: _num_div(x, v) for k, x in num.c.items()})
            den = LaurentQ.const(1)
        x = RationalQ(num, den)
        span = (max(den.c) - min(den.c)) if den.c else 0
        if span > RationalQ._NORM_SPAN:
            return x.normalized()
        return x

    def normalized(self) -> RationalQ:
        if self.num.is_zero():
            return RationalQ(LaurentQ(), LaurentQ.const(1))
        g = laurent_gcd(self.num, self.den)
        num, den = self.num, self.den
        if not (len(g.c) == 1 and 0 in g.c):
            num = num.exact_div(g)
            den = den.exact_div(g)
        # make the denominator a monic polynomial with min exponent 0
        shift = min(den.c)
        lead = den.c[max(den.c)]
        den = LaurentQ({e - shift: _num_div(v, lead) for e, v in den.c.items()})
        num = LaurentQ({e - shift: _num_div(v, lead) for e, v in num.c.items()})
        return RationalQ(num, den)

    def _coerce(self, other):
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, LaurentQ):
            return RationalQ(other)
        if isinstance(other, (int, Fraction)):
            return RationalQ(LaurentQ.const(other))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalQ._wrap(self.num + o.num, self.den)
        return RationalQ._wrap(self.num * o.den + o.num * self.den,
                               self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQ._wrap(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> RationalQ:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RationalQ._wrap(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = RationalQ(LaurentQ.const(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def star(self) -> RationalQ:
        return RationalQ._wrap(self.num.star(), self.den.star())

    def subs_omega(self) -> Cyclotomic3:
        d = self.den.subs_omega()
        if d.is_zero():
            x = self.normalized()
            d = x.den.subs_omega()
            if d.is_zero():
                raise ZeroDivisionError("pole at the combinatorial point")
            return x.num.subs_omega() / d
        return self.num.subs_omega() / d

    def subs_fraction(self, value) -> Fraction:
        d = self.den.subs_fraction(value)
        if not d:
            x = self.normalized()
            d = x.den.subs_fraction(value)
            if not d:
                raise ZeroDivisionError(f"pole at q = {value}")
            return x.num.subs_fraction(value) / d
        return self.num.subs_fraction(value) / d

    def as_laurent(self) -> LaurentQ:
        """The underlying Laurent polynomial; error if truly fractional."""
        x = self.normalized()
        if not (len(x.den.c) == 1 and x.den.c.get(0) == 1):
            raise ExactDivisionError("element of Q(q) is not Laurent")
        return x.num

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        x = self.normalized()
        return hash((frozenset(x.num.c.items()), frozenset(x.den.c.items())))

    def __repr__(self):
        return f"RationalQ({self.num!r}, {self.den!r})"

    def __str__(self):
        return encode_rational_q(self)


# ---------------------------------------------------------------------------
# Canonical textual encoding ("a/b", "a/b+c/d*w", and Laurent sums).
# ---------------------------------------------------------------------------

def encode_fraction(x: Fraction) -> str:
    return str(x)


def encode_cyclotomic3(x: Cyclotomic3) -> str:
    if x.is_rational():
        return encode_fraction(x.a)
    sign = "+" if x.b > 0 else "-"
    mag = -x.b if x.b < 0 else x.b
    return f"{encode_fraction(x.a)}{sign}{encode_fraction(mag)}*w"


def encode_rational_q(x: RationalQ, symbol: str = "q") -> str:
    n = x.normalized()
    num = encode_laurent(n.num, symbol)
    if len(n.den.c) == 1 and n.den.c.get(0) == 1:
        return num
    return f"({num})/({encode_laurent(n.den, symbol)})"


def encode_laurent(x: LaurentQ, symbol: str = "q") -> str:
    if x.is_zero():
        return "0"
    parts = []
    for e in sorted(x.c):
        v = x.c[e]
        if e == 0:
            term = encode_fraction(v)
        else:
            power = symbol if e == 1 else f"{symbol}^{e}"
            if v == 1:
                term = power
            elif v == -1:
                term = f"-{power}"
            else:
                term = f"{encode_fraction(v)}*{power}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Coefficient-ring adapters.  MultiPoly and the linear algebra are generic
# over one of these three singletons.
# ---------------------------------------------------------------------------

class RationalRing:
    """Rationals, stored as int whenever the denominator is 1 (int and
    Fraction mix freely and compare/hash equal)."""

    name = "rational"
    zero = 0
    one = 1

    @staticmethod
    def from_int(n):
        return n

    @staticmethod
    def coerce(x):
        return _as_number(x)

    @staticmethod
    def is_zero(x):
        return not x

    @staticmethod
    def star(x):
        return x

    @staticmethod
    def exact_div(x, y):
        if not y:
            raise ZeroDivisionError
        return _num_div(x, y)

    invert = staticmethod(lambda x: _num_div(1, x))
    encode = staticmethod(lambda x: str(x))


class Cyclotomic3Ring:
    name = "cyclotomic3"
    zero = CYC_ZERO
    one = CYC_ONE

    @staticmethod
    def from_int(n):
        return Cyclotomic3(n)

    @staticmethod
    def coerce(x):
        if isinstance(x, Cyclotomic3):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic3(x)
        raise TypeError(f"not a Q(w) scalar: {x!r}")

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def star(x):
        return x.conj()

    @staticmethod
    def exact_div(x, y):
        return x / y

    invert = staticmethod(Cyclotomic3.inv)
    encode = staticmethod(encode_cyclotomic3)


class LaurentRing:
    name = "laurent"
    zero = LaurentQ()
    one = LaurentQ.const(1)

    @staticmethod
    def from_int(n):
        return LaurentQ.const(n)

    @staticmethod
    def coerce(x):
        if isinstance(x, LaurentQ):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentQ.const(x)
        raise TypeError(f"not a Laurent scalar: {x!r}")

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def star(x):
        return x.star()

    @staticmethod
    def exact_div(x, y):
        return x.exact_div(y)

    invert = staticmethod(LaurentQ.inv)
    encode = staticmethod(encode_laurent)


class RationalQRing:
    name = "rational-q"
    zero = RationalQ(0)
    one = RationalQ(1)

    @staticmethod
    def from_int(n):
        return RationalQ(n)

    @staticmethod
    def coerce(x):
        if isinstance(x, RationalQ):
            return x
        if isinstance(x, (LaurentQ, int, Fraction)):
            return RationalQ(x if isinstance(x, LaurentQ) else LaurentQ.const(x))
        raise TypeError(f"not a Q(q) scalar: {x!r}")

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def star(x):
        return x.star()

    @staticmethod
    def exact_div(x, y):
        return x / y

    invert = staticmethod(RationalQ.inv)
    encode = staticmethod(encode_rational_q)


QQ = RationalRing()
CYC3 = Cyclotomic3Ring()
QLAURENT = LaurentRing()
QFIELD = RationalQRing()
