"""Sparse multivariate Laurent polynomials over a pluggable coefficient ring.

Terms are a map from signed exponent tuples to nonzero coefficients.  The
variable roster is fixed per instance; arithmetic requires equal rosters and
raises otherwise, so variable bookkeeping bugs surface immediately instead of
silently broadcasting.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd

from .rings import Cyclotomic3, ExactDivisionError, QQ


_PACK_BITS = 16
_PACK_BIAS = 1 << 14
_PACK_MASK = (1 << _PACK_BITS) - 1


def _pack_key(e):
    out = 0
    for x in e:
        out = (out << _PACK_BITS) | (x + _PACK_BIAS)
    return out


def _unpack_key(packed, n):
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = (packed & _PACK_MASK) - 2 * _PACK_BIAS
        packed >>= _PACK_BITS
    return tuple(out)


def _packable(terms):
    return all(-8192 < x < 8192 for e in terms for x in e)


def _lcm_den(values):
    out = 1
    for v in values:
        if not isinstance(v, int):
            d = v.denominator
            out = out * d // gcd(out, d)
    return out


def _as_int(v, scale):
    if isinstance(v, int):
        return v * scale
    scaled = v * scale
    return scaled.numerator  # exact: scale is a multiple of the denominator


def _mul_cyc3(a, b):
    """Convolution over Q(w); hot path.

    A common denominator is cleared from each factor so the inner loop runs
    on plain integers; for large products the exponent tuples are also packed
    into single integers (biased fixed-width fields), making one term pair
    cost one int addition plus the coefficient work.
    """
    n = len(next(iter(a))) if a else 0
    la = _lcm_den(x for c in a.values() for x in (c.a, c.b))
    lb = _lcm_den(x for c in b.values() for x in (c.a, c.b))
    scale = la * lb
    pack = len(a) * len(b) > 2000 and _packable(a) and _packable(b)
    key = _pack_key if pack else (lambda e: e)
    au = [(key(e), _as_int(c.a, la), _as_int(c.b, la)) for e, c in a.items()]
    bu = [(key(e), _as_int(c.a, lb), _as_int(c.b, lb)) for e, c in b.items()]
    acc = {}
    get = acc.get
    if pack:
        for e1, a1, b1 in au:
            for e2, a2, b2 in bu:
                e = e1 + e2
                cross = b1 * b2
                ra = a1 * a2 - cross
                rb = a1 * b2 + b1 * a2 - cross
                prev = get(e)
                if prev is None:
                    acc[e] = [ra, rb]
                else:
                    prev[0] += ra
                    prev[1] += rb
    else:
        for e1, a1, b1 in au:
            for e2, a2, b2 in bu:
                e = tuple(x + y for x, y in zip(e1, e2))
                cross = b1 * b2
                ra = a1 * a2 - cross
                rb = a1 * b2 + b1 * a2 - cross
                prev = get(e)
                if prev is None:
                    acc[e] = [ra, rb]
                else:
                    prev[0] += ra
                    prev[1] += rb
    if scale == 1:
        out = {e: Cyclotomic3(v[0], v[1]) for e, v in acc.items()
               if v[0] or v[1]}
    else:
        out = {e: Cyclotomic3(Fraction(v[0], scale), Fraction(v[1], scale))
               for e, v in acc.items() if v[0] or v[1]}
    if pack:
        out = {_unpack_key(e, n): c for e, c in out.items()}
    return out


def _mul_plain(a, b):
    """Convolution with rational coefficients; hot path (same common
    denominator and key packing strategy as the cyclotomic case)."""
    n = len(next(iter(a))) if a else 0
    la = _lcm_den(a.values())
    lb = _lcm_den(b.values())
    scale = la * lb
    pack = len(a) * len(b) > 2000 and _packable(a) and _packable(b)
    key = _pack_key if pack else (lambda e: e)
    au = [(key(e), _as_int(c, la)) for e, c in a.items()]
    bu = [(key(e), _as_int(c, lb)) for e, c in b.items()]
    acc = {}
    get = acc.get
    if pack:
        for e1, c1 in au:
            for e2, c2 in bu:
                e = e1 + e2
                c = c1 * c2
                prev = get(e)
                acc[e] = c if prev is None else prev + c
    else:
        for e1, c1 in au:
            for e2, c2 in bu:
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                prev = get(e)
                acc[e] = c if prev is None else prev + c
    if scale == 1:
        out = {e: c for e, c in acc.items() if c}
    else:
        out = {}
        for e, c in acc.items():
            if c:
                v = Fraction(c, scale)
                out[e] = v.numerator if v.denominator == 1 else v
    if pack:
        out = {_unpack_key(e, n): c for e, c in out.items()}
    return out


class MultiPoly:
    __slots__ = ("ring", "vars", "terms")

    def __init__(self, ring, vars, terms=None):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "vars", tuple(vars))
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != len(self.vars):
                    raise ValueError("exponent arity does not match roster")
                if not ring.is_zero(coeff):
                    clean[tuple(exp)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring, vars):
        return cls(ring, vars)

    @classmethod
    def constant(cls, ring, vars, coeff):
        coeff = ring.coerce(coeff)
        return cls(ring, vars, {(0,) * len(tuple(vars)): coeff})

    @classmethod
    def one(cls, ring, vars):
        return cls.constant(ring, vars, ring.one)

    @classmethod
    def variable(cls, ring, vars, name, power=1):
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(ring, vars, {tuple(exp): ring.one})

    # -- predicates & accessors -------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * len(self.vars)}

    def constant_value(self):
        if self.is_zero():
            return self.ring.zero
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * len(self.vars)]

    def degree(self, name) -> int:
        """Max exponent of ``name``; 0 for the zero polynomial."""
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, name) -> int:
        i = self.vars.index(name)
        return min((e[i] for e in self.terms), default=0)

    def __len__(self):
        return len(self.terms)

    # -- ring structure -----------------------------------------------------

    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring or other.vars != self.vars:
                raise ValueError("incompatible polynomial rosters")
            return other
        try:
            coeff = self.ring.coerce(other)
        except TypeError:
            return None
        return MultiPoly.constant(self.ring, self.vars, coeff)

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        terms = dict(self.terms)
        for e, c in o.terms.items():
            nc = terms.get(e)
            nc = c if nc is None else nc + c
            if ring.is_zero(nc):
                terms.pop(e, None)
            else:
                terms[e] = nc
        return self._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        if ring.name == "cyclotomic3":
            return self._raw(_mul_cyc3(a, b))
        if ring.name == "rational":
            return self._raw(_mul_plain(a, b))
        terms = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                nc = terms.get(e)
                nc = c if nc is None else nc + c
                if ring.is_zero(nc):
                    terms.pop(e, None)
                else:
                    terms[e] = nc
        return self._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one(self.ring, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _raw(self, terms):
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "ring", self.ring)
        object.__setattr__(p, "vars", self.vars)
        object.__setattr__(p, "terms", terms)
        return p

    def scale(self, coeff):
        coeff = self.ring.coerce(coeff)
        if self.ring.is_zero(coeff):
            return self._raw({})
        return self._raw({e: c * coeff for e, c in self.terms.items()})

    def coeff_exact_div(self, coeff):
        """Divide every coefficient by a scalar, exactly."""
        ring = self.ring
        coeff = ring.coerce(coeff)
        return self._raw({e: ring.exact_div(c, coeff) for e, c in self.terms.items()})

    def star(self):
        """Apply the coefficient involution (q -> 1/q, resp. conjugation)."""
        ring = self.ring
        return self._raw({e: ring.star(c) for e, c in self.terms.items()})

    def map_coeffs(self, func, new_ring):
        out = {}
        for e, c in self.terms.items():
            nc = func(c)
            if not new_ring.is_zero(nc):
                out[e] = nc
        return MultiPoly(new_ring, self.vars, out)

    # -- roster surgery ----------------------------------------------------

    def with_vars(self, newvars):
        """Embed into a superset roster (order of shared names arbitrary)."""
        newvars = tuple(newvars)
        pos = []
        for v in self.vars:
            try:
                pos.append(newvars.index(v))
            except ValueError:
                raise ValueError(f"variable {v} missing from target roster")
        n = len(newvars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, x in zip(pos, e):
                ne[p] = x
            terms[tuple(ne)] = c
        return MultiPoly(self.ring, newvars, terms)

    def rename_vars(self, mapping):
        """Rename variables; targets must be fresh (no merging)."""
        newvars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(newvars)) != len(newvars):
            raise ValueError("variable rename collides")
        p = MultiPoly.__new__(MultiPoly)
        object.__setattr__(p, "ring", self.ring)
        object.__setattr__(p, "vars", newvars)
        object.__setattr__(p, "terms", dict(self.terms))
        return p

    def drop_vars(self, names):
        """Remove unused roster entries."""
        names = set(names)
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        for e in self.terms:
            for i, v in enumerate(self.vars):
                if v in names and e[i]:
                    raise ValueError(f"variable {v} still occurs")
        terms = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return MultiPoly(self.ring, tuple(self.vars[i] for i in keep), terms)

    def permute_vars(self, mapping):
        """Compose with a variable permutation: returns p(mapping applied),
        i.e. the exponent of v moves to the slot of mapping[v]."""
        pos = {v: i for i, v in enumerate(self.vars)}
        move = [pos[mapping.get(v, v)] for v in self.vars]
        if sorted(move) != list(range(len(self.vars))):
            raise ValueError("mapping is not a roster permutation")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for src, dst in enumerate(move):
                ne[dst] = e[src]
            terms[tuple(ne)] = c
        return self._raw(terms)

    def swap_vars(self, name1, name2):
        i, j = self.vars.index(name1), self.vars.index(name2)
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i], ne[j] = ne[j], ne[i]
            terms[tuple(ne)] = c
        return self._raw(terms)

    # -- substitutions -------------------------------------------------------

    def subs_scalar(self, name, value):
        """Substitute ``name -> value`` for a ring scalar (roster shrinks)."""
        ring = self.ring
        value = ring.coerce(value)
        i = self.vars.index(name)
        zero_val = ring.is_zero(value)
        powcache = {0: ring.one}

        def power(e):
            if e not in powcache:
                if e > 0:
                    powcache[e] = power(e - 1) * value
                else:
                    powcache[e] = ring.invert(value) * power(e + 1)
            return powcache[e]

        terms = {}
        for e, c in self.terms.items():
            if e[i] and zero_val:
                if e[i] < 0:
                    raise ZeroDivisionError(
                        f"substituting 0 into negative power of {name}")
                continue
            nc = c if not e[i] else c * power(e[i])
            ne = e[:i] + e[i + 1:]
            prev = terms.get(ne)
            nc = nc if prev is None else prev + nc
            if ring.is_zero(nc):
                terms.pop(ne, None)
            else:
                terms[ne] = nc
        return MultiPoly(ring, self.vars[:i] + self.vars[i + 1:], terms)

    def subs_scaled(self, name, scalar):
        """Substitute ``name -> scalar * name``; scalar must be a unit if
        negative powers of ``name`` occur."""
        ring = self.ring
        scalar = ring.coerce(scalar)
        i = self.vars.index(name)
        powcache = {0: ring.one}

        def power(e):
            if e not in powcache:
                if e > 0:
                    powcache[e] = power(e - 1) * scalar
                else:
                    powcache[e] = ring.invert(scalar) * power(e + 1)
            return powcache[e]

        terms = {}
        for e, c in self.terms.items():
            nc = c * power(e[i]) if e[i] else c
            if not ring.is_zero(nc):
                terms[e] = nc
        return self._raw(terms)

    def subs_invert(self, name):
        """Substitute ``name -> 1/name`` (Laurent exponent flip)."""
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i] = -ne[i]
            terms[tuple(ne)] = c
        return self._raw(terms)

    def subs_monomial(self, name, target, power, scalar=None):
        """Substitute ``name -> scalar * target**power`` (target may be new).

        Used for alias specializations such as z2 -> q^2 * z1 and for the
        principal specialization z_i -> t^(i-1).
        """
        ring = self.ring
        i = self.vars.index(name)
        if target in self.vars and target != name:
            newvars = self.vars[:i] + self.vars[i + 1:]
            j = newvars.index(target)
        else:
            newvars = self.vars[:i] + self.vars[i + 1:] + (target,)
            j = len(newvars) - 1
        powcache = {0: ring.one}
        if scalar is not None:
            scalar = ring.coerce(scalar)

        def spow(e):
            if e not in powcache:
                if e > 0:
                    powcache[e] = spow(e - 1) * scalar
                else:
                    powcache[e] = ring.invert(scalar) * spow(e + 1)
            return powcache[e]

        terms = {}
        for e, c in self.terms.items():
            ne = list(e[:i] + e[i + 1:])
            if target not in self.vars or target == name:
                ne.append(0)
            ne[j] += e[i] * power
            if scalar is not None and e[i]:
                c = c * spow(e[i])
            ne = tuple(ne)
            prev = terms.get(ne)
            nc = c if prev is None else prev + c
            if ring.is_zero(nc):
                terms.pop(ne, None)
            else:
                terms[ne] = nc
        return MultiPoly(ring, newvars, terms)

    # -- leading coefficients and division ---------------------------------

    def coefficient_of(self, name, degree):
        """Coefficient of name**degree as a polynomial without ``name``."""
        i = self.vars.index(name)
        terms = {e[:i] + e[i + 1:]: c for e, c in self.terms.items()
                 if e[i] == degree}
        return MultiPoly(self.ring, self.vars[:i] + self.vars[i + 1:], terms)

    def mul_monomial(self, exps, coeff=None):
        """Multiply by a monomial given as {var: exponent}."""
        shift = tuple(exps.get(v, 0) for v in self.vars)
        terms = {tuple(x + s for x, s in zip(e, shift)): c
                 for e, c in self.terms.items()}
        p = self._raw(terms)
        return p if coeff is None else p.scale(coeff)

    def exact_div(self, den):
        """Exact division in the Laurent ring; raises ExactDivisionError
        (carrying the remainder) when ``den`` does not divide ``self``.

        Lead-term reduction under lex order, with a lazy max-heap over the
        running numerator so each step costs O(|den| log) instead of a scan.
        """
        o = self._check(den)
        if o is None:
            raise TypeError("bad divisor")
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        ring = self.ring
        n = len(self.vars)
        num_shift = [min(e[i] for e in self.terms) for i in range(n)]
        den_shift = [min(e[i] for e in o.terms) for i in range(n)]
        num = {tuple(x - s for x, s in zip(e, num_shift)): c
               for e, c in self.terms.items()}
        den_terms = {tuple(x - s for x, s in zip(e, den_shift)): c
                     for e, c in o.terms.items()}
        lead_exp = max(den_terms)
        lead_coeff = den_terms[lead_exp]
        heap = [tuple(-x for x in e) for e in num]
        heapify(heap)
        quo = {}
        while num:
            ne = None
            while heap:
                cand = tuple(-x for x in heappop(heap))
                if cand in num:
                    ne = cand
                    break
            if ne is None:
                raise RuntimeError("heap exhausted with nonzero numerator")
            qe = tuple(x - y for x, y in zip(ne, lead_exp))
            if any(x < 0 for x in qe):
                raise ExactDivisionError(
                    "polynomial division remainder",
                    MultiPoly(ring, self.vars, num))
            qc = ring.exact_div(num[ne], lead_coeff)
            quo[qe] = qc
            for e, c in den_terms.items():
                t = tuple(x + y for x, y in zip(e, qe))
                nc = num.get(t)
                if nc is None:
                    num[t] = -(qc * c)
                    heappush(heap, tuple(-x for x in t))
                else:
                    nc = nc - qc * c
                    if ring.is_zero(nc):
                        del num[t]
                    else:
                        num[t] = nc
        final = tuple(a - b for a, b in zip(num_shift, den_shift))
        terms = {tuple(x + s for x, s in zip(e, final)): c
                 for e, c in quo.items()}
        return self._raw(terms)

    def monomial_ratio(self, other):
        """If self == m * other for a single term m, return (coeff, {var: e});
        otherwise return None."""
        o = self._check(other)
        if o is None or o.is_zero() or len(self.terms) != len(o.terms):
            return None
        try:
            quo = self.exact_div(o)
        except ExactDivisionError:
            return None
        if len(quo.terms) != 1:
            return None
        (e, c), = quo.terms.items()
        return c, {v: x for v, x in zip(self.vars, e) if x}

    # -- presentation --------------------------------------------------------

    def encode(self) -> str:
        """Deterministic text form, used in reports and golden files."""
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                (v if x == 1 else f"{v}^{x}")
                for v, x in zip(self.vars, e) if x)
            cs = self.ring.encode(c)
            parts.append(f"({cs})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coeff": self.ring.encode(self.terms[e])}
                for e in sorted(self.terms)
            ],
        }

    def __repr__(self):
        return f"MultiPoly({self.vars}, {len(self.terms)} terms)"


def poly_ring(ring, *names):
    """Convenience: return (one, generators...) over the given roster."""
    gens = tuple(MultiPoly.variable(ring, names, n) for n in names)
    return (MultiPoly.one(ring, names),) + gens


def product(polys, one=None):
    out = one
    for p in polys:
        out = p if out is None else out * p
    if out is None:
        raise ValueError("empty product with no unit supplied")
    return out


def vandermonde(ring, vars, names) -> MultiPoly:
    """prod_{a<b} (x_b - x_a) over the listed names, inside roster ``vars``."""
    out = MultiPoly.one(ring, vars)
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            out = out * (MultiPoly.variable(ring, vars, names[b])
                         - MultiPoly.variable(ring, vars, names[a]))
    return out
