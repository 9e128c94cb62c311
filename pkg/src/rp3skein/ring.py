"""Coefficient rings for the two invariants.

``LaurentPoly`` is a sparse Laurent polynomial with integer coefficients in a
fixed, ordered tuple of variables.  Exponents are stored as tuples, so the
ordering of terms is the lexicographic order on exponent vectors.

``HomflyValue`` is an element of Z[x^+-1, s^+-1, (s - s^-1)^-1, v^+-1, z] kept
as ``numerator / (s - s^-1)^k`` with ``k`` minimal, which makes the
representation unique and equality structural.

``KauffmanValue`` is an element of Z[a^+-1, z^+-1, y].
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels

HOMFLY_VARS = ("x", "s", "v", "z")
KAUFFMAN_VARS = ("a", "z", "y")

__all__ = [
    "LaurentPoly",
    "HomflyValue",
    "KauffmanValue",
    "HOMFLY_VARS",
    "KAUFFMAN_VARS",
    "mu",
    "delta",
    "sigma",
]


class LaurentPoly:
    """Sparse integer Laurent polynomial.

    Parameters
    ----------
    variables : tuple of str
        Variable names; fixes the length and meaning of exponent tuples.
    terms : dict, optional
        Mapping from exponent tuple to integer coefficient.  Zero
        coefficients are dropped.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # terms already free of zeros
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def constant(cls, variables, c=1):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, coeff=1, **exps):
        variables = tuple(variables)
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        key = tuple(exps.get(name, 0) for name in variables)
        return cls(variables, {key: coeff})

    # queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def index(self, name):
        return self.variables.index(name)

    def deg_in(self, name):
        """Largest exponent of ``name``; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        i = self.index(name)
        return max(e[i] for e in self.terms)

    def min_deg_in(self, name):
        if not self.terms:
            return None
        i = self.index(name)
        return min(e[i] for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient_slices(self, name):
        """Split by the exponent of ``name``: ``{n: coefficient of name^n}``."""
        i = self.index(name)
        out = {}
        for e, c in self.terms.items():
            n = e[i]
            out.setdefault(n, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {n: LaurentPoly._raw(self.variables, t) for n, t in out.items()}

    # arithmetic

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError("polynomials over different variables")

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.variables, _kernels.poly_add(self.terms, other.terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.variables, _kernels.poly_add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.variables, _kernels.poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly(self.variables, {tuple(-n * k for k in e): c ** (-n)})
        result = LaurentPoly.constant(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, coeff=1, **exps):
        """Multiply by the monomial ``coeff * prod(var^exp)``."""
        key = tuple(exps.get(name, 0) for name in self.variables)
        return LaurentPoly._raw(self.variables, _kernels.poly_shift(self.terms, key, coeff))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def substitute(self, values):
        """Evaluate at exact numbers given as ``{name: value}``.

        Variables missing from ``values`` are not allowed.
        """
        total = Fraction(0)
        vals = [Fraction(values[name]) for name in self.variables]
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(vals, e):
                t *= v ** k
            total += t
        return total

    # rendering

    def _monomial_str(self, e):
        parts = []
        for name, k in zip(self.variables, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self._monomial_str(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.variables!r}, {dict(self.sorted_terms())!r})"

    def to_json_terms(self):
        return [
            {"coeff": c, "exps": dict(zip(self.variables, e))}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_terms(cls, variables, terms):
        variables = tuple(variables)
        out = {}
        for t in terms:
            key = tuple(int(t["exps"].get(name, 0)) for name in variables)
            out[key] = out.get(key, 0) + int(t["coeff"])
        return cls(variables, out)


def _hpoly(coeff=1, **exps):
    return LaurentPoly.monomial(HOMFLY_VARS, coeff, **exps)


_SI = HOMFLY_VARS.index("s")


def _divide_by_sigma(terms):
    """Exact quotient of ``terms`` by ``s - s^-1``, or ``None``.

    Works on each (x, v, z) slice separately: multiplying by ``s`` turns the
    divisor into ``s^2 - 1``, and division by ``s^2 - 1`` runs from the top
    degree down with ``q[e-2] = p[e] + q[e]``.
    """
    slices = {}
    for e, c in terms.items():
        rest = e[:_SI] + e[_SI + 1:]
        slices.setdefault(rest, {})[e[_SI] + 1] = c
    out = {}
    for rest, row in slices.items():
        q = _kernels.divide_by_s2_minus_1(row)
        if q is None:
            return None
        for k, c in q.items():
            out[rest[:_SI] + (k,) + rest[_SI:]] = c
    return out


class HomflyValue:
    """Element of the HOMFLY-PT coefficient ring, normalized on creation.

    The value is ``num / (s - s^-1)^denom_power``.  Normalization cancels
    every factor of ``s - s^-1`` that divides the numerator, so two values are
    equal exactly when their stored fields agree.
    """

    __slots__ = ("num", "denom_power")

    def __init__(self, num=None, denom_power=0):
        if num is None:
            num = LaurentPoly(HOMFLY_VARS)
        elif isinstance(num, int):
            num = LaurentPoly.constant(HOMFLY_VARS, num)
        if num.variables != HOMFLY_VARS:
            raise ValueError("numerator must use variables x, s, v, z")
        if denom_power < 0:
            num = num * sigma_poly() ** (-denom_power)
            denom_power = 0
        terms = num.terms
        if not terms:
            denom_power = 0
        while denom_power > 0:
            q = _divide_by_sigma(terms)
            if q is None:
                break
            terms = q
            denom_power -= 1
        self.num = LaurentPoly._raw(HOMFLY_VARS, terms) if terms is not num.terms else num
        self.denom_power = denom_power

    @classmethod
    def one(cls):
        return cls(LaurentPoly.constant(HOMFLY_VARS, 1))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, coeff=1, **exps):
        return cls(_hpoly(coeff, **exps))

    def is_zero(self):
        return not self.num.terms

    def _coerce(self, other):
        if isinstance(other, HomflyValue):
            return other
        if isinstance(other, int):
            return HomflyValue(other)
        if isinstance(other, LaurentPoly):
            return HomflyValue(other)
        return NotImplemented

    def _lifted(self, k):
        # numerator over (s - s^-1)^k for k >= denom_power
        if k == self.denom_power:
            return self.num
        return self.num * sigma_poly() ** (k - self.denom_power)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = max(self.denom_power, other.denom_power)
        return HomflyValue(self._lifted(k) + other._lifted(k), k)

    __radd__ = __add__

    def __neg__(self):
        v = HomflyValue.__new__(HomflyValue)
        v.num = -self.num
        v.denom_power = self.denom_power
        return v

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HomflyValue(self.num * other.num, self.denom_power + other.denom_power)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.num.terms) != 1 or self.denom_power:
                raise ValueError("only monomials have negative powers")
            return HomflyValue(self.num ** n)
        return HomflyValue(self.num ** n, self.denom_power * n)

    def shift(self, coeff=1, **exps):
        """Multiply by a unit monomial; no renormalization is needed."""
        v = HomflyValue.__new__(HomflyValue)
        v.num = self.num.shift(coeff, **exps)
        v.denom_power = self.denom_power if v.num.terms else 0
        return v

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = HomflyValue(other)
        if not isinstance(other, HomflyValue):
            return NotImplemented
        return self.denom_power == other.denom_power and self.num == other.num

    def __hash__(self):
        return hash((self.num, self.denom_power))

    def deg_in(self, name):
        """Degree in ``name`` of the numerator.

        The denominator only involves ``s``, so for ``z`` this is the degree
        of the value itself.
        """
        return self.num.deg_in(name)

    def skein_coordinates(self):
        """Coefficients of ``z^0, z^1, ...`` as ``HomflyValue`` objects.

        The ``z^n`` coefficient is the coordinate of the value on the
        standard unlink with ``n`` components.  The ``z^0`` coefficient
        already includes the factor ``mu`` of the affine unknot.
        """
        if self.is_zero():
            return []
        slices = self.num.coefficient_slices("z")
        if min(slices) < 0:
            raise ValueError("negative power of z")
        top = max(slices)
        zero = LaurentPoly(HOMFLY_VARS)
        return [HomflyValue(slices.get(n, zero), self.denom_power) for n in range(top + 1)]

    def substitute(self, values):
        """Evaluate at exact numbers (``s`` must not be +-1)."""
        s = Fraction(values["s"])
        return self.num.substitute(values) / (s - 1 / s) ** self.denom_power

    def __str__(self):
        if self.denom_power == 0:
            return str(self.num)
        den = "(s - s^-1)" if self.denom_power == 1 else f"(s - s^-1)^{self.denom_power}"
        return f"({self.num})/{den}"

    def __repr__(self):
        return f"HomflyValue({self})"

    def to_json(self):
        return {"denom_power": self.denom_power, "terms": self.num.to_json_terms()}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json_terms(HOMFLY_VARS, data["terms"]),
                   int(data.get("denom_power", 0)))


class KauffmanValue:
    """Element of Z[a^+-1, z^+-1, y]."""

    __slots__ = ("poly",)

    def __init__(self, poly=None):
        if poly is None:
            poly = LaurentPoly(KAUFFMAN_VARS)
        elif isinstance(poly, int):
            poly = LaurentPoly.constant(KAUFFMAN_VARS, poly)
        if poly.variables != KAUFFMAN_VARS:
            raise ValueError("polynomial must use variables a, z, y")
        yi = KAUFFMAN_VARS.index("y")
        if any(e[yi] < 0 for e in poly.terms):
            raise ValueError("negative power of y")
        self.poly = poly

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, coeff=1, **exps):
        return cls(LaurentPoly.monomial(KAUFFMAN_VARS, coeff, **exps))

    def is_zero(self):
        return not self.poly.terms

    def _coerce(self, other):
        if isinstance(other, KauffmanValue):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return KauffmanValue(other)
        return NotImplemented

    def _wrap(self, poly):
        v = KauffmanValue.__new__(KauffmanValue)
        v.poly = poly
        return v

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0 and self.poly.deg_in("y"):
            raise ValueError("y is not invertible")
        return KauffmanValue(self.poly ** n)

    def shift(self, coeff=1, **exps):
        if exps.get("y", 0) < 0:
            raise ValueError("y is not invertible")
        return self._wrap(self.poly.shift(coeff, **exps))

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = KauffmanValue(other)
        if not isinstance(other, KauffmanValue):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def deg_in(self, name):
        return self.poly.deg_in(name)

    def skein_coordinates(self):
        """Coefficients of ``y^0, y^1, ...`` as Laurent polynomials in a, z."""
        if self.is_zero():
            return []
        slices = self.poly.coefficient_slices("y")
        zero = LaurentPoly(KAUFFMAN_VARS)
        return [KauffmanValue(slices.get(n, zero)) for n in range(max(slices) + 1)]

    def substitute(self, values):
        return self.poly.substitute(values)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"KauffmanValue({self})"

    def to_json(self):
        return {"terms": self.poly.to_json_terms()}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json_terms(KAUFFMAN_VARS, data["terms"]))


def sigma_poly():
    """``s - s^-1`` as a numerator polynomial."""
    return LaurentPoly(HOMFLY_VARS, {(0, 1, 0, 0): 1, (0, -1, 0, 0): -1})


def sigma():
    return HomflyValue(sigma_poly())


def mu():
    """Value of the affine unknot, ``(v^-1 - v)/(s - s^-1)``."""
    num = LaurentPoly(HOMFLY_VARS, {(0, 0, -1, 0): 1, (0, 0, 1, 0): -1})
    return HomflyValue(num, 1)


def delta():
    """Value of the affine unknot for the Kauffman invariant, ``(a + a^-1)/z - 1``."""
    return KauffmanValue(LaurentPoly(KAUFFMAN_VARS, {
        (1, -1, 0): 1, (-1, -1, 0): 1, (0, 0, 0): -1,
    }))
