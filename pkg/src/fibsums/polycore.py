"""Exact arithmetic foundation.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`
(always reduced, positive denominator).  On top of those live two
polynomial types:

* :class:`MPoly` -- sparse multivariate polynomial over named variables.
* :class:`UPoly` -- dense univariate polynomial whose coefficients may be
  ``int``, ``Fraction`` or :class:`MPoly` values.

Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple

__all__ = [
    "Fraction",
    "binom",
    "floor_div",
    "ceil_div",
    "MPoly",
    "UPoly",
    "normalize_scalar",
    "variables",
]


def binom(n: int, r: int) -> int:
    """Binomial coefficient with the vanishing convention for r outside [0, n]."""
    if n < 0:
        raise ValueError(f"binom: negative upper index {n} is out of contract")
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def floor_div(a: int, b: int) -> int:
    """Mathematical floor of a/b (rounds toward minus infinity)."""
    if b <= 0:
        raise ValueError("floor_div: divisor must be positive")
    return a // b


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise ValueError("ceil_div: divisor must be positive")
    return -((-a) // b)


def normalize_scalar(c):
    """Collapse integral Fractions to int so equal values share one representation."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction)) or isinstance(c, Rational)


Exps = Tuple[int, ...]


class MPoly:
    """Sparse polynomial with exact coefficients over an ordered variable list.

    The term map sends exponent tuples (aligned with ``vars``) to nonzero
    ``int``/``Fraction`` coefficients.  Arithmetic between polynomials on
    different variable lists is refused; use :meth:`align` first.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exps, object] | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean: Dict[Exps, object] = {}
        n = len(self.vars)
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for variables {self.vars}")
            if c != 0:
                clean[e] = normalize_scalar(c)
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        e = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ValueError(f"{name!r} is not one of {vars}")
        return cls(vars, {e: 1})

    @classmethod
    def monomial(cls, vars: Sequence[str], coeff=1, **exps: int) -> "MPoly":
        vars = tuple(vars)
        unknown = set(exps) - set(vars)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        return cls(vars, {tuple(exps.get(v, 0) for v in vars): coeff})

    @classmethod
    def _raw(cls, vars: Tuple[str, ...], terms: Dict[Exps, object]) -> "MPoly":
        # terms must already be clean
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(
                    f"variable mismatch {self.vars} vs {other.vars}; align explicitly")
            return other
        if _is_scalar(other):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def align(self, vars: Sequence[str]) -> "MPoly":
        """Re-embed into a variable list that contains every variable in use."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = {v: i for i, v in enumerate(vars)}
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(vars)
            for v, k in zip(self.vars, e):
                if k:
                    if v not in idx:
                        raise ValueError(f"cannot drop variable {v!r} which is in use")
                    new[idx[v]] = k
            terms[tuple(new)] = c
        return MPoly._raw(vars, terms)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def to_integral(self) -> "MPoly":
        if not self.is_integral():
            bad = [c for c in self.terms.values() if not isinstance(c, int)]
            raise ArithmeticError(f"non-integer coefficient {bad[0]}")
        return self

    def coeff(self, exps=None, **named: int):
        """Coefficient of a monomial, given as an exponent tuple or by keywords."""
        if exps is None:
            exps = tuple(named.get(v, 0) for v in self.vars)
        return self.terms.get(tuple(exps), 0)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = normalize_scalar(v)
        return MPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other) and not isinstance(other, MPoly):
            if other == 0:
                return MPoly._raw(self.vars, {})
            return MPoly._raw(self.vars, {e: normalize_scalar(c * other)
                                          for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly._raw(self.vars, {e: normalize_scalar(c)
                                      for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("MPoly powers need a nonnegative integer exponent")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        # scalar division only
        if _is_scalar(other) and other != 0:
            return self * (Fraction(1) / other)
        return NotImplemented

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                return NotImplemented
            return self.terms == other.terms
        if _is_scalar(other):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.vars, frozenset(self.terms.items())))

    # -- substitution -----------------------------------------------------

    def subs(self, mapping: Mapping[str, object], vars: Sequence[str] | None = None):
        """Substitute variables by scalars or MPolys (a ring homomorphism).

        Images that are MPolys must all live on the target variable list
        ``vars``; by default that is the variable list of the first MPoly
        image, or ``self.vars`` if all images are scalars.  Variables without
        an image are carried over and must exist in the target list.
        """
        unknown = set(mapping) - set(self.vars)
        if unknown:
            raise ValueError(f"cannot substitute unknown variables {sorted(unknown)}")
        if vars is None:
            targets = [img.vars for img in mapping.values() if isinstance(img, MPoly)]
            vars = targets[0] if targets else self.vars
        vars = tuple(vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, MPoly) and img.vars != vars:
                    raise ValueError(f"image of {v!r} lives on {img.vars}, expected {vars}")
            else:
                img = MPoly.var(v, vars)
            images.append(img)
        powers = [{0: MPoly.const(1, vars)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        total = MPoly(vars)
        for e, c in self.terms.items():
            term = MPoly.const(c, vars)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at scalars for every variable; returns an exact scalar."""
        missing = set(self.vars) - set(point)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * point[v] ** k
            total = total + term
        return normalize_scalar(total)

    def to_upoly(self, var: str) -> "UPoly":
        """View as a polynomial in ``var`` with coefficients in the remaining variables.

        When no variables remain the coefficients are plain scalars.
        """
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: Dict[int, Dict[Exps, object]] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        deg = max(buckets, default=-1)
        coeffs = []
        for d in range(deg + 1):
            part = MPoly._raw(rest, buckets.get(d, {}))
            coeffs.append(part.constant_value() if not rest else part)
        return UPoly(var, coeffs)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"MPoly({self.vars}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        order = sorted(range(len(self.vars)), key=lambda i: self.vars[i])
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                self.vars[i] if e[i] == 1 else f"{self.vars[i]}^{e[i]}"
                for i in order if e[i])
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}" if isinstance(a, int) else f"({a})*{mono}"
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def variables(*names: str, vars: Sequence[str] | None = None):
    """Return MPoly generators for ``names`` on the variable list ``vars``."""
    vars = tuple(vars or names)
    gens = tuple(MPoly.var(n, vars) for n in names)
    return gens if len(gens) != 1 else gens[0]


class UPoly:
    """Dense univariate polynomial, constant term first.

    Coefficients may be ``int``, ``Fraction`` or :class:`MPoly`; the only
    requirement is that they support ``+``, ``*`` and comparison with 0.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable = ()):
        cs = [normalize_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, var: str, degree: int, coeff=1) -> "UPoly":
        return cls(var, [0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch {self.var!r} vs {other.var!r}")
            return other
        if _is_scalar(other) or isinstance(other, MPoly):
            return UPoly(self.var, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.var, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            if _is_scalar(other) or isinstance(other, MPoly):
                return UPoly(self.var, [c * other for c in self.coeffs])
            return NotImplemented
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UPoly(self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return UPoly(self.var, out)

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, MPoly):
            return UPoly(self.var, [other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("UPoly powers need a nonnegative integer exponent")
        result = UPoly(self.var, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if _is_scalar(other) or isinstance(other, MPoly):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def truncate(self, n: int) -> "UPoly":
        """Drop every term of degree > n (series truncation mod var^(n+1))."""
        return UPoly(self.var, self.coeffs[: n + 1])

    def shift(self, k: int) -> "UPoly":
        """Multiply by var^k."""
        return UPoly(self.var, [0] * k + list(self.coeffs)) if self.coeffs else self

    def __divmod__(self, other: "UPoly"):
        """Exact long division.  The divisor's leading coefficient must be a nonzero scalar."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lc = other.lead()
        if not _is_scalar(lc):
            if isinstance(lc, MPoly) and lc.is_constant():
                lc = lc.constant_value()
            else:
                raise ArithmeticError("divisor needs a scalar leading coefficient")
        inv = Fraction(1) / Fraction(lc)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly(self.var), self
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1]
            if c == 0:
                continue
            q = c * inv
            if isinstance(q, Fraction):
                q = normalize_scalar(q)
            quo[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - q * b
        return UPoly(self.var, quo), UPoly(self.var, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, value):
        """Horner evaluation at a scalar, MPoly or UPoly value."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return normalize_scalar(acc) if _is_scalar(acc) else acc

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly(self.var, [fn(c) for c in self.coeffs])

    def rename(self, var: str) -> "UPoly":
        return UPoly(var, self.coeffs)

    def __repr__(self):
        return f"UPoly({self.var!r}, {list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else (self.var if d == 1 else f"{self.var}^{d}")
            if isinstance(c, MPoly):
                if not c.is_constant():
                    parts.append("+" + f"({c})" + (f"*{mono}" if mono else ""))
                    continue
                c = c.constant_value()
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}" if isinstance(a, int) else f"({a})*{mono}"
            parts.append(("-" if neg else "+") + body)
        out = parts[0].lstrip("+")
        for p in parts[1:]:
            out += f" {p[0]} {p[1:]}"
        return out
