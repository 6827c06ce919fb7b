"""Exact scalar arithmetic over Q(p1, ..., pk).

A :class:`ParamRing` fixes an ordered list of parameter names.  A
:class:`Poly` is a sparse multivariate polynomial over Q in those parameters
(a dict from exponent vectors to nonzero Fractions).  A :class:`Scalar` is a
quotient num/den of two polynomials, kept in a canonical form:

* zero iff the numerator has no terms,
* common monomial factors and rational content are cancelled (gcd of all
  rational coefficients across num and den is 1),
* the denominator's leading coefficient under graded-lex order is positive,
* if num is a constant multiple of den the quotient collapses to a constant.

No full multivariate GCD is attempted: two equal scalars may have different
canonical pairs, so semantic equality is decided by cross-multiplication
(num_a * den_b - num_b * den_a identically zero), which is exact.

A ring may carry side relations of the form  name^2 = polynomial(other
params); polynomial products are rewritten modulo those relations.  This is
how square-root coefficients are handled exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZero, ParseError, UnknownParameter

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


class ParamRing:
    """Ordered parameter list plus optional quadratic side relations."""

    __slots__ = ("params", "_index", "relations", "_poly_zero", "_poly_one",
                 "zero", "one", "_cache")

    def __init__(self, params=(), relations=None):
        params = tuple(params)
        seen = set()
        for name in params:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"bad parameter name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate parameter name {name!r}")
            seen.add(name)
        self.params = params
        self._index = {name: i for i, name in enumerate(params)}
        self.relations = {}
        self._poly_zero = Poly(self, {})
        one_key = (0,) * len(params)
        self._poly_one = Poly(self, {one_key: Fraction(1)})
        self.zero = Scalar(self, self._poly_zero, self._poly_one)
        self.one = Scalar(self, self._poly_one, self._poly_one)
        self._cache = {}
        if relations:
            constrained = set(relations)
            for name, rhs in relations.items():
                if name not in self._index:
                    raise ValueError(f"relation for unknown parameter {name!r}")
                rhs_poly = (rhs if isinstance(rhs, Poly)
                            else parse_scalar(rhs, self)._require_poly())
                for key in rhs_poly.terms:
                    for cname in constrained:
                        if key[self._index[cname]] != 0:
                            raise ValueError(
                                "relation right-hand sides must not involve "
                                "constrained parameters")
                self.relations[self._index[name]] = rhs_poly

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownParameter(name) from None

    def param(self, name):
        """The parameter `name` as a Scalar."""
        key = [0] * len(self.params)
        key[self.index(name)] = 1
        return Scalar._make(self, Poly._make(self, {tuple(key): Fraction(1)}),
                            self._poly_one)

    def const(self, value):
        """A rational constant as a Scalar."""
        value = Fraction(value)
        if value == 0:
            return self.zero
        num = Poly._make(self, {(0,) * len(self.params): value})
        return Scalar._make(self, num, self._poly_one)

    def scalar(self, src):
        """Coerce a string, number or Scalar into this ring."""
        if isinstance(src, Scalar):
            if src.ring is not self:
                raise ValueError("scalar belongs to a different ring")
            return src
        if isinstance(src, str):
            return parse_scalar(src, self)
        return self.const(src)

    def __repr__(self):
        return f"ParamRing({list(self.params)!r})"


def _grlex_key(exps):
    return (sum(exps), exps)


class Poly:
    """Sparse multivariate polynomial over Q. Immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def _make(ring, terms):
        terms = {k: c for k, c in terms.items() if c != 0}
        if ring.relations:
            terms = Poly._reduce_relations(ring, terms)
        return Poly(ring, terms)

    @staticmethod
    def _reduce_relations(ring, terms):
        pending = dict(terms)
        done = {}
        while pending:
            key, coeff = pending.popitem()
            hit = None
            for idx in ring.relations:
                if key[idx] >= 2:
                    hit = idx
                    break
            if hit is None:
                new = done.get(key, 0) + coeff
                if new:
                    done[key] = new
                else:
                    done.pop(key, None)
                continue
            base = list(key)
            base[hit] -= 2
            rel = ring.relations[hit]
            for rkey, rcoeff in rel.terms.items():
                merged = tuple(b + r for b, r in zip(base, rkey))
                new = pending.get(merged, 0) + coeff * rcoeff
                if new:
                    pending[merged] = new
                else:
                    pending.pop(merged, None)
        return done

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        if len(self.terms) != 1:
            return False
        key, coeff = next(iter(self.terms.items()))
        return coeff == 1 and not any(key)

    @property
    def is_constant(self):
        if not self.terms:
            return True
        if len(self.terms) != 1:
            return False
        key = next(iter(self.terms))
        return not any(key)

    def const_value(self):
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                del terms[key]
        return Poly(self.ring, terms)

    def __neg__(self):
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return self.ring._poly_zero
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        if self.ring.relations:
            terms = Poly._reduce_relations(self.ring, terms)
        return Poly(self.ring, terms)

    def mul_frac(self, c):
        if c == 0 or not self.terms:
            return self.ring._poly_zero
        return Poly(self.ring, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power on a polynomial")
        result = self.ring._poly_one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def leading_coeff(self):
        key = max(self.terms, key=_grlex_key)
        return self.terms[key]

    def content(self):
        """gcd of the absolute values of all rational coefficients."""
        num_gcd = 0
        den_lcm = 1
        for coeff in self.terms.values():
            num_gcd = gcd(num_gcd, abs(coeff.numerator))
            den_lcm = lcm(den_lcm, coeff.denominator)
        return Fraction(num_gcd, den_lcm)

    def min_exponents(self):
        it = iter(self.terms)
        mins = list(next(it))
        for key in it:
            for i, e in enumerate(key):
                if e < mins[i]:
                    mins[i] = e
        return mins

    def shift_down(self, shifts):
        return Poly(self.ring, {
            tuple(e - s for e, s in zip(key, shifts)): c
            for key, c in self.terms.items()
        })

    def evaluate(self, values):
        """Evaluate at rational parameter values (list indexed like params)."""
        total = Fraction(0)
        for key, coeff in self.terms.items():
            term = coeff
            for val, exp in zip(values, key):
                if exp:
                    term *= val ** exp
            total += term
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key, coeff in self.sorted_terms():
            factors = []
            for name, exp in zip(self.ring.params, key):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            if not factors:
                text = str(coeff)
            elif coeff == 1:
                text = "*".join(factors)
            elif coeff == -1:
                text = "-" + "*".join(factors)
            else:
                text = str(coeff) + "*" + "*".join(factors)
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __repr__(self):
        return f"Poly({self})"


class Scalar:
    """Element of the rational-function field, in canonical form."""

    __slots__ = ("ring", "num", "den")
    __hash__ = None

    def __init__(self, ring, num, den):
        self.ring = ring
        self.num = num
        self.den = den

    @staticmethod
    def _make(ring, num, den):
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            return ring.zero
        if not den.is_one:
            # cancel common monomial factors
            mins_n = num.min_exponents()
            mins_d = den.min_exponents()
            shifts = [min(a, b) for a, b in zip(mins_n, mins_d)]
            if any(shifts):
                num = num.shift_down(shifts)
                den = den.shift_down(shifts)
            # collapse constant quotients num = c * den
            if num.terms.keys() == den.terms.keys():
                items = iter(num.terms.items())
                key0, c0 = next(items)
                ratio = c0 / den.terms[key0]
                if all(c == ratio * den.terms[k] for k, c in items):
                    num = Poly(ring, {(0,) * len(ring.params): ratio})
                    den = ring._poly_one
        content = gcd_fraction(num.content(), den.content())
        if content != 1 and content != 0:
            inv = 1 / content
            num = num.mul_frac(inv)
            den = den.mul_frac(inv)
        if den.leading_coeff() < 0:
            num = -num
            den = -den
        return Scalar(ring, num, den)

    def _require_poly(self):
        if not self.den.is_one:
            raise ValueError("expected a polynomial (denominator-free) value")
        return self.num

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    @property
    def is_constant(self):
        return self.num.is_constant and self.den.is_constant

    def const_value(self):
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero:
            return Fraction(0)
        return self.num.const_value() / self.den.const_value()

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ring is not self.ring:
                raise ValueError("scalars from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        if self.den is other.den or self.den.terms == other.den.terms:
            return Scalar._make(self.ring, self.num + other.num, self.den)
        num = self.num * other.den + other.num * self.den
        return Scalar._make(self.ring, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self.num.is_zero:
            return self
        return Scalar(self.ring, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return self.ring.zero
        if self.is_one:
            return other
        if other.is_one:
            return self
        return Scalar._make(self.ring, self.num * other.num,
                            self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZero("division by the zero scalar")
        if self.num.is_zero:
            return self
        return Scalar._make(self.ring, self.num * other.den,
                            self.den * other.num)

    def __rtruediv__(self, other):
        return self.ring.const(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.ring.one / (self ** (-n))
        result = self.ring.one
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.terms == other.den.terms:
            return self.num.terms == other.num.terms
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs - rhs).is_zero

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def structural_pair(self):
        """Hashable snapshot of the canonical (num, den) representation."""
        return (frozenset(self.num.terms.items()),
                frozenset(self.den.terms.items()))

    def substitute(self, values, target_ring=None):
        """Evaluate at rational parameter values.

        `values` maps parameter names to rationals; every parameter must be
        assigned.  Returns a constant Scalar in `target_ring` (a fresh empty
        ring by default).
        """
        ring = self.ring
        vals = []
        for name in ring.params:
            if name not in values:
                raise ValueError(f"no value for parameter {name!r}")
            vals.append(Fraction(values[name]))
        for idx, rel in ring.relations.items():
            expected = rel.evaluate(vals)
            if vals[idx] * vals[idx] != expected:
                raise ValueError(
                    f"assignment violates the side relation for "
                    f"{ring.params[idx]!r}")
        den_val = self.den.evaluate(vals)
        if den_val == 0:
            raise DivisionByZero("denominator vanishes at this point")
        value = self.num.evaluate(vals) / den_val
        if target_ring is None:
            target_ring = ParamRing(())
        return target_ring.const(value)

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"

    def __bool__(self):
        return not self.num.is_zero


def gcd_fraction(a, b):
    """gcd on nonnegative Fractions: gcd of numerators over lcm of dens."""
    return Fraction(gcd(a.numerator, b.numerator),
                    lcm(a.denominator, b.denominator))


# --- coefficient-expression parser -------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if not match or match.end() == match.start():
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(src) - len(stripped)
            raise ParseError(
                f"unexpected character {src[bad_at]!r} at position {bad_at}",
                position=bad_at, expected="number, parameter or operator")
        if match.group("int") is not None:
            tokens.append(("int", int(match.group("int")), match.start("int")))
        elif match.group("name") is not None:
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            op = match.group("op")
            tokens.append((op, op, match.start("op")))
        pos = match.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    """Precedence-climbing parser evaluating directly into Scalars."""

    def __init__(self, src, ring):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, expected):
        kind, _, position = self.peek()
        shown = "end of input" if kind == "end" else repr(self.src[position])
        raise ParseError(
            f"expected {expected} but found {shown} at position {position}",
            position=position, expected=expected)

    def parse(self):
        value = self.expression(0)
        if self.peek()[0] != "end":
            self.error("end of input")
        return value

    PRECEDENCE = {"+": 10, "-": 10, "*": 20, "/": 20}

    def expression(self, min_prec):
        value = self.atom()
        while True:
            kind = self.peek()[0]
            prec = self.PRECEDENCE.get(kind)
            if prec is None or prec < min_prec:
                return value
            self.advance()
            rhs = self.expression(prec + 1)
            if kind == "+":
                value = value + rhs
            elif kind == "-":
                value = value - rhs
            elif kind == "*":
                value = value * rhs
            else:
                value = value / rhs

    def atom(self):
        kind, payload, position = self.peek()
        if kind == "-":
            self.advance()
            return -self.atom()
        if kind == "int":
            self.advance()
            value = self.ring.const(payload)
        elif kind == "name":
            self.advance()
            if payload not in self.ring._index:
                raise UnknownParameter(payload, position=position)
            value = self.ring.param(payload)
        elif kind == "(":
            self.advance()
            value = self.expression(0)
            if self.peek()[0] != ")":
                self.error("')'")
            self.advance()
        else:
            self.error("number, parameter, '(' or '-'")
        return self.power_suffix(value)

    def power_suffix(self, value):
        while self.peek()[0] == "^":
            self.advance()
            kind, payload, _ = self.peek()
            if kind != "int":
                self.error("a non-negative integer exponent")
            self.advance()
            value = value ** payload
        return value


def parse_scalar(src, ring):
    """Parse a coefficient expression into a canonical Scalar."""
    return _Parser(src, ring).parse()
