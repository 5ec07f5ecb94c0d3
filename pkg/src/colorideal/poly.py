"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples of fixed length ``n``; index 0 is ``x1``, the
most significant variable (``x1 > x2 > ... > xn`` in every order).  A
:class:`Polynomial` keeps a ``{monomial: coefficient}`` dict and caches its
descending term list per :class:`TermOrder`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from operator import add, neg, sub
from typing import Callable, Iterable, Iterator, Sequence

from .field import QQ, FieldConfig, FieldError, Scalar

Monomial = tuple

LEX = "lex"
DEGLEX = "deglex"
DEGREVLEX = "degrevlex"
ORDER_KINDS = (LEX, DEGLEX, DEGREVLEX)


def _lex_key(m):
    return m


def _deglex_key(m):
    return (sum(m),) + m


def _degrevlex_key(m):
    return (sum(m),) + tuple(map(neg, reversed(m)))


# heap keys: ascending heap key <=> descending monomial
def _lex_neg(m):
    return tuple(map(neg, m))


def _deglex_neg(m):
    return (-sum(m),) + tuple(map(neg, m))


def _degrevlex_neg(m):
    return (-sum(m),) + m[::-1]


_KEYS = {LEX: (_lex_key, _lex_neg), DEGLEX: (_deglex_key, _deglex_neg),
         DEGREVLEX: (_degrevlex_key, _degrevlex_neg)}


@dataclass(frozen=True)
class TermOrder:
    """Monomial order with variable significance ``x1 > x2 > ... > xn``.

    ``elim`` leading variables (auxiliary variables stored before ``x1``) form
    an elimination block compared lexicographically before the rest.
    """

    kind: str = DEGREVLEX
    elim: int = 0

    def __post_init__(self):
        if self.kind not in _KEYS:
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.elim < 0:
            raise ValueError("elimination block size must be nonnegative")

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        base = _KEYS[self.kind][0]
        e = self.elim
        if not e:
            return base
        return lambda m: m[:e] + base(m[e:])

    @cached_property
    def heap_key(self) -> Callable[[Monomial], tuple]:
        """Reversed sort key, so a min-heap pops the largest monomial."""
        base = _KEYS[self.kind][1]
        e = self.elim
        if not e:
            return base
        return lambda m: tuple(map(neg, m[:e])) + base(m[e:])

    def without_elimination(self) -> "TermOrder":
        return TermOrder(self.kind)

    def with_elimination(self, elim: int) -> "TermOrder":
        return TermOrder(self.kind, elim)

    def __str__(self):
        return self.kind if not self.elim else f"{self.kind}+elim{self.elim}"


LEX_ORDER = TermOrder(LEX)
DEGLEX_ORDER = TermOrder(DEGLEX)
DEGREVLEX_ORDER = TermOrder(DEGREVLEX)
ALL_ORDERS = (LEX_ORDER, DEGLEX_ORDER, DEGREVLEX_ORDER)


def term_order(kind: str | TermOrder) -> TermOrder:
    return kind if isinstance(kind, TermOrder) else TermOrder(kind)


def compare_monomials(a: Monomial, b: Monomial, order: TermOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(sub, a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables over ``field``."""

    __slots__ = ("n", "field", "terms", "_sorted", "_hash")

    def __init__(self, terms=None, n: int = 1, field: FieldConfig = QQ):
        self.n = n
        self.field = field
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            conv = field.convert
            for m, c in items:
                m = tuple(m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not have {n} exponents")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in {m}")
                c = conv(c)
                if m in d:
                    c = c + d[m]
                    if field.modulus is not None:
                        c %= field.modulus
                if c:
                    d[m] = c
                else:
                    d.pop(m, None)
        self.terms = d
        self._sorted = {}
        self._hash = None

    @classmethod
    def _make(cls, terms: dict, n: int, field: FieldConfig) -> "Polynomial":
        # trusted constructor: keys are valid monomials, values canonical and nonzero
        p = object.__new__(cls)
        p.n = n
        p.field = field
        p.terms = terms
        p._sorted = {}
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n: int, field: FieldConfig = QQ) -> "Polynomial":
        return cls._make({}, n, field)

    @classmethod
    def constant(cls, c, n: int, field: FieldConfig = QQ) -> "Polynomial":
        return cls({(0,) * n: c}, n, field)

    @classmethod
    def one(cls, n: int, field: FieldConfig = QQ) -> "Polynomial":
        return cls._make({(0,) * n: field.one}, n, field)

    @classmethod
    def variable(cls, i: int, n: int, field: FieldConfig = QQ) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        m = [0] * n
        m[i - 1] = 1
        return cls._make({tuple(m): field.one}, n, field)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, field: FieldConfig = QQ) -> "Polynomial":
        return cls({tuple(exps): coeff}, len(exps), field)

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, m: Monomial) -> Scalar:
        return Scalar._raw(self.terms.get(tuple(m), self.field.zero), self.field)

    def sorted_terms(self, order: TermOrder = DEGREVLEX_ORDER) -> list:
        """Terms ``(monomial, coefficient)`` in descending ``order``."""
        s = self._sorted.get(order)
        if s is None:
            key = order.key
            s = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
            self._sorted[order] = s
        return s

    def leading_monomial(self, order: TermOrder = DEGREVLEX_ORDER) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms(order)[0][0]

    def leading_coefficient(self, order: TermOrder = DEGREVLEX_ORDER):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.sorted_terms(order)[0][1]

    def monic(self, order: TermOrder = DEGREVLEX_ORDER) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise ValueError(f"polynomials in {self.n} and {other.n} variables")
        if self.field != other.field:
            raise FieldError(f"polynomials over {self.field} and {other.field}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return Polynomial.constant(other, self.n, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        p = self.field.modulus
        for m, c in other.terms.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = v + c
                if p is not None:
                    v %= p
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Polynomial._make(d, self.n, self.field)

    __radd__ = __add__

    def __neg__(self):
        f = self.field.neg
        return Polynomial._make({m: f(c) for m, c in self.terms.items()}, self.n, self.field)

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

    def scale(self, c) -> "Polynomial":
        c = self.field.convert(c)
        if not c:
            return Polynomial.zero(self.n, self.field)
        p = self.field.modulus
        if p is None:
            d = {m: v * c for m, v in self.terms.items()}
        else:
            d = {m: v * c % p for m, v in self.terms.items()}
        return Polynomial._make(d, self.n, self.field)

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term ``c * m`` (``c`` a raw field value)."""
        p = self.field.modulus
        if p is None:
            d = {tuple(map(add, t, m)): v * c for t, v in self.terms.items()}
        else:
            d = {tuple(map(add, t, m)): v * c % p for t, v in self.terms.items()}
        return Polynomial._make(d, self.n, self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.modulus
        d = {}
        get = d.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(add, m1, m2))
                d[m] = get(m, 0) + c1 * c2
        if p is None:
            d = {m: c for m, c in d.items() if c}
        else:
            d = {m: c % p for m, c in d.items() if c % p}
        return Polynomial._make(d, self.n, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.n, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divide_exact(self, g: "Polynomial", order: TermOrder = DEGREVLEX_ORDER) -> "Polynomial":
        """Quotient ``self / g``; raises ArithmeticError if ``g`` does not divide."""
        self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = g.sorted_terms(order)[0]
        inv = self.field.inv(lc)
        p = self.field.modulus
        rest = self
        q = {}
        while rest:
            m, c = rest.sorted_terms(order)[0]
            if not divides(lm, m):
                raise ArithmeticError(f"{g} does not divide {self}")
            t = mono_div(m, lm)
            a = c * inv if p is None else c * inv % p
            q[t] = a
            rest = rest - g.mul_term(t, a)
        return Polynomial._make(q, self.n, self.field)

    # structural helpers

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self.terms == other.terms
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.n, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, frozenset(self.terms.items())))
        return self._hash

    def lift(self, extra: int = 1, exps: Sequence[int] | None = None) -> "Polynomial":
        """Embed into ``extra + n`` variables, new variables first."""
        pre = tuple(exps) if exps is not None else (0,) * extra
        return Polynomial._make({pre + m: c for m, c in self.terms.items()},
                                self.n + extra, self.field)

    def drop(self, count: int = 1) -> "Polynomial":
        """Remove the first ``count`` variables, which must not occur."""
        d = {}
        for m, c in self.terms.items():
            if any(m[:count]):
                raise ValueError("polynomial involves a dropped variable")
            d[m[count:]] = c
        return Polynomial._make(d, self.n - count, self.field)

    def permute(self, perm: dict[int, int]) -> "Polynomial":
        """Rename variables by the 1-based map ``perm`` (missing keys stay fixed)."""
        idx = [perm.get(i + 1, i + 1) - 1 for i in range(self.n)]
        d = {}
        for m, c in self.terms.items():
            new = [0] * self.n
            for i, e in enumerate(m):
                new[idx[i]] += e
            d[tuple(new)] = c
        return Polynomial(d, self.n, self.field)

    def evaluate(self, point: Sequence) -> Scalar:
        conv = self.field.convert
        vals = [conv(v) for v in point]
        p = self.field.modulus
        total = self.field.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * v ** e
            total += t
        if p is not None:
            total %= p
        return Scalar._raw(total, self.field)

    def variables(self) -> set[int]:
        """1-based indices of variables that occur."""
        return {i + 1 for m in self.terms for i, e in enumerate(m) if e}

    def to_string(self, order: TermOrder = DEGREVLEX_ORDER) -> str:
        if not self.terms:
            return "0"
        render = self.field.render
        out = []
        for m, c in self.sorted_terms(order):
            mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                            for i, e in enumerate(m) if e)
            cs = render(c)
            if not mono:
                term = cs
            elif cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            else:
                term = f"{cs}*{mono}"
            if not out:
                out.append(term)
            elif term.startswith("-"):
                out.append(" - " + term[1:])
            else:
                out.append(" + " + term)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, n={self.n}, field={self.field})"


def complete_homogeneous(U: Iterable[int], d: int, n: int,
                         field: FieldConfig = QQ) -> Polynomial:
    """Sum of all degree-``d`` monomials in the variables ``x_i``, ``i`` in ``U``."""
    U = sorted(set(U))
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return Polynomial.one(n, field)
    if not U:
        raise ValueError("empty variable set with positive degree")
    if U[0] < 1 or U[-1] > n:
        raise ValueError(f"variables {U} outside x1..x{n}")
    one = field.one
    terms = {}
    for combo in combinations_with_replacement(U, d):
        m = [0] * n
        for i in combo:
            m[i - 1] += 1
        terms[tuple(m)] = one
    return Polynomial._make(terms, n, field)


def linear_form(coeffs: dict[int, int], n: int, field: FieldConfig = QQ,
                constant=0) -> Polynomial:
    """``sum c_i x_i + constant`` from a 1-based ``{i: c_i}`` map."""
    terms = []
    for i, c in coeffs.items():
        m = [0] * n
        m[i - 1] = 1
        terms.append((m, c))
    if constant:
        terms.append(((0,) * n, constant))
    return Polynomial(terms, n, field)


# text grammar: sums of c*x1^e1*...*xn^en terms, with parentheses allowed

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\*\*|[-+*^/()]))")


def _tokenize(text: str) -> Iterator[tuple[str, str]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"unexpected input at {text[pos:pos + 10]!r}")
        pos = mt.end()
        if mt.group(1) is not None:
            yield "int", mt.group(1)
        elif mt.group(2) is not None:
            yield "var", mt.group(2)
        else:
            yield "op", "^" if mt.group(3) == "**" else mt.group(3)


class _Parser:
    def __init__(self, text: str, n: int, field: FieldConfig):
        self.toks = list(_tokenize(text))
        self.i = 0
        self.n = n
        self.field = field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "int":
            num = int(val)
            if self.peek() == ("op", "/"):
                self.take()
                k2, den = self.take()
                if k2 != "int":
                    raise ValueError("denominator must be an integer")
                return Polynomial.constant(f"{num}/{den}", self.n, self.field)
            return Polynomial.constant(num, self.n, self.field)
        if kind == "var":
            return Polynomial.variable(int(val), self.n, self.field)
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if val == "-":
            return -self.factor()
        raise ValueError(f"unexpected {val!r}")


def parse_polynomial(text: str, n: int | None = None,
                     field: FieldConfig = QQ) -> Polynomial:
    """Parse the text grammar produced by :meth:`Polynomial.to_string`."""
    if n is None:
        idx = [int(v) for v in re.findall(r"x(\d+)", text)]
        n = max(idx, default=1)
    parser = _Parser(text, n, field)
    result = parser.expr()
    if parser.i != len(parser.toks):
        raise ValueError(f"trailing input in {text!r}")
    return result
