"""Exact sparse polynomials over the rationals.

A :class:`Scalar` is a finite sum of rational multiples of monomials in
commuting symbols.  Symbols are plain strings; exponents may be negative
(used for Laurent powers of ``N`` and ``Z``).  Formal traces of words are
ordinary symbols whose name starts with ``"Tr("``.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by symbol name
Number = Union[int, Fraction]

ONE_MONO: Monomial = ()


@lru_cache(maxsize=1 << 20)
def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        e2 = d.get(s, 0) + e
        if e2:
            d[s] = e2
        else:
            del d[s]
    return tuple(sorted(d.items()))


def mono_pow(m: Monomial, k: int) -> Monomial:
    return tuple((s, e * k) for s, e in m)


class Scalar:
    """Immutable exact polynomial ``{monomial: Fraction}``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = Fraction(c)
        self.terms: dict = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        s = object.__new__(cls)
        s.terms = terms
        s._hash = None
        return s

    @classmethod
    def const(cls, c: Number) -> "Scalar":
        return cls._raw({ONE_MONO: Fraction(c)} if c else {})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "Scalar":
        return cls._raw({((name, power),): Fraction(1)} if power else {ONE_MONO: Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Number = 1) -> "Scalar":
        return cls._raw({mono: Fraction(coeff)} if coeff else {})

    # arithmetic

    def __add__(self, other) -> "Scalar":
        other = as_scalar(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            c2 = t.get(m, 0) + c
            if c2:
                t[m] = c2
            else:
                t.pop(m, None)
        return Scalar._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        if len(other.terms) < len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        t: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = t.get(m, 0) + c1 * c2
                if c:
                    t[m] = c
                else:
                    t.pop(m, None)
        return Scalar._raw(t)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return Scalar._raw({m: c / other for m, c in self.terms.items()})
        other = as_scalar(other)
        if len(other.terms) != 1:
            raise ZeroDivisionError("division only by a nonzero monomial")
        (m, c), = other.terms.items()
        inv = tuple((s, -e) for s, e in m)
        return self * Scalar._raw({inv: 1 / c})

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (m, c), = self.terms.items()
            return Scalar._raw({mono_pow(m, k): c ** k})
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    # comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    # inspection

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(ONE_MONO, Fraction(0))

    def symbols(self) -> set:
        return {s for m in self.terms for s, _ in m}

    def map_monomials(self, fn: Callable[[Monomial, Fraction], "Scalar | None"]) -> "Scalar":
        """Rebuild by sending each term ``(m, c)`` through ``fn``."""
        out: dict = {}
        for m, c in self.terms.items():
            r = fn(m, c)
            if r is None:
                continue
            for m2, c2 in r.terms.items():
                v = out.get(m2, 0) + c2
                if v:
                    out[m2] = v
                else:
                    out.pop(m2, None)
        return Scalar._raw(out)

    def filter(self, keep: Callable[[Monomial], bool]) -> "Scalar":
        return Scalar._raw({m: c for m, c in self.terms.items() if keep(m)})

    def subs(self, values: Mapping[str, "Scalar | Number"]) -> "Scalar":
        """Substitute symbols by scalars (negative powers need monomial images)."""
        vals = {k: as_scalar(v) for k, v in values.items()}

        def fn(m, c):
            rest = []
            r = Scalar.const(c)
            for s, e in m:
                if s in vals:
                    r = r * (vals[s] ** e)
                else:
                    rest.append((s, e))
            return r * Scalar._raw({tuple(rest): Fraction(1)})

        return self.map_monomials(fn)

    def coeff(self, symbol: str, power: int) -> "Scalar":
        """Coefficient of ``symbol**power`` (other symbols kept)."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(symbol, 0) == power:
                d.pop(symbol, None)
                out[tuple(sorted(d.items()))] = c
        return Scalar(out)

    def degree(self, symbol: str) -> tuple[int, int]:
        es = [dict(m).get(symbol, 0) for m in self.terms]
        return (min(es), max(es)) if es else (0, 0)

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        total = 0
        for m, c in self.terms.items():
            v = float(c)
            for s, e in m:
                v = v * values[s] ** e
            total = total + v
        return total

    # printing

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: _mono_sort_key(mc[0])):
            mono = "*".join(s if e == 1 else f"{s}^{e}" for s, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _mono_sort_key(m: Monomial):
    return (sum(abs(e) for _, e in m), m)


ZERO = Scalar._raw({})
ONE = Scalar._raw({ONE_MONO: Fraction(1)})


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


def ssum(items: Iterable[Scalar]) -> Scalar:
    t: dict = {}
    for s in items:
        for m, c in s.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
    return Scalar._raw(t)


def parse_scalar(text: str, symbols: Mapping[str, Scalar] | None = None) -> Scalar:
    """Parse an arithmetic expression (``+ - * / **``, integers, names).

    Names not found in ``symbols`` become fresh symbols.  ``^`` is accepted
    as a power operator.
    """
    symbols = symbols or {}
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node) -> Scalar:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Scalar.const(node.value)
        if isinstance(node, ast.Name):
            return symbols.get(node.id, Scalar.symbol(node.id))
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.is_const():
                    return a * (1 / b.const_value())
                return a / b
            if isinstance(node.op, ast.Pow):
                return a ** int(b.const_value())
        raise ValueError(f"unsupported expression: {ast.dump(node)}")

    return ev(tree)
