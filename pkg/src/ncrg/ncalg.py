"""Words, free-algebra polynomials and the tensor-square algebra.

Words are tuples of letter indices ``0..n-1``; the empty tuple is the unit.
A :class:`TensorPoly` is a sparse sum over triples ``(left, right, twisted)``
with :class:`~ncrg.scalar.Scalar` coefficients.  Untwisted ``U⊗W`` has matrix
coordinates ``U_ab W_cd`` and twisted ``U⊗τW`` has ``U_cb W_ad``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .scalar import ONE, ZERO, Scalar, as_scalar

LETTERS = "ABCDEFGH"
N_SYMBOL = "N"
TRACE_PREFIX = "Tr("

Word = tuple


@dataclass(frozen=True)
class Signature:
    """Letter count and Hermiticity signs (``+1`` Hermitian, ``-1`` anti-Hermitian)."""

    e: tuple

    def __post_init__(self):
        if not self.e or len(self.e) > len(LETTERS):
            raise ValueError(f"need 1..{len(LETTERS)} letters, got {len(self.e)}")
        if any(s not in (1, -1) for s in self.e):
            raise ValueError(f"signs must be +1 or -1, got {self.e}")

    @property
    def n(self) -> int:
        return len(self.e)

    @classmethod
    def from_pq(cls, p: int, q: int) -> "Signature":
        """Fuzzy 2-geometry signature: ``p`` Hermitian letters then ``q`` anti-Hermitian."""
        if p < 0 or q < 0 or p + q != 2:
            raise ValueError(f"(p,q)=({p},{q}) is not a 2-geometry signature")
        return cls(tuple([1] * p + [-1] * q))

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.e) + ")"


def word(text: str) -> Word:
    """``"AABB"`` -> ``(0, 0, 1, 1)``; ``"1"`` or ``""`` is the unit; ``X`` aliases ``A``."""
    text = text.replace("·", "").replace(".", "").replace(" ", "")
    if text in ("", "1"):
        return ()
    return tuple(0 if ch == "X" else LETTERS.index(ch) for ch in text)


def word_str(w: Word) -> str:
    return "".join(LETTERS[i] for i in w) if w else "1"


@lru_cache(maxsize=None)
def canonical_cyclic(w: Word) -> Word:
    """Minimal rotation of ``w`` or of its reversal."""
    if len(w) < 2:
        return w
    r = w[::-1]
    return min(min(w[i:] + w[:i], r[i:] + r[:i]) for i in range(len(w)))


def letter_degrees(w: Word, n: int) -> tuple:
    d = [0] * n
    for i in w:
        d[i] += 1
    return tuple(d)


# formal traces


@lru_cache(maxsize=None)
def trace_name(w: Word) -> str:
    return TRACE_PREFIX + word_str(canonical_cyclic(w)) + ")"


@lru_cache(maxsize=None)
def trace(w: Word) -> Scalar:
    """Formal ``Tr(w)``; the empty word gives ``N``."""
    if not w:
        return Scalar.symbol(N_SYMBOL)
    return Scalar.symbol(trace_name(w))


def is_trace_symbol(name: str) -> bool:
    return name.startswith(TRACE_PREFIX)


def trace_symbol_word(name: str) -> Word:
    return word(name[len(TRACE_PREFIX):-1])


class NCPoly:
    """Sparse noncommutative polynomial ``{word: Scalar}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        self.terms = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[tuple(w)] = c

    @classmethod
    def from_words(cls, *words: Word) -> "NCPoly":
        out: dict = {}
        for w in words:
            out[w] = out.get(w, ZERO) + ONE
        return cls(out)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, ZERO) + c
        return NCPoly(t)

    def scale(self, c) -> "NCPoly":
        c = as_scalar(c)
        return NCPoly({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        t: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                t[w] = t.get(w, ZERO) + c1 * c2
        return NCPoly(t)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def trace(self) -> Scalar:
        out = ZERO
        for w, c in self.terms.items():
            out = out + c * trace(w)
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "NCPoly(0)"
        return "NCPoly(" + " + ".join(f"({c})*{word_str(w)}" for w, c in sorted(self.terms.items())) + ")"


# tensor square


TensorMonomial = tuple  # (left: Word, right: Word, twisted: bool)


class TensorPoly:
    """Sparse element of the tensor-square algebra ``{(U, W, twisted): Scalar}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TensorMonomial, object] | None = None):
        self.terms: dict = {}
        for k, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[(tuple(k[0]), tuple(k[1]), bool(k[2]))] = c

    @classmethod
    def _raw(cls, terms: dict) -> "TensorPoly":
        t = object.__new__(cls)
        t.terms = terms
        return t

    @classmethod
    def mono(cls, left: Word, right: Word, twisted: bool = False, coeff=1) -> "TensorPoly":
        return cls({(left, right, twisted): coeff})

    @classmethod
    def parse(cls, text: str) -> "TensorPoly":
        """Single monomial from ``"U⊗W"`` or ``"U⊗τW"``."""
        if "⊗τ" in text:
            u, w = text.split("⊗τ")
            return cls.mono(word(u), word(w), True)
        u, w = text.split("⊗")
        return cls.mono(word(u), word(w), False)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if not other.terms:
            return self
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return TensorPoly._raw(t)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + (-other)

    def scale(self, c) -> "TensorPoly":
        c = as_scalar(c)
        if not c:
            return TensorPoly._raw({})
        out = {}
        for k, v in self.terms.items():
            p = v * c
            if p:
                out[k] = p
        return TensorPoly._raw(out)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def flip(self) -> "TensorPoly":
        """Exchange ``⊗`` and ``⊗τ`` in every monomial."""
        return TensorPoly._raw({(u, w, not t): c for (u, w, t), c in self.terms.items()})

    def map_coefficients(self, fn) -> "TensorPoly":
        out = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return TensorPoly._raw(out)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (u, w, t), c in sorted(self.terms.items()):
            parts.append(f"({c})*{word_str(u)}{'⊗τ' if t else '⊗'}{word_str(w)}")
        return " + ".join(parts)


def tsum(items: Iterable[TensorPoly]) -> TensorPoly:
    t: dict = {}
    for x in items:
        for k, c in x.terms.items():
            v = t.get(k, ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
    return TensorPoly._raw(t)


def _times_mono(a: TensorMonomial, b: TensorMonomial) -> TensorMonomial:
    u, w, ta = a
    p, q, tb = b
    if not ta and not tb:
        return (u + p, w + q, False)
    if not ta and tb:
        return (w + p, u + q, True)
    if ta and not tb:
        return (u + p, w + q, True)
    return (w + p, u + q, False)


def _star_mono(a: TensorMonomial, b: TensorMonomial) -> tuple:
    """Returns ``(monomial, trace_word or None)``."""
    u, w, ta = a
    p, q, tb = b
    if ta and tb:
        return (p + u, w + q, True), None
    if not ta and tb:
        return (u, p + w + q, False), None
    if ta and not tb:
        return (w + p + u, q, False), None
    return (u, q, False), w + p


def times(x: TensorPoly, y: TensorPoly) -> TensorPoly:
    out: dict = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            k = _times_mono(ka, kb)
            v = out.get(k, ZERO) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return TensorPoly._raw(out)


def star(x: TensorPoly, y: TensorPoly, keep=None) -> TensorPoly:
    """The ⋆ product; ``keep(monomial, coeff_monomial)`` may prune terms."""
    out: dict = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            k, tw = _star_mono(ka, kb)
            c = ca * cb
            if tw is not None:
                c = c * trace(tw)
            if keep is not None:
                c = c.filter(lambda m, k=k: keep(k, m))
                if not c:
                    continue
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return TensorPoly._raw(out)


def trace_tensor(x: TensorPoly) -> Scalar:
    """``U⊗W ↦ Tr U·Tr W`` and ``U⊗τW ↦ Tr(UW)``."""
    t: dict = {}
    for (u, w, tw), c in x.terms.items():
        tr = trace(u + w) if tw else trace(u) * trace(w)
        for m, v in (c * tr).terms.items():
            s = t.get(m, 0) + v
            if s:
                t[m] = s
            else:
                t.pop(m, None)
    return Scalar._raw(t)


UNIT_STAR = TensorPoly.mono((), (), True)
UNIT_TIMES = TensorPoly.mono((), (), False)
