"""Chord-diagram expansion of ``Tr D^m`` for 2-dimensional fuzzy geometries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .ncalg import N_SYMBOL, Signature, canonical_cyclic, letter_degrees
from .scalar import Scalar
from .truncations import operator_key, operator_label

MAX_M = 6


@dataclass(frozen=True)
class ChordDiagram:
    """Perfect matching on the points ``0..m-1`` (chords stored as sorted pairs)."""

    m: int
    chords: tuple

    def __post_init__(self):
        pts = sorted(p for c in self.chords for p in c)
        if pts != list(range(self.m)) or any(a >= b for a, b in self.chords):
            raise ValueError(f"not a perfect matching on {self.m} points: {self.chords}")

    def partner(self) -> tuple:
        p = [0] * self.m
        for a, b in self.chords:
            p[a], p[b] = b, a
        return tuple(p)

    def crossings(self) -> int:
        n = 0
        for i, (a, b) in enumerate(self.chords):
            for c, d in self.chords[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    n += 1
        return n


def _matchings(points: tuple):
    if not points:
        yield ()
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1:]
        for m in _matchings(rest):
            yield ((a, b),) + m


@lru_cache(maxsize=None)
def enumerate_chord_diagrams(m: int) -> tuple:
    """All ``(m-1)!!`` chord diagrams on ``m`` points."""
    if m < 2 or m % 2:
        raise ValueError(f"m must be even and at least 2, got {m}")
    return tuple(ChordDiagram(m, tuple(sorted(c))) for c in _matchings(tuple(range(m))))


def chi_tensor(chi: ChordDiagram, mu: tuple, sig: Signature) -> int:
    """``(−1)^{#crossings} Π_chords e_μ δ``; indices in ``mu`` are 0-based letters."""
    if len(mu) != chi.m:
        raise ValueError("index assignment has the wrong length")
    s = -1 if chi.crossings() % 2 else 1
    for a, b in chi.chords:
        if mu[a] != mu[b]:
            return 0
        s *= sig.e[mu[a]]
    return s


def _assignments(chi: ChordDiagram, n: int):
    """Index assignments constant along chords."""
    for letters in product(range(n), repeat=len(chi.chords)):
        mu = [0] * chi.m
        for (a, b), x in zip(chi.chords, letters):
            mu[a] = mu[b] = x
        yield tuple(mu)


def diagram_value(chi: ChordDiagram, sig: Signature) -> dict:
    """``𝔞(χ)`` as ``{(left, right): Fraction}`` keyed by ordered canonical word pairs.

    ``left`` is the forward product over the complement of ``Υ`` and ``right``
    the reversed product over ``Υ``; ``Tr(1) = N`` is kept as an empty word.
    """
    m = chi.m
    out: dict = {}
    for mu in _assignments(chi, sig.n):
        c = chi_tensor(chi, mu, sig)
        if not c:
            continue
        for mask in range(1 << m):
            ups = [r for r in range(m) if mask >> r & 1]
            comp = [r for r in range(m) if not mask >> r & 1]
            sgn = c
            for r in ups:
                sgn *= sig.e[mu[r]]
            left = canonical_cyclic(tuple(mu[r] for r in comp))
            right = canonical_cyclic(tuple(mu[r] for r in reversed(ups)))
            k = (left, right)
            out[k] = out.get(k, 0) + sgn
    return {k: Fraction(v) for k, v in out.items() if v}


@dataclass
class SpectralActionExpansion:
    """Operator key -> exact coefficient; single traces carry their ``N``."""

    terms: dict

    def coefficient(self, left, right=()) -> Scalar:
        return self.terms.get(operator_key(tuple(left), tuple(right)), Scalar())

    def rows(self, letters: str = "AB") -> list:
        return [(operator_label(k, letters), str(v)) for k, v in sorted(self.terms.items(),
                                                                       key=lambda kv: (sum(map(len, kv[0])), kv[0]))]


def _accumulate(values: dict, weight: Fraction) -> dict:
    n = Scalar.symbol(N_SYMBOL)
    out: dict = {}
    for (l, r), c in values.items():
        key = operator_key(l, r)
        if not key:
            continue  # Tr(1)²: a constant
        s = Scalar.const(c * weight)
        if not l or not r:
            s = s * n
        out[key] = out.get(key, Scalar()) + s
    return {k: v for k, v in out.items() if v}


def raw_expansion(m: int, sig: Signature) -> SpectralActionExpansion:
    """``½ Tr D^m = Σ_χ 𝔞(χ)`` grouped by unordered operator."""
    if m > MAX_M:
        raise ValueError(f"m > {MAX_M} unsupported")
    total: dict = {}
    for chi in enumerate_chord_diagrams(m):
        for k, v in diagram_value(chi, sig).items():
            total[k] = total.get(k, 0) + v
    return SpectralActionExpansion(_accumulate(total, Fraction(1)))


def expansion(m: int, sig: Signature) -> SpectralActionExpansion:
    """``Tr f(D)`` for ``f(z) = ¼ z^m / m``, i.e. ``Σ_χ 𝔞(χ) / (2m)``."""
    raw = raw_expansion(m, sig)
    w = Fraction(1, 2 * m)
    return SpectralActionExpansion({k: v * w for k, v in raw.terms.items()})


def spectral_action(sig: Signature, degrees=(2, 4, 6)) -> SpectralActionExpansion:
    """``Tr f(D)`` with ``f(z) = ¼ Σ z^m / m`` over ``degrees``."""
    out: dict = {}
    for m in degrees:
        for k, v in expansion(m, sig).terms.items():
            out[k] = out.get(k, Scalar()) + v
    return SpectralActionExpansion({k: v for k, v in out.items() if v})


def certify_nonvanishing(left, right=(), sig: Signature | None = None) -> Scalar:
    """Coefficient of ``Tr(left)·Tr(right)`` in ``½ Tr D^m`` at ``m = total degree``.

    Raises ``ValueError`` for odd per-letter degrees and ``ArithmeticError`` if
    the coefficient vanishes.
    """
    sig = sig or Signature((1, 1))
    left, right = tuple(left), tuple(right)
    key = operator_key(left, right)
    degs = [a + b for a, b in zip(letter_degrees(left, sig.n), letter_degrees(right, sig.n))]
    if any(d % 2 for d in degs):
        raise ValueError(f"odd letter degree in {operator_label(key)}")
    m = len(left) + len(right)
    if m < 2 or m > MAX_M:
        raise ValueError(f"degree {m} outside 2..{MAX_M}")
    c = raw_expansion(m, sig).terms.get(key, Scalar())
    if not c:
        raise ArithmeticError(f"{operator_label(key)} has vanishing coefficient in signature {sig}")
    return c
