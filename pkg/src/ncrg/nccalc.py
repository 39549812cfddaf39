"""Noncommutative derivatives, Hessians and Laplacians of trace functionals."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .ncalg import (
    NCPoly,
    Signature,
    TensorPoly,
    Word,
    canonical_cyclic,
    star,
    trace,
    trace_tensor,
    tsum,
)
from .scalar import ONE, ZERO, Scalar, as_scalar, ssum


def nc_derivative(p: NCPoly, j: int) -> TensorPoly:
    """Free difference quotient: split each monomial at every occurrence of letter ``j``."""
    out: dict = {}
    for w, c in p.terms.items():
        for k, x in enumerate(w):
            if x == j:
                key = (w[:k], w[k + 1:], False)
                out[key] = out.get(key, ZERO) + c
    return TensorPoly(out)


def cyclic_derivative(p: NCPoly, j: int) -> NCPoly:
    """``m̃ ∘ ∂^j`` with ``m̃(U⊗W) = WU``."""
    out: dict = {}
    for w, c in p.terms.items():
        for k, x in enumerate(w):
            if x == j:
                v = w[k + 1:] + w[:k]
                out[v] = out.get(v, ZERO) + c
    return NCPoly(out)


@lru_cache(maxsize=None)
def _cyclic_derivative_word(w: Word, j: int) -> tuple:
    return tuple(w[k + 1:] + w[:k] for k, x in enumerate(w) if x == j)


@lru_cache(maxsize=None)
def double_derivative_trace(w: Word, i: int, j: int) -> TensorPoly:
    """``(∂^i ∘ ∂^j) Tr(w)`` as a sum over directed pairings on the cyclic word.

    For a ``j``-letter at ``u`` and an ``i``-letter at ``v != u`` the term is
    ``(letters strictly between u and v) ⊗ (letters strictly between v and u)``,
    both read forward around the cycle.
    """
    n = len(w)
    out: dict = {}
    if n < 2:
        return TensorPoly()
    ww = w + w
    for u in range(n):
        if w[u] != j:
            continue
        for v in range(n):
            if v == u or w[v] != i:
                continue
            dv = (v - u) % n
            p1 = ww[u + 1:u + dv]
            p2 = ww[u + dv + 1:u + n]
            key = (p1, p2, False)
            out[key] = out.get(key, ZERO) + ONE
    return TensorPoly(out)


# super-matrices


@dataclass(frozen=True)
class SuperMatrix:
    """Square array of :class:`TensorPoly` entries indexed by letters."""

    entries: tuple

    @classmethod
    def zeros(cls, n: int) -> "SuperMatrix":
        return cls(tuple(tuple(TensorPoly() for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[TensorPoly]]) -> "SuperMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> TensorPoly:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        return SuperMatrix.from_rows([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return SuperMatrix.from_rows([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def map(self, fn) -> "SuperMatrix":
        return SuperMatrix.from_rows([[fn(x) for x in r] for r in self.entries])

    def flip(self) -> "SuperMatrix":
        return self.map(TensorPoly.flip)

    def star(self, other: "SuperMatrix", keep=None) -> "SuperMatrix":
        """Matrix product over the letter index with ⋆ on entries."""
        n = self.n
        return SuperMatrix.from_rows([
            [tsum(star(self.entries[i][k], other.entries[k][j], keep) for k in range(n)) for j in range(n)]
            for i in range(n)
        ])

    def diagonal(self) -> list:
        return [self.entries[i][i] for i in range(self.n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        return "\n".join(f"[{i},{j}] {x}" for i, r in enumerate(self.entries) for j, x in enumerate(r))


def supertrace_twisted(m: SuperMatrix) -> Scalar:
    """``Σ_i Tr((1⊗τ1) × m_ii)``: flip the twist, then trace."""
    return ssum(trace_tensor(x.flip()) for x in m.diagonal())


# action functionals


@dataclass(frozen=True)
class ActionTerm:
    """``coupling · Tr(left) · Tr(right)``; single-trace terms have ``left = ()``."""

    coupling: Scalar
    left: Word
    right: Word

    @classmethod
    def make(cls, coupling, left: Word, right: Word) -> "ActionTerm":
        # unordered pair; the empty word sorts first
        l, r = sorted((canonical_cyclic(tuple(left)), canonical_cyclic(tuple(right))))
        return cls(as_scalar(coupling), l, r)


@dataclass(frozen=True)
class ActionFunctional:
    terms: tuple = field(default_factory=tuple)

    @classmethod
    def of(cls, terms: Iterable) -> "ActionFunctional":
        out = []
        for t in terms:
            if isinstance(t, ActionTerm):
                out.append(t)
            else:
                c, l, r = t
                out.append(ActionTerm.make(c, l, r))
        return cls(tuple(out))

    @classmethod
    def single(cls, coupling, w: Word) -> "ActionFunctional":
        return cls.of([(coupling, (), w)])

    def __add__(self, other: "ActionFunctional") -> "ActionFunctional":
        return ActionFunctional(self.terms + other.terms)

    def value(self) -> Scalar:
        return ssum(t.coupling * trace(t.left) * trace(t.right) for t in self.terms)


@lru_cache(maxsize=None)
def _term_hessian(left: Word, right: Word, i: int, j: int) -> TensorPoly:
    """Entry ``(i, j)`` of the plain Hessian of ``Tr(left)·Tr(right)``."""
    if not left:
        return double_derivative_trace(right, i, j).scale(trace(()))
    parts = [
        double_derivative_trace(left, i, j).scale(trace(right)),
        double_derivative_trace(right, i, j).scale(trace(left)),
    ]
    for p, q in ((left, right), (right, left)):
        for a in _cyclic_derivative_word(p, i):
            for b in _cyclic_derivative_word(q, j):
                parts.append(TensorPoly.mono(a, b, True))
    return tsum(parts)


def hessian(action: ActionFunctional, sigma: Signature, twisted: bool = False) -> SuperMatrix:
    """σ-Hessian ``e_i^{δ_ij} ∂^i∂^j Γ``; ``twisted`` applies ``(1⊗τ1)×``."""
    n = sigma.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            x = tsum(_term_hessian(t.left, t.right, i, j).scale(t.coupling) for t in action.terms)
            if i == j and sigma.e[i] == -1:
                x = -x
            row.append(x.flip() if twisted else x)
        rows.append(row)
    return SuperMatrix.from_rows(rows)


def laplacian(action: ActionFunctional, sigma: Signature, twisted: bool = False) -> TensorPoly:
    """``∇²_σ = Σ_i e_i ∂^i∂^i`` (the diagonal sum of the σ-Hessian)."""
    return tsum(hessian(action, sigma, twisted).diagonal())


def delta(p: NCPoly, q: NCPoly, n: int) -> SuperMatrix:
    """``Δ_ij = D^i P ⊗τ D^j Q + D^i Q ⊗τ D^j P``."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            parts = []
            for a, b in ((p, q), (q, p)):
                da, db = cyclic_derivative(a, i), cyclic_derivative(b, j)
                for u, cu in da.terms.items():
                    for w, cw in db.terms.items():
                        parts.append(TensorPoly.mono(u, w, True, cu * cw))
            row.append(tsum(parts))
        rows.append(row)
    return SuperMatrix.from_rows(rows)
