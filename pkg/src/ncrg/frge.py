"""FP⁻¹ expansion of the flow equation and extraction of β-functions.

The flow generator is ``½ Σ_k (−1)^k (h_k / Z^k) STr^τ(F^{⋆k})`` where ``F`` is
the field-dependent part of the twisted σ-Hessian.  Projection onto the basis
and the large-N limit then give the β-functions of the renormalized couplings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .ncalg import N_SYMBOL, Signature, TensorPoly, canonical_cyclic, is_trace_symbol, trace, trace_symbol_word
from .nccalc import ActionFunctional, SuperMatrix, hessian, laplacian, supertrace_twisted
from .scalar import ZERO, Scalar, ssum
from .truncations import WAVEFUNCTION, TruncationSpec, is_even_operator

Z_SYMBOL = "Z"
ETA_SYMBOL = "eta"
RHO_SYMBOL = "rho"


def h_symbol(k: int) -> str:
    return f"h{k}"


class ScalingError(ValueError):
    """A positive power of ``N`` or a leftover ``Z`` survived the large-N limit."""


# action and F


def action(trunc: TruncationSpec, wavefunction: bool = True) -> ActionFunctional:
    """``Γ_N`` with barred couplings as symbols and ``Z`` on the quadratic terms."""
    terms = []
    for op in trunc.operators:
        if op.kind == WAVEFUNCTION:
            if wavefunction:
                terms.append((op.prefactor * Scalar.symbol(Z_SYMBOL), op.left, op.right))
        else:
            terms.append((op.prefactor * Scalar.symbol(op.name), op.left, op.right))
    return ActionFunctional.of(terms)


def _has_trace(m) -> bool:
    return any(is_trace_symbol(s) for s, _ in m)


def constant_part(x: TensorPoly) -> TensorPoly:
    """Terms of ``x`` that survive at vanishing letters."""
    out = {}
    for (u, w, t), c in x.terms.items():
        if u or w:
            continue
        c0 = c.filter(lambda m: not _has_trace(m))
        if c0:
            out[(u, w, t)] = c0
    return TensorPoly._raw(out)


def build_F(trunc: TruncationSpec) -> SuperMatrix:
    """Twisted σ-Hessian of ``Γ_N`` minus its value at vanishing letters."""
    h = hessian(action(trunc), trunc.signature, twisted=True)
    return h - h.map(constant_part)


def propagator_constant(trunc: TruncationSpec) -> SuperMatrix:
    """The subtracted constant part (``Z·𝟙`` plus constant Hessians of ``Tr X·Tr X``)."""
    return hessian(action(trunc), trunc.signature, twisted=True).map(constant_part)


# pruning and powers


_TRACE_LEN: dict = {}


def _trace_profile(m) -> tuple:
    """(total letter degree, number of traces, vanishes) of a coefficient monomial."""
    deg = cnt = 0
    for s, e in m:
        if is_trace_symbol(s):
            w = _TRACE_LEN.get(s)
            if w is None:
                w = _TRACE_LEN[s] = trace_symbol_word(s)
            deg += len(w) * e
            cnt += e
    return deg, cnt


def _vanishing_traces(sig: Signature) -> set:
    return {f"Tr({'ABCDEFGH'[i]})" for i, e in enumerate(sig.e) if e == -1}


def make_pruner(trunc: TruncationSpec):
    cap, tcap = trunc.degree_cap, trunc.trace_cap
    zero = _vanishing_traces(trunc.signature)

    def keep(k, m) -> bool:
        deg, cnt = _trace_profile(m)
        if cnt > tcap or deg + len(k[0]) + len(k[1]) > cap:
            return False
        return not any(s in zero for s, _ in m)

    return keep


def star_powers(F: SuperMatrix, k_max: int, keep=None) -> dict:
    """``{k: F^{⋆k}}`` for ``k < k_max`` and the diagonal-only last power."""
    out = {1: F}
    cur = F
    for k in range(2, k_max + 1):
        cur = cur.star(F, keep) if k < k_max else _star_diagonal(cur, F, keep)
        out[k] = cur
    return out


def _star_diagonal(a: SuperMatrix, b: SuperMatrix, keep) -> SuperMatrix:
    from .ncalg import star, tsum

    n = a.n
    rows = [[TensorPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = tsum(star(a[i, k], b[k, i], keep) for k in range(n))
    return SuperMatrix.from_rows(rows)


def fp_weight(k: int) -> Scalar:
    """``½ (−1)^k h_k / Z^k`` (that is ``h̃_k/N²`` with ``h̃_k = N² h_k / Z^k``)."""
    return Scalar.symbol(h_symbol(k)) * Scalar.symbol(Z_SYMBOL, -k) * Fraction((-1) ** k, 2)


def fp_expand(F: SuperMatrix, k_max: int, trunc: TruncationSpec | None = None) -> list:
    """``[(k, weight_k, F^{⋆k})]``; only diagonals of the last power are formed."""
    if k_max not in (1, 2, 3):
        raise ValueError("k_max must be 1, 2 or 3")
    keep = make_pruner(trunc) if trunc is not None else None
    pw = star_powers(F, k_max, keep)
    return [(k, fp_weight(k), pw[k]) for k in range(1, k_max + 1)]


# projection


@dataclass
class Projection:
    coefficients: dict  # operator key -> Scalar
    dropped: dict  # out-of-basis key -> Scalar


def split_operator(m) -> tuple:
    """Separate trace symbols from a monomial: ``(sorted trace words, rest)``."""
    words, rest = [], []
    for s, e in m:
        if is_trace_symbol(s):
            words.extend([canonical_cyclic(trace_symbol_word(s))] * e)
        else:
            rest.append((s, e))
    return tuple(sorted(words)), tuple(rest)


def supertrace_project(expr: Scalar, trunc: TruncationSpec) -> Projection:
    """Group ``expr`` by operator; drop constants, odd, over-degree and ≥3-trace terms."""
    n = trunc.signature.n
    zero = _vanishing_traces(trunc.signature)
    basis = {op.key for op in trunc.operators}
    coeffs: dict = {}
    dropped: dict = {}
    for m, c in expr.terms.items():
        if any(s in zero for s, _ in m):
            continue
        key, rest = split_operator(m)
        if not key or len(key) > trunc.trace_cap:
            continue
        if sum(len(w) for w in key) > trunc.degree_cap or not is_even_operator(key, n):
            continue
        target = coeffs if key in basis else dropped
        target[key] = target.get(key, ZERO) + Scalar._raw({rest: c})
    coeffs = {k: v for k, v in coeffs.items() if v}
    dropped = {k: v for k, v in dropped.items() if v}
    return Projection(coeffs, dropped)


def first_order_supertrace(trunc: TruncationSpec) -> Scalar:
    """``STr^τ F``: the untwisted σ-Laplacian of ``Γ_N`` traced, constants included."""
    return supertrace_twisted(build_F(trunc))


def untwisted_first_order_supertrace(trunc: TruncationSpec) -> Scalar:
    """``Σ_i`` of ``U ⊗(τ) W ↦ Tr U · Tr W`` over the diagonal of ``F``, ignoring twists."""
    F = build_F(trunc)
    return ssum(c * trace(u) * trace(w)
                for i in range(F.n) for (u, w, _), c in F[i, i].terms.items())


def flow(trunc: TruncationSpec, k_max: int | None = None) -> Scalar:
    """Right-hand side of the truncated flow before projection."""
    k_max = k_max or trunc.fp_order
    F = build_F(trunc)
    return ssum(w * supertrace_twisted(p) for _, w, p in fp_expand(F, k_max, trunc))


def tadpole_flow(action_: ActionFunctional, sigma: Signature) -> Scalar:
    """``−½ ϱ Tr⊗Tr(∇²Γ)`` with ``ϱ`` a formal symbol."""
    from .ncalg import trace_tensor

    lap = laplacian(action_, sigma)
    return trace_tensor(lap) * Scalar.symbol(RHO_SYMBOL) * Fraction(-1, 2)


# β-functions


@dataclass
class BetaSystem:
    """η-equations ``η_i = E_i`` and ``β_I`` polynomials in couplings, ``eta`` and ``h_k``."""

    name: str
    signature: Signature
    couplings: list
    eta: dict  # "eta_a" -> Scalar
    betas: dict  # coupling -> Scalar
    scales: dict = field(default_factory=dict)  # coupling -> (a, b)
    dual_of: dict = field(default_factory=dict)  # removed coupling -> representative

    def __eq__(self, other):
        return (isinstance(other, BetaSystem) and self.couplings == other.couplings
                and self.eta == other.eta and self.betas == other.betas)

    def equations(self) -> dict:
        return {**self.eta, **self.betas}

    def substitute(self, values: dict) -> "BetaSystem":
        return BetaSystem(self.name, self.signature, list(self.couplings),
                          {k: v.subs(values) for k, v in self.eta.items()},
                          {k: v.subs(values) for k, v in self.betas.items()},
                          dict(self.scales), dict(self.dual_of))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "signature": list(self.signature.e),
            "couplings": list(self.couplings),
            "eta": {k: str(v) for k, v in self.eta.items()},
            "beta": {k: str(v) for k, v in self.betas.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _scaling_map(trunc: TruncationSpec) -> dict:
    z, n = Scalar.symbol(Z_SYMBOL), Scalar.symbol(N_SYMBOL)
    return {op.name: Scalar.symbol(op.name) * z ** op.scale_a * n ** (-op.scale_b)
            for op in trunc.couplings}


def large_n(expr: Scalar, label: str) -> Scalar:
    """Drop negative powers of ``N``; positive powers or any ``Z`` raise."""
    out = {}
    for m, c in expr.terms.items():
        d = dict(m)
        if d.get(Z_SYMBOL, 0):
            raise ScalingError(f"{label}: Z does not cancel ({Scalar._raw({m: c})})")
        e = d.get(N_SYMBOL, 0)
        if e > 0:
            raise ScalingError(f"{label}: divergent large-N limit ({Scalar._raw({m: c})})")
        if e == 0:
            out[m] = c
    return Scalar._raw(out)


def eta_name(op_name: str) -> str:
    return ETA_SYMBOL + op_name[1:]


def extract_betas(trunc: TruncationSpec, projection: Projection | None = None,
                  k_max: int | None = None) -> BetaSystem:
    if projection is None:
        projection = supertrace_project(flow(trunc, k_max), trunc)
    scal = _scaling_map(trunc)
    z, n, eta = Scalar.symbol(Z_SYMBOL), Scalar.symbol(N_SYMBOL), Scalar.symbol(ETA_SYMBOL)
    etas, betas, scales = {}, {}, {}
    for op in trunc.operators:
        fl = projection.coefficients.get(op.key, ZERO).subs(scal)
        p = op.operator_coefficient()
        if op.kind == WAVEFUNCTION:
            # ∂_t(pZ) = −η pZ
            etas[eta_name(op.name)] = large_n(-fl / (p * z), op.name)
        else:
            g = Scalar.symbol(op.name)
            lim = large_n(fl * z ** (-op.scale_a) * n ** op.scale_b / p, op.name)
            betas[op.name] = (eta * op.scale_a + op.scale_b) * g + lim
            scales[op.name] = (op.scale_a, op.scale_b)
    return BetaSystem(trunc.name, trunc.signature, [op.name for op in trunc.couplings],
                      etas, betas, scales)


# duality

# exchange A <-> B of the (2,0)/(0,2) geometries; representative first
DUAL_PAIRS = [
    ("eta_a", "eta_b"), ("d1_1", "d01_01"), ("d1_3", "d01_03"), ("d1_12", "d01_21"),
    ("d2_2", "d02_02"), ("a6", "b6"), ("c3111", "c1311"), ("c2121", "c1212"), ("d1_5", "d01_05"),
    ("d1_14", "d01_41"), ("d1_2111", "d01_1211"), ("d11_31", "d11_13"), ("d2_1111", "d02_1111"),
    ("d2_4", "d02_04"), ("d3_3", "d03_03"), ("d12_3", "d21_03"), ("d21_21", "d12_12"),
    ("d1_32", "d01_23"), ("a4", "b4"), ("c42", "c24"), ("d2_04", "d02_4"), ("d2_22", "d02_22"),
]
SELF_DUAL = ("c22", "c1111", "d11_11", "d2_02")


def dual_map(names) -> dict:
    names = set(names)
    out = {s: s for s in SELF_DUAL if s in names}
    for a, b in DUAL_PAIRS:
        if a in names and b in names:
            out[a], out[b] = b, a
        elif a in names or b in names:
            raise ValueError(f"dual pair {a}/{b} only half present")
    return out


def dualize(system: BetaSystem) -> BetaSystem:
    """Relabel every coupling by its dual (the exchange ``A ↔ B``)."""
    d = dual_map(system.couplings)
    sym = {k: Scalar.symbol(v) for k, v in d.items()}
    edual = {"eta_a": "eta_b", "eta_b": "eta_a"}
    return BetaSystem(system.name, system.signature, list(system.couplings),
                      {edual[k]: v.subs(sym) for k, v in system.eta.items()},
                      {d[k]: v.subs(sym) for k, v in system.betas.items()},
                      {d[k]: v for k, v in system.scales.items()})


def apply_duality(system: BetaSystem, sig: Signature | None = None) -> BetaSystem:
    """Identify dual couplings and keep one equation per pair.

    Raises ``AssertionError`` if a dual partner's equation differs from its
    representative's after identification.
    """
    sig = sig or system.signature
    if sig.n != 2 or sig.e[0] != sig.e[1]:
        raise ValueError(f"duality needs signature (2,0) or (0,2), got {sig}")
    dual_map(system.couplings)  # both members of each pair present or absent
    rep = {b: a for a, b in DUAL_PAIRS}
    ident = {k: Scalar.symbol(rep[k]) for k in system.couplings if k in rep}
    keep = [k for k in system.couplings if k not in rep]
    for k in system.couplings:
        if k in rep and system.betas[k].subs(ident) != system.betas[rep[k]].subs(ident):
            raise AssertionError(f"equation {k} differs from its dual partner {rep[k]}")
    ea, eb = system.eta["eta_a"].subs(ident), system.eta["eta_b"].subs(ident)
    if ea != eb:
        raise AssertionError("eta_a and eta_b differ after identification")
    return BetaSystem(system.name + "+duality", sig, keep, {ETA_SYMBOL: ea},
                      {k: system.betas[k].subs(ident) for k in keep},
                      {k: system.scales[k] for k in keep},
                      {k: rep[k] for k in system.couplings if k in rep})


def beta_system(trunc: TruncationSpec, duality: bool = False) -> BetaSystem:
    system = extract_betas(trunc)
    if duality:
        system = apply_duality(system)
    return system
