"""Operator bases: the Hermitian 1-matrix model and the fuzzy 2-geometry model.

Each operator is ``prefactor · g · Tr(left) · Tr(right)`` with ``Tr(1) = N``;
single-trace operators use ``left = 1`` and carry a ``1/N`` in the prefactor.
Renormalized couplings are ``ḡ = Z^a N^(-b) g``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .ncalg import Signature, Word, canonical_cyclic, letter_degrees, word, word_str
from .scalar import Scalar, parse_scalar

WAVEFUNCTION = "wavefunction"
COUPLING = "coupling"


def operator_key(left: Word, right: Word) -> tuple:
    """Canonical key: sorted tuple of the non-empty canonical trace words."""
    return tuple(sorted(canonical_cyclic(w) for w in (left, right) if w))


def operator_label(key: tuple, letters: str = "AB") -> str:
    def s(w):
        return "".join(letters[i] for i in w)

    if len(key) == 1:
        return f"1⊗{s(key[0])}"
    return "⊗".join(s(w) for w in key)


@dataclass(frozen=True)
class OperatorSpec:
    name: str
    left: Word
    right: Word
    prefactor: Scalar
    scale_a: int
    scale_b: int
    kind: str = COUPLING
    letter: int | None = None  # for wavefunction terms

    @property
    def key(self) -> tuple:
        return operator_key(self.left, self.right)

    @property
    def degree(self) -> int:
        return len(self.left) + len(self.right)

    def operator_coefficient(self) -> Scalar:
        """Prefactor times ``Tr(1) = N`` for single-trace operators."""
        n = Scalar.symbol("N") if not self.left or not self.right else Scalar.const(1)
        return self.prefactor * n


@dataclass(frozen=True)
class TruncationSpec:
    name: str
    signature: Signature
    operators: tuple
    degree_cap: int = 6
    trace_cap: int = 2
    fp_order: int = 2
    letters: str = "AB"

    def __post_init__(self):
        keys = [op.key for op in self.operators]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate operators in truncation")
        names = [op.name for op in self.operators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate coupling names in truncation")
        for op in self.operators:
            for w in (op.left, op.right):
                if any(i >= self.signature.n for i in w):
                    raise ValueError(f"operator {op.name} uses a letter outside the signature")

    @property
    def couplings(self) -> list:
        return [op for op in self.operators if op.kind == COUPLING]

    @property
    def wavefunctions(self) -> list:
        return [op for op in self.operators if op.kind == WAVEFUNCTION]

    def by_key(self) -> dict:
        return {op.key: op for op in self.operators}

    def by_name(self) -> dict:
        return {op.name: op for op in self.operators}

    def with_fp_order(self, k: int) -> "TruncationSpec":
        return TruncationSpec(self.name, self.signature, self.operators, self.degree_cap,
                              self.trace_cap, k, self.letters)

    # serialization

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "letters": self.letters,
            "signature": list(self.signature.e),
            "degree_cap": self.degree_cap,
            "trace_cap": self.trace_cap,
            "fp_order": self.fp_order,
            "operators": [
                {
                    "name": op.name,
                    "word_left": _display(op.left, self.letters),
                    "word_right": _display(op.right, self.letters),
                    "prefactor": str(op.prefactor),
                    "scale_a": op.scale_a,
                    "scale_b": op.scale_b,
                    "kind": op.kind,
                    **({"letter": op.letter} if op.letter is not None else {}),
                }
                for op in self.operators
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncationSpec":
        letters = data.get("letters", "AB")
        sig = Signature(tuple(int(s) for s in data["signature"]))
        if len(letters) != sig.n:
            raise ValueError("letters and signature disagree in length")
        signs = {f"e{letters[i].lower()}": Scalar.const(s) for i, s in enumerate(sig.e)}
        signs.update({"ea": Scalar.const(sig.e[0]), "eb": Scalar.const(sig.e[-1])})
        ops = []
        for i, o in enumerate(data["operators"]):
            kind = o.get("kind", COUPLING)
            ops.append(OperatorSpec(
                name=o.get("name", f"g{i}"),
                left=_parse(o.get("word_left", "1"), letters),
                right=_parse(o["word_right"], letters),
                prefactor=parse_scalar(str(o.get("prefactor", "1")), signs),
                scale_a=int(o.get("scale_a", 0)),
                scale_b=int(o.get("scale_b", 0)),
                kind=kind,
                letter=o.get("letter"),
            ))
        return cls(data.get("name", "custom"), sig, tuple(ops), int(data.get("degree_cap", 6)),
                   int(data.get("trace_cap", 2)), int(data.get("fp_order", 2)), letters)

    @classmethod
    def load(cls, path: str | Path) -> "TruncationSpec":
        return cls.from_json(json.loads(Path(path).read_text()))


def _parse(text: str, letters: str) -> Word:
    text = text.replace("·", "").replace(" ", "")
    if text in ("", "1"):
        return ()
    return tuple(letters.index(ch) for ch in text)


def _display(w: Word, letters: str) -> str:
    return "".join(letters[i] for i in w) if w else "1"


# builtin truncations


def hermitian1(fp_order: int = 3) -> TruncationSpec:
    """Quartic-plus-sextic bi-tracial Hermitian 1-matrix model."""
    sig = Signature((1,))
    p = parse_scalar
    ops = (
        OperatorSpec("Z", (), (0, 0), p("1/(2*N)"), 1, 0, WAVEFUNCTION, 0),
        OperatorSpec("g4", (), (0,) * 4, p("1/(4*N)"), 2, 1),
        OperatorSpec("g6", (), (0,) * 6, p("1/(6*N)"), 3, 2),
        OperatorSpec("g2_2", (0, 0), (0, 0), p("1/8"), 2, 2),
        OperatorSpec("g2_4", (0, 0), (0,) * 4, p("1/8"), 3, 3),
    )
    return TruncationSpec("hermitian1-deg6", sig, ops, 6, 2, fp_order, "X")


# name, left, right, prefactor (ea, eb, N allowed), scale_b; scale_a = degree/2
_FUZZY2D = [
    ("Z_a", "1", "AA", "ea/(2*N)", None),
    ("Z_b", "1", "BB", "eb/(2*N)", None),
    ("d1_1", "A", "A", "1/2", 1),
    ("d01_01", "B", "B", "1/2", 1),
    ("a4", "1", "AAAA", "1/(4*N)", 1),
    ("b4", "1", "BBBB", "1/(4*N)", 1),
    ("c22", "1", "AABB", "ea*eb/N", 1),
    ("c1111", "1", "ABAB", "-ea*eb/(2*N)", 1),
    ("d11_11", "AB", "AB", "1", 2),
    ("d2_02", "AA", "BB", "2*ea*eb", 2),
    ("d1_3", "A", "AAA", "ea", 2),
    ("d1_12", "A", "ABB", "eb", 2),
    ("d01_21", "B", "AAB", "ea", 2),
    ("d01_03", "B", "BBB", "eb", 2),
    ("d2_2", "AA", "AA", "3", 2),
    ("d02_02", "BB", "BB", "3", 2),
    ("a6", "1", "AAAAAA", "1/N", 2),
    ("c42", "1", "AAAABB", "1/N", 2),
    ("c3111", "1", "AAABAB", "1/N", 2),
    ("c2121", "1", "AABAAB", "1/N", 2),
    ("b6", "1", "BBBBBB", "1/N", 2),
    ("c24", "1", "AABBBB", "1/N", 2),
    ("c1311", "1", "ABBBAB", "1/N", 2),
    ("c1212", "1", "ABBABB", "1/N", 2),
    ("d1_5", "A", "AAAAA", "1", 3),
    ("d1_14", "A", "ABBBB", "1", 3),
    ("d1_32", "A", "AAABB", "1", 3),
    ("d1_2111", "A", "AABAB", "1", 3),
    ("d01_41", "B", "AAAAB", "1", 3),
    ("d01_23", "B", "AABBB", "1", 3),
    ("d01_1211", "B", "ABBAB", "1", 3),
    ("d01_05", "B", "BBBBB", "1", 3),
    ("d11_31", "AB", "AAAB", "1", 3),
    ("d11_13", "AB", "ABBB", "1", 3),
    ("d2_22", "AA", "AABB", "1", 3),
    ("d2_1111", "AA", "ABAB", "1", 3),
    ("d2_4", "AA", "AAAA", "1", 3),
    ("d2_04", "AA", "BBBB", "1", 3),
    ("d02_22", "BB", "AABB", "1", 3),
    ("d02_1111", "BB", "ABAB", "1", 3),
    ("d02_04", "BB", "BBBB", "1", 3),
    ("d02_4", "BB", "AAAA", "1", 3),
    ("d3_3", "AAA", "AAA", "1", 3),
    ("d12_3", "ABB", "AAA", "1", 3),
    ("d21_21", "AAB", "AAB", "1", 3),
    ("d03_03", "BBB", "BBB", "1", 3),
    ("d21_03", "AAB", "BBB", "1", 3),
    ("d12_12", "ABB", "ABB", "1", 3),
]

# ncg coefficient values of the sextic operators (the action drops them)
SEXTIC_NCG_COEFFICIENTS = {
    "a6": "ea", "c42": "6*eb", "c3111": "-6*eb", "c2121": "3*eb", "b6": "eb", "c24": "6*ea",
    "c1311": "-6*ea", "c1212": "3*ea", "d1_5": "2", "d1_14": "2", "d1_32": "6*ea*eb",
    "d1_2111": "-2*ea*eb", "d01_41": "2", "d01_23": "6*ea*eb", "d01_1211": "-2*ea*eb", "d01_05": "2",
    "d11_31": "8*ea", "d11_13": "8*eb", "d2_22": "8*eb", "d2_1111": "-2*eb", "d2_4": "5*ea",
    "d2_04": "ea", "d02_22": "8*ea", "d02_1111": "-2*ea", "d02_04": "5*eb", "d02_4": "eb",
    "d3_3": "10/3", "d12_3": "4*ea*eb", "d21_21": "6", "d03_03": "10/3", "d21_03": "4*ea*eb",
    "d12_12": "6",
}


def fuzzy2d(p: int, q: int, fp_order: int = 2) -> TruncationSpec:
    """Degree-6 bi-tracial truncation for the fuzzy ``(p, q)`` 2-geometry.

    Operators containing ``Tr X`` of an anti-Hermitian (traceless) letter are left out.
    """
    sig = Signature.from_pq(p, q)
    env = {"ea": Scalar.const(sig.e[0]), "eb": Scalar.const(sig.e[1])}
    ops = []
    for name, l, r, pref, b in _FUZZY2D:
        left, right = word(l), word(r)
        if any(len(w) == 1 and sig.e[w[0]] == -1 for w in (left, right)):
            continue
        pre = parse_scalar(pref, env)
        if b is None:
            ops.append(OperatorSpec(name, left, right, pre, 1, 0, WAVEFUNCTION, right[0]))
        else:
            ops.append(OperatorSpec(name, left, right, pre, (len(left) + len(right)) // 2, b))
    return TruncationSpec("fuzzy2d-deg6", sig, tuple(ops), 6, 2, fp_order, "AB")


def builtin(name: str, signature: tuple | None = None, fp_order: int | None = None) -> TruncationSpec:
    if name in ("hermitian1", "hermitian1-deg6"):
        return hermitian1(fp_order or 3)
    if name in ("fuzzy2d", "fuzzy2d-deg6"):
        p, q = signature or (2, 0)
        return fuzzy2d(p, q, fp_order or 2)
    raise KeyError(f"unknown builtin truncation {name!r}")


def is_even_operator(key: tuple, n: int) -> bool:
    tot = [0] * n
    for w in key:
        for i, d in enumerate(letter_degrees(w, n)):
            tot[i] += d
    return all(d % 2 == 0 for d in tot)


__all__ = [
    "OperatorSpec", "TruncationSpec", "hermitian1", "fuzzy2d", "builtin", "operator_key",
    "operator_label", "word_str", "WAVEFUNCTION", "COUPLING",
]
