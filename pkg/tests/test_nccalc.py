import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracle import Dual, dual_word, eval_tensor, relerr, symmetric_matrices
from tables import parse_entry

from ncrg.ncalg import N_SYMBOL, NCPoly, Signature, TensorPoly, trace, tsum, word
from ncrg.nccalc import (
    ActionFunctional,
    SuperMatrix,
    cyclic_derivative,
    delta,
    hessian,
    laplacian,
    nc_derivative,
    supertrace_twisted,
)
from ncrg.scalar import Scalar

SIGNATURES = [Signature((1, 1)), Signature((1, -1)), Signature((-1, 1)), Signature((-1, -1))]
ONE = Scalar.const(1)
N = Scalar.symbol(N_SYMBOL)

words2 = st.lists(st.integers(0, 1), min_size=1, max_size=5).map(tuple)


def per_n(x: TensorPoly) -> TensorPoly:
    return TensorPoly({k: v / N for k, v in x.terms.items()})


def hess_single(w: str, sig: Signature, twisted: bool = False) -> SuperMatrix:
    """Hessian of ``Tr(w)`` (single actions carry ``Tr(1) = N``)."""
    return hessian(ActionFunctional.single(ONE, word(w)), sig, twisted).map(per_n)


def hess_double(u: str, w: str, sig: Signature, twisted: bool = False) -> SuperMatrix:
    return hessian(ActionFunctional.of([(ONE, word(u), word(w))]), sig, twisted)


def matrix_of(rows, sig) -> SuperMatrix:
    return SuperMatrix.from_rows([[parse_entry(x, *sig.e) for x in r] for r in rows])


# printed σ-Hessians of quadratic and quartic operators
TABLE = {
    ("", "AAAA"): [["4*ea*([1⊗AA] + [AA⊗1] + [A⊗A])", "0"], ["0", "0"]],
    ("B", "B"): [["0", "0"], ["0", "2*eb*[1⊗τ1]"]],
    ("", "ABAB"): [["2*ea*[B⊗B]", "2*([1⊗BA] + [AB⊗1])"], ["2*([1⊗AB] + [BA⊗1])", "2*eb*[A⊗A]"]],
    ("A", "AAA"): [["3*ea*(Tr(A)*([A⊗1] + [1⊗A]) + [1⊗τAA] + [AA⊗τ1])", "0"], ["0", "0"]],
    ("AA", "BB"): [["2*ea*[1⊗1]*Tr(BB)", "4*[A⊗τB]"], ["4*[B⊗τA]", "2*eb*[1⊗1]*Tr(AA)"]],
    ("AA", "AA"): [["4*ea*([1⊗1]*Tr(AA) + 2*[A⊗τA])", "0"], ["0", "0"]],
}

HESS_TAU_AABB = [
    ["ea*([1⊗τBB] + [BB⊗τ1])", "[1⊗τAB] + [BA⊗τ1] + [A⊗τB] + [B⊗τA]"],
    ["[1⊗τBA] + [AB⊗τ1] + [A⊗τB] + [B⊗τA]", "eb*([1⊗τAA] + [AA⊗τ1])"],
]
HESS_TAU_A_ABB = [
    ["ea*([1⊗BB] + [BB⊗1])", "Tr(A)*([B⊗τ1] + [1⊗τB]) + [1⊗AB] + [1⊗BA]"],
    ["Tr(A)*([B⊗τ1] + [1⊗τB]) + [AB⊗1] + [BA⊗1]", "eb*Tr(A)*([A⊗τ1] + [1⊗τA])"],
]
PRINTED_P = ("Tr(A)*([1⊗BBA] + [ABB⊗1] + [A⊗BB] + 2*[B⊗BA] + 2*[AB⊗B] + [BB⊗A]) + [1⊗τAABB]"
             " + 2*[1⊗τABAB] + 2*[1⊗τABBA] + 2*[1⊗τBABA] + [1⊗τBBAA] + 2*[1⊗τBBBB] + 2*[BB⊗τBB]")
PRINTED_Q = ("Tr(A)*([1⊗BAB] + [BAB⊗1] + [A⊗BB] + [B⊗AB] + [B⊗BA] + [AB⊗B] + [BA⊗B] + [BB⊗A]"
             " + [1⊗AAA] + [AAA⊗1] + [A⊗AA] + [AA⊗A]) + 2*[AB⊗τAB] + 2*[AB⊗τBA] + 2*[BA⊗τAB]"
             " + 2*[BA⊗τBA]")


def example_product(sig):
    return hess_double("A", "ABB", sig, True).star(hess_single("AABB", sig, True))


@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
@pytest.mark.parametrize("op", list(TABLE), ids=lambda o: f"{o[0] or '1'}|{o[1]}")
def test_hessian_table(op, sig):
    left, right = op
    h = hess_single(right, sig) if not left else hess_double(left, right, sig)
    assert h == matrix_of(TABLE[op], sig)


@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
def test_twisted_hessians_of_example(sig):
    assert hess_single("AABB", sig, True) == matrix_of(HESS_TAU_AABB, sig)
    assert hess_double("A", "ABB", sig, True) == matrix_of(HESS_TAU_A_ABB, sig)


@pytest.mark.xfail(strict=True, reason="printed diagonal carries exchanged twist labels")
@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
def test_example_product_diagonal_literal(sig):
    prod = example_product(sig)
    assert prod[0, 0] == parse_entry(PRINTED_P, *sig.e)
    assert prod[1, 1] == parse_entry(PRINTED_Q, *sig.e)


@pytest.mark.parametrize("sig", SIGNATURES, ids=str)
def test_example_product_diagonal_up_to_flip(sig):
    prod = example_product(sig).flip()
    assert prod[0, 0] == parse_entry(PRINTED_P, *sig.e)
    assert prod[1, 1] == parse_entry(PRINTED_Q, *sig.e)


def test_twisted_hessian_is_flip_of_untwisted():
    sig = Signature((1, -1))
    assert hess_single("AABB", sig, True) == hess_single("AABB", sig).flip()


# matrix-realization oracles


def _rand(size, seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(size, size))
    return (m + m.T).astype(complex)


@given(words2, st.integers(0, 1), st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_nc_derivative_oracle(w, j, seed):
    mats = symmetric_matrices(2, 5, seed)
    h = _rand(5, seed + 100)
    duals = [Dual(m) for m in mats]
    duals[j] = Dual(mats[j], h)
    first = dual_word(w, duals, 5).c[1]
    t = eval_tensor(nc_derivative(NCPoly.from_words(w), j), mats)
    assert relerr(np.einsum("abcd,bc->ad", t, h), first) <= 1e-10


@given(words2, st.integers(0, 1), st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_cyclic_derivative_is_trace_gradient(w, j, seed):
    mats = symmetric_matrices(2, 5, seed)
    h = _rand(5, seed + 100)
    duals = [Dual(m) for m in mats]
    duals[j] = Dual(mats[j], h)
    first = np.trace(dual_word(w, duals, 5).c[1])
    d = cyclic_derivative(NCPoly.from_words(w), j)
    plain = [Dual(m) for m in mats]
    val = sum(float(c.const_value()) * np.trace(dual_word(v, plain, 5).c[0] @ h) for v, c in d.terms.items())
    assert relerr(val, first) <= 1e-10


def _second_derivative(left, right, i, j, mats, h1, h2):
    size = mats[0].shape[0]

    def traces(w):
        if not w:
            return [size, 0, 0, 0]
        d = [Dual(m) for m in mats]
        if i == j:
            d[i] = Dual(mats[i], h1, h2)
        else:
            d[i] = Dual(mats[i], h1)
            d[j] = Dual(mats[j], None, h2)
        return [np.trace(c) for c in dual_word(w, d, size).c]

    L, R = traces(left), traces(right)
    return L[0] * R[3] + L[3] * R[0] + L[1] * R[2] + L[2] * R[1]


@pytest.mark.parametrize("sig", SIGNATURES[:2], ids=str)
@pytest.mark.parametrize("op", [("", "AABB"), ("", "ABAB"), ("A", "ABB"), ("AB", "AABB"),
                                ("AA", "BBBB"), ("AAA", "ABB"), ("", "AAABAB")],
                         ids=lambda o: f"{o[0] or '1'}|{o[1]}")
def test_hessian_oracle(op, sig):
    left, right = word(op[0]), word(op[1])
    mats = symmetric_matrices(2, 5, 7)
    h1, h2 = _rand(5, 1), _rand(5, 2)
    H = hessian(ActionFunctional.of([(ONE, left, right)]), sig)
    for i in range(2):
        for j in range(2):
            t = eval_tensor(H[i, j], mats)
            got = np.einsum("abcd,bc,da->", t, h1, h2)
            want = _second_derivative(left, right, i, j, mats, h1, h2) * (sig.e[i] if i == j else 1)
            assert relerr(got, want) <= 1e-10


@given(words2, words2, st.integers(0, 1))
@settings(max_examples=40, deadline=None)
def test_leibniz_rule(p, q, j):
    lhs = nc_derivative(NCPoly.from_words(p + q), j)
    left = TensorPoly({(u, w + q, False): c for (u, w, _), c in nc_derivative(NCPoly.from_words(p), j).terms.items()})
    right = TensorPoly({(p + u, w, False): c for (u, w, _), c in nc_derivative(NCPoly.from_words(q), j).terms.items()})
    assert lhs == left + right


@pytest.mark.parametrize("pq", [("A", "ABB"), ("AB", "AB"), ("AA", "BBBB")])
def test_double_trace_hessian_decomposition(pq):
    sig = Signature((1, -1))
    P, Q = (NCPoly.from_words(word(x)) for x in pq)
    full = hess_double(*pq, sig)
    hp, hq = hess_single(pq[0], sig), hess_single(pq[1], sig)
    d = delta(P, Q, 2)
    for i in range(2):
        for j in range(2):
            sign = sig.e[i] if i == j else 1
            expect = (hp[i, j].scale(Q.trace()) + hq[i, j].scale(P.trace())
                      + d[i, j].scale(Scalar.const(sign)))
            assert full[i, j] == expect


def test_laplacian_is_diagonal_sum_and_supertrace():
    sig = Signature((1, -1))
    act = ActionFunctional.of([(ONE, word("AA"), word("BB")), (Scalar.symbol("g"), (), word("AABB"))])
    H = hessian(act, sig, True)
    assert laplacian(act, sig, True) == tsum(H.diagonal())
    assert act.value() == trace(word("AA")) * trace(word("BB")) + Scalar.symbol("g") * N * trace(word("AABB"))
    assert supertrace_twisted(H) != Scalar()
