from __future__ import annotations

from functools import lru_cache

import pytest

from ncrg.fixedpoint import PolySystem
from ncrg.frge import apply_duality, extract_betas
from ncrg.truncations import fuzzy2d, hermitian1


@lru_cache(maxsize=None)
def beta_system(model: str, p: int = 2, q: int = 0):
    if model == "hermitian1":
        return extract_betas(hermitian1(3))
    return extract_betas(fuzzy2d(p, q))


@lru_cache(maxsize=None)
def reduced_system(p: int, q: int):
    return apply_duality(beta_system("fuzzy2d", p, q))


@lru_cache(maxsize=None)
def poly_system(model: str, p: int = 2, q: int = 0, duality: bool = True):
    if model == "hermitian1":
        return PolySystem.compile(beta_system(model))
    if duality and p != q:
        return PolySystem.compile(reduced_system(p, q))
    return PolySystem.compile(beta_system(model, p, q))


@pytest.fixture(scope="session")
def systems():
    return beta_system


_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion():
    """``record(n, ok, detail)``: one PASS/FAIL line per acceptance criterion."""

    def record(n: int, ok: bool, detail: str = "") -> bool:
        line = f"CRITERION {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        _ACCEPTANCE[n] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
