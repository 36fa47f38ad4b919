import os
import sys

import pytest

# Add the project root to the Python path before any other imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from models.coin_set import new_coin_set  # noqa: E402
from services.quasi_poly import build_quasi_polynomial, decompose  # noqa: E402

APPENDIX_SETS = {
    "us": [1, 5, 10, 25],
    "small": [2, 3, 4],
    "mixed": [3, 5, 6],
    "eleven": [1, 4, 6, 11],
    "nineteen": [1, 19, 19, 20],
    "twentyone": [1, 21, 21, 22],
}


@pytest.fixture(scope="session")
def built():
    """Quasi-polynomials for the appendix coin sets, built once per session."""
    cache = {}

    def _get(name):
        if name not in cache:
            cache[name] = build_quasi_polynomial(new_coin_set(APPENDIX_SETS[name]))
        return cache[name]

    return _get


@pytest.fixture(scope="session")
def decomposed(built):
    cache = {}

    def _get(name):
        if name not in cache:
            cache[name] = decompose(built(name))
        return cache[name]

    return _get
