import sys
from pathlib import Path

import pytest

# make sweep_support importable both from tests and from forked pool workers
sys.path.insert(0, str(Path(__file__).resolve().parent))

from lcsapprox.core import Alphabet, SymbolString
from lcsapprox.multi import derive_schedule
from lcsapprox.primitives import default_ed_approximator


BINARY = Alphabet.of_size(2)
TERNARY = Alphabet.of_size(3)


def bstr(text: str) -> SymbolString:
    """Binary SymbolString from a '01' digit string."""
    return SymbolString(bytes(int(c) for c in text), BINARY)


def tstr(text: str) -> SymbolString:
    """Ternary SymbolString from a '012' digit string."""
    return SymbolString(bytes(int(c) for c in text), TERNARY)


def kstr(text: str, s: int) -> SymbolString:
    return SymbolString(bytes(int(c) for c in text), Alphabet.of_size(s))


@pytest.fixture(scope="session")
def schedule2():
    return derive_schedule(2, 1)


@pytest.fixture(scope="session")
def schedule3():
    return derive_schedule(3, 1)


@pytest.fixture(scope="session")
def exact_ed():
    return default_ed_approximator()
