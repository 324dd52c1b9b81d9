import pytest
from hypothesis import settings as hypothesis_settings

from models import GenKind
from services.rings import parse_ring
from services.rootsystem import parse_system
from services.words import Generator, Word

hypothesis_settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
hypothesis_settings.load_profile("repro")


def make_word(rs, ring, gens):
    """Build a word from (kind, coefficient vector, value) triples."""
    out = []
    for kind, coeffs, value in gens:
        root = rs.lookup(coeffs)
        assert root is not None, coeffs
        out.append(Generator(GenKind(kind), root, ring(value)))
    return Word(rs, ring, tuple(out))


@pytest.fixture
def a1():
    return parse_system("A1")


@pytest.fixture
def a2():
    return parse_system("A2")


@pytest.fixture
def b2():
    return parse_system("B2")


@pytest.fixture
def g2():
    return parse_system("G2")


@pytest.fixture
def z5():
    return parse_ring("zmod:5")


@pytest.fixture
def z7():
    return parse_ring("zmod:7")
