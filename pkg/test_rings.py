import pytest
from hypothesis import given, strategies as st

from errors import DescriptorError, SearchBoundExceeded, UnsupportedRing
from services.rings import (
    Integers,
    check_sr1,
    is_unimodular,
    parse_ring,
    stable_rank_witness,
    units,
)


@pytest.mark.parametrize("desc,size", [
    ("zmod:6", 6),
    ("gf:7", 7),
    ("prod:zmod:2,gf:3", 6),
    ("prod:gf:2,prod:zmod:3,zmod:4", 24),
])
def test_parse_ring_sizes(desc, size):
    ring = parse_ring(desc)
    assert ring.size == size
    assert ring.descriptor == desc
    assert len(list(ring.elements())) == size


def test_integers_are_infinite():
    ring = parse_ring("int")
    assert ring == Integers()
    assert not ring.is_finite
    with pytest.raises(UnsupportedRing):
        list(ring.elements())


@pytest.mark.parametrize("desc", ["zmod:", "gf:4", "zmod:1", "foo", "prod:zmod:2", "zmod:6x"])
def test_parse_ring_rejects(desc):
    with pytest.raises(DescriptorError):
        parse_ring(desc)


def test_zmod_arithmetic():
    r = parse_ring("zmod:6")
    assert r(4) + r(5) == r(3)
    assert r(2) * r(3) == r.zero
    assert -r(1) == r(5)
    assert r(5).inv() == r(5)
    assert r(5) ** -1 == r(5)
    assert not r(2).is_unit()
    with pytest.raises(ZeroDivisionError):
        r(2).inv()


def test_prime_field_inverse():
    f = parse_ring("gf:7")
    assert f(3).inv() == f(5)
    assert all(x.is_unit() for x in f.elements() if not x.is_zero())


def test_gf_and_zmod_are_different_rings():
    assert parse_ring("gf:5") != parse_ring("zmod:5")


def test_product_ring_componentwise():
    r = parse_ring("prod:zmod:2,gf:3")
    x = r((1, 2))
    assert x * x == r((1, 1))
    assert x.is_unit()
    assert not r((0, 1)).is_unit()
    assert x.to_json() == ["1", "2"]
    assert r.from_json(["1", "2"]) == x


def test_json_encoding_of_residues():
    r = parse_ring("zmod:9")
    assert r(13).to_json() == "4"
    assert r.from_json("4") == r(4)
    with pytest.raises(DescriptorError):
        r.from_json("four")


def test_units_in_canonical_order():
    assert [u.value for u in units(parse_ring("zmod:12"))] == [1, 5, 7, 11]


def test_witness_first_in_canonical_order():
    r = parse_ring("zmod:6")
    # 3 + 2z: z = 0 -> 3, z = 1 -> 5
    assert stable_rank_witness(r(2), r(3)) == r(1)


def test_witness_zero_when_d_is_a_unit():
    r = parse_ring("zmod:5")
    assert stable_rank_witness(r(1), r(4)) == r(0)


def test_no_witness_for_non_unimodular_pair():
    r = parse_ring("zmod:6")
    assert not is_unimodular(r(2), r(4))
    assert stable_rank_witness(r(2), r(4)) is None


def test_integer_witness_needs_a_bound():
    z = parse_ring("int")
    with pytest.raises(UnsupportedRing):
        stable_rank_witness(z(5), z(3))


def test_integer_witness_search():
    z = parse_ring("int")
    assert stable_rank_witness(z(2), z(1), bound=3) == z(0)
    # 5 + 3z = -1 at z = -2
    assert stable_rank_witness(z(3), z(5), bound=2) == z(-2)
    with pytest.raises(SearchBoundExceeded):
        stable_rank_witness(z(3), z(5), bound=1)


def test_integers_fail_stable_rank_one():
    z = parse_ring("int")
    assert is_unimodular(z(5), z(3))
    # 3 + 5z is 3 mod 5, never +-1
    assert stable_rank_witness(z(5), z(3), bound=50) is None


def test_unimodular_shortcuts():
    z = parse_ring("int")
    assert is_unimodular(z(4), z(7))
    assert not is_unimodular(z(4), z(6))
    r = parse_ring("prod:zmod:4,zmod:9")
    assert is_unimodular(r((2, 3)), r((1, 1)))
    assert not is_unimodular(r((2, 3)), r((2, 0)))


@pytest.mark.parametrize("desc", ["zmod:12", "gf:5", "zmod:8", "prod:zmod:2,zmod:3"])
def test_check_sr1_finite(desc):
    assert check_sr1(parse_ring(desc))


def test_check_sr1_small_moduli():
    assert all(check_sr1(parse_ring(f"zmod:{n}")) for n in range(2, 31))


@pytest.mark.slow
def test_check_sr1_moduli_up_to_100():
    assert all(check_sr1(parse_ring(f"zmod:{n}")) for n in range(2, 101))


def test_check_sr1_refuses_integers():
    with pytest.raises(UnsupportedRing):
        check_sr1(parse_ring("int"))


@given(
    n=st.sampled_from([4, 6, 9, 12, 16]),
    a=st.integers(-50, 50),
    b=st.integers(-50, 50),
    c=st.integers(-50, 50),
)
def test_ring_axioms(n, a, b, c):
    r = parse_ring(f"zmod:{n}")
    x, y, z = r(a), r(b), r(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + (-x) == r.zero
    assert x * r.one == x
    assert (x * y).value == (a * b) % n
