import pytest

from errors import DescriptorError, InvalidType, RankTooSmall
from services.rootsystem import build, cartan_matrix, parse_system


@pytest.mark.parametrize("name,count", [
    ("A1", 2), ("A2", 6), ("A3", 12), ("B2", 8), ("B3", 18), ("C3", 18),
    ("D4", 24), ("D5", 40), ("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240),
])
def test_root_counts(name, count):
    rs = parse_system(name)
    assert len(rs) == count
    assert rs.num_positive == count // 2


@pytest.mark.parametrize("name,highest", [
    ("A3", (1, 1, 1)),
    ("B3", (1, 2, 2)),
    ("C3", (2, 2, 1)),
    ("D4", (1, 2, 1, 1)),
    ("G2", (3, 2)),
    ("F4", (2, 3, 4, 2)),
    ("E6", (1, 2, 2, 3, 2, 1)),
    ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
])
def test_highest_root_is_last_positive(name, highest):
    rs = parse_system(name)
    assert rs.roots[rs.num_positive - 1] == highest


@pytest.mark.parametrize("text", ["D3", "B1", "C1", "E9", "G3", "F5"])
def test_invalid_types(text):
    with pytest.raises(InvalidType):
        parse_system(text)


def test_d3_points_to_a3():
    with pytest.raises(InvalidType, match="A3"):
        parse_system("D3")


@pytest.mark.parametrize("text", ["X2", "B", "", "2B"])
def test_unparseable_labels(text):
    with pytest.raises(DescriptorError):
        parse_system(text)


def test_cartan_conventions():
    # a_ij = <alpha_i, alpha_j^v>; alpha_1 long in B2, alpha_2 long in G2
    assert cartan_matrix("B", 2) == ((2, -2), (-1, 2))
    assert cartan_matrix("C", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("G", 2) == ((2, -1), (-3, 2))


def test_root_lengths(b2, g2):
    assert b2.lengths == (4, 2)
    assert g2.lengths == (2, 6)
    assert parse_system("F4").lengths == (4, 4, 2, 2)
    assert parse_system("C3").lengths == (2, 2, 4)


def test_canonical_order(a2):
    assert a2.roots[:3] == ((1, 0), (0, 1), (1, 1))
    assert a2.simple_ids == (0, 1)
    assert [a2.height(a) for a in a2.positive_ids()] == [1, 1, 2]


def test_negation_is_offset(b2):
    for a in range(len(b2)):
        assert b2.roots[b2.neg(a)] == tuple(-c for c in b2.roots[a])
        assert b2.neg(b2.neg(a)) == a
        assert b2.is_positive(a) != b2.is_positive(b2.neg(a))


def test_reflections_permute_roots(g2):
    for a in range(len(g2)):
        assert g2.reflect(a, a) == g2.neg(a)
        assert sorted(g2.reflect(a, b) for b in range(len(g2))) == list(range(len(g2)))


def test_string_bounds(b2):
    a1, a2 = b2.simple(1), b2.simple(2)
    # alpha_1, alpha_1 + alpha_2, alpha_1 + 2 alpha_2
    assert b2.string_bounds(a2, a1) == (0, 2)
    assert b2.string_bounds(a1, a2) == (0, 1)


def test_coroot_coefficients(b2):
    long_root = b2.lookup((1, 2))
    short_root = b2.lookup((1, 1))
    assert b2.coroot_coefficients(long_root) == (1, 1)
    assert b2.coroot_coefficients(short_root) == (2, 1)
    assert b2.coroot_coefficients(b2.simple(2)) == (0, 1)


def test_parabolic_pieces(a2):
    par = a2.parabolic(1)
    assert par.delta == {a2.lookup((0, 1)), a2.lookup((0, -1))}
    assert par.sigma == {a2.lookup((1, 0)), a2.lookup((1, 1))}
    assert par.minus_sigma == {a2.neg(a) for a in par.sigma}
    assert par.s == par.delta | par.sigma


def test_closed_and_special(a2):
    positive = set(a2.positive_ids())
    assert a2.is_closed(positive) and a2.is_special(positive)
    assert not a2.is_closed({a2.simple(1), a2.simple(2)})
    assert not a2.is_special({a2.simple(1), a2.neg(a2.simple(1))})
    for r in (1, 2):
        par = a2.parabolic(r)
        assert a2.is_closed(par.sigma) and a2.is_special(par.sigma)


EVERY_TYPE = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]


@pytest.mark.parametrize("name", EVERY_TYPE)
def test_parabolic_invariants(name):
    rs = parse_system(name)
    for r in range(1, rs.rank + 1):
        par = rs.parabolic(r)
        assert par.s == par.delta | par.sigma
        assert rs.is_closed(par.sigma) and rs.is_special(par.sigma)
        assert rs.is_closed(par.minus_sigma) and rs.is_special(par.minus_sigma)
        assert rs.is_closed(par.delta)
        assert {rs.neg(a) for a in par.delta} == par.delta
        for a in par.sigma:
            for b in par.s:
                c = rs.add(a, b)
                assert c is None or c in par.sigma
    ends = rs.parabolic(1).delta | rs.parabolic(rs.rank).delta
    if rs.rank > 1:
        assert set(rs.simple_ids) <= ends


@pytest.mark.parametrize("name", [n for n in EVERY_TYPE if int(n[1:]) <= 4])
def test_reflections_preserve_the_inner_product(name):
    rs = parse_system(name)
    ids = range(len(rs))
    for s in rs.simple_ids:
        for a in ids:
            for b in ids:
                assert rs.inner(rs.reflect(s, a), rs.reflect(s, b)) == rs.inner(a, b)


@pytest.mark.parametrize("name,r,sub,nodes", [
    ("A3", 1, "A2", (2, 3)),
    ("B3", 1, "B2", (2, 3)),
    ("B3", 3, "A2", (1, 2)),
    ("C3", 1, "B2", (3, 2)),
    ("D4", 1, "A3", (2, 3, 4)),
    ("G2", 1, "A1", (2,)),
    ("G2", 2, "A1", (1,)),
    ("F4", 1, "C3", (4, 3, 2)),
    ("F4", 4, "B3", (1, 2, 3)),
    ("E6", 1, "D5", None),
    ("E7", 7, "E6", (1, 2, 3, 4, 5, 6)),
])
def test_terminal_subsystems(name, r, sub, nodes):
    rs = parse_system(name)
    emb = rs.terminal_subsystem(r)
    assert emb.sub.name == sub
    if nodes is not None:
        assert emb.nodes == nodes
    assert r not in emb.nodes
    for b, g in enumerate(emb.root_map):
        assert rs.coeff(g, r) == 0
        assert rs.is_positive(g) == emb.sub.is_positive(b)
    assert len(set(emb.root_map)) == len(emb.sub)
    assert all(emb.root_map[s] in rs.simple_ids for s in emb.sub.simple_ids)


def test_terminal_subsystem_errors(a1):
    with pytest.raises(RankTooSmall):
        a1.terminal_subsystem(1)
    with pytest.raises(ValueError):
        parse_system("B3").terminal_subsystem(2)


def test_systems_are_cached():
    assert build("B", 3) is parse_system("b3")
