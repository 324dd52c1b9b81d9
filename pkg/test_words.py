import pytest
from hypothesis import given, strategies as st

from conftest import make_word
from errors import CollectionBoundExceeded, NotSpecial
from models import GenKind
from services.constants import compute_constants
from services.rings import parse_ring
from services.representation import RepKind, default_rep, verify_equal
from services.rootsystem import parse_system
from services.words import (
    Generator,
    TorusParams,
    UnipotentParams,
    Word,
    collect,
    collect_signed,
    conj_levi,
    expand_generators,
    expand_to_fundamental,
    reflection_path,
    split_levi,
    torus_conjugate,
    weyl_conjugate,
)


def test_generator_inverse(z7):
    a = 0
    assert Generator.x(a, z7(3)).inverse() == Generator.x(a, z7(4))
    assert Generator.w(a, z7(3)).inverse() == Generator.w(a, z7(4))
    assert Generator.h(a, z7(3)).inverse() == Generator.h(a, z7(5))


def test_word_inverse_evaluates_to_identity(b2, z7):
    word = make_word(b2, z7, [("x", (1, 1), 3), ("h", (0, 1), 2), ("w", (-1, 0), 5), ("x", (-1, -2), 6)])
    assert verify_equal(RepKind.ADJOINT, word + word.inverse(), Word(b2, z7))


def test_torus_conjugate_rank_one(a1):
    gf7 = parse_ring("gf:7")
    alpha = a1.simple(1)
    t = TorusParams.from_root(a1, alpha, gf7(3))
    assert torus_conjugate(a1, t, Generator.x(alpha, gf7(2))).param == gf7(4)
    assert torus_conjugate(a1, t, Generator.x(a1.neg(alpha), gf7(2))).param == gf7(2) * gf7(3).inv() ** 2


def test_torus_conjugate_neighbouring_root(a2, z7):
    t = TorusParams.from_root(a2, a2.simple(1), z7(3))
    assert t.eps == (z7(3), z7(1))
    g = torus_conjugate(a2, t, Generator.x(a2.simple(2), z7(2)))
    assert g == Generator.x(a2.simple(2), z7(3))


def test_torus_params_from_long_root(b2, z7):
    # B2: alpha1 long, (alpha1 + alpha2)^v = 2 alpha1^v + alpha2^v
    t = TorusParams.from_root(b2, b2.lookup((1, 1)), z7(3))
    assert t.eps == (z7(2), z7(3))
    assert t.multiply(t.inverse()).is_identity()


@pytest.mark.parametrize("name,desc", [("A3", "zmod:7"), ("B2", "zmod:7"), ("G2", "zmod:5")])
def test_torus_conjugate_matches_oracle(name, desc):
    rs, ring = parse_system(name), parse_ring(desc)
    rep = default_rep(rs)
    t = TorusParams(ring, tuple(ring(k + 2) for k in range(rs.rank)))
    for b in range(len(rs)):
        x = Generator.x(b, ring(1))
        lhs = Word(rs, ring, tuple(t.to_generators(rs)) + (x,) + tuple(t.inverse().to_generators(rs)))
        assert verify_equal(rep, lhs, Word(rs, ring, (torus_conjugate(rs, t, x),)))


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_weyl_conjugate_matches_oracle(name):
    rs = parse_system(name)
    ring = parse_ring("zmod:7")
    sc = compute_constants(rs)
    rep = default_rep(rs)
    for a in range(len(rs)):
        for b in range(len(rs)):
            x = Generator.x(b, ring(2))
            lhs = Word(rs, ring, (Generator.w(a, ring(1)), x, Generator.w(a, ring(-1))))
            assert verify_equal(rep, lhs, Word(rs, ring, (weyl_conjugate(sc, a, x),)))


def test_expand_generators(a2, z5):
    word = make_word(a2, z5, [("h", (1, 0), 1), ("w", (0, 1), 2), ("x", (1, 1), 0)])
    expanded = expand_generators(word)
    # h(1) keeps only x_-a(1) x_-a(-1); x(0) disappears
    assert len(expanded) == 2 + 3
    assert all(g.kind is GenKind.X for g in expanded)
    assert verify_equal(RepKind.NATURAL_A, word, expanded)


def test_reflection_path_lands_on_fundamental(g2):
    for beta in range(len(g2)):
        path, base = reflection_path(g2, beta)
        assert g2.is_fundamental(base)
        assert g2.sign(base) == g2.sign(beta)
        cur = base
        for s in reversed(path):
            cur = g2.reflect(s, cur)
        assert cur == beta


def test_expand_to_fundamental_a2(a2, z7):
    sc = compute_constants(a2)
    word = make_word(a2, z7, [("x", (1, 1), 2)])
    expanded = expand_to_fundamental(sc, word)
    assert len(expanded) == 7
    assert all(a2.is_fundamental(g.root) for g in expanded)
    assert verify_equal(RepKind.NATURAL_A, word, expanded)


@pytest.mark.parametrize("name", ["B2", "G2", "C3"])
def test_expand_to_fundamental_every_root(name):
    rs = parse_system(name)
    ring = parse_ring("zmod:9")
    sc = compute_constants(rs)
    word = Word(rs, ring, tuple(Generator.x(b, ring(b % 8 + 1)) for b in range(len(rs))))
    expanded = expand_to_fundamental(sc, word)
    assert all(rs.is_fundamental(g.root) for g in expanded)
    assert verify_equal(default_rep(rs), word, expanded)


def test_collect_swaps_with_commutator(a2, z5):
    sc = compute_constants(a2)
    a1, a2_ = a2.simple_ids
    top = a2.lookup((1, 1))
    out = collect(sc, a2.positive_ids(), [(a2_, z5(3)), (a1, z5(2))])
    assert out.factors == ((a1, z5(2)), (a2_, z5(3)), (top, z5(4)))


def test_collect_merges_and_cancels(a2, z5):
    sc = compute_constants(a2)
    a1 = a2.simple(1)
    assert collect(sc, a2.positive_ids(), [(a1, z5(2)), (a1, z5(3))]).factors == ()
    assert collect(sc, a2.positive_ids(), [(a1, z5(2)), (a1, z5(2))]).factors == ((a1, z5(4)),)


def test_collect_is_idempotent(b2, z7):
    sc = compute_constants(b2)
    raw = [(b, z7(b + 2)) for b in reversed(b2.positive_ids())]
    once = collect_signed(sc, 1, raw, z7)
    assert collect_signed(sc, 1, once.factors, z7) == once
    roots = [a for a, _ in once]
    assert roots == sorted(roots)


def test_collect_rejects_non_special(a2, z5):
    sc = compute_constants(a2)
    a1 = a2.simple(1)
    with pytest.raises(NotSpecial):
        collect(sc, [a1, a2.neg(a1)], [(a1, z5(1))])


def test_collect_rejects_root_outside_set(a2, z5):
    sc = compute_constants(a2)
    with pytest.raises(ValueError):
        collect(sc, a2.positive_ids(), [(a2.neg(a2.simple(1)), z5(1))])


def test_collect_empty_product(a2, z5):
    sc = compute_constants(a2)
    assert collect(sc, a2.positive_ids(), [], ring=z5).factors == ()


def test_split_levi_a2(a2, z5):
    sc = compute_constants(a2)
    a1, a2_ = a2.simple_ids
    top = a2.lookup((1, 1))
    u = UnipotentParams(z5, ((a1, z5(2)), (a2_, z5(3))))
    d, s = split_levi(sc, u, 1, 1)
    assert d.factors == ((a2_, z5(3)),)
    assert s.factors == ((a1, z5(2)), (top, z5(1)))
    assert verify_equal(
        RepKind.NATURAL_A,
        Word.from_factors(a2, z5, u.factors),
        Word.from_factors(a2, z5, d.factors + s.factors),
    )


@pytest.mark.parametrize("sign", [1, -1])
def test_conj_levi_b2(b2, z5, sign):
    sc = compute_constants(b2)
    par = b2.parabolic(2)
    sigma = sorted(par.sigma_part(sign))
    s = collect(sc, sigma, [(b, z5(k + 1)) for k, b in enumerate(sigma)])
    d = [(b2.simple(1), z5(2)), (b2.neg(b2.simple(1)), z5(3))]
    out = conj_levi(sc, 2, d, s, sign)
    assert out.support <= par.sigma_part(sign)
    inv = [(a, -xi) for a, xi in reversed(d)]
    lhs = Word.from_factors(b2, z5, d + list(s.factors) + inv)
    assert verify_equal(RepKind.ADJOINT, lhs, Word.from_factors(b2, z5, out.factors))


B2 = parse_system("B2")
Z5 = parse_ring("zmod:5")


@given(st.lists(st.tuples(st.sampled_from(list(B2.positive_ids())), st.integers(0, 4)), max_size=8))
def test_collection_preserves_the_element(pairs):
    sc = compute_constants(B2)
    factors = [(a, Z5(v)) for a, v in pairs]
    out = collect_signed(sc, 1, factors, Z5)
    roots = [a for a, _ in out]
    assert roots == sorted(set(roots))
    assert all(not xi.is_zero() for _, xi in out)
    assert verify_equal(RepKind.ADJOINT, Word.from_factors(B2, Z5, factors), Word.from_factors(B2, Z5, out.factors))


def test_collect_needs_a_filtration_order(a2, z5):
    sc = compute_constants(a2)
    a1, a2_ = a2.simple_ids
    top = a2.lookup((1, 1))
    with pytest.raises(CollectionBoundExceeded):
        collect(sc, a2.positive_ids(), [(a2_, z5(1)), (a1, z5(1))], order=[top, a1, a2_])


@pytest.mark.parametrize("name,sign", [("E6", 1), ("E6", -1), ("F4", 1), ("G2", -1)])
def test_collect_reversed_product_settles(name, sign):
    rs = parse_system(name)
    ring = parse_ring("zmod:7")
    sc = compute_constants(rs)
    raw = [(b, ring(b % 6 + 1)) for b in reversed(rs.signed_ids(sign))]
    out = collect_signed(sc, sign, raw, ring)
    roots = [a for a, _ in out]
    assert roots == sorted(set(roots))
    assert verify_equal(default_rep(rs), Word.from_factors(rs, ring, raw), Word.from_factors(rs, ring, out.factors))


LEVI_SYSTEMS = ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"]


@pytest.mark.parametrize("name", LEVI_SYSTEMS)
@pytest.mark.parametrize("sign", [1, -1])
def test_split_levi_round_trip(name, sign):
    rs = parse_system(name)
    ring = parse_ring("zmod:6")
    sc = compute_constants(rs)
    raw = [(b, ring(b % 5 + 1)) for b in reversed(rs.signed_ids(sign))]
    u = collect_signed(sc, sign, raw, ring)
    for r in (1, rs.rank):
        par = rs.parabolic(r)
        d, s = split_levi(sc, u, r, sign)
        assert d.support <= par.delta
        assert not (s.support & par.delta)
        assert collect_signed(sc, sign, list(d.factors) + list(s.factors), ring) == u


@pytest.mark.parametrize("name", LEVI_SYSTEMS)
@pytest.mark.parametrize("sign", [1, -1])
def test_conj_levi_stays_off_the_levi(name, sign):
    rs = parse_system(name)
    ring = parse_ring("zmod:6")
    sc = compute_constants(rs)
    for r in (1, rs.rank):
        par = rs.parabolic(r)
        sigma = sorted(par.sigma_part(sign))
        s = collect(sc, sigma, [(b, ring(k % 5 + 1)) for k, b in enumerate(sigma)])
        d = [(a, ring(a % 4 + 1)) for a in sorted(par.delta)]
        out = conj_levi(sc, r, d, s, sign)
        assert not (out.support & par.delta)
        inv = [(a, -xi) for a, xi in reversed(d)]
        lhs = Word.from_factors(rs, ring, d + list(s.factors) + inv)
        assert verify_equal(default_rep(rs), lhs, Word.from_factors(rs, ring, out.factors))
