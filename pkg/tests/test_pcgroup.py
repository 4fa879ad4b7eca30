"""Engine tests: normal forms, collection, torsion folds, and the
independent coset-enumeration oracle built straight from the presentations."""

import random

import pytest

from macdgroups import InvalidParameters, MixedGroupError, make_group
from macdgroups.residue import geom_sum, mod_inv, mod_pow

from conftest import ALL_PARAMS, P1, P2, random_element
from oracle_tc import invert_perm, regular_representation


def test_make_group_validation():
    assert len(make_group(3, 1, 4, "K")) == 243
    assert len(make_group(5, 1, 6, "J")) == 5**7
    with pytest.raises(InvalidParameters):
        make_group(3, 1, 7, "K")  # excluded residue class of (alpha-1)/3
    with pytest.raises(InvalidParameters):
        make_group(4, 1, 5, "K")  # p not prime
    with pytest.raises(InvalidParameters):
        make_group(3, 2, 4, "K")  # wrong valuation
    with pytest.raises(InvalidParameters):
        make_group(3, 1, 4, "X")
    with pytest.raises(InvalidParameters):
        make_group(3, 1, 1, "K")
    with pytest.raises(InvalidParameters):
        make_group(10007, 2, 1 + 10007**2, "J")  # over the modulus cap


def test_orders_and_moduli():
    for (p, m, alpha) in ALL_PARAMS:
        J = make_group(p, m, alpha, "J")
        H = make_group(p, m, alpha, "H")
        K = make_group(p, m, alpha, "K")
        assert (len(J), len(H), len(K)) == (p ** (7 * m), p ** (6 * m), p ** (5 * m))


def test_basic_collection_facts(J1, K1):
    A, B = J1.A, J1.B
    assert J1.multiply(B, A) == J1.element(1, 1, 8)  # B A = A B C^-1
    assert J1.multiply(J1.identity(), B) == B
    assert J1.power(B, 9) == J1.element(18, 0, 0)  # B^(p^2m) = A^(-p^2m)
    assert K1.conjugate(K1.B, K1.A) == K1.element(0, 1, 2)  # b^a = b c^-1
    assert K1.multiply_naive(K1.B, K1.A) == K1.element(1, 1, 2)
    assert J1.commutator(A, B) == J1.C
    assert J1.conjugate(A, J1.C) == J1.power(A, 4)  # A^C = A^alpha


def test_generator_orders(J1, H1, K1):
    assert [J1.element_order(x) for x in (J1.A, J1.B, J1.C)] == [27, 27, 9]
    assert [H1.element_order(x) for x in (H1.A, H1.B, H1.C)] == [9, 9, 9]
    assert [K1.element_order(x) for x in (K1.A, K1.B, K1.C)] == [9, 9, 3]


def test_indexing_bijection(K1):
    seen = set()
    for n in range(len(K1)):
        g = K1.unindex(n)
        assert K1.index(g) == n
        seen.add(g.triple)
    assert len(seen) == 243
    assert K1.unindex(0) == K1.identity()
    with pytest.raises(IndexError):
        K1.unindex(243)


def test_mixed_group_rejection(J1, H1):
    with pytest.raises(MixedGroupError):
        J1.multiply(J1.A, H1.A)
    with pytest.raises(MixedGroupError):
        H1.inverse(J1.B)


def test_group_axioms_sampled(rng):
    for (p, m, alpha) in ALL_PARAMS:
        for kind in "JHK":
            g = make_group(p, m, alpha, kind)
            e = g.identity()
            for _ in range(60):
                x = random_element(g, rng)
                y = random_element(g, rng)
                z = random_element(g, rng)
                assert g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z))
                assert g.multiply(x, e) == x and g.multiply(e, x) == x
                assert g.multiply(x, g.inverse(x)) == e
                assert g.multiply(g.inverse(x), x) == e


def test_batched_equals_naive_sampled(rng):
    for (p, m, alpha) in ALL_PARAMS:
        for kind in "JHK":
            g = make_group(p, m, alpha, kind)
            for _ in range(150):
                x = random_element(g, rng)
                y = random_element(g, rng)
                assert g.multiply(x, y) == g.multiply_naive(x, y)


def test_power_vs_repeated_multiplication(rng):
    for (p, m, alpha) in (P1, P2):
        g = make_group(p, m, alpha, "J")
        for _ in range(30):
            x = random_element(g, rng)
            n = rng.randrange(40)
            acc = g.identity()
            for _ in range(n):
                acc = g.multiply(acc, x)
            assert g.power(x, n) == acc
            assert g.power(x, -n) == g.inverse(acc)


def test_element_order_divides_group_order(K1, rng):
    for _ in range(80):
        x = random_element(K1, rng)
        o = K1.element_order(x)
        assert len(K1) % o == 0
        assert K1.power(x, o) == K1.identity()


# -- exact conjugation closed forms (the forms the engine actually satisfies)


def exact_conj_b_by_apow(g, s):
    """B^(A^s) = B A^((s - geom(alpha^-1, s)) alpha^s) C^(-s), exactly."""
    W = g.W
    x = (s - geom_sum(mod_inv(g.alpha, W), s, W)) * mod_pow(g.alpha, s, W) % W
    return g.multiply(g.multiply(g.B, g.power(g.A, x)), g.power(g.C, -s))


def test_exact_conjugation_forms():
    for (p, m, alpha) in (P1, P2, P3_:= (3, 2, 10)):
        for kind in "JHK":
            g = make_group(p, m, alpha, kind)
            W = g.W
            rng = random.Random(9)
            ss = range(1, g.nA) if g.nA <= 100 else [rng.randrange(1, g.nA) for _ in range(60)]
            for s in ss:
                assert g.conjugate(g.B, g.power(g.A, s)) == exact_conj_b_by_apow(g, s)
                # [A^s, B] = A^(geom(alpha^-1, s) - s) C^s
                x = (geom_sum(mod_inv(g.alpha, W), s, W) - s) % W
                assert g.commutator(g.power(g.A, s), g.B) == g.multiply(
                    g.power(g.A, x), g.power(g.C, s)
                )
                # A^(B^s) = A C^s B^(s - geom(alpha^-1, s))
                u = (s - geom_sum(mod_inv(g.alpha, W), s, W)) % W
                rhs = g.multiply(g.multiply(g.A, g.power(g.C, s)), g.power(g.B, u))
                assert g.conjugate(g.A, g.power(g.B, s)) == rhs


# -- the independent oracle: coset enumeration from the raw presentation


@pytest.fixture(scope="module")
def perm_models():
    out = {}
    for kind in "JHK":
        pa, pb = regular_representation(3, 1, 4, kind)
        out[kind] = (pa, pb)
    return out


def _word_perm(n, *perms):
    out = list(range(n))
    for p in perms:
        out = [p[x] for x in out]
    return out


def _perm_pow(perm, e):
    n = len(perm)
    out = list(range(n))
    base = perm
    while e:
        if e & 1:
            out = [base[x] for x in out]
        base = [base[x] for x in base]
        e >>= 1
    return out


def test_regular_representation_orders(perm_models):
    assert len(perm_models["K"][0]) == 243
    assert len(perm_models["H"][0]) == 729
    assert len(perm_models["J"][0]) == 2187


def test_engine_matches_coset_enumeration(perm_models):
    """The multiplication engine agrees with the permutation model derived
    independently from the presentation: exhaustively on K, sampled on H, J."""
    rng = random.Random(11)
    for kind in "JHK":
        g = make_group(3, 1, 4, kind)
        pa, pb = perm_models[kind]
        n = len(pa)
        pa_inv, pb_inv = invert_perm(pa), invert_perm(pb)
        pc = _word_perm(n, pa_inv, pb_inv, pa, pb)
        # point of A^i B^j C^k = image of the identity coset under a^i b^j c^k
        ppow_a = [_perm_pow(pa, i) for i in range(g.nA)]
        ppow_b = [_perm_pow(pb, j) for j in range(g.nB)]
        ppow_c = [_perm_pow(pc, k) for k in range(g.nC)]
        pts = {}
        perm_of = {}
        for x in g.elements():
            perm = _word_perm(n, ppow_a[x.i], ppow_b[x.j], ppow_c[x.k])
            pts[g.index(x)] = perm[0]
            perm_of[g.index(x)] = perm
        assert len(set(pts.values())) == n, "normal form is not a bijection"
        if kind == "K":
            pairs = [(x, y) for x in range(n) for y in range(n)]
        else:
            pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(20_000)]
        for xi, yi in pairs:
            z = g.index(g.multiply(g.unindex(xi), g.unindex(yi)))
            assert pts[z] == perm_of[yi][pts[xi]]
