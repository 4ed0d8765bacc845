"""Field arithmetic: axioms checked exhaustively for every q <= 81."""

import numpy as np
import pytest

from twistlab import gf

SMALL_FIELDS = [
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 1), (3, 2), (3, 3), (3, 4),
    (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1),
]


def _tables(ctx):
    """Addition and multiplication Cayley tables indexed by canon."""
    els = gf.enumerate_field(ctx)
    q = ctx.q
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            add[i, j] = (a + b).canon
            mul[i, j] = (a * b).canon
    return add, mul


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, n):
    ctx = gf.field_create(p, n)
    q = ctx.q
    els = gf.enumerate_field(ctx)
    assert [e.canon for e in els] == list(range(q))
    add, mul = _tables(ctx)
    idx = np.arange(q)
    # commutativity
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)
    # identities: 0 has canon 0, 1 has canon 1
    assert np.array_equal(add[0], idx)
    assert np.array_equal(mul[1], idx)
    assert np.array_equal(mul[0], np.zeros(q, dtype=np.int64))
    # associativity via gather: (a+b)+c == a+(b+c), same for *
    for t in (add, mul):
        left = t[t.reshape(q, q, 1), idx.reshape(1, 1, q)]
        right = t[idx.reshape(q, 1, 1), t.reshape(1, q, q)]
        assert np.array_equal(left, right)
    # distributivity: a*(b+c) == a*b + a*c
    left = mul[idx.reshape(q, 1, 1), add.reshape(1, q, q)]
    right = add[mul.reshape(q, q, 1), mul[idx.reshape(q, 1, 1), idx.reshape(1, 1, q)]]
    assert np.array_equal(left, right)
    # additive inverses: every row of add is a permutation hitting 0
    assert np.array_equal(np.sort(add, axis=1), np.tile(idx, (q, 1)))
    # multiplicative inverses for nonzero rows
    assert all(1 in set(mul[i][1:]) for i in range(1, q))


@pytest.mark.parametrize("p,n", [(2, 4), (3, 2), (3, 3), (5, 2), (7, 1)])
def test_inverse_and_division(p, n):
    ctx = gf.field_create(p, n)
    for e in gf.enumerate_field(ctx)[1:]:
        assert e * e.inv() == ctx.one
        assert (ctx.one / e) == e.inv()
        assert (e / e) == ctx.one
    with pytest.raises(ZeroDivisionError):
        ctx.zero.inv()


def test_scalar_and_element_coercion():
    F9 = gf.field_create(3, 2)
    assert F9.scalar(4) == F9.one
    assert F9.scalar(-1) + F9.one == F9.zero
    assert F9.element(2) == F9.scalar(2)
    assert F9.element([1, 2]).coeffs == (1, 2)
    with pytest.raises(ValueError):
        F9.element([1, 2, 0])
    F3 = gf.field_create(3)
    with pytest.raises(ValueError):
        F9.element(F3.one)
    e = F9.element([0, 1])
    assert e + 1 == F9.element([1, 1])
    assert e - 1 == F9.element([2, 1])
    assert (1 - e) == -(e - 1)
    assert e * 2 == e + e


def test_canonical_order_round_trip():
    for p, n in [(2, 3), (3, 2), (5, 1)]:
        ctx = gf.field_create(p, n)
        for k, e in enumerate(gf.enumerate_field(ctx)):
            assert e.canon == k
            assert ctx.from_canon(k) == e
    with pytest.raises(ValueError):
        gf.field_create(3, 2).from_canon(9)


def test_moduli_are_frozen():
    # ascending coefficients, leading 1 last; n = 1 is the polynomial x
    expected = {
        (2, 1): (0, 1),
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
        (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
        (3, 2): (1, 0, 1),
        (3, 3): (1, 2, 0, 1),
        (3, 4): (2, 1, 0, 0, 1),
        (5, 2): (2, 0, 1),
        (7, 2): (1, 0, 1),
    }
    for (p, n), mod in expected.items():
        assert gf.field_create(p, n).modulus == mod


@pytest.mark.parametrize("p,n", [(2, 4), (3, 2), (3, 3), (5, 2)])
def test_frobenius(p, n):
    ctx = gf.field_create(p, n)
    for e in gf.enumerate_field(ctx):
        fr = gf.frobenius(e)
        assert fr == e ** p
        assert gf.frobenius(e, n) == e
    # additivity and multiplicativity spot-checked exhaustively on pairs
    els = gf.enumerate_field(ctx)
    for a in els:
        for b in els:
            assert gf.frobenius(a + b) == gf.frobenius(a) + gf.frobenius(b)
            assert gf.frobenius(a * b) == gf.frobenius(a) * gf.frobenius(b)


def test_frobenius_fixed_points_count_subfields():
    import math
    ctx = gf.field_create(2, 6)
    for m in range(1, 7):
        fixed = sum(1 for e in gf.enumerate_field(ctx) if gf.frobenius(e, m) == e)
        assert fixed == 2 ** math.gcd(m, 6)


@pytest.mark.parametrize("p,n", [(3, 2), (5, 1), (7, 1), (13, 1), (2, 4)])
def test_squares_and_sqrt(p, n):
    ctx = gf.field_create(p, n)
    squares = {(x * x).canon for x in gf.enumerate_field(ctx)}
    for e in gf.enumerate_field(ctx):
        if e.canon in squares:
            assert gf.is_square(e)
            r = gf.sqrt(e)
            assert r * r == e
        else:
            assert not gf.is_square(e)
            assert gf.sqrt(e) is None
    if p == 2:
        assert len(squares) == ctx.q
    else:
        assert len(squares) == (ctx.q + 1) // 2


@pytest.mark.parametrize("p,n", [(3, 2), (2, 4), (7, 1)])
def test_nth_roots_match_scan(p, n):
    ctx = gf.field_create(p, n)
    els = gf.enumerate_field(ctx)
    for m in range(1, 9):
        for e in els:
            want = sorted(x.canon for x in els if x ** m == e)
            got = sorted(x.canon for x in gf.nth_roots(e, m))
            assert got == want, (p, n, m, e.canon)


@pytest.mark.parametrize("p,n,k", [(3, 2, 1), (2, 3, 1), (2, 3, 2), (3, 1, 1), (2, 4, 2)])
def test_linearized_roots_match_scan(p, n, k):
    # roots of x^(p^k) + a*x = rhs, exhaustively over all (a, rhs)
    ctx = gf.field_create(p, n)
    els = gf.enumerate_field(ctx)
    power = p ** k
    for a in els:
        for rhs in els:
            want = sorted(x.canon for x in els if x ** power + a * x == rhs)
            got = sorted(x.canon for x in gf.linearized_roots(a, rhs, k))
            assert got == want, (p, n, k, a.canon, rhs.canon)


def test_artin_schreier_roots():
    for n in (1, 2, 3, 4):
        ctx = gf.field_create(2, n)
        for c in gf.enumerate_field(ctx):
            want = sorted(x.canon for x in gf.enumerate_field(ctx) if x * x + x == c)
            got = sorted(x.canon for x in gf.artin_schreier_roots(c))
            assert got == want
            # solvable exactly when the absolute trace vanishes
            assert bool(want) == (gf.absolute_trace(c) == 0)


def test_absolute_trace():
    for p, n in [(2, 4), (3, 3), (5, 2)]:
        ctx = gf.field_create(p, n)
        values = set()
        for e in gf.enumerate_field(ctx):
            tr = gf.absolute_trace(e)
            assert isinstance(tr, int) and 0 <= tr < p
            conj = ctx.zero
            for k in range(n):
                conj = conj + gf.frobenius(e, k)
            assert ctx.scalar(tr) == conj  # sum of conjugates lands in GF(p)
            values.add(tr)
        assert values == set(range(p))  # trace is onto


def test_poly_roots_match_scan():
    for p, n in [(3, 2), (2, 4)]:
        ctx = gf.field_create(p, n)
        els = gf.enumerate_field(ctx)
        for b in els[:6]:
            for c in els[:6]:
                coeffs = [c, b, ctx.one]  # x^2 + b*x + c
                want = sorted(x.canon for x in els
                              if x * x + b * x + c == ctx.zero)
                got = sorted(x.canon for x in gf.poly_roots(coeffs))
                assert got == want


def test_embeddings_are_homomorphic_and_tower_consistent():
    F2 = gf.field_create(2)
    F4 = gf.field_create(2, 2)
    F16 = gf.field_create(2, 4)
    for a in gf.enumerate_field(F4):
        for b in gf.enumerate_field(F4):
            assert gf.subfield_embed(a + b, F16) == (
                gf.subfield_embed(a, F16) + gf.subfield_embed(b, F16))
            assert gf.subfield_embed(a * b, F16) == (
                gf.subfield_embed(a, F16) * gf.subfield_embed(b, F16))
    # tower consistency: F2 -> F4 -> F16 equals F2 -> F16
    for e in gf.enumerate_field(F2):
        via = gf.subfield_embed(gf.subfield_embed(e, F4), F16)
        assert via == gf.subfield_embed(e, F16)
    F3, F9, F81 = gf.field_create(3), gf.field_create(3, 2), gf.field_create(3, 4)
    for e in gf.enumerate_field(F9):
        image = gf.subfield_embed(e, F81)
        # the image lies in the fixed field of Frobenius^2
        assert gf.frobenius(image, 2) == image
    with pytest.raises(ValueError):
        gf.subfield_embed(F9.one, gf.field_create(3, 3))
    with pytest.raises(ValueError):
        gf.subfield_embed(F4.one, F9)


def test_injective_embeddings():
    F9 = gf.field_create(3, 2)
    F81 = gf.field_create(3, 4)
    images = {gf.subfield_embed(e, F81).canon for e in gf.enumerate_field(F9)}
    assert len(images) == 9


def test_element_str_round_trip():
    for p, n in [(3, 2), (2, 4), (7, 1)]:
        ctx = gf.field_create(p, n)
        for e in gf.enumerate_field(ctx):
            s = gf.element_to_str(e)
            assert gf.element_from_str(s, ctx) == e
    assert gf.element_to_str(gf.field_create(7).scalar(3)) == "3"
    assert gf.element_to_str(gf.field_create(3, 2).element([0, 1])) == "3^2:0,1"
    with pytest.raises(ValueError):
        gf.element_from_str("5", None)
    with pytest.raises(ValueError):
        gf.element_from_str("3^2:0,1", gf.field_create(3))


def test_limits(monkeypatch):
    monkeypatch.delenv(gf.LIMIT_ENV_VAR, raising=False)
    assert gf.working_limit() == gf.DEFAULT_LIMIT
    assert gf.split_limit() == gf.SPLIT_LIMIT
    with pytest.raises(gf.LimitExceededError):
        gf.field_create(2, 23)
    gf.field_create(2, 23, limit=1 << 23)  # explicit limit overrides
    monkeypatch.setenv(gf.LIMIT_ENV_VAR, "100")
    assert gf.working_limit() == 100
    with pytest.raises(gf.LimitExceededError):
        gf.field_create(11, 2)
    monkeypatch.setenv(gf.LIMIT_ENV_VAR, str(1 << 25))
    assert gf.split_limit() == 1 << 25
    monkeypatch.setenv(gf.LIMIT_ENV_VAR, "bogus")
    with pytest.raises(ValueError):
        gf.working_limit()
    monkeypatch.setenv(gf.LIMIT_ENV_VAR, "1")
    with pytest.raises(ValueError):
        gf.working_limit()


def test_field_create_errors():
    with pytest.raises(ValueError):
        gf.field_create(4)
    with pytest.raises(ValueError):
        gf.field_create(2, 0)
    with pytest.raises(ValueError):
        gf.field_create(2.0)


def test_context_identity_and_cache():
    a = gf.field_create(3, 2)
    b = gf.field_create(3, 2)
    assert a is b
    assert a == b and hash(a) == hash(b)
    assert a != gf.field_create(3)
