import pytest
from hypothesis import given, strategies as st

from wqt.cartan import root_data
from wqt.errors import ParseError
from wqt.monomial import (
    Monomial,
    Spectral,
    admissible_variables,
    apply_A_inverse,
    degree,
    inverse,
    is_admissible,
    is_antidominant,
    is_dominant,
    is_generic,
    is_regular,
    multiply,
    parse_monomial,
    render_monomial,
    satisfies_condition_r,
    shift,
    weight,
)

spectrals = st.builds(Spectral, st.integers(0, 2), st.integers(-6, 6), st.integers(-6, 6))
factors = st.tuples(st.integers(1, 3), spectrals, st.integers(-3, 3))
monomials = st.lists(factors, max_size=6).map(Monomial)

# Small supports make coincidences at the regularity shifts likely.
near_spectrals = st.builds(Spectral, st.just(0), st.sampled_from([0, -2, -4]), st.sampled_from([0, 2, 4]))
near_monomials = st.lists(
    st.tuples(st.just(1), near_spectrals, st.sampled_from([-2, -1, 1, 2])), max_size=5
).map(Monomial)


def test_text_examples():
    m = parse_monomial("Y[1](q^0 t^0) * Y[1](q^-4 t^2)^-1")
    assert degree(m, 1, Spectral(0, -4, 2)) == -1
    assert render_monomial(m) == "Y[1](q^-4 t^2)^-1 * Y[1](q^0 t^0)"
    assert render_monomial(Monomial()) == "1"
    assert parse_monomial("1") == Monomial()
    assert parse_monomial("Y[2](q^1 t^-1, u_1)^2") == Monomial.Y(2, 1, -1, 2, orbit=1)


@pytest.mark.parametrize(
    "text", ["Y[1](q^0)", "Y[0](q^0 t^0)", "Y[1](q^0 t^0) * * Y[1](q^0 t^0)", "Y[1](q^0 t^0) *", "X"]
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_monomial(text)


def test_zero_exponents_vanish():
    m = Monomial([(1, Spectral(), 2), (1, Spectral(), -2)])
    assert m == Monomial()
    assert len(m) == 0


def test_dominance_and_genericity():
    m = parse_monomial("Y[1](q^0 t^0) Y[2](q^-2 t^0)")
    assert is_dominant(m) and not is_antidominant(m) and is_generic(m)
    assert is_antidominant(inverse(m))
    assert not is_generic(m ** 2)
    assert is_dominant(Monomial()) and is_antidominant(Monomial())


def test_regularity_examples():
    a1 = root_data("A1")
    assert is_regular(a1, parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^0)"))
    # d > 0 with a negative degree one step down is forbidden.
    assert not is_regular(a1, parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^0)^-1"))
    # d > 0 with a negative degree at a t^2 is forbidden.
    assert not is_regular(a1, parse_monomial("Y[1](q^0 t^0) Y[1](q^0 t^2)^-1"))
    # Positive diagonal needs both sides positive.
    assert not is_regular(a1, parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^2)"))
    assert is_regular(a1, parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^2) Y[1](q^-2 t^0) Y[1](q^0 t^2)"))
    # Negative diagonal from a negative degree needs both sides negative.
    assert not is_regular(a1, parse_monomial("Y[1](q^0 t^0)^-1 Y[1](q^-2 t^2)^-1"))


def test_admissibility():
    a1 = root_data("A1")
    m = parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^0)")
    assert not is_admissible(a1, m, 1, Spectral())
    assert is_admissible(a1, m, 1, Spectral(0, -2, 0))
    assert admissible_variables(a1, m) == [(1, Spectral(0, -2, 0))]


def test_apply_a_inverse_moves_the_variable():
    a1 = root_data("A1")
    got = apply_A_inverse(a1, Monomial.Y(1), 1, Spectral())
    assert got == parse_monomial("Y[1](q^-2 t^2)^-1")
    b2 = root_data("B2")
    got = apply_A_inverse(b2, Monomial.Y(1), 1, Spectral())
    assert got == parse_monomial("Y[1](q^-4 t^2)^-1 Y[2](q^-1 t^1) Y[2](q^-3 t^1)")


def test_operators_match_functions():
    a, b = Monomial.Y(1, 1, 0), Monomial.Y(2, 0, 3, -2)
    assert a * b == multiply(a, b)
    assert a / b == multiply(a, inverse(b))
    assert ~b == inverse(b)
    assert a ** 3 == multiply(a, multiply(a, a))
    assert a ** 0 == Monomial()


@given(monomials, monomials, monomials)
def test_group_laws(a, b, c):
    e = Monomial()
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, b) == multiply(b, a)
    assert multiply(a, e) == a
    assert multiply(a, inverse(a)) == e
    assert hash(multiply(a, b)) == hash(multiply(b, a))


@given(monomials, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_is_a_homomorphism(m, dq, dt):
    n = Monomial.Y(1, 2, 2)
    assert shift(multiply(m, n), dq, dt) == multiply(shift(m, dq, dt), shift(n, dq, dt))
    assert shift(shift(m, dq, dt), -dq, -dt) == m


@given(monomials)
def test_render_parse_round_trip(m):
    text = render_monomial(m)
    assert parse_monomial(text) == m
    assert render_monomial(parse_monomial(text)) == text


@given(near_monomials)
def test_condition_r_never_rejects_regular_generic(m):
    a1 = root_data("A1")
    if is_generic(m) and is_regular(a1, m):
        assert satisfies_condition_r(a1, m)


@given(near_monomials)
def test_admissible_variable_has_small_diagonal(m):
    rd = root_data("A1")
    if not (is_generic(m) and is_regular(rd, m)):
        return
    for i, a in admissible_variables(rd, m):
        assert degree(m, i, a.shift(-2 * rd.r_of(i), 2)) in (-1, 0)


@given(st.sampled_from(["A3", "B3", "C3", "D4", "G2", "F4"]), st.data())
def test_a_inverse_lowers_weight_by_a_column(tname, data):
    rd = root_data(tname)
    i = data.draw(st.integers(1, rd.rank))
    a = data.draw(spectrals)
    m = data.draw(st.lists(st.tuples(st.integers(1, rd.rank), spectrals, st.integers(-2, 2)), max_size=4).map(Monomial))
    before, after = weight(m, rd.rank), weight(apply_A_inverse(rd, m, i, a), rd.rank)
    column = [int(rd.cartan[j, i - 1]) for j in range(rd.rank)]
    assert [x - y for x, y in zip(before, after)] == column
