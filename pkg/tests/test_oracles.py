from fractions import Fraction

import pytest

from decider_errors import InputError
from cdga import Element, GeneratorSet, Monomial
from tests.oracles import TruncatedSeries, invert_series, naive_monomials


def series(gens: GeneratorSet, by_degree: dict[int, Element], top: int) -> list[Element]:
    out = [Element.zero(gens)] * (top + 1)
    out[0] = Element.one(gens)
    for degree, element in by_degree.items():
        out[degree] = element
    return out


def test_inverse_of_one_plus_three_x_squared():
    gens = GeneratorSet.of([("x", 2)])
    x = Element.generator(gens, "x")
    inverse = invert_series(series(gens, {4: (x * x).scale(3)}, 8), 8)
    assert inverse[4] == (x * x).scale(-3)
    assert inverse[8] == (x * x * x * x).scale(9)
    assert all(inverse[k].is_zero for k in (1, 2, 3, 5, 6, 7))


def test_inverse_gives_the_quaternionic_dual_class():
    gens = GeneratorSet.of([("u", 4)])
    u = Element.generator(gens, "u")
    inverse = invert_series(series(gens, {4: u.scale(2), 8: (u * u).scale(7)}, 8), 8)
    assert inverse[4] == u.scale(-2)
    assert inverse[8] == (u * u).scale(-3)


def test_series_times_its_inverse_is_one():
    gens = GeneratorSet.of([("a", 4), ("b", 8)])
    a, b = Element.generator(gens, "a"), Element.generator(gens, "b")
    total = series(gens, {4: a.scale(Fraction(1, 2)), 8: b - a * a}, 16)
    product = (TruncatedSeries.from_elements(gens, total, 16)
               * TruncatedSeries.from_elements(gens, invert_series(total, 16), 16))
    assert product.is_one()


def test_series_oracle_refuses_bad_input():
    gens = GeneratorSet.of([("a", 4)])
    with pytest.raises(InputError):
        invert_series([Element.scalar(gens, 2)], 4)
    with pytest.raises(InputError):
        invert_series([], 4)
    odd = GeneratorSet.of([("y", 3)])
    with pytest.raises(InputError):
        invert_series(series(odd, {3: Element.generator(odd, "y")}, 6), 6)


def test_naive_monomials_small_cases():
    gens = GeneratorSet.of([("x", 2), ("y", 3)])
    assert set(naive_monomials(gens, 6)) == {Monomial((3, 0))}
    assert set(naive_monomials(gens, 5)) == {Monomial((1, 1))}
    assert naive_monomials(gens, 1) == []
    assert naive_monomials(gens, 0) == [Monomial((0, 0))]
    assert naive_monomials(gens, -1) == []
