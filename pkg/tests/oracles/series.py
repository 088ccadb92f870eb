"""
Truncated power series over the even part of a free algebra.

Multiplication here is a separate loop over exponent vectors (exponents add,
no signs), so it checks `Element` multiplication and `dual_class` instead of
reusing them.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from decider_errors import InputError
from cdga import Element, GeneratorSet, Monomial


Terms = dict[Monomial, Fraction]


def _terms(element: Element) -> Terms:
    return {monomial: coefficient for monomial, coefficient in element.terms}


def _times(gens: GeneratorSet, a: Terms, b: Terms) -> Terms:
    if any(gen.is_odd for gen in gens):
        raise InputError("The series oracle only multiplies even generators")
    out: Terms = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = Monomial(tuple(x + y for x, y in zip(ma.exponents, mb.exponents)))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def _plus(a: Terms, b: Terms, sign: int = 1) -> Terms:
    out = dict(a)
    for key, value in b.items():
        out[key] = out.get(key, Fraction(0)) + sign * value
    return {k: v for k, v in out.items() if v != 0}


@dataclass
class TruncatedSeries:
    """A formal sum c_0 + c_1 + ... with c_k of degree k, kept through `truncation`."""
    gens: GeneratorSet
    truncation: int
    coefficients: dict[int, Terms] = field(default_factory=dict)

    @classmethod
    def from_elements(cls, gens: GeneratorSet, by_degree: list[Element], truncation: int) -> "TruncatedSeries":
        return cls(gens, truncation, {
            degree: _terms(element) for degree, element in enumerate(by_degree)
            if degree <= truncation and not element.is_zero
        })

    def degree_part(self, degree: int) -> Element:
        return Element.from_mapping(self.gens, self.coefficients.get(degree, {}))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        limit = min(self.truncation, other.truncation)
        out: dict[int, Terms] = {}
        for p, a in self.coefficients.items():
            for q, b in other.coefficients.items():
                if p + q > limit:
                    continue
                out[p + q] = _plus(out.get(p + q, {}), _times(self.gens, a, b))
        return TruncatedSeries(self.gens, limit, {k: v for k, v in out.items() if v})

    def is_one(self) -> bool:
        unit = Monomial((0,) * len(self.gens))
        return self.coefficients == {0: {unit: Fraction(1)}}


def invert_series(total_class: list[Element], truncation: int) -> list[Element]:
    """
    Multiplicative inverse of c_0 + c_1 + ... through degree `truncation`.
    Args:
        total_class (list[Element]): c_k by degree k; c_0 must be 1.
        truncation (int): Highest degree kept.
    Returns:
        list[Element]: s_k by degree, with (sum c)(sum s) = 1 through `truncation`.
    """
    if not total_class:
        raise InputError("Empty series")
    gens = total_class[0].gens
    unit = Monomial((0,) * len(gens))
    if _terms(total_class[0]) != {unit: Fraction(1)}:
        raise InputError("The degree-0 term of an invertible series must be 1")

    c = [_terms(total_class[k]) if k < len(total_class) else {} for k in range(truncation + 1)]
    s: list[Terms] = [{unit: Fraction(1)}]
    for k in range(1, truncation + 1):
        acc: Terms = {}
        for i in range(1, k + 1):
            acc = _plus(acc, _times(gens, c[i], s[k - i]), sign=-1)
        s.append(acc)
    return [Element.from_mapping(gens, terms) for terms in s]
