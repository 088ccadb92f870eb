from dataclasses import dataclass

from decider_errors import InputError
from .generators import GeneratorSet


@dataclass(frozen=True, order=True)
class Monomial:
    """
    Product of generators written in generator order, as an exponent vector.
    Attributes:
        exponents (tuple[int, ...]): One exponent per generator; 0 or 1 for odd generators.
    """
    exponents: tuple[int, ...]

    @classmethod
    def unit(cls, size: int) -> "Monomial":
        return cls((0,) * size)

    @classmethod
    def generator(cls, size: int, index: int) -> "Monomial":
        return cls(tuple(1 if i == index else 0 for i in range(size)))

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    def degree(self, gens: GeneratorSet) -> int:
        return sum(e * d for e, d in zip(self.exponents, gens.degrees))

    def check(self, gens: GeneratorSet) -> None:
        if len(self.exponents) != len(gens):
            raise InputError(
                f"Monomial {self.exponents} does not match {len(gens)} generators")
        for exp, gen in zip(self.exponents, gens):
            if exp < 0:
                raise InputError(f"Negative exponent on {gen.name}")
            if gen.is_odd and exp > 1:
                raise InputError(f"Odd generator {gen.name} squares to zero, exponent {exp} not allowed")

    def times(self, other: "Monomial", gens: GeneratorSet) -> tuple[int, "Monomial"] | None:
        """
        Koszul product of two monomials.

        The right factor's odd letters move left past the left factor's odd
        letters of higher index; each such transposition contributes a sign.
        Returns:
            tuple[int, Monomial] | None: (sign, product), or None if an odd letter repeats.
        """
        sign = 1
        odd_after = 0  # odd letters of `self` with index greater than the current one
        for idx in range(len(gens) - 1, -1, -1):
            if not gens[idx].is_odd:
                continue
            a, b = self.exponents[idx], other.exponents[idx]
            if a and b:
                return None
            if b and odd_after % 2:
                sign = -sign
            odd_after += a
        return sign, Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def label(self, gens: GeneratorSet) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for exp, gen in zip(self.exponents, gens):
            if exp == 1:
                parts.append(gen.name)
            elif exp > 1:
                parts.append(f"{gen.name}^{exp}")
        return "*".join(parts)
