from dataclasses import dataclass
from typing import Iterable, Iterator

from decider_errors import InputError, DegreeOneError


@dataclass(frozen=True)
class Generator:
    """
    A named generator of a free graded-commutative algebra.
    Attributes:
        name (str): Identifier, unique within its GeneratorSet.
        degree (int): Positive degree; odd generators are exterior.
    """
    name: str
    degree: int

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


@dataclass(frozen=True)
class GeneratorSet:
    """
    Ordered generators of a simply connected free CDGA.

    The order fixed here is the order of exponent vectors, hence of monomial
    bases and of every certificate the decider prints.
    Attributes:
        generators (tuple[Generator, ...]): Generators in their fixed order.
    """
    generators: tuple[Generator, ...] = ()

    def __post_init__(self):
        seen: set[str] = set()
        for gen in self.generators:
            if not gen.name.isidentifier():
                raise InputError(f"Generator name {gen.name!r} is not an identifier")
            if gen.name in seen:
                raise InputError(f"Duplicate generator name {gen.name!r}")
            seen.add(gen.name)
            if gen.degree == 1:
                raise DegreeOneError(f"Generator {gen.name!r} has degree 1")
            if gen.degree < 2:
                raise InputError(
                    f"Generator {gen.name!r} has degree {gen.degree}; degrees must be at least 2")

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, int]]) -> "GeneratorSet":
        return cls(tuple(Generator(name, degree) for name, degree in pairs))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, index: int) -> Generator:
        return self.generators[index]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def index(self, name: str) -> int:
        for idx, gen in enumerate(self.generators):
            if gen.name == name:
                return idx
        raise InputError(f"Unknown generator {name!r}")

    def __contains__(self, name: object) -> bool:
        return any(g.name == name for g in self.generators)

    def concat(self, other: "GeneratorSet") -> "GeneratorSet":
        return GeneratorSet(self.generators + other.generators)
