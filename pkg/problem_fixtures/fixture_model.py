import yaml

from pathlib import Path
from typing import Any, Iterator, Iterable, Tuple
from dataclasses import dataclass, field

from collections.abc import Sequence


PROBLEMS_PATH = Path(__file__).with_name("problems")
REGISTRY_PATH = Path(__file__).with_name("registry.yaml")


@dataclass(frozen=True)
class Fixture:
    """
    A named problem file with the verdicts it is known to produce.
    Attributes:
        name (str): Identifier of the fixture.
        path (str): File name, resolved against PROBLEMS_PATH.
        description (str): What the fixture exercises.
        order (int): Position in the fixture suite.
        expected (dict[str, str]): "YES" / "NO" by differential mode; empty for invalid input.
        exit_code (int): Exit code of `decide` in the default mode.
    Properties:
        full_path (pathlib.Path): PROBLEMS_PATH joined with `path`.
    """
    name: str
    path: str
    description: str
    order: int
    expected: dict[str, str] = field(default_factory=dict)
    exit_code: int = 0

    def __post_init__(self):
        if not self.full_path.exists():
            raise FileNotFoundError(
                f"Fixture {self.name}'s path ({self.full_path}) does not exist.")

    @property
    def full_path(self) -> Path:
        return PROBLEMS_PATH / self.path

    @property
    def text(self) -> str:
        return self.full_path.read_text(encoding="utf-8")

    @property
    def is_valid(self) -> bool:
        return bool(self.expected)


def _import_fixtures_from_registry(registry_path: Path = REGISTRY_PATH) -> dict[str, list[Fixture]]:

    fixtures_by_group = {}

    registry = yaml.safe_load(registry_path.read_text(encoding="utf-8"))

    for k, r in registry.items():
        fixtures_by_group[k] = _flatten_registry(r)

    return fixtures_by_group


def _flatten_registry(registry: dict[str, Any]) -> list[Fixture]:

    fixtures: list[Fixture] = []

    for k, v in registry.items():
        if isinstance(v, dict) and "path" in v.keys():
            fixtures.append(Fixture(**v))
        elif isinstance(v, dict):
            fixtures.extend(_flatten_registry(v))

    return fixtures


class Fixtures(Sequence[Fixture]):

    def __init__(self, fixture_list: Iterable[Fixture]) -> None:
        self._items: Tuple[Fixture, ...] = tuple(
            sorted(fixture_list, key=lambda f: f.order)
        )

    def __getitem__(self, index: int) -> Fixture:
        return self._items[index]

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Fixture]:
        return iter(self._items)

    def by_name(self, name: str) -> Fixture:
        for fixture in self._items:
            if fixture.name == name:
                return fixture
        raise KeyError(name)


_fixtures_by_group = _import_fixtures_from_registry()

CLASSICAL: Fixtures = Fixtures(_fixtures_by_group['classical'])
MODES: Fixtures = Fixtures(_fixtures_by_group['modes'])
INVALID: Fixtures = Fixtures(_fixtures_by_group['invalid'])
ALL_FIXTURES: Fixtures = Fixtures([f for group in _fixtures_by_group.values() for f in group])
