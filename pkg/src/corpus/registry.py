"""
Named graph registry

Fixed fixtures are registered by exact name; parametric families such as
path_n are registered by family and resolved from names like "path_7".
"""
import logging
import re
from pathlib import Path
from typing import Callable, Dict, List, Union

from tqdm import tqdm

from ..graph_core import Graph
from .formats import GraphFormatError, save_graph

logger = logging.getLogger(__name__)

FixtureBuilder = Callable[[], Graph]
FamilyBuilder = Callable[[int], Graph]

_PARAMETRIC_NAME = re.compile(r"^([a-z][a-z0-9]*)_(\d+)$")


class FixtureRegistry:
    """Registry of named graph builders"""

    def __init__(self):
        self._fixtures: Dict[str, FixtureBuilder] = {}
        self._families: Dict[str, FamilyBuilder] = {}

    def register(self, name: str, builder: FixtureBuilder):
        if name in self._fixtures:
            logger.warning(f"Fixture {name} already registered, overwriting")
        self._fixtures[name] = builder

    def register_family(self, family: str, builder: FamilyBuilder):
        if family in self._families:
            logger.warning(f"Family {family} already registered, overwriting")
        self._families[family] = builder

    def fixture(self, name: str) -> Callable[[FixtureBuilder], FixtureBuilder]:
        def decorator(builder: FixtureBuilder) -> FixtureBuilder:
            self.register(name, builder)
            return builder
        return decorator

    def family(self, family: str) -> Callable[[FamilyBuilder], FamilyBuilder]:
        def decorator(builder: FamilyBuilder) -> FamilyBuilder:
            self.register_family(family, builder)
            return builder
        return decorator

    def get(self, name: str) -> Graph:
        if name in self._fixtures:
            return self._fixtures[name]()
        match = _PARAMETRIC_NAME.match(name)
        if match and match.group(1) in self._families:
            try:
                return self._families[match.group(1)](int(match.group(2)))
            except ValueError as e:
                raise GraphFormatError(f"Invalid size in {name}: {e}") from e
        raise GraphFormatError(f"Unknown graph name: {name}")

    def list_fixtures(self) -> List[str]:
        return sorted(self._fixtures)

    def list_families(self) -> List[str]:
        return sorted(f"{family}_n" for family in self._families)


registry = FixtureRegistry()


def named_graph(name: str) -> Graph:
    return registry.get(name)


def list_named_graphs() -> List[str]:
    return registry.list_fixtures() + registry.list_families()


def export_fixtures(directory: Union[str, Path], progress: bool = False) -> List[Path]:
    """Write every fixed-size fixture as <directory>/<name>.g6"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in tqdm(registry.list_fixtures(), desc="Exporting fixtures", disable=not progress):
        written.append(save_graph(registry.get(name), directory / f"{name}.g6"))
    logger.info(f"Exported {len(written)} fixtures to {directory}")
    return written
