"""组件初始化顺序"""
import pytest

from src.bootstrap import BootstrapEngine
from src.errors import InputError
from src.estimators import SolverSettings
from src.initializers import DEFAULT_INITIALIZERS, ComponentInitializer, InitializerRegistry
from src.simulation import StudySettings


class _Named(ComponentInitializer):
    def __init__(self, config, name, deps=()):
        super().__init__(config)
        self._name = name
        self._deps = list(deps)

    @property
    def name(self):
        return self._name

    @property
    def dependencies(self):
        return self._deps

    async def initialize(self, context):
        return self._name


def test_default_order_respects_dependencies(config):
    registry = InitializerRegistry()
    registry.auto_register(DEFAULT_INITIALIZERS, config)
    order = registry.initialization_order()
    assert order == ["solver", "storage", "bootstrap", "simulation", "commands"]


async def test_components_are_built(config):
    registry = InitializerRegistry()
    registry.auto_register(DEFAULT_INITIALIZERS, config)
    components = await registry.initialize_all(config)
    assert isinstance(components["solver"], SolverSettings)
    assert isinstance(components["bootstrap"], BootstrapEngine)
    assert components["bootstrap"].B == 120
    assert isinstance(components["simulation"], StudySettings)
    assert set(components["commands"]) == {"fit", "ci", "screen", "simulate", "diagnose", "edgeworth", "replay"}
    assert set(registry.timings) == set(components)


def test_missing_dependency_is_reported():
    registry = InitializerRegistry()
    registry.register(_Named(None, "a", ["ghost"]))
    with pytest.raises(InputError):
        registry.initialization_order()


def test_cycle_is_reported():
    registry = InitializerRegistry()
    registry.register(_Named(None, "a", ["b"]))
    registry.register(_Named(None, "b", ["a"]))
    with pytest.raises(InputError):
        registry.initialization_order()
