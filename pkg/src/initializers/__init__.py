"""组件初始化器模块

使用方式：
    registry = InitializerRegistry()
    registry.auto_register(DEFAULT_INITIALIZERS, config)
    components = await registry.initialize_all(config)
    commands = components["commands"]
"""

from .base import ComponentInitializer, InitializerRegistry
from .storage_initializer import StorageInitializer
from .solver_initializer import SolverInitializer
from .bootstrap_initializer import BootstrapInitializer
from .simulation_initializer import SimulationInitializer
from .commands_initializer import CommandsInitializer

DEFAULT_INITIALIZERS = [
    StorageInitializer,
    SolverInitializer,
    BootstrapInitializer,
    SimulationInitializer,
    CommandsInitializer,
]

__all__ = [
    "ComponentInitializer",
    "InitializerRegistry",
    "StorageInitializer",
    "SolverInitializer",
    "BootstrapInitializer",
    "SimulationInitializer",
    "CommandsInitializer",
    "DEFAULT_INITIALIZERS",
]
