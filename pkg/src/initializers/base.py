"""组件初始化器基类"""

import logging
import time
from abc import ABC, abstractmethod
from collections import deque
from typing import Any, Dict, List, Optional, Type

from ..errors import InputError

logger = logging.getLogger("alasso-inference")


class ComponentInitializer(ABC):
    """组件初始化器基类

    每个组件（storage、solver、bootstrap、simulation、commands）实现自己的初始化器，
    声明名称与依赖，并从配置中构造组件实例。
    """

    def __init__(self, config: Any):
        self.config = config

    @property
    @abstractmethod
    def name(self) -> str:
        """组件名称，也是它在上下文中的键"""
        pass

    @property
    def dependencies(self) -> List[str]:
        return []

    @property
    def enabled(self) -> bool:
        return True

    @abstractmethod
    async def initialize(self, context: Dict[str, Any]) -> Any:
        """
        构造组件

        Args:
            context: 包含 config 与已初始化的依赖组件

        Returns:
            组件实例
        """
        pass

    def _get_component(self, context: Dict[str, Any], name: str) -> Optional[Any]:
        return context.get(name)


class InitializerRegistry:
    """初始化器注册表，按依赖顺序构造全部组件"""

    def __init__(self):
        self._initializers: Dict[str, ComponentInitializer] = {}
        self._initialized_components: Dict[str, Any] = {}
        self.timings: Dict[str, float] = {}

    def register(self, initializer: ComponentInitializer):
        self._initializers[initializer.name] = initializer
        logger.debug(f"已注册初始化器: {initializer.name}")

    def auto_register(self, initializer_classes: List[Type[ComponentInitializer]], config: Any):
        """实例化并注册初始化器类，跳过 enabled 为 False 的组件"""
        for initializer_class in initializer_classes:
            initializer = initializer_class(config)
            if initializer.enabled:
                self.register(initializer)
            else:
                logger.info(f"跳过禁用的组件: {initializer.name}")

    async def initialize_all(self, config: Any) -> Dict[str, Any]:
        """
        按依赖顺序初始化所有组件

        Returns:
            {组件名: 组件实例}
        """
        context: Dict[str, Any] = {"config": config}
        for name in self.initialization_order():
            initializer = self._initializers[name]
            started = time.perf_counter()
            try:
                component = await initializer.initialize(context)
            except Exception as e:
                logger.error(f"✗ {name} 初始化失败: {e}")
                raise
            context[name] = component
            self._initialized_components[name] = component
            self.timings[name] = time.perf_counter() - started
            logger.debug(f"✓ {name} 初始化完成")
        return dict(self._initialized_components)

    def initialization_order(self) -> List[str]:
        """
        Kahn 拓扑排序；同一层按名称排序，顺序确定

        Raises:
            InputError: 依赖未注册或存在循环依赖
        """
        remaining: Dict[str, int] = {}
        dependents: Dict[str, List[str]] = {name: [] for name in self._initializers}
        for name, initializer in self._initializers.items():
            deps = list(initializer.dependencies)
            for dep in deps:
                if dep not in self._initializers:
                    raise InputError(f"组件 '{name}' 依赖的组件 '{dep}' 未注册")
                dependents[dep].append(name)
            remaining[name] = len(deps)

        ready = deque(sorted(name for name, count in remaining.items() if count == 0))
        order: List[str] = []
        while ready:
            current = ready.popleft()
            order.append(current)
            for name in sorted(dependents[current]):
                remaining[name] -= 1
                if remaining[name] == 0:
                    ready.append(name)

        if len(order) != len(self._initializers):
            cyclic = sorted(set(self._initializers) - set(order))
            raise InputError(f"存在循环依赖，无法初始化: {cyclic}")
        return order

    def get_component(self, name: str) -> Optional[Any]:
        return self._initialized_components.get(name)

    def get_all_components(self) -> Dict[str, Any]:
        return dict(self._initialized_components)
