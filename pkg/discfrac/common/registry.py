# Copyright 2024 discfrac Contributors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Registry for named callables."""

from __future__ import annotations

from typing import Any, Callable, Iterator, TypeVar


_F = TypeVar('_F', bound=Callable[..., Any])


class Registry:
    """A registry to map strings to callables.

    Identity checks and operator implementations are registered under a string key and looked up
    later by name, e.g. from the command line.

    Examples:
        >>> CHECKS = Registry('check')
        >>> @CHECKS.register('demo')
        ... def demo() -> int:
        ...     return 1
        >>> CHECKS.get('demo')()
        1

    Args:
        name (str): Registry name.
    """

    def __init__(self, name: str) -> None:
        """Initialize an instance of :class:`Registry`."""
        self._name: str = name
        self._module_dict: dict[str, Callable[..., Any]] = {}

    @property
    def name(self) -> str:
        """Return the name of the registry."""
        return self._name

    def get(self, key: str) -> Any:
        """Get the callable that has been registered under the given key."""
        res = self._module_dict.get(key)
        if res is None:
            raise KeyError(f'{key} is not in the {self.name} registry')
        return res

    def keys(self) -> list[str]:
        """Return the registered keys in registration order."""
        return list(self._module_dict)

    def __contains__(self, key: object) -> bool:
        """Return whether ``key`` is registered."""
        return key in self._module_dict

    def __iter__(self) -> Iterator[str]:
        """Iterate over the registered keys."""
        return iter(self._module_dict)

    def __len__(self) -> int:
        """Return the number of registered callables."""
        return len(self._module_dict)

    def _register_module(self, key: str, module: Callable[..., Any]) -> None:
        """Register a module.

        Args:
            key (str): Name to register the module under.
            module (Callable): Module to be registered.
        """
        if not isinstance(key, str):
            raise TypeError(f'registry key must be a str, but got {type(key)}')
        if not callable(module):
            raise TypeError(f'module must be callable, but got {type(module)}')
        if key in self._module_dict:
            raise KeyError(f'{key} is already registered in {self.name}')
        self._module_dict[key] = module

    def register(self, key: str) -> Callable[[_F], _F]:
        """Return a decorator registering a callable under ``key``."""

        def decorator(module: _F) -> _F:
            self._register_module(key, module)
            return module

        if not isinstance(key, str):
            raise TypeError(f'registry key must be a str, but got {type(key)}')
        return decorator
