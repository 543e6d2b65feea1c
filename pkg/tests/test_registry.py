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
"""Test registry."""

import pytest

from discfrac.common.registry import Registry
from discfrac.operators import FORMULATION_REGISTRY


def test_with_error() -> None:
    registry = Registry('test')
    with pytest.raises(TypeError):
        registry.register('test')(1)
    with pytest.raises(TypeError):
        registry.register(1)  # type: ignore[arg-type]
    with pytest.raises(KeyError):
        registry.get('test')

    @registry.register('test')
    def check() -> int:
        return 1

    with pytest.raises(KeyError):
        registry.register('test')(check)


def test_lookup() -> None:
    registry = Registry('check')

    @registry.register('demo')
    def demo() -> int:
        return 1

    assert registry.name == 'check'
    assert registry.get('demo')() == 1
    assert 'demo' in registry
    assert 'other' not in registry
    assert registry.keys() == ['demo']
    assert list(registry) == ['demo']
    assert len(registry) == 1


def test_formulations() -> None:
    assert FORMULATION_REGISTRY.keys() == ['riemann', 'binomial']
