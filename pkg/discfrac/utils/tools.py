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
"""discfrac tools package."""

from __future__ import annotations

import hashlib
import os
import sys
from typing import Any, NoReturn

import yaml
from rich.console import Console


def custom_cfgs_to_dict(key_list: str, value: Any) -> dict[str, Any]:
    """Convert one ``key:sub value`` pair from the command line to a nested dict.

    For example ``generator:length`` and ``[8,16]`` become
    ``{'generator': {'length': [8, 16]}}``. Numbers inside lists are parsed as well.

    Args:
        key_list (str): Colon separated keys.
        value (Any): The raw value.

    Returns:
        The converted dict.
    """
    value = _parse_scalar(value)
    keys_split = key_list.replace('-', '_').split(':')
    return_dict = {keys_split[-1]: value}

    for key in reversed(keys_split[:-1]):
        return_dict = {key.replace('-', '_'): return_dict}
    return return_dict


def _parse_scalar(value: Any) -> Any:
    if not isinstance(value, str):
        return value
    if value == 'True':
        return True
    if value == 'False':
        return False
    if value.startswith('[') and value.endswith(']'):
        inner = value[1:-1].strip()
        return [_parse_scalar(item.strip()) for item in inner.split(',')] if inner else []
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        return value


def update_dict(total_dict: dict[str, Any], item_dict: dict[str, Any]) -> None:
    """Updater of multi-level dictionary.

    Examples:
        >>> total_dict = {'a': {'b': 1, 'c': 2}}
        >>> update_dict(total_dict, {'a': {'b': 3, 'd': 4}})
        >>> total_dict
        {'a': {'b': 3, 'c': 2, 'd': 4}}
    """
    for key, item_value in item_dict.items():
        total_value = total_dict.get(key)
        if isinstance(total_value, dict) and isinstance(item_value, dict):
            update_dict(total_value, item_value)
        else:
            total_dict[key] = item_value


def load_yaml(path: str) -> dict[str, Any]:
    """Load a ``yaml`` file.

    Args:
        path (str): The path of the ``yaml`` file.

    Returns:
        The parsed mapping.

    Raises:
        FileNotFoundError: If the ``yaml`` file is not found.
    """
    try:
        with open(path, encoding='utf-8') as file:
            kwargs = yaml.safe_load(file)
    except FileNotFoundError as exc:
        raise FileNotFoundError(f'{path} error: {exc}') from exc
    return kwargs or {}


def config_path(name: str) -> str:
    """Path of the bundled ``configs/<name>.yaml``."""
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.join(here, '..', 'configs', f'{name}.yaml')


def recursive_check_config(
    config: dict[str, Any],
    default_config: dict[str, Any],
    exclude_keys: tuple[str, ...] = (),
) -> None:
    """Check whether every key of ``config`` exists in ``default_config``.

    Args:
        config (dict[str, Any]): The config to be checked.
        default_config (dict[str, Any]): The default config.
        exclude_keys (tuple of str, optional): Keys allowed without a default. Defaults to ().

    Raises:
        AssertionError: If ``config`` is not a dict.
        KeyError: If a key is not in ``default_config``.
    """
    assert isinstance(config, dict), 'custom_cfgs must be a dict!'
    for key, value in config.items():
        if key not in default_config and key not in exclude_keys:
            raise KeyError(f'Invalid key: {key}')
        if isinstance(value, dict) and isinstance(default_config.get(key), dict):
            recursive_check_config(value, default_config[key])


def print_error(msg: str, console: Console | None = None) -> None:
    """Print ``ERROR: msg`` in bold red."""
    (console or Console(stderr=True)).print('ERROR: ' + msg, style='bold red')


def assert_with_exit(condition: bool, msg: str, code: int = 1) -> None:
    """Exit with ``code`` after printing ``msg`` unless ``condition`` holds.

    Examples:
        >>> assert_with_exit(1 == 2, '1 must equal to 2', code=2)
        ERROR: 1 must equal to 2

    Args:
        condition (bool): Condition to be checked.
        msg (str): Message to be printed.
        code (int, optional): Exit status. Defaults to 1.
    """
    if not condition:
        exit_with(msg, code)


def exit_with(msg: str, code: int) -> NoReturn:
    """Print ``msg`` as an error and exit with ``code``."""
    print_error(msg)
    sys.exit(code)


def hash_string(string: str) -> str:
    """Salted sha256 hex digest of ``string``.

    Args:
        string (str): String to be hashed.

    Returns:
        The hashed string.
    """
    salt = b'discfrac:identity-streams'
    return hashlib.sha256(salt + string.encode('utf-8')).hexdigest()


def stream_seed(seed: int, key: str) -> list[int]:
    """Entropy for an independent random stream of ``key`` under the run seed ``seed``.

    Adding or removing other keys never changes the stream of ``key``.
    """
    return [int(seed), int(hash_string(key)[:8], 16)]
