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
"""Implementation of Config."""

from __future__ import annotations

import json
from typing import Any

from discfrac.typing import FAMILIES, FORMULATIONS, KINDS, SIDES
from discfrac.utils.tools import config_path, load_yaml


RANGE_KEYS = ('length', 'alpha', 'value_range', 'anchor', 't', 'lag', 'K')


class Config(dict):
    """Config class for storing settings.

    discfrac keeps its defaults in ``yaml`` files under ``discfrac/configs`` and loads them into a
    Config object, which allows attribute access to nested keys.

    Attributes:
        trials (int): Number of randomized trials of an identity check.
        tolerance (float): Relative error bound of an identity check.
        generator (Config): Input distribution of an identity check.
        sizes (list[int]): Grid lengths benchmarked by ``bench``.
        alpha (float): Order used by ``bench``.

    Keyword Args:
        kwargs (Any): keyword arguments to set the attributes.
    """

    trials: int
    tolerance: float
    generator: Config
    sizes: list[int]
    alpha: float

    def __init__(self, **kwargs: Any) -> None:
        """Initialize an instance of :class:`Config`."""
        for key, value in kwargs.items():
            if isinstance(value, dict):
                self[key] = Config.dict2config(value)
            else:
                self[key] = value

    def __getattr__(self, name: str) -> Any:
        """Get attribute."""
        try:
            return self[name]
        except KeyError:
            return super().__getattribute__(name)

    def __setattr__(self, name: str, value: Any) -> None:
        """Set attribute."""
        self[name] = value

    def get(self, name: str, default: Any = None) -> Any:
        """Get attribute."""
        try:
            return self[name]
        except KeyError:
            return default

    def todict(self) -> dict[str, Any]:
        """Convert Config to dictionary.

        Returns:
            The dictionary of Config.
        """
        config_dict: dict[str, Any] = {}
        for key, value in self.items():
            if isinstance(value, Config):
                config_dict[key] = value.todict()
            else:
                config_dict[key] = value
        return config_dict

    def tojson(self) -> str:
        """Convert Config to json string.

        Returns:
            The json string of Config.
        """
        return json.dumps(self.todict(), indent=4)

    @staticmethod
    def dict2config(config_dict: dict[str, Any]) -> Config:
        """Convert dictionary to Config.

        Args:
            config_dict (dict[str, Any]): The dictionary to be converted.

        Returns:
            The converted config.
        """
        config = Config()
        for key, value in config_dict.items():
            if isinstance(value, dict):
                config[key] = Config.dict2config(value)
            else:
                config[key] = value
        return config

    def recurisve_update(self, update_args: dict[str, Any]) -> None:
        """Recursively update args.

        Args:
            update_args (dict[str, Any]): Args to be updated.
        """
        for key, value in update_args.items():
            current = self.get(key)
            if isinstance(value, dict) and isinstance(current, Config):
                current.recurisve_update(value)
            elif isinstance(value, dict):
                self[key] = Config.dict2config(value)
            else:
                self[key] = value


class RunConfig(Config):
    """Settings of one command line run.

    Attributes:
        subcommand (str): One of ``apply``, ``weights``, ``verify`` and ``bench``.
        family (str): Operator family.
        side (str): Operator side.
        kind (str): Operator kind.
        formulation (str): Operator formulation.
        alpha (float): Operator order.
        input_path (str): Input sequence file.
        output_path (str): Output file.
        seed (int): Seed of the verification suite.
        fmt (str): Output format, ``csv`` or ``json``.
        ids (list[str]): Verification ids; empty means all.
    """

    subcommand: str
    family: str
    side: str
    kind: str
    formulation: str
    input_path: str | None
    output_path: str | None
    seed: int
    fmt: str
    ids: list[str]


def get_default_kwargs_yaml(name: str, section: str | None = None) -> Config:
    """Get the default kwargs from ``configs/<name>.yaml``.

    The file holds a ``defaults`` block and optional per-section blocks which are recursively
    laid over the defaults, e.g. the overrides of one identity check.

    Args:
        name (str): The config file name without extension.
        section (str or None, optional): The section to lay over the defaults. Defaults to None.

    Returns:
        The merged config.
    """
    kwargs = load_yaml(config_path(name))
    default_kwargs = Config.dict2config(kwargs.get('defaults', {}))
    section_kwargs = kwargs.get(section) if section is not None else None
    if section_kwargs is not None:
        default_kwargs.recurisve_update(section_kwargs)
    return default_kwargs


def check_check_config(configs: Config) -> None:
    """Check the config of an identity check.

    .. note::
        - ``trials`` must be a positive int.
        - ``tolerance`` must be a positive float.
        - every range of ``generator`` named in ``RANGE_KEYS`` must satisfy ``low <= high``.

    Args:
        configs (Config): The config to be checked.
    """
    assert (
        isinstance(configs.trials, int) and configs.trials >= 1
    ), 'trials must be a positive int!'
    assert (
        isinstance(configs.tolerance, (int, float)) and configs.tolerance > 0
    ), 'tolerance must be a positive number!'
    generator = configs.get('generator', Config())
    for key in RANGE_KEYS:
        bounds = generator.get(key)
        if bounds is not None:
            assert (
                len(bounds) == 2 and bounds[0] <= bounds[1]
            ), f'generator:{key} must be [low, high]!'


def check_run_config(configs: RunConfig) -> None:
    """Check the config of a command line run.

    .. note::
        - ``apply`` requires an input path and a complete operator spec.
        - ``verify`` accepts a list of ids.
        - ``fmt`` must be ``csv`` or ``json``.

    Args:
        configs (RunConfig): The config to be checked.
    """
    assert configs.subcommand in {'apply', 'weights', 'verify', 'bench'}, 'unknown subcommand!'
    if configs.subcommand == 'apply':
        assert configs.get('input_path'), 'apply requires an input path!'
        assert configs.get('output_path'), 'apply requires an output path!'
        assert configs.get('family') in FAMILIES, f'family must be one of {FAMILIES}!'
        assert configs.get('side') in SIDES, f'side must be one of {SIDES}!'
        assert configs.get('kind') in KINDS, f'kind must be one of {KINDS}!'
        assert (
            configs.get('formulation') in FORMULATIONS
        ), f'formulation must be one of {FORMULATIONS}!'
        assert configs.get('alpha') is not None, 'apply requires an order!'
    if configs.subcommand == 'verify':
        assert isinstance(configs.get('ids', []), list), 'ids must be a list!'
    assert configs.get('fmt', 'csv') in {'csv', 'json'}, 'fmt must be csv or json!'
