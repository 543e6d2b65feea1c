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
"""Identity-verification engine.

An :class:`IdentityCheck` pairs a registered trial function with its config from
``configs/checks.yaml``. Each trial evaluates both sides of one identity on freshly generated
input and returns a :class:`Trial`; :func:`run_check` keeps the worst relative error over all
trials and turns it into a :class:`VerificationReport`.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor as Pool
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from discfrac.common.exceptions import UnknownCheckError
from discfrac.common.registry import Registry
from discfrac.typing import Relation, Verdict
from discfrac.utils.config import Config, check_check_config, get_default_kwargs_yaml
from discfrac.utils.tools import stream_seed


CHECK_REGISTRY = Registry('identity check')
register_check = CHECK_REGISTRY.register

MAX_REDRAW_FACTOR: int = 50
"""A check gives up after ``MAX_REDRAW_FACTOR * trials`` draws, counting discarded ones."""


@dataclass
class Trial:
    """Both sides of an identity evaluated on one generated input.

    Attributes:
        lhs (np.ndarray): Left-hand side values.
        rhs (np.ndarray): Right-hand side values, same shape as ``lhs``.
        case (dict[str, Any]): JSON-ready description of the input.
        relation (str): ``'eq'`` for identities, ``'le'`` for ``lhs <= rhs``.
        exact (tuple of np.ndarray or None): Pair of arrays that must agree bit for bit, e.g.
            initial values that must vanish exactly.
    """

    lhs: Any
    rhs: Any
    case: dict[str, Any] = field(default_factory=dict)
    relation: Relation = 'eq'
    exact: Optional[tuple[Any, Any]] = None

    def error(self) -> float:
        """Relative error of the trial; ``inf`` for shape mismatches, NaN or exact violations."""
        if self.exact is not None:
            expected, got = (np.asarray(x, dtype=np.float64) for x in self.exact)
            if expected.shape != got.shape or not np.array_equal(expected, got):
                return math.inf
        return relative_error(self.lhs, self.rhs, self.relation)


def relative_error(lhs: Any, rhs: Any, relation: Relation = 'eq') -> float:
    """Largest pointwise relative error between ``lhs`` and ``rhs``.

    The denominator is ``max(|lhs|, |rhs|, 1)``, so identities that pass through zero are measured
    absolutely there. For ``relation='le'`` only the excess ``max(lhs - rhs, 0)`` counts.

    Examples:
        >>> relative_error([1.0, 100.0], [1.0, 101.0])
        0.009900990099009901
        >>> relative_error(2.0, 3.0, 'le')
        0.0

    Returns:
        The error, ``inf`` if shapes differ or any side is NaN.
    """
    left = np.atleast_1d(np.asarray(lhs, dtype=np.float64))
    right = np.atleast_1d(np.asarray(rhs, dtype=np.float64))
    if left.shape != right.shape:
        return math.inf
    if left.size == 0:
        return 0.0
    if not (np.all(np.isfinite(left)) and np.all(np.isfinite(right))):
        return math.inf
    diff = np.abs(left - right) if relation == 'eq' else np.maximum(left - right, 0.0)
    scale = np.maximum(np.maximum(np.abs(left), np.abs(right)), 1.0)
    return float(np.max(diff / scale))


TrialFn = Callable[[np.random.Generator, Config], Optional[Trial]]


@dataclass(frozen=True)
class IdentityCheck:
    """One registered identity with its input distribution.

    Args:
        id (str): Registry key such as ``'thm2.5-1'``.
        generator (Config): Input ranges handed to the trial function.
        tolerance (float): Bound on the maximum relative error.
        trials (int): Number of accepted trials.
        trial_fn (Callable): Draws one input and evaluates both sides; returns ``None`` for a draw
            that violates the identity's hypotheses.
    """

    id: str  # noqa: A003
    generator: Config
    tolerance: float
    trials: int
    trial_fn: TrialFn = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate tolerance and trial count."""
        assert self.tolerance > 0, 'tolerance must be positive!'
        assert self.trials >= 1, 'trials must be at least 1!'


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one :class:`IdentityCheck`.

    Attributes:
        id (str): The check id.
        trials (int): Accepted trials that were run.
        max_rel_error (float): Worst relative error over all trials.
        tolerance (float): The bound it was compared against.
        worst_case (dict[str, Any]): Input of the worst trial.
        verdict (str): ``'pass'`` iff ``max_rel_error <= tolerance``.
    """

    id: str  # noqa: A003
    trials: int
    max_rel_error: float
    tolerance: float
    worst_case: dict[str, Any]
    verdict: Verdict

    @property
    def passed(self) -> bool:
        """Whether the verdict is ``'pass'``."""
        return self.verdict == 'pass'

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a plain mapping; an infinite error becomes the string ``'inf'``."""
        return {
            'id': self.id,
            'trials': self.trials,
            'max_rel_error': self.max_rel_error if math.isfinite(self.max_rel_error) else 'inf',
            'tolerance': self.tolerance,
            'verdict': self.verdict,
            'worst_case': self.worst_case,
        }

    def to_json(self) -> str:
        """One JSON line."""
        return json.dumps(self.to_dict(), separators=(',', ':'))


def _load_checks() -> None:
    # registration happens on import
    from discfrac.verify import checks  # noqa: F401 # pylint: disable=import-outside-toplevel


def check_ids() -> list[str]:
    """All registered check ids in registration order."""
    _load_checks()
    return CHECK_REGISTRY.keys()


def make_check(check_id: str, overrides: dict[str, Any] | None = None) -> IdentityCheck:
    """Build the :class:`IdentityCheck` of ``check_id`` from its config.

    Args:
        check_id (str): A registered id.
        overrides (dict[str, Any] or None, optional): Laid over the check's config, e.g.
            ``{'trials': 10}``. Defaults to None.

    Raises:
        UnknownCheckError: If ``check_id`` is not registered.
    """
    _load_checks()
    if check_id not in CHECK_REGISTRY:
        raise UnknownCheckError(check_id)
    cfgs = get_default_kwargs_yaml('checks', check_id)
    if overrides:
        cfgs.recurisve_update(overrides)
    check_check_config(cfgs)
    return IdentityCheck(
        id=check_id,
        generator=cfgs.generator,
        tolerance=float(cfgs.tolerance),
        trials=int(cfgs.trials),
        trial_fn=CHECK_REGISTRY.get(check_id),
    )


def run_check(check: IdentityCheck, seed: int) -> VerificationReport:
    """Run all trials of ``check`` on the stream derived from ``seed`` and the check id.

    Draws rejected by the trial function are not counted. The report is a pure function of
    ``check`` and ``seed``.

    Examples:
        >>> report = run_check(make_check('thm2.5-3', {'trials': 5}), seed=1)
        >>> report.verdict
        'pass'

    Args:
        check (IdentityCheck): The check to run.
        seed (int): The run seed.

    Returns:
        The report of the check.
    """
    rng = np.random.default_rng(stream_seed(seed, check.id))
    max_error = 0.0
    worst_case: dict[str, Any] = {}
    accepted = 0
    for _ in range(MAX_REDRAW_FACTOR * check.trials):
        if accepted == check.trials:
            break
        trial = check.trial_fn(rng, check.generator)
        if trial is None:
            continue
        accepted += 1
        error = trial.error()
        if not worst_case or error > max_error:
            max_error, worst_case = error, trial.case

    if accepted == 0:
        max_error, worst_case = math.inf, {'reason': 'no draw satisfied the hypotheses'}
    verdict: Verdict = 'pass' if max_error <= check.tolerance else 'fail'
    return VerificationReport(
        id=check.id,
        trials=accepted,
        max_rel_error=max_error,
        tolerance=check.tolerance,
        worst_case=worst_case,
        verdict=verdict,
    )


def _run_by_id(check_id: str, seed: int, overrides: dict[str, Any] | None) -> VerificationReport:
    return run_check(make_check(check_id, overrides), seed)


def run_suite(
    ids: list[str] | None = None,
    seed: int = 0,
    workers: int = 1,
    overrides: dict[str, Any] | None = None,
) -> list[VerificationReport]:
    """Run several checks and return their reports in the order of ``ids``.

    Args:
        ids (list[str] or None, optional): Check ids; empty or None runs every registered check.
            Defaults to None.
        seed (int, optional): The run seed. Defaults to 0.
        workers (int, optional): Worker processes; results do not depend on it. Defaults to 1.
        overrides (dict[str, Any] or None, optional): Config laid over every check.
            Defaults to None.

    Returns:
        One report per id.

    Raises:
        UnknownCheckError: If any id is not registered; nothing is run then.
    """
    registered = check_ids()
    selected = list(ids) if ids else registered
    for check_id in selected:
        if check_id not in CHECK_REGISTRY:
            raise UnknownCheckError(check_id)
    if workers <= 1 or len(selected) <= 1:
        return [_run_by_id(check_id, seed, overrides) for check_id in selected]

    with Pool(max_workers=workers) as pool:
        futures = [
            pool.submit(_run_by_id, check_id, seed, overrides) for check_id in selected
        ]
        return [future.result() for future in futures]
