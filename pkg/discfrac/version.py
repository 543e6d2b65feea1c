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
"""discfrac: discrete fractional sums and differences in Riemann and binomial form."""

__version__ = '0.1.0'
__license__ = 'Apache License, Version 2.0'
__author__ = 'discfrac Contributors'
__release__ = False


def _dev_version(base: str) -> str:
    """``base`` with a ``.devN+gHASH`` suffix taken from ``git describe``, if available."""
    import os  # pylint: disable=import-outside-toplevel
    import subprocess  # pylint: disable=import-outside-toplevel

    try:
        described = subprocess.check_output(
            ['git', 'describe', '--tags', '--abbrev=7'],  # noqa: S603,S607
            cwd=os.path.dirname(os.path.abspath(__file__)),
            stderr=subprocess.DEVNULL,
            text=True,
        ).strip()
    except (OSError, subprocess.CalledProcessError):
        return base
    tag, _, rest = described.lstrip('v').partition('-')
    if not rest:
        return tag
    distance, _, commit = rest.partition('-')
    major_minor, _, patch = tag.rpartition('.')
    if not patch.isdigit():
        return base
    return f'{major_minor}.{int(patch) + 1}.dev{distance}+{commit}'


if not __release__:
    __version__ = _dev_version(__version__)
