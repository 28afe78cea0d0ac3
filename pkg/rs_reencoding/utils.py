# Copyright 2024 The rs-reencoding Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You
# may not use this file except in compliance with the License. A copy of
# the License is located at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is
# distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
# ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.

import os
from typing import Sequence, Union

from rs_reencoding.exceptions import BadDimension

_TRUE_STRINGS = ("true", "1", "yes", "on")
_FALSE_STRINGS = ("false", "0", "no", "off", "")


def ensure_boolean(val: Union[bool, str, None]) -> bool:
    """Parse a boolean toggle; unrecognised strings raise ``ValueError``."""
    if val is None:
        return False
    if isinstance(val, bool):
        return val
    lowered = val.strip().lower()
    if lowered in _TRUE_STRINGS:
        return True
    if lowered in _FALSE_STRINGS:
        return False
    raise ValueError(f"Cannot interpret {val!r} as a boolean")


def env_flag(name: str) -> bool:
    """Read a boolean toggle such as ``RSRE_TRACE`` from the environment."""
    return ensure_boolean(os.environ.get(name))


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise BadDimension(
            f"Cannot compare words of length {len(a)} and {len(b)}"
        )
    return sum(1 for x, y in zip(a, b) if x != y)
