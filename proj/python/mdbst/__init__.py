# Copyright 2026 The Authors.
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

"""Minimum-cost spanning trees under per-vertex matroidal degree constraints.

Thin wrapper over the C++ core. Instances and results are plain dicts with
the same schema as the CLI's files; rationals are "p/q" strings.
"""

import json
from fractions import Fraction

from _mdbst import DomainError, ConfigError  # noqa: F401
from _mdbst import brute_force_opt as _brute_force_opt
from _mdbst import generate as _generate
from _mdbst import solve as _solve

__all__ = [
    "ConfigError",
    "DomainError",
    "brute_force_opt",
    "generate",
    "rational",
    "solve",
]


def rational(s):
    """Parses a rational string ("3/7" or "5") into a Fraction."""
    return Fraction(s)


def generate(kind, n, m, seed=0):
    """Deterministic feasible instance of the given constraint kind."""
    return json.loads(_generate(kind, n, m, seed))


def solve(instance, verify=False, trace=False, debug_asserts=False):
    """Solves an instance dict; returns the result document as a dict.

    result["status"] is "optimal" or "infeasible"; on success result["tree"]
    lists the chosen edge ids and result["violations"] maps each vertex to
    the number of tree edges that must be dropped to satisfy its original
    constraint (always at most 8).
    """
    return json.loads(
        _solve(json.dumps(instance), verify, trace, debug_asserts))


def brute_force_opt(instance):
    """Exact optimum over constraint-respecting spanning trees, or None."""
    out = _brute_force_opt(json.dumps(instance))
    return rational(out) if out else None
