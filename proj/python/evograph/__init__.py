"""Deterministic evolutionary games on finite graphs.

Exact-rational imitation / death-birth / birth-death dynamics under
synchronous, sequential and periodic update orders, with exhaustive
attractor, basin and cycle analysis and closed-form conditions
cross-checked against brute force.
"""

from evograph._core import *  # noqa: F401,F403

__version__ = "1.0.0"
