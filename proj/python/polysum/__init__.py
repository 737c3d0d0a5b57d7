"""Sums of practical and polygonal numbers.

Decomposition engines (practical + triangular, practical + two s-gonals),
the supporting exact arithmetic, and exhaustive representability surveys.
"""

from ._polysum import *  # noqa: F401,F403

__version__ = "0.1.0"
