"""Generalized p-adic hypergeometric functions of logarithmic type.

Rationals cross the boundary as "u/v" strings, residues come back as
python ints.  See the individual function docstrings in padichg._core.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - build-tree layout used by the tests
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
