"""Exact tensor calculus for contact pseudo-metric structures.

The compiled module carries the implementation; this package re-exports it.
All scalars cross the boundary as exact rational strings ("p/q"); reports
come back as plain dicts/lists mirroring the CLI's JSON output.
"""

try:
    from ._contactgeo import *  # noqa: F401,F403  (installed layout)
    from ._contactgeo import __doc__ as _doc
except ImportError:  # build-tree layout: module next to the package on sys.path
    from _contactgeo import *  # noqa: F401,F403
    from _contactgeo import __doc__ as _doc

__doc__ = _doc
__all__ = [
    "Manifold",
    "simplify",
    "diff",
    "evaluate",
    "expr_equal",
    "ParseError",
    "InvariantViolation",
    "NotContactError",
    "UnknownVariableError",
]
