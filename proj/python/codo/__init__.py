"""Exact construction, verification and spectral-curve analysis of commuting
pairs of 2x2 matrix ordinary differential operators.

All rationals cross the boundary as strings ("num/den" or plain integers) so
no precision is lost; operators carry the quadratic extension d of their
session and serialize to the same documents the CLI reads and writes.
"""

try:
    from ._codo import (
        CodoError,
        Operator,
        build_theorem2,
        build_theorem3,
        commutator_defect,
        commutes,
        find_relation,
        parse_operator,
    )
except ImportError:  # extension built out of tree (plain CMake build)
    from _codo import (
        CodoError,
        Operator,
        build_theorem2,
        build_theorem3,
        commutator_defect,
        commutes,
        find_relation,
        parse_operator,
    )

__all__ = [
    "CodoError",
    "Operator",
    "build_theorem2",
    "build_theorem3",
    "commutator_defect",
    "commutes",
    "find_relation",
    "parse_operator",
]

__version__ = "0.1.0"
