"""Python interface to the hall2max toolkit.

Decides whether every 2-maximal subgroup of a permutation group is a
Hall subgroup and verifies the associated structure theorem.
"""

try:
    from ._pyhall2max import *  # noqa: F401,F403
    from ._pyhall2max import __doc__ as _core_doc  # noqa: F401
except ImportError:  # running against a build-tree module on PYTHONPATH
    from _pyhall2max import *  # noqa: F401,F403

__all__ = [
    "Perm",
    "PermGroup",
    "InvalidInput",
    "CapExceeded",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "elementary_abelian",
    "direct_product",
    "psl2",
    "semidirect_affine",
    "affine_irreducible",
    "paper_example",
    "parse_group_file",
    "serialize_group",
    "lattice_summary",
    "verify_theorem",
    "check_hypothesis",
    "scan_default_corpus",
    "verify_psl_witnesses",
]
