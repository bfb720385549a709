"""blocktrans: exact classification and verification of block-transitive
extensions of finite 2-transitive permutation groups."""

from .perms import Permutation, PermGroup, CosetSpace, coset_action, product_covers

__all__ = [
    "Permutation",
    "PermGroup",
    "CosetSpace",
    "coset_action",
    "product_covers",
]

__version__ = "0.1.0"
