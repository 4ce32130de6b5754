# Finite groups, G-modules and classical cocycles

from group_data.actions import GAction, sign_action, trivial_action, validate_action
from group_data.cocycles import (
    Cochain2,
    Cocycle3,
    coboundary2_classical,
    random_cochain2,
    validate_cocycle3,
    verify_cocycle3,
)
from group_data.finite_group import (
    FiniteGroup,
    cyclic,
    direct_product,
    from_abelian,
    symmetric,
    trivial_group,
    validate_group,
)

__all__ = [
    "Cochain2",
    "Cocycle3",
    "FiniteGroup",
    "GAction",
    "coboundary2_classical",
    "cyclic",
    "direct_product",
    "from_abelian",
    "random_cochain2",
    "sign_action",
    "symmetric",
    "trivial_action",
    "trivial_group",
    "validate_action",
    "validate_cocycle3",
    "verify_cocycle3",
]
