"""Finite groupoids, generalized morphisms and their 2-categorical calculus."""

from .core import (
    CoarseSpace,
    FiniteGroupoid,
    GroupoidAction,
    action_groupoid,
    classifying_groupoid,
    coarse_space,
    discrete,
    disjoint_union,
    isotropy_group,
    pair_groupoid,
    product,
    restrict,
    trivial,
    validate,
)
from .functors import (
    NaturalTransformation,
    StrictMorphism,
    compose_strict,
    enumerate_nat_trans,
    identity,
    is_equivalence,
    is_full_equivalence,
    morita_equivalent,
    quasi_inverse,
)
from .morphisms import GenMorphism, MorArrow, MorRoster, identity_morphism

__all__ = [
    "CoarseSpace",
    "FiniteGroupoid",
    "GenMorphism",
    "GroupoidAction",
    "MorArrow",
    "MorRoster",
    "NaturalTransformation",
    "StrictMorphism",
    "action_groupoid",
    "classifying_groupoid",
    "coarse_space",
    "compose_strict",
    "discrete",
    "disjoint_union",
    "enumerate_nat_trans",
    "identity",
    "identity_morphism",
    "is_equivalence",
    "is_full_equivalence",
    "isotropy_group",
    "morita_equivalent",
    "pair_groupoid",
    "product",
    "quasi_inverse",
    "restrict",
    "trivial",
    "validate",
]
