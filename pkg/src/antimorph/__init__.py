"""antimorph: a finite-algebra workbench for anti-homomorphisms.

Groups and rings are validated index tables; morphisms carry a variance tag
(straight or anti) and compose by the XOR rule; the semilinear module gives a
concrete twisted-map instance over F_q^2; the category engine handles
factorization categories, anti-categories, and the equip/forget adjunctions.
"""

from .groups import FiniteGroup, Subgroup, validate_group
from .maps import ANTI, STRAIGHT, Morphism
from .morphisms import classify, compose, enumerate_morphisms, reverse_morphism, star_compose
from .rings import FiniteRing, RingIdeal, validate_ring

__version__ = "0.1.0"

__all__ = [
    "ANTI",
    "STRAIGHT",
    "FiniteGroup",
    "FiniteRing",
    "Morphism",
    "RingIdeal",
    "Subgroup",
    "classify",
    "compose",
    "enumerate_morphisms",
    "reverse_morphism",
    "star_compose",
    "validate_group",
    "validate_ring",
    "__version__",
]
