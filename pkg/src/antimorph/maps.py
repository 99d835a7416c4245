"""The Morphism value: a total element-index map with a variance tag.

Variance is stored, not inferred: a map whose table happens to satisfy both
composition laws still participates in composition chains according to its
tag. Law checking lives in `antimorph.morphisms`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

STRAIGHT = "straight"
ANTI = "anti"

VARIANCES = (STRAIGHT, ANTI)


def variance_xor(a: str, b: str) -> str:
    """Composition variance: anti∘anti = straight, mixed = anti."""
    return ANTI if (a == ANTI) != (b == ANTI) else STRAIGHT


@dataclass(frozen=True)
class Morphism:
    source: object
    target: object
    images: tuple[int, ...]
    variance: str
    name: str = field(default="", compare=False)

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_anti(self) -> bool:
        return self.variance == ANTI

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def renamed(self, name: str) -> "Morphism":
        return Morphism(self.source, self.target, self.images, self.variance, name)

    def __repr__(self) -> str:  # keep witnesses readable in reports
        label = self.name or "map"
        return f"{label}[{self.variance}]{list(self.images)}"
