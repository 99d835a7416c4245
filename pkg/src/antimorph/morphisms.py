"""The anti-morphism calculus shared by groups and rings.

Classification, variance-tracked composition, *-composition, reverse
morphisms, kernels and images, enumeration, factorization classes, the
straight/anti correspondences, and the automorphism-group algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import kernels
from .errors import BoundExceeded, LawViolation, NoInvolution, NotComposable
from .groups import (
    FiniteGroup,
    Subgroup,
    generating_set,
    normality_witness,
    quotient,
    validate_group,
)
from .maps import ANTI, STRAIGHT, Morphism, variance_xor
from .rings import TWO_SIDED, FiniteRing, RingIdeal, opposite

HOM_ONLY = "HomOnly"
ANTI_ONLY = "AntiOnly"
BOTH = "Both"
NEITHER = "Neither"

DEFAULT_BOUND = 10 ** 6


def is_group(s) -> bool:
    return isinstance(s, FiniteGroup)


def is_ring(s) -> bool:
    return isinstance(s, FiniteRing)


# -- law checking -------------------------------------------------------------


def law_witness(images, a, b, variance: str):
    """First pair breaking the variance law (None when the law holds).

    For rings the law bundles additivity, unit preservation, and the
    (straight or reversed) multiplicative rule.
    """
    if is_group(a):
        for x in a.elements():
            for y in a.elements():
                z = images[a.mul(x, y)]
                if variance == STRAIGHT:
                    if b.mul(images[x], images[y]) != z:
                        return (x, y)
                else:
                    if b.mul(images[y], images[x]) != z:
                        return (x, y)
        return None
    if images[a.one] != b.one:
        return ("one", a.one)
    for x in a.elements():
        for y in a.elements():
            if images[a.add_(x, y)] != b.add_(images[x], images[y]):
                return ("add", x, y)
            z = images[a.mul_(x, y)]
            if variance == STRAIGHT:
                if b.mul_(images[x], images[y]) != z:
                    return ("mul", x, y)
            else:
                if b.mul_(images[y], images[x]) != z:
                    return ("mul", x, y)
    return None


def satisfies_law(images, a, b, variance: str) -> bool:
    return law_witness(images, a, b, variance) is None


def classify(images, a, b) -> str:
    """Exhaustive law check of a raw map; Both occurs where the laws coincide."""
    hom = satisfies_law(images, a, b, STRAIGHT)
    anti = satisfies_law(images, a, b, ANTI)
    if hom and anti:
        return BOTH
    if hom:
        return HOM_ONLY
    if anti:
        return ANTI_ONLY
    return NEITHER


def make_morphism(source, target, images, variance: str, name: str = "") -> Morphism:
    """Construct a morphism, refusing maps that break their declared law."""
    images = tuple(images)
    if len(images) != source.order:
        raise LawViolation(f"map table has {len(images)} entries, expected {source.order}")
    if any(not (0 <= v < target.order) for v in images):
        raise LawViolation("map table entry out of range")
    w = law_witness(images, source, target, variance)
    if w is not None:
        raise LawViolation(f"declared {variance} law fails at {w}", witness=w)
    return Morphism(source, target, images, variance, name)


# -- composition --------------------------------------------------------------


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f; variance is the XOR of the variances, re-validated."""
    if f.target != g.source:
        raise NotComposable(f"target of {f!r} differs from source of {g!r}")
    images = tuple(g.images[v] for v in f.images)
    variance = variance_xor(g.variance, f.variance)
    w = law_witness(images, f.source, g.target, variance)
    if w is not None:
        raise LawViolation(
            f"composite broke its {variance} law at {w}; this is an engine bug",
            witness=w)
    return Morphism(f.source, g.target, images, variance)


def reverse_morphism(a) -> Morphism:
    """The order-reversing unit: inversion on a group, the stored involution on a ring."""
    if is_group(a):
        return Morphism(a, a, a.inverses, ANTI, name="rev")
    if a.involution is None:
        raise NoInvolution(f"{a!r} carries no involution")
    return Morphism(a, a, a.involution, ANTI, name="rev")


def star_compose(g: Morphism, f: Morphism) -> Morphism:
    """(g∘f)∘rev: composes two anti-morphisms into an anti-morphism."""
    if not (g.is_anti and f.is_anti):
        raise NotComposable("star composition takes two anti-morphisms")
    return compose(compose(g, f), reverse_morphism(f.source))


def corresponding_anti(f: Morphism) -> Morphism:
    """f ↦ f∘rev, the order-reversing twin of a straight morphism."""
    if f.is_anti:
        raise NotComposable("expected a straight morphism")
    return compose(f, reverse_morphism(f.source))


def corresponding_hom(fstar: Morphism) -> Morphism:
    """fstar ↦ fstar∘rev; mutually inverse with corresponding_anti."""
    if not fstar.is_anti:
        raise NotComposable("expected an anti-morphism")
    return compose(fstar, reverse_morphism(fstar.source))


# -- kernels, images, cokernels ------------------------------------------------


def kernel(m: Morphism):
    """Normal subgroup (groups) or two-sided ideal (rings) of elements sent to 1/0."""
    if is_group(m.source):
        members = tuple(sorted(x for x in m.source.elements()
                               if m.images[x] == m.target.identity))
        return Subgroup(m.source, members)
    members = tuple(sorted(x for x in m.source.elements()
                           if m.images[x] == m.target.zero))
    return RingIdeal(m.source, members, TWO_SIDED)


def image(m: Morphism):
    """Subgroup of the target (groups) or subring member tuple (rings)."""
    members = tuple(sorted(set(m.images)))
    if is_group(m.target):
        return Subgroup(m.target, members)
    return members


@dataclass(frozen=True)
class CokernelResult:
    defined: bool
    quotient: object = None
    projection: Morphism | None = None
    witness: object = None


def cokernel(m: Morphism) -> CokernelResult:
    """target/image when that quotient exists; otherwise undefined with a witness."""
    if is_group(m.target):
        im = image(m)
        w = normality_witness(m.target, im)
        if w is not None:
            return CokernelResult(False, witness=w)
        q, proj = quotient(m.target, im)
        return CokernelResult(True, q, proj)
    from .rings import ideal_witness, quotient_ring

    members = image(m)
    w = ideal_witness(m.target, members, TWO_SIDED)
    if w is not None:
        return CokernelResult(False, witness=w)
    q, proj = quotient_ring(m.target, RingIdeal(m.target, members, TWO_SIDED))
    return CokernelResult(True, q, proj)


# -- enumeration ---------------------------------------------------------------


def enumerate_morphisms(a, b, variance: str, bound: int = DEFAULT_BOUND):
    """Complete, duplicate-free, canonically sorted morphism set.

    Straight morphisms come from generator-image extension with full law
    checking; anti-morphisms from the straight set via the reverse-map
    bijection (groups) or via maps into the opposite ring (rings).
    """
    if is_group(a):
        if variance == STRAIGHT:
            tables = _group_hom_tables(a, b, bound)
        else:
            inv = a.inverses
            tables = [tuple(t[inv[x]] for x in a.elements())
                      for t in _group_hom_tables(a, b, bound)]
    else:
        if variance == STRAIGHT:
            tables = _ring_hom_tables(a, b, bound)
        else:
            tables = _ring_hom_tables(a, opposite(b), bound)
    return tuple(Morphism(a, b, t, variance) for t in sorted(set(tables)))


def brute_force_tables(a: FiniteGroup, b: FiniteGroup):
    """Oracle: full scan of all |B|**|A| maps; returns (hom, anti) table lists."""
    homs, antis = kernels.scan_morphism_space(
        a.order, b.order, kernels.flatten(a.cayley), kernels.flatten(b.cayley))
    return homs, antis


def _group_hom_tables(a: FiniteGroup, b: FiniteGroup, bound: int):
    gens = generating_set(a)
    if b.order ** len(gens) > bound:
        raise BoundExceeded(
            f"{b.order}**{len(gens)} candidate extensions exceed bound {bound}")
    words = _word_parents(a, gens)
    out = []
    for assignment in itertools.product(b.elements(), repeat=len(gens)):
        f = [None] * a.order
        f[a.identity] = b.identity
        ok = True
        for z in words["order"]:
            parent, gi = words["expr"][z]
            f[z] = b.mul(f[parent], assignment[gi])
        for x in a.elements():
            if not ok:
                break
            for y in a.elements():
                if b.mul(f[x], f[y]) != f[a.mul(x, y)]:
                    ok = False
                    break
        if ok:
            out.append(tuple(f))
    return out


def _word_parents(a: FiniteGroup, gens):
    expr = {}
    order = []
    frontier = [a.identity]
    seen = {a.identity}
    while frontier:
        nxt = []
        for x in frontier:
            for gi, y in enumerate(gens):
                z = a.mul(x, y)
                if z not in seen:
                    seen.add(z)
                    expr[z] = (x, gi)
                    order.append(z)
                    nxt.append(z)
        frontier = nxt
    return {"expr": expr, "order": order}


def _ring_hom_tables(a: FiniteRing, b: FiniteRing, bound: int,
                     unital: bool = True):
    """Unital ring morphism tables A -> B by generator-image extension."""
    base = {a.zero, a.one} if unital else {a.zero}
    gens, plan = _ring_generating_plan(a, base)
    if b.order ** len(gens) > bound:
        raise BoundExceeded(
            f"{b.order}**{len(gens)} candidate extensions exceed bound {bound}")
    out = []
    for assignment in itertools.product(b.elements(), repeat=len(gens)):
        f = [None] * a.order
        f[a.zero] = b.zero
        if unital:
            f[a.one] = b.one
        for gi, g in enumerate(gens):
            f[g] = assignment[gi]
        for z, (op, i, j) in plan:
            f[z] = b.add_(f[i], f[j]) if op == "+" else b.mul_(f[i], f[j])
        if _ring_law_ok(f, a, b, unital):
            out.append(tuple(f))
    return out


def _ring_generating_plan(a: FiniteRing, base):
    """Greedy generators plus a provenance plan expressing every element."""
    gens = []
    plan = []

    def close(known):
        changed = True
        while changed:
            changed = False
            known_list = sorted(known)
            for x in known_list:
                for y in known_list:
                    for op, z in (("+", a.add_(x, y)), ("*", a.mul_(x, y))):
                        if z not in known:
                            known.add(z)
                            plan.append((z, (op, x, y)))
                            changed = True
        return known

    known = close(set(base))
    while len(known) < a.order:
        nxt = min(x for x in a.elements() if x not in known)
        gens.append(nxt)
        known.add(nxt)
        known = close(known)
    return gens, plan


def _ring_law_ok(f, a, b, unital) -> bool:
    if unital and f[a.one] != b.one:
        return False
    for x in a.elements():
        for y in a.elements():
            if f[a.add_(x, y)] != b.add_(f[x], f[y]):
                return False
            if f[a.mul_(x, y)] != b.mul_(f[x], f[y]):
                return False
    return True


def nonunital_morphism_tables(a: FiniteRing, b: FiniteRing, variance: str,
                              bound: int = DEFAULT_BOUND):
    """Maps preserving + and (reversing) * with no unit constraint.

    This is the set the pointwise audit ranges over: dropping the unit
    constraint is what lets the zero map (the additive identity of the
    pointwise operations) belong to the set at all.
    """
    target = b if variance == STRAIGHT else opposite(b)
    return sorted(set(_ring_hom_tables(a, target, bound, unital=False)))


# -- factorization classes -----------------------------------------------------


@dataclass(frozen=True)
class FactorClass:
    composite: Morphism
    middle: object
    pairs: tuple = field(default_factory=tuple)  # ((f: A->B, g: B->C), ...)


def factorization_classes(a, b, c, bound: int = DEFAULT_BOUND):
    """Partition all composable anti-pairs through b by their straight composite."""
    an_ab = enumerate_morphisms(a, b, ANTI, bound)
    an_bc = enumerate_morphisms(b, c, ANTI, bound)
    buckets: dict[tuple, list] = {}
    for f in an_ab:
        for g in an_bc:
            comp = compose(g, f)
            buckets.setdefault(comp.images, []).append((f, g))
    out = []
    for images in sorted(buckets):
        pairs = tuple(sorted(buckets[images], key=lambda p: (p[0].images, p[1].images)))
        comp = Morphism(a, c, images, STRAIGHT)
        out.append(FactorClass(comp, b, pairs))
    return tuple(out)


def law_of_factorization(f: Morphism, b, bound: int = DEFAULT_BOUND) -> FactorClass:
    """The class [f] of anti-pairs through b whose composite is f."""
    for cls in factorization_classes(f.source, b, f.target, bound):
        if cls.composite.images == f.images:
            return cls
    return FactorClass(f, b, ())


# -- automorphism algebra --------------------------------------------------------


@dataclass(frozen=True)
class AutomorphismAlgebra:
    autos: tuple
    anti_autos: tuple
    straight_group: FiniteGroup      # (isomorphisms, usual composition)
    star_group: FiniteGroup          # (anti-isomorphisms, star composition)
    iso_images: tuple                # straight_group -> star_group index map
    union_group: FiniteGroup | None  # both families under usual composition
    union_tables: tuple
    straight_normal_in_union: bool
    families_disjoint: bool


def automorphism_algebra(g: FiniteGroup, bound: int = DEFAULT_BOUND) -> AutomorphismAlgebra:
    """Build (Hom.Is, ∘) and (An.Is, *) with the connecting isomorphism,
    plus the union group under usual composition."""
    autos = tuple(m for m in enumerate_morphisms(g, g, STRAIGHT, bound) if m.is_bijective())
    antis = tuple(m for m in enumerate_morphisms(g, g, ANTI, bound) if m.is_bijective())

    straight_group = _table_group(autos, compose, name="homis")
    star_group = _table_group(antis, star_compose, name="anis")

    anti_index = {m.images: i for i, m in enumerate(antis)}
    iso_images = tuple(anti_index[corresponding_anti(m).images] for m in autos)

    auto_tables = {m.images for m in autos}
    anti_tables = {m.images for m in antis}
    union_tables = tuple(sorted(auto_tables | anti_tables))
    pos = {t: i for i, t in enumerate(union_tables)}
    n = len(union_tables)
    table = [[0] * n for _ in range(n)]
    for i, t1 in enumerate(union_tables):
        for j, t2 in enumerate(union_tables):
            comp = tuple(t1[v] for v in t2)
            if comp not in pos:
                raise LawViolation("union of families not closed under composition",
                                   witness=(t1, t2))
            table[i][j] = pos[comp]
    union_group = validate_group(table, name="unionis")
    straight_members = tuple(sorted(pos[t] for t in auto_tables))
    w = normality_witness(union_group, Subgroup(union_group, straight_members))
    return AutomorphismAlgebra(
        autos=autos,
        anti_autos=antis,
        straight_group=straight_group,
        star_group=star_group,
        iso_images=iso_images,
        union_group=union_group,
        union_tables=union_tables,
        straight_normal_in_union=w is None,
        families_disjoint=not (auto_tables & anti_tables),
    )


def _table_group(morphisms, op, name: str) -> FiniteGroup:
    index = {m.images: i for i, m in enumerate(morphisms)}
    n = len(morphisms)
    table = [[0] * n for _ in range(n)]
    for i, m1 in enumerate(morphisms):
        for j, m2 in enumerate(morphisms):
            comp = op(m1, m2)
            if comp.images not in index:
                raise LawViolation(f"{name} not closed", witness=(i, j))
            table[i][j] = index[comp.images]
    return validate_group(table, name=name)


def group_isomorphic_by_tables(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Exhaustive isomorphism test used by the algebra checks."""
    from .groups import find_isomorphism

    return find_isomorphism(g, h) is not None


# -- pointwise ring audit ---------------------------------------------------------


@dataclass(frozen=True)
class ClosureAudit:
    variance: str
    size: int
    has_zero_map: bool
    add_closed: bool
    add_witness: object
    mul_closed: bool
    mul_witness: object
    has_mul_identity: bool
    forms_unital_ring: bool


@dataclass(frozen=True)
class PointwiseAudit:
    source: str
    target: str
    straight: ClosureAudit
    anti: ClosureAudit
    correspondence_is_ring_iso: bool | None


def pointwise_ring_audit(a: FiniteRing, b: FiniteRing,
                         bound: int = DEFAULT_BOUND) -> PointwiseAudit:
    """Audit whether pointwise + and * close on the morphism sets.

    The claim under audit is reported, never asserted: non-commutative (and
    most commutative) targets fail with explicit witnesses.
    """
    straight = _closure_audit(a, b, STRAIGHT, bound)
    anti = _closure_audit(a, b, ANTI, bound)
    corr = None
    if a.involution is not None:
        sigma = a.involution
        hom_tables = nonunital_morphism_tables(a, b, STRAIGHT, bound)
        anti_tables = set(nonunital_morphism_tables(a, b, ANTI, bound))
        mapped = {tuple(t[sigma[x]] for x in a.elements()) for t in hom_tables}
        corr = mapped == anti_tables and len(mapped) == len(hom_tables)
    return PointwiseAudit(a.name, b.name, straight, anti, corr)


def _closure_audit(a, b, variance, bound) -> ClosureAudit:
    tables = nonunital_morphism_tables(a, b, variance, bound)
    in_set = set(tables)
    zero_map = tuple(b.zero for _ in a.elements())
    add_witness = None
    mul_witness = None
    for t1 in tables:
        for t2 in tables:
            if add_witness is None:
                s = tuple(b.add_(t1[x], t2[x]) for x in a.elements())
                if s not in in_set:
                    add_witness = (t1, t2, s)
            if mul_witness is None:
                p = tuple(b.mul_(t1[x], t2[x]) for x in a.elements())
                if p not in in_set:
                    mul_witness = (t1, t2, p)
    has_identity = any(
        all(tuple(b.mul_(e[x], t[x]) for x in a.elements()) == t
            and tuple(b.mul_(t[x], e[x]) for x in a.elements()) == t
            for t in tables)
        for e in tables)
    return ClosureAudit(
        variance=variance,
        size=len(tables),
        has_zero_map=zero_map in in_set,
        add_closed=add_witness is None,
        add_witness=add_witness,
        mul_closed=mul_witness is None,
        mul_witness=mul_witness,
        has_mul_identity=has_identity,
        forms_unital_ring=(add_witness is None and mul_witness is None
                           and zero_map in in_set and has_identity),
    )


@dataclass(frozen=True)
class NaturalMapReport:
    ring: str
    ideal: tuple
    domain_size: int
    well_defined: bool
    lands_in_anti_set: bool
    additive: bool
    multiplicative: bool
    witness: object = None


def natural_an_map(r: FiniteRing, ideal: RingIdeal,
                   bound: int = DEFAULT_BOUND) -> NaturalMapReport:
    """Audit f ↦ (x ↦ f(x)+I) from An(R,R) to An(R,R/I)."""
    from .rings import quotient_ring

    q, proj = quotient_ring(r, ideal)
    domain = enumerate_morphisms(r, r, ANTI, bound)
    target_tables = {m.images for m in enumerate_morphisms(r, q, ANTI, bound)}
    lands = True
    witness = None
    images = []
    for f in domain:
        phi = tuple(proj.images[f.images[x]] for x in r.elements())
        images.append(phi)
        if phi not in target_tables:
            lands = False
            witness = (f.images, phi)
    additive = True
    multiplicative = True
    for f1 in domain:
        for f2 in domain:
            s = tuple(r.add_(f1.images[x], f2.images[x]) for x in r.elements())
            p = tuple(r.mul_(f1.images[x], f2.images[x]) for x in r.elements())
            phi1 = tuple(proj.images[v] for v in f1.images)
            phi2 = tuple(proj.images[v] for v in f2.images)
            if tuple(proj.images[v] for v in s) != \
                    tuple(q.add_(phi1[x], phi2[x]) for x in r.elements()):
                additive = False
            if tuple(proj.images[v] for v in p) != \
                    tuple(q.mul_(phi1[x], phi2[x]) for x in r.elements()):
                multiplicative = False
    return NaturalMapReport(r.name, ideal.members, len(domain),
                            True, lands, additive, multiplicative, witness)
