"""Constructive verifiers for the named factorization and isomorphism
statements on groups and rings.

Each verifier builds the canonical map from the corresponding proof, then
checks well-definedness, the variance law, commutativity of the diagram,
bijectivity where claimed, and uniqueness by enumerating every competing
morphism of the same signature.
"""

from __future__ import annotations

from .errors import PreconditionFailed
from .groups import (
    FiniteGroup,
    Subgroup,
    find_isomorphism,
    is_normal,
    normality_witness,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    subgroup_intersection,
    subgroup_product,
)
from .maps import ANTI, STRAIGHT, Morphism
from .morphisms import (
    ANTI_ONLY,
    BOTH,
    DEFAULT_BOUND,
    classify,
    compose,
    corresponding_anti,
    enumerate_morphisms,
    image,
    kernel,
    reverse_morphism,
    star_compose,
)
from .rings import (
    FiniteRing,
    RingIdeal,
    all_ideals,
    all_subrings,
    ideal_witness,
    is_subring,
    quotient_ring,
    subring_as_ring,
)
from .verdict import TheoremReport, check

_ANTI_OK = (ANTI_ONLY, BOTH)


def _is_anti_table(images, a, b) -> bool:
    return classify(images, a, b) in _ANTI_OK


def _section_reps(proj: Morphism):
    """Least preimage for every element of the projection's target."""
    reps = {}
    for x in range(proj.source.order):
        reps.setdefault(proj.images[x], x)
    return [reps[i] for i in range(proj.target.order)]


def _unique_anti_solutions(src, dst, pre: Morphism, rhs: Morphism,
                           bound: int) -> list:
    """All anti-morphisms ell: src -> dst with ell ∘ pre = rhs."""
    out = []
    for ell in enumerate_morphisms(src, dst, ANTI, bound):
        if tuple(ell.images[v] for v in pre.images) == rhs.images:
            out.append(ell)
    return out


# -- factorization through a quotient -----------------------------------------


def verify_anti_factorization(structure, sub, phi: Morphism,
                              bound: int = DEFAULT_BOUND) -> TheoremReport:
    """Unique anti-morphism through the quotient, for groups and rings alike."""
    if not phi.is_anti:
        raise PreconditionFailed("phi must be an anti-morphism")
    ker = kernel(phi)
    members = sub.members
    outside = [x for x in members if x not in ker.members]
    if outside:
        raise PreconditionFailed(
            f"kernel does not contain the subgroup/ideal: element {outside[0]}",
            witness=outside[0])
    if isinstance(structure, FiniteGroup):
        q, proj = quotient(structure, sub)
    else:
        q, proj = quotient_ring(structure, sub)
    reps = _section_reps(proj)
    psi_images = tuple(phi.images[r] for r in reps)
    well_defined = all(psi_images[proj.images[x]] == phi.images[x]
                       for x in range(structure.order))
    psi = Morphism(q, phi.target, psi_images, ANTI, name="through")
    solutions = _unique_anti_solutions(q, phi.target, proj, phi, bound)
    checks = (
        check("well-defined", well_defined),
        check("through-map-is-anti", _is_anti_table(psi_images, q, phi.target)),
        check("diagram-commutes",
              tuple(psi_images[v] for v in proj.images) == phi.images),
        check("unique", len(solutions) == 1 and solutions[0].images == psi_images,
              witness=[s.images for s in solutions]),
    )
    return TheoremReport(
        theorem="anti-factorization",
        inputs=(("structure", structure.name), ("sub", str(members)),
                ("map", repr(phi))),
        checks=checks,
        constructed=(("projection", repr(proj)), ("through", repr(psi))),
        uniqueness_method="enumeration",
    )


# -- quotient by the kernel is the image ----------------------------------------


def verify_anti_hom_theorem(phi: Morphism, bound: int = DEFAULT_BOUND) -> TheoremReport:
    """Canonical anti-isomorphism source/kernel -> image, with corollaries."""
    if not phi.is_anti:
        raise PreconditionFailed("phi must be an anti-morphism")
    src, dst = phi.source, phi.target
    ker = kernel(phi)
    group_world = isinstance(src, FiniteGroup)
    if group_world:
        q, proj = quotient(src, ker)
        im_members = image(phi).members
        im_struct, incl = subgroup_as_group(dst, image(phi))
    else:
        q, proj = quotient_ring(src, ker)
        im_members = image(phi)
        im_struct, incl = subring_as_ring(dst, im_members)
    pos = {x: i for i, x in enumerate(im_members)}
    reps = _section_reps(proj)
    xi_images = tuple(pos[phi.images[r]] for r in reps)
    xi = Morphism(q, im_struct, xi_images, ANTI, name="canonical")
    well_defined = all(xi_images[proj.images[x]] == pos[phi.images[x]]
                       for x in range(src.order))
    recomposed = tuple(incl.images[xi_images[proj.images[x]]]
                       for x in range(src.order))
    solutions = []
    for ell in enumerate_morphisms(q, im_struct, ANTI, bound):
        if tuple(incl.images[ell.images[proj.images[x]]]
                 for x in range(src.order)) == phi.images:
            solutions.append(ell)
    checks = [
        check("well-defined", well_defined),
        check("canonical-map-is-anti", _is_anti_table(xi_images, q, im_struct)),
        check("bijective", xi.is_bijective()),
        check("diagram-commutes", recomposed == phi.images),
        check("unique", len(solutions) == 1 and solutions[0].images == xi_images,
              witness=[s.images for s in solutions]),
    ]
    if group_world and phi.is_injective():
        checks.append(check("injective-source-iso-image",
                            find_isomorphism(src, im_struct) is not None))
    if group_world and phi.is_surjective():
        checks.append(check("surjective-target-iso-quotient",
                            find_isomorphism(dst, q) is not None))
    return TheoremReport(
        theorem="anti-homomorphism",
        inputs=(("map", repr(phi)),),
        checks=tuple(checks),
        constructed=(("projection", repr(proj)), ("canonical", repr(xi)),
                     ("inclusion", repr(incl))),
        uniqueness_method="enumeration",
    )


# -- nested normal subgroups ------------------------------------------------------


def verify_second_anti_iso(a: FiniteGroup, b: Subgroup, c: Subgroup,
                           bound: int = DEFAULT_BOUND) -> TheoremReport:
    """A/B is anti-isomorphic to (A/C)/(B/C) for normal C inside normal B."""
    if not is_normal(a, b):
        raise PreconditionFailed("B is not normal", witness=normality_witness(a, b))
    if not is_normal(a, c):
        raise PreconditionFailed("C is not normal", witness=normality_witness(a, c))
    outside = [x for x in c.members if x not in b.members]
    if outside:
        raise PreconditionFailed("C is not inside B", witness=outside[0])

    b_grp, _ = subgroup_as_group(a, b)
    c_in_b = Subgroup(b_grp, tuple(sorted(b.members.index(x) for x in c.members)))
    q1, pi = quotient(a, c)                       # A/C
    q2, rho = quotient(a, b)                      # A/B
    rho_star = compose(rho, reverse_morphism(a))  # anti projection
    bc_members = tuple(sorted({pi.images[x] for x in b.members}))
    bc = Subgroup(q1, bc_members)                 # B/C inside A/C
    q3, tau = quotient(q1, bc)                    # (A/C)/(B/C)

    # sigma: A/C -> A/B through the anti projection
    sigma_images = [None] * q1.order
    sigma_ok = True
    for x in a.elements():
        v = rho_star.images[x]
        slot = pi.images[x]
        if sigma_images[slot] is None:
            sigma_images[slot] = v
        elif sigma_images[slot] != v:
            sigma_ok = False
    sigma = Morphism(q1, q2, tuple(sigma_images), ANTI, name="sigma")
    ker_sigma = kernel(sigma)

    # xi: A/B -> (A/C)/(B/C), defined through the surjection rho_star
    xi_images = [None] * q2.order
    xi_ok = True
    for x in a.elements():
        slot = rho_star.images[x]
        v = tau.images[pi.images[x]]
        if xi_images[slot] is None:
            xi_images[slot] = v
        elif xi_images[slot] != v:
            xi_ok = False
    xi = Morphism(q2, q3, tuple(xi_images), ANTI, name="xi")
    solutions = []
    rhs = compose(tau, pi)
    for ell in enumerate_morphisms(q2, q3, ANTI, bound):
        if tuple(ell.images[v] for v in rho_star.images) == rhs.images:
            solutions.append(ell)
    checks = (
        check("c-normal-in-b", is_normal(b_grp, c_in_b)),
        check("bc-normal-in-quotient", is_normal(q1, bc)),
        check("sigma-well-defined", sigma_ok),
        check("sigma-is-anti", _is_anti_table(sigma.images, q1, q2)),
        check("sigma-kernel-is-bc", ker_sigma.members == bc_members,
              witness=(ker_sigma.members, bc_members)),
        check("xi-well-defined", xi_ok),
        check("xi-is-anti", _is_anti_table(xi.images, q2, q3)),
        check("xi-bijective", xi.is_bijective()),
        check("diagram-commutes",
              tuple(xi.images[v] for v in rho_star.images) == rhs.images),
        check("unique", len(solutions) == 1 and solutions[0].images == xi.images,
              witness=[s.images for s in solutions]),
    )
    return TheoremReport(
        theorem="second-anti-isomorphism",
        inputs=(("group", a.name), ("b", str(b.members)), ("c", str(c.members))),
        checks=checks,
        constructed=(("sigma", repr(sigma)), ("xi", repr(xi))),
        uniqueness_method="enumeration",
    )


# -- subgroup times normal subgroup ------------------------------------------------


def verify_third_anti_iso(g: FiniteGroup, a: Subgroup, n: Subgroup,
                          bound: int = DEFAULT_BOUND) -> TheoremReport:
    """AN/N is anti-isomorphic to A/(A∩N).

    The statement's arrow runs AN/N -> A/(A∩N) while its proof constructs the
    inverse direction; both maps are built and checked, and the direction
    discrepancy is noted.
    """
    if not is_normal(g, n):
        raise PreconditionFailed("N is not normal", witness=normality_witness(g, n))
    an = subgroup_product(g, a, n)
    an_grp, _ = subgroup_as_group(g, an)
    pos_an = {x: i for i, x in enumerate(an.members)}
    n_in_an = Subgroup(an_grp, tuple(sorted(pos_an[x] for x in n.members)))
    q_an, pi = quotient(an_grp, n_in_an)              # AN/N
    pi_star = compose(pi, reverse_morphism(an_grp))   # anti projection

    a_grp, _ = subgroup_as_group(g, a)
    iota = Morphism(a_grp, an_grp, tuple(pos_an[x] for x in a.members), STRAIGHT,
                    name="incl")
    phi = compose(pi_star, iota)                      # anti: A -> AN/N

    a_meet_n = subgroup_intersection(a, n)
    pos_a = {x: i for i, x in enumerate(a.members)}
    meet_in_a = Subgroup(a_grp, tuple(sorted(pos_a[x] for x in a_meet_n.members)))
    q_a, rho = quotient(a_grp, meet_in_a)             # A/(A∩N)

    ker_phi = kernel(phi)
    xi_images = [None] * q_a.order
    xi_ok = True
    for x in a_grp.elements():
        slot = rho.images[x]
        v = phi.images[x]
        if xi_images[slot] is None:
            xi_images[slot] = v
        elif xi_images[slot] != v:
            xi_ok = False
    xi_proof = Morphism(q_a, q_an, tuple(xi_images), ANTI, name="xi-proof")
    inverse_images = [None] * q_an.order
    if xi_proof.is_bijective():
        for i, v in enumerate(xi_proof.images):
            inverse_images[v] = i
    xi_stmt = Morphism(q_an, q_a, tuple(inverse_images), ANTI, name="xi-statement") \
        if all(v is not None for v in inverse_images) else None
    solutions = []
    for ell in enumerate_morphisms(q_a, q_an, ANTI, bound):
        if tuple(ell.images[v] for v in rho.images) == phi.images:
            solutions.append(ell)
    checks = (
        check("an-is-subgroup", True),  # construction verifies closure
        check("n-normal-in-an", is_normal(an_grp, n_in_an)),
        check("meet-normal-in-a", is_normal(a_grp, meet_in_a)),
        check("phi-is-anti", _is_anti_table(phi.images, a_grp, q_an)),
        check("phi-surjective", phi.is_surjective()),
        check("kernel-is-meet", ker_phi.members == meet_in_a.members,
              witness=(ker_phi.members, meet_in_a.members)),
        check("xi-well-defined", xi_ok),
        check("xi-is-anti", _is_anti_table(xi_proof.images, q_a, q_an)),
        check("xi-bijective", xi_proof.is_bijective()),
        check("diagram-commutes",
              tuple(xi_proof.images[v] for v in rho.images) == phi.images),
        check("statement-direction-is-anti",
              xi_stmt is not None and _is_anti_table(xi_stmt.images, q_an, q_a)),
        check("unique", len(solutions) == 1 and solutions[0].images == xi_proof.images,
              witness=[s.images for s in solutions]),
    )
    return TheoremReport(
        theorem="third-anti-isomorphism",
        inputs=(("group", g.name), ("a", str(a.members)), ("n", str(n.members))),
        checks=checks,
        constructed=(("phi", repr(phi)), ("xi-proof", repr(xi_proof)),
                     ("xi-statement", repr(xi_stmt))),
        uniqueness_method="enumeration",
        notes=("statement arrow runs AN/N -> A/(A∩N); the proof constructs "
               "A/(A∩N) -> AN/N; the verifier checks both directions",),
    )


# -- commutative collapse -----------------------------------------------------------


def verify_abelian_collapse(phi: Morphism) -> TheoremReport:
    """How the two laws interact with commutativity, on one instance."""
    if not phi.is_anti:
        raise PreconditionFailed("phi must be an anti-morphism")
    a, b = phi.source, phi.target
    cls = classify(phi.images, a, b)
    checks = [
        check("abelian-source-or-target-forces-both",
              (not (a.abelian or b.abelian)) or cls == BOTH,
              witness=cls),
    ]
    if phi.is_injective():
        checks.append(check("injective-hom-iff-abelian-source",
                            (cls == BOTH) == a.abelian, witness=cls))
    if phi.is_surjective():
        checks.append(check("surjective-hom-iff-abelian-target",
                            (cls == BOTH) == b.abelian, witness=cls))
    if phi.is_bijective() and cls == BOTH:
        iso = find_isomorphism(a, b)
        checks.append(check("bijective-both-forces-abelian-isomorphic",
                            a.abelian and b.abelian and iso is not None))
    return TheoremReport(
        theorem="abelian-collapse",
        inputs=(("map", repr(phi)),),
        checks=tuple(checks),
    )


# -- subring and ideal transport ------------------------------------------------------


def verify_subring_and_transport(phi: Morphism) -> TheoremReport:
    """Anti ring morphisms carry subrings to subrings; anti-epimorphisms carry
    left ideals to right ideals, in both image and preimage directions."""
    if not phi.is_anti or not isinstance(phi.source, FiniteRing):
        raise PreconditionFailed("phi must be an anti ring morphism")
    a, b = phi.source, phi.target
    checks = []
    for s in all_subrings(a):
        im = tuple(sorted({phi.images[x] for x in s}))
        checks.append(check(f"image-subring-{s}", is_subring(b, im), witness=im))
    for s in all_subrings(b):
        pre = tuple(sorted(x for x in a.elements() if phi.images[x] in s))
        checks.append(check(f"preimage-subring-{s}", is_subring(a, pre), witness=pre))
    if phi.is_surjective():
        for ideal in all_ideals(a, "left"):
            im = tuple(sorted({phi.images[x] for x in ideal}))
            checks.append(check(f"image-left-ideal-{ideal}",
                                ideal_witness(b, im, "right") is None,
                                witness=(im, ideal_witness(b, im, "right"))))
        for ideal in all_ideals(b, "left"):
            pre = tuple(sorted(x for x in a.elements() if phi.images[x] in ideal))
            checks.append(check(f"preimage-left-ideal-{ideal}",
                                ideal_witness(a, pre, "right") is None,
                                witness=(pre, ideal_witness(a, pre, "right"))))
    return TheoremReport(
        theorem="subring-transport",
        inputs=(("map", repr(phi)),),
        checks=tuple(checks),
    )


# -- the two group categories are equivalent ---------------------------------------------


def verify_groups_vs_star_category(groups: dict,
                                   bound: int = DEFAULT_BOUND) -> TheoremReport:
    """Builds the category of the given groups under straight morphisms and its
    twin under anti-morphisms with star composition, then checks that sending
    f to f∘rev is an equivalence between them."""
    from .categories import (
        FiniteCategory,
        FunctorData,
        Mor,
        check_equivalence,
        validate_category,
    )

    names = sorted(groups)
    straight_sets = {}
    anti_sets = {}
    for a in names:
        for b in names:
            straight_sets[(a, b)] = enumerate_morphisms(groups[a], groups[b],
                                                        STRAIGHT, bound)
            anti_sets[(a, b)] = enumerate_morphisms(groups[a], groups[b],
                                                    ANTI, bound)

    def build(sets, star: bool, tag: str):
        mids = {}
        morphisms = []
        for (a, b), ms in sorted(sets.items()):
            for i, m in enumerate(ms):
                mid = f"{tag}:{a}>{b}:{i}"
                mids[(a, b, m.images)] = mid
                morphisms.append((mid, a, b))
        identities = {}
        for a in names:
            if star:
                unit = reverse_morphism(groups[a])
            else:
                unit = Morphism(groups[a], groups[a],
                                tuple(groups[a].elements()), STRAIGHT)
            identities[a] = mids[(a, a, unit.images)]
        compose_table = {}
        for (a, b), fs in sets.items():
            for (b2, c), gs in sets.items():
                if b2 != b:
                    continue
                for f in fs:
                    for g in gs:
                        h = star_compose(g, f) if star else compose(g, f)
                        compose_table[(mids[(b, c, g.images)],
                                       mids[(a, b, f.images)])] = \
                            mids[(a, c, h.images)]
        cat = FiniteCategory(tag, tuple(names),
                             tuple(Mor(*m) for m in morphisms),
                             identities, compose_table)
        return validate_category(cat), mids

    straight_cat, smids = build(straight_sets, star=False, tag="grp")
    star_cat, amids = build(anti_sets, star=True, tag="grpan")
    mor_map = {}
    for (a, b), ms in straight_sets.items():
        for m in ms:
            twin = corresponding_anti(m)
            mor_map[smids[(a, b, m.images)]] = amids[(a, b, twin.images)]
    functor = FunctorData({n: n for n in names}, mor_map, name="to-star")
    rep = check_equivalence(functor, straight_cat, star_cat)
    return TheoremReport(
        theorem="groups-equivalent-to-star-groups",
        inputs=(("objects", "+".join(names)),),
        checks=rep.checks,
        constructed=(("functor", "f -> f∘rev"),),
    )


# -- convenience entry points ----------------------------------------------------------


def sign_morphism(s3: FiniteGroup, z2: FiniteGroup) -> Morphism:
    """The parity map from the order-6 symmetric group onto the order-2 group."""
    a3 = subgroup_closure(s3, (3,))
    images = tuple(z2.identity if x in a3 else 1 - z2.identity
                   for x in s3.elements())
    return Morphism(s3, z2, images, STRAIGHT, name="sign")
