import pytest

from antimorph.corpus import group_corpus, named_ideal, named_subgroup, ring_corpus
from antimorph.errors import PreconditionFailed
from antimorph.groups import Subgroup, subgroup_closure
from antimorph.maps import ANTI
from antimorph.morphisms import (
    classify,
    corresponding_anti,
    enumerate_morphisms,
    reverse_morphism,
)
from antimorph.rings import quotient_ring
from antimorph.theorems import (
    sign_morphism,
    verify_abelian_collapse,
    verify_anti_factorization,
    verify_anti_hom_theorem,
    verify_groups_vs_star_category,
    verify_second_anti_iso,
    verify_subring_and_transport,
    verify_third_anti_iso,
)

GROUPS = group_corpus()
RINGS = ring_corpus()


def test_anti_factorization_on_parity_map():
    s3, z2 = GROUPS["s3"], GROUPS["z2"]
    phi = corresponding_anti(sign_morphism(s3, z2))
    rep = verify_anti_factorization(s3, named_subgroup("s3", "a3"), phi)
    assert rep.passed
    assert rep.uniqueness_method == "enumeration"


def test_anti_factorization_by_trivial_subgroup():
    s3 = GROUPS["s3"]
    phi = reverse_morphism(s3)
    rep = verify_anti_factorization(s3, Subgroup(s3, (s3.identity,)), phi)
    assert rep.passed


def test_anti_factorization_precondition():
    s3, z2 = GROUPS["s3"], GROUPS["z2"]
    phi = corresponding_anti(sign_morphism(s3, z2))  # kernel = a3
    with pytest.raises(PreconditionFailed) as exc:
        verify_anti_factorization(s3, subgroup_closure(s3, (1,)), phi)
    assert exc.value.witness == 1


def test_anti_hom_theorem_all_s3_endos():
    s3 = GROUPS["s3"]
    for phi in enumerate_morphisms(s3, s3, ANTI):
        rep = verify_anti_hom_theorem(phi)
        assert rep.passed, rep.failures()


def test_anti_hom_theorem_injective_case():
    z4 = GROUPS["z4"]
    rep = verify_anti_hom_theorem(reverse_morphism(z4))
    names = [c.name for c in rep.checks]
    assert "injective-source-iso-image" in names
    assert rep.passed


def test_second_anti_iso_on_dihedral_chain():
    d4 = GROUPS["d4"]
    rep = verify_second_anti_iso(d4, named_subgroup("d4", "rot"),
                                 named_subgroup("d4", "rot2"))
    assert rep.passed


def test_second_anti_iso_degenerate_chains():
    d4 = GROUPS["d4"]
    rot = named_subgroup("d4", "rot")
    rep = verify_second_anti_iso(d4, rot, rot)
    assert rep.passed
    trivial = Subgroup(d4, (d4.identity,))
    rep2 = verify_second_anti_iso(d4, rot, trivial)
    assert rep2.passed


def test_second_anti_iso_precondition():
    d4 = GROUPS["d4"]
    with pytest.raises(PreconditionFailed):
        verify_second_anti_iso(d4, named_subgroup("d4", "rot2"),
                               named_subgroup("d4", "rot"))


def test_third_anti_iso_instances():
    s3 = GROUPS["s3"]
    rep = verify_third_anti_iso(s3, named_subgroup("s3", "s12"),
                                named_subgroup("s3", "a3"))
    assert rep.passed
    assert rep.notes
    d4 = GROUPS["d4"]
    rep2 = verify_third_anti_iso(d4, named_subgroup("d4", "ref"),
                                 named_subgroup("d4", "rot2"))
    assert rep2.passed


def test_third_anti_iso_subgroup_inside_normal():
    s3 = GROUPS["s3"]
    a3 = named_subgroup("s3", "a3")
    inside = Subgroup(s3, (0, 3, 4))
    rep = verify_third_anti_iso(s3, inside, a3)
    assert rep.passed


def test_third_anti_iso_precondition():
    s3 = GROUPS["s3"]
    not_normal = subgroup_closure(s3, (1,))
    with pytest.raises(PreconditionFailed):
        verify_third_anti_iso(s3, named_subgroup("s3", "a3"), not_normal)


def test_ring_anti_factorization_and_hom_theorem():
    z4 = RINGS["z4"]
    even = named_ideal("z4", "even")
    _, proj = quotient_ring(z4, even)
    rep = verify_anti_factorization(z4, even, corresponding_anti(proj))
    assert rep.passed
    t2 = RINGS["t2f2"]
    rep2 = verify_anti_hom_theorem(reverse_morphism(t2))
    assert rep2.passed
    kernel_check = rep2.check_map()
    assert kernel_check["bijective"].passed


def test_abelian_collapse_cases():
    s3, z4, q8 = GROUPS["s3"], GROUPS["z4"], GROUPS["q8"]
    assert verify_abelian_collapse(reverse_morphism(z4)).passed
    assert verify_abelian_collapse(reverse_morphism(s3)).passed
    for m in enumerate_morphisms(q8, q8, ANTI):
        if m.is_bijective():
            assert classify(m.images, q8, q8) != "Both"


def test_subring_transport_on_involutions():
    for name in ("t2f2", "m2f2"):
        rep = verify_subring_and_transport(reverse_morphism(RINGS[name]))
        assert rep.passed, rep.failures()


def test_groups_vs_star_category_equivalence():
    rep = verify_groups_vs_star_category(
        {k: GROUPS[k] for k in ("z2", "z3", "s3")})
    assert rep.passed
