import math
from fractions import Fraction

import pytest

from gelfand import oracle, pairs, presets
from gelfand.chartab import character_table
from gelfand.grouptab import (
    full_subgroup,
    subgroup_from_generators,
    trivial_subgroup,
)
from gelfand.partitions import z_number
from gelfand.perm import parse_cycles


def test_induced_multiplicities_full_subgroup(s4):
    # K = G: only the trivial module appears
    m = pairs.induced_multiplicities(s4, full_subgroup(s4))
    assert m[0] == 1 and sum(m) == 1


def test_induced_multiplicities_trivial_subgroup(s4):
    # K = 1: the regular module, multiplicities are the degrees
    t = character_table(s4)
    assert pairs.induced_multiplicities(s4, trivial_subgroup(s4)) == t.degrees


def test_induced_multiplicities_gxgopp(gxgopp_s3, s3):
    # exactly |C(G)| constituents, each once
    assert sorted(gxgopp_s3.multiplicities) == [0] * 6 + [1] * 3
    assert len(gxgopp_s3.constituents) == s3.n_classes


def test_is_gelfand_full_pair(s4):
    cert = pairs.is_gelfand(s4, full_subgroup(s4))
    assert cert.gelfand and cert.witness is None


def test_is_gelfand_controls(s4):
    # computed, not assumed: C4 turns out to be Gelfand, C2 and 1 do not
    c4 = subgroup_from_generators(s4, [parse_cycles("(1 2 3 4)", 4)], name="C4")
    cert = pairs.is_gelfand(s4, c4)
    assert cert.multiplicity_free and cert.commutative

    c2 = subgroup_from_generators(s4, [parse_cycles("(1 2)", 4)], name="C2")
    cert = pairs.is_gelfand(s4, c2)
    assert not cert.multiplicity_free and not cert.commutative
    assert cert.witness is not None

    cert = pairs.is_gelfand(s4, trivial_subgroup(s4))
    assert not cert.gelfand


def test_build_pair_rejects_non_gelfand(s4):
    c2 = subgroup_from_generators(s4, [parse_cycles("(1 2)", 4)], name="C2")
    with pytest.raises(pairs.NotGelfandError):
        pairs.build_pair(s4, c2)


def test_s4_b2_zonal_table(s2n_bn_2):
    pair = s2n_bn_2
    assert pair.coset_labels == [(1, 1), (2,)]
    assert pair.zonal == [[Fraction(1), Fraction(1)],
                          [Fraction(1), Fraction(-1, 2)]]
    assert pair.degrees == [1, 2]


def test_zonal_at_identity_coset(s2n_bn_3, gxgopp_s4, sn_sn1_4):
    for pair in (s2n_bn_3, gxgopp_s4, sn_sn1_4):
        for t in range(len(pair.degrees)):
            assert pair.zonal[t][0] == 1


def test_gxgopp_zonal_is_normalized_character(gxgopp_s4, s4):
    # omega at the coset of (x, 1) equals chi(x)/dim for a matching irrep
    pair = gxgopp_s4
    t = character_table(s4)
    coset_of_class = {}
    for c in range(s4.n_classes):
        pid = s4.class_reps[c] * s4.order  # encode (x, identity)
        coset_of_class[c] = pair.dc.dc_of[pid]
    used = set()
    for row, deg in zip(t.int_rows, t.degrees):
        target = [Fraction(row[c], deg) for c in range(s4.n_classes)]
        hits = [th for th in range(len(pair.degrees))
                if [pair.zonal[th][coset_of_class[c]] for c in range(s4.n_classes)]
                == target]
        assert len(hits) == 1
        used.add(hits[0])
    assert used == set(range(len(pair.degrees)))


def test_structure_coeff_identity_coset(s2n_bn_3):
    pair = s2n_bn_3
    k = pair.sub.order
    for delta in range(pair.n_cosets):
        for rho in range(pair.n_cosets):
            assert pairs.structure_coeff(pair, 0, delta, rho) \
                == (k if delta == rho else 0)


def test_structure_coeff_example(s2n_bn_2):
    assert pairs.structure_coeff(s2n_bn_2, 0, 0, 0) == 8


def test_formula_equals_oracle(s2n_bn_3, gxgopp_s3, sn_sn1_4):
    for pair in (s2n_bn_3, gxgopp_s3, sn_sn1_4):
        assert pairs.formula_tensor(pair) == pairs.oracle_tensor(pair)


def test_multi_needs_two_factors(s2n_bn_2):
    with pytest.raises(ValueError):
        pairs.structure_coeff_multi(s2n_bn_2, [0], 0)


def test_multi_specializes_to_pairwise(s2n_bn_2):
    pair = s2n_bn_2
    n = pair.n_cosets
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert pairs.structure_coeff_multi(pair, [a, b], c) \
                    == pairs.structure_coeff(pair, a, b, c)


def test_triple_identity_coset_power(s2n_bn_2):
    # K*K*K = |K|^2 K
    assert pairs.structure_coeff_multi(s2n_bn_2, [0, 0, 0], 0) == 64


def test_idempotents(s2n_bn_2, s2n_bn_3, gxgopp_s3):
    for pair in (s2n_bn_2, s2n_bn_3, gxgopp_s3):
        pairs.verify_idempotents(pair)


def test_idempotents_one_coset_pair(s3):
    pair = pairs.build_pair(s3, full_subgroup(s3))
    es = pairs.idempotents(pair)
    assert es == [[Fraction(1, s3.order)]]
    pairs.verify_idempotents(pair)


def test_zonal_orthogonality(s2n_bn_3, gxgopp_s4, sn_sn1_4):
    for pair in (s2n_bn_3, gxgopp_s4, sn_sn1_4):
        pairs.check_zonal_orthogonality(pair)


def test_functional_equation(s2n_bn_3, gxgopp_s3, sn_sn1_4):
    for pair in (s2n_bn_3, gxgopp_s3, sn_sn1_4):
        pairs.check_functional_equation(pair, samples=50, seed=0)


def test_morphism_property(s2n_bn_2, s2n_bn_3, gxgopp_s3, sn_sn1_4):
    for pair in (s2n_bn_2, s2n_bn_3, gxgopp_s3, sn_sn1_4):
        pairs.check_morphism(pair)


def test_zonal_convolution(s2n_bn_2, s2n_bn_3, gxgopp_s3, gxgopp_s4, sn_sn1_4):
    # exhaustive for every preset pair with |G| <= 720
    for pair in (s2n_bn_2, s2n_bn_3, gxgopp_s3, gxgopp_s4, sn_sn1_4):
        assert pair.group.order <= 720
        pairs.check_zonal_convolution(pair)


def test_zonal_convolution_complex_pair():
    # a Gelfand pair with a non-rational character table: (C_5, 1)
    from gelfand.grouptab import generate_group

    C5 = generate_group(5, [parse_cycles("(1 2 3 4 5)", 5)], name="C5")
    pair = pairs.build_pair(C5, trivial_subgroup(C5))
    assert not pair.exact
    pairs.check_zonal_convolution(pair)
    pairs.check_zonal_orthogonality(pair)
    pairs.verify_idempotents(pair)
    assert pairs.formula_tensor(pair) == pairs.oracle_tensor(pair)


def test_sn_sn1_sizes_n5():
    pair = presets.sn_sn1_pair(5)
    assert pair.n_cosets == sum(len(presets.partitions_of(k)) for k in range(5))
    for c, lab in enumerate(pair.coset_labels):
        assert pair.dc.sizes[c] == math.factorial(4) ** 2 // z_number(lab.lam)


def test_hss_coeff_identity(s2n_bn_3):
    # b at the identity coset: K * DC = |K| DC
    n = 3
    one = (1,) * n
    for delta in presets.partitions_of(n):
        for rho in presets.partitions_of(n):
            want = 2 ** n * math.factorial(n) if delta == rho else 0
            assert presets.hss_coeff(n, one, delta, rho) == want


def test_hss_bound():
    with pytest.raises(ValueError):
        presets.hss_coeff(5, (1,) * 5, (1,) * 5, (1,) * 5)
