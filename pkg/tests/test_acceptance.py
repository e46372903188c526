"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the report lines.
All tolerances are pinned here: structure coefficients and multiplicities
are exact integers; floating-point identities use 1e-9; the integrality
gates inside the formula evaluators use 1e-6.
"""

import math
from fractions import Fraction
from itertools import product

import pytest

from gelfand import oracle, pairs, presets
from gelfand.chartab import character_table, class_constants, frobenius_center_coeff
from gelfand.grouptab import subgroup_from_generators, trivial_subgroup
from gelfand.partitions import (
    coset_type,
    mn_character,
    partitions_of,
    z_number,
)
from gelfand.perm import cycle_type, parse_cycles


def _report(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {num}] {status} {name}"
    if detail:
        line += f" — {detail}"
    print(line)
    assert ok, line


def test_criterion_1_center_frobenius_vs_oracle():
    checked = 0
    ok = True
    for n in (3, 4, 5):
        G = presets.symmetric_group(n)
        table = character_table(G)
        tensor = class_constants(G)
        r = G.n_classes
        for lam, delta, rho in product(range(r), repeat=3):
            ok = ok and frobenius_center_coeff(table, lam, delta, rho) \
                == tensor[lam][delta][rho]
            checked += 1
    _report(1, "center Frobenius formula equals counting oracle", ok,
            f"{checked} triples over S3, S4, S5, exact integers")


def _th_tt_matches(pair) -> bool:
    return pairs.formula_tensor(pair) == pairs.oracle_tensor(pair)


def _hss_matches(n, pair) -> bool:
    truth = pairs.oracle_tensor(pair)
    idx = {lab: c for c, lab in enumerate(pair.coset_labels)}
    for a, b, c in product(partitions_of(n), repeat=3):
        if presets.hss_coeff(n, a, b, c) != truth[idx[a]][idx[b]][idx[c]]:
            return False
    return True


def test_criterion_2_th_tt_vs_oracle_s2n_bn():
    ok = True
    details = []
    for n in (2, 3):
        pair = presets.s2n_bn_pair(n)
        ok = ok and _th_tt_matches(pair) and _hss_matches(n, pair)
        details.append(f"n={n}: {pair.n_cosets ** 3} triples")
    _report(2, "zonal formula and hook form equal oracle on (S_2n, B_n)", ok,
            "; ".join(details) + "; hook form uses the hook product of 2*theta")


@pytest.mark.slow
def test_criterion_2_slow_s8_b4():
    pair = presets.s2n_bn_pair(4)
    ok = _th_tt_matches(pair) and _hss_matches(4, pair)
    _report("2-slow", "zonal formula and hook form equal oracle on (S_8, B_4)",
            ok, f"{pair.n_cosets ** 3} triples, |G| = {pair.group.order}")


def test_criterion_3_sn_sn1_pair():
    pair = presets.sn_sn1_pair(4)
    ok = pair.n_cosets == 7
    for c, lab in enumerate(pair.coset_labels):
        ok = ok and pair.dc.sizes[c] == math.factorial(3) ** 2 // z_number(lab.lam)
    ok = ok and _th_tt_matches(pair)
    _report(3, "zonal formula equals oracle on (S_4 x S_3^opp, diag S_3)", ok,
            f"{pair.n_cosets ** 3} coefficients, sizes (n-1)!^2/z_lambda")


def test_criterion_4_gxgopp_reduction():
    ok = True
    checked = 0
    for n in (3, 4):
        G = presets.symmetric_group(n)
        pair = presets.gxgopp_pair(G)
        table = character_table(G)
        tensor = class_constants(G)
        to_coset = {cls: c for c, cls in enumerate(pair.coset_to_class)}
        r = G.n_classes
        for lam, delta, rho in product(range(r), repeat=3):
            kp = pairs.structure_coeff(
                pair, to_coset[lam], to_coset[delta], to_coset[rho])
            c_oracle = tensor[lam][delta][rho]
            c_formula = frobenius_center_coeff(table, lam, delta, rho)
            ok = ok and kp == G.order * c_oracle and c_oracle == c_formula
            checked += 1
    _report(4, "double-coset coefficients of (GxG^opp, diag) are |G| times "
               "the center coefficients", ok, f"{checked} triples over S3, S4")


def test_criterion_5_multifactor_products():
    ok = True
    checked = 0
    for n in (2, 3):
        pair = presets.s2n_bn_pair(n)
        G, dc = pair.group, pair.dc
        m = pair.n_cosets
        for r in (3, 4):
            for lams in product(range(m), repeat=r):
                got = [pairs.structure_coeff_multi(pair, list(lams), rho)
                       for rho in range(m)]
                want = oracle.iterated_dc_oracle(G, dc, list(lams))
                ok = ok and got == want
                checked += len(got)
    _report(5, "r-fold products match iterated convolution oracles", ok,
            f"{checked} coefficients, r in {{3, 4}}, pairs (S4,B2) and (S6,B3)")


def test_criterion_6_coset_type():
    t12 = parse_cycles("(1 8)(2 12 5 10)(3 4 6 9 7 11)", 12)
    ok = coset_type(t12) == (3, 2, 1)
    for n in (2, 3):
        pair = presets.s2n_bn_pair(n)
        G = pair.group
        types = set()
        for c in range(pair.dc.n_cosets):
            ref = coset_type(G.elements[pair.dc.reps[c]])
            types.add(ref)
            ok = ok and all(coset_type(G.elements[x]) == ref
                            for x in pair.dc.members(c))
        ok = ok and len(types) == len(partitions_of(n))
    _report(6, "coset types: worked 12-point example and constancy on "
               "double cosets", ok, "type count equals p(n) for 2n in {4, 6}")


def test_criterion_7_zonal_identities():
    ok = True
    names = []
    all_pairs = [presets.s2n_bn_pair(2), presets.s2n_bn_pair(3),
                 presets.gxgopp_pair(presets.symmetric_group(3)),
                 presets.gxgopp_pair(presets.symmetric_group(4)),
                 presets.sn_sn1_pair(4)]
    for pair in all_pairs:
        try:
            for t in range(len(pair.degrees)):
                assert pair.zonal[t][0] == 1
            pairs.check_functional_equation(pair, samples=50, seed=0, tol=1e-9)
            pairs.check_zonal_orthogonality(pair, tol=1e-9)
            pairs.verify_idempotents(pair, tol=1e-9)
            names.append(pair.name)
        except Exception as exc:
            ok = False
            names.append(f"{pair.name}: {exc}")
    _report(7, "zonal identities (value 1 at identity, functional equation, "
               "orthogonality, idempotents)", ok, "; ".join(names))


def test_criterion_8_character_table_health():
    ok = True
    for n in (2, 3, 4, 5):
        G = presets.symmetric_group(n)
        table = character_table(G)
        try:
            table.verify()
        except Exception:
            ok = False
            continue
        types = [cycle_type(G.elements[r]) for r in G.class_reps]
        mn_rows = sorted(tuple(mn_character(lam, mu) for mu in types)
                         for lam in partitions_of(n))
        ok = ok and mn_rows == sorted(tuple(row) for row in table.int_rows)
        ok = ok and sum(d * d for d in table.degrees) == G.order
    _report(8, "character tables: orthogonality exact, degrees square-sum "
               "to |G|, rows match rim-hook recursion", ok, "S_n for n <= 5")


def test_criterion_9_plancherel_moments():
    from gelfand.plancherel import moment_direct, moment_reports

    ok = True
    rows = 0
    for n in (3, 4, 5):
        G = presets.symmetric_group(n)
        table = character_table(G)
        for rep in moment_reports(G, max_m=4):
            ok = ok and rep.equal and isinstance(rep.direct, Fraction)
            rows += 1
        for c in range(G.n_classes):
            ok = ok and moment_direct(table, c, 1) == (1 if c == 0 else 0)
    _report(9, "Plancherel moments: direct equals structural, exact "
               "rationals; first moment is the identity indicator", ok,
            f"{rows} (class, m) pairs over S3, S4, S5")


def test_criterion_10_gelfand_concordance():
    ok = True
    observed = []
    S4 = presets.symmetric_group(4)
    cases = [
        ("(S4,B2)", presets.s2n_bn_pair(2).group, presets.s2n_bn_pair(2).sub),
        ("(S6,B3)", presets.s2n_bn_pair(3).group, presets.s2n_bn_pair(3).sub),
        ("(S4xS3^opp,diag)", presets.sn_sn1_pair(4).group,
         presets.sn_sn1_pair(4).sub),
        ("(S4,C4)", S4, subgroup_from_generators(
            S4, [parse_cycles("(1 2 3 4)", 4)], name="C4")),
        ("(S4,C2)", S4, subgroup_from_generators(
            S4, [parse_cycles("(1 2)", 4)], name="C2")),
        ("(S4,1)", S4, trivial_subgroup(S4)),
    ]
    g3 = presets.gxgopp_pair(presets.symmetric_group(3))
    cases.append(("(S3xS3^opp,diag)", g3.group, g3.sub))
    saw_non_gelfand = False
    for name, G, K in cases:
        try:
            cert = pairs.is_gelfand(G, K)  # raises if the criteria disagree
        except pairs.ConsistencyError as exc:
            ok = False
            observed.append(f"{name}: CRITERIA DISAGREE ({exc})")
            continue
        saw_non_gelfand = saw_non_gelfand or not cert.gelfand
        observed.append(f"{name}: {'gelfand' if cert.gelfand else 'NOT gelfand'}")
    ok = ok and saw_non_gelfand
    _report(10, "multiplicity-freeness and oracle commutativity agree on "
                "every pair, including non-Gelfand controls", ok,
            "; ".join(observed))
