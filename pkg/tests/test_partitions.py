import math
from itertools import permutations

import pytest

from gelfand import presets
from gelfand.partitions import (
    PairLabel,
    all_pair_labels,
    coset_type,
    hook_product,
    mn_character,
    partition_dim,
    partition_stats,
    partitions_of,
    sn_sn1_label,
    z_number,
)
from gelfand.perm import identity, parse_cycles

T12 = parse_cycles("(1 8)(2 12 5 10)(3 4 6 9 7 11)", 12)


def test_partitions_of_examples():
    assert partitions_of(0) == ((),)
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    assert len(partitions_of(6)) == 11


def test_partitions_reverse_lex():
    for n in range(8):
        ps = partitions_of(n)
        assert ps == tuple(sorted(ps, reverse=True))
        assert len(set(ps)) == len(ps)
        assert all(sum(p) == n for p in ps)


def test_partition_stats_examples():
    assert partition_stats((1,) * 6) == (720, 720, 1)
    assert partition_stats((2, 1)) == (2, 3, 2)
    z, h, d = partition_stats((2, 2))
    assert (h, d) == (12, 2)
    assert z_number((3, 1)) == 3
    assert partition_dim((6,)) == 1


def test_class_size_via_z():
    # n!/z_lambda is the size of the S_n class of cycle type lambda
    for n in (4, 5):
        G = presets.symmetric_group(n)
        from gelfand.perm import cycle_type

        for c in range(G.n_classes):
            lam = cycle_type(G.elements[G.class_reps[c]])
            assert G.class_sizes[c] == math.factorial(n) // z_number(lam)


def test_mn_trivial_and_sign():
    for n in (3, 4, 5, 6):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_mn_dimension_column():
    for n in (3, 4, 5, 6):
        for lam in partitions_of(n):
            assert mn_character(lam, (1,) * n) == partition_dim(lam)


def test_mn_example():
    assert mn_character((2, 1), (3,)) == -1


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2, 2))


def test_mn_orthogonality():
    for n in (4, 5, 6):
        ps = partitions_of(n)
        fact = math.factorial(n)
        for l1 in ps:
            for l2 in ps:
                s = sum(mn_character(l1, mu) * mn_character(l2, mu)
                        * (fact // z_number(mu)) for mu in ps)
                assert s == (fact if l1 == l2 else 0)


def test_coset_type_identity():
    for n in (1, 2, 3, 4):
        assert coset_type(identity(2 * n)) == (1,) * n


def test_coset_type_matching_involution():
    for n in (2, 3, 4):
        m = parse_cycles("".join(f"({2 * i + 1} {2 * i + 2})" for i in range(n)),
                         2 * n)
        assert coset_type(m) == (1,) * n


def test_coset_type_twelve_point_example():
    assert coset_type(T12) == (3, 2, 1)


def test_coset_type_odd_degree():
    with pytest.raises(ValueError):
        coset_type(identity(5))


def _coset_type_via_matchings(p):
    # independent definition: cycle lengths of the union of the fixed
    # perfect matching {2k, 2k+1} and its image under p, halved
    deg = len(p)
    adj = [[] for _ in range(deg)]
    for k in range(0, deg, 2):
        adj[k].append(k + 1)
        adj[k + 1].append(k)
        adj[p[k]].append(p[k + 1])
        adj[p[k + 1]].append(p[k])
    seen = [False] * deg
    parts = []
    for s in range(deg):
        if seen[s]:
            continue
        size = 0
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            size += 1
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        assert size % 2 == 0
        parts.append(size // 2)
    return tuple(sorted(parts, reverse=True))


def test_coset_type_agrees_with_matching_method_exhaustively():
    for deg in (2, 4, 6):
        for img in permutations(range(deg)):
            assert coset_type(img) == _coset_type_via_matchings(img)


def test_coset_type_constant_on_double_cosets():
    for n in (2, 3):
        pair = presets.s2n_bn_pair(n)
        G = pair.group
        types = set()
        for c in range(pair.dc.n_cosets):
            ref = coset_type(G.elements[pair.dc.reps[c]])
            types.add(ref)
            for x in pair.dc.members(c):
                assert coset_type(G.elements[x]) == ref
        assert len(types) == len(partitions_of(n))


def test_pair_labels():
    assert PairLabel(2, (2,)).to_json() == {"i": 2, "lambda": [2]}
    labels = all_pair_labels(4)
    assert len(labels) == 7  # p(3) + p(2) + p(1) + p(0)
    assert all(lab.n == 4 for lab in labels)


def test_sn_sn1_label_identity():
    for n in (3, 4, 5):
        lab = sn_sn1_label(identity(n), identity(n - 1))
        assert lab == PairLabel(1, (1,) * (n - 1))


def test_sn_sn1_label_full_cycle():
    # x = a * b = (1 2 3) with b = id: the distinguished point lies in the
    # single 3-cycle
    lab = sn_sn1_label(parse_cycles("(1 2 3)", 3), identity(2))
    assert lab == PairLabel(3, ())


def test_sn_sn1_label_two_transpositions():
    lab = sn_sn1_label(parse_cycles("(1 2)(3 4)", 4), identity(3))
    assert lab == PairLabel(2, (2,))


def test_sn_sn1_label_degree_check():
    with pytest.raises(ValueError):
        sn_sn1_label(identity(4), identity(4))
