"""Ready-made groups and Gelfand pairs.

Three pair families are built in:

* ``s2n-bn``   — the symmetric group on 2n points over its hyperoctahedral
  subgroup; double cosets are labelled by coset-type partitions of n.
* ``sn-sn1``   — S_n x S_{n-1}^opp over the diagonally embedded S_{n-1};
  double cosets are labelled by (i, lambda) pairs.
* ``gxgopp``   — G x G^opp over the diagonal; double cosets correspond to
  the conjugacy classes of G.
"""

from __future__ import annotations

import math
import threading

from . import pairs
from .chartab import character_table
from .grouptab import (
    DEFAULT_CAP,
    GroupTable,
    Subgroup,
    encode_pair,
    generate_group,
    group_from_spec,
    opposite_product,
    product_with_opposite,
    subgroup_from_generators,
)
from .partitions import (
    PairLabel,
    coset_type,
    double_partition,
    hook_product,
    mn_character,
    partitions_of,
    sn_sn1_label,
)
from .perm import Perm, cycle_type, identity, parse_cycles

_cache_lock = threading.Lock()
_group_cache: dict = {}
_pair_cache: dict = {}


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> GroupTable:
    if n < 0:
        raise ValueError("n must be >= 0")
    key = ("sym", n)
    with _cache_lock:
        got = _group_cache.get(key)
    if got is not None:
        return got
    gens: list[Perm] = []
    if n >= 2:
        gens.append(parse_cycles("(1 2)", n))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))  # the n-cycle
    G = generate_group(max(n, 0), gens, cap=cap, name=f"S{n}")
    with _cache_lock:
        _group_cache[key] = G
    return G


def hyperoctahedral_generators(n: int) -> list[Perm]:
    """Generators of the centralizer of (1 2)(3 4)...(2n-1 2n) in S_2n."""
    gens = []
    for i in range(n):
        gens.append(parse_cycles(f"({2 * i + 1} {2 * i + 2})", 2 * n))
    for i in range(n - 1):
        gens.append(parse_cycles(
            f"({2 * i + 1} {2 * i + 3})({2 * i + 2} {2 * i + 4})", 2 * n))
    return gens


def hyperoctahedral_subgroup(G: GroupTable, n: int) -> Subgroup:
    K = subgroup_from_generators(G, hyperoctahedral_generators(n), name=f"B{n}")
    if K.order != 2 ** n * math.factorial(n):
        raise AssertionError(f"|B_{n}| = {K.order} != 2^{n} * {n}!")
    return K


def s2n_bn_pair(n: int, cap: int = DEFAULT_CAP) -> pairs.PairData:
    """The pair (S_2n, B_n); cosets labelled by coset-type partitions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    key = ("s2n-bn", n)
    with _cache_lock:
        got = _pair_cache.get(key)
    if got is not None:
        return got
    G = symmetric_group(2 * n, cap=cap)
    K = hyperoctahedral_subgroup(G, n)
    pair = pairs.build_pair(G, K, kind="s2n-bn", name=f"(S{2 * n}, B{n})")
    pair.coset_labels = [coset_type(G.elements[r]) for r in pair.dc.reps]
    if sorted(pair.coset_labels) != sorted(partitions_of(n)):
        raise AssertionError("coset types do not enumerate the partitions of n")
    pair.constituent_labels = _match_constituents_to_doubled_partitions(pair, n)
    with _cache_lock:
        _pair_cache[key] = pair
    return pair


def _match_constituents_to_doubled_partitions(pair: pairs.PairData, n: int):
    """Identify each constituent of the induced module with a partition
    2*theta by comparing exact character values."""
    G = pair.group
    table = pair.table
    types = [cycle_type(G.elements[r]) for r in G.class_reps]
    labels: list = [None] * len(pair.constituents)
    for theta in partitions_of(n):
        row = [mn_character(double_partition(theta), mu) for mu in types]
        hits = [t for t, i in enumerate(pair.constituents)
                if table.int_rows[i] == row]
        if len(hits) != 1:
            raise AssertionError(
                f"constituent for doubled partition {theta} not uniquely matched")
        labels[hits[0]] = theta
    return labels


def gxgopp_pair(G: GroupTable, cap: int = DEFAULT_CAP) -> pairs.PairData:
    """The pair (G x G^opp, diag G); cosets correspond to classes of G."""
    P, diag = product_with_opposite(G, cap=cap)
    pair = pairs.build_pair(P, diag, kind="gxgopp", name=f"({P.name}, diag)")
    # coset of (a, b) <-> class of a*b in G
    coset_class = []
    for r in pair.dc.reps:
        a, b = divmod(r, G.order)
        coset_class.append(G.class_of[G.mul(a, b)])
    if sorted(coset_class) != list(range(G.n_classes)):
        raise AssertionError("double cosets do not biject with conjugacy classes")
    pair.coset_to_class = coset_class
    from .grouptab import class_label

    pair.coset_labels = [class_label(G, c) for c in coset_class]
    pair.base_group = G
    return pair


def sn_sn1_pair(n: int, cap: int = DEFAULT_CAP) -> pairs.PairData:
    """The pair (S_n x S_{n-1}^opp, diag S_{n-1}).

    S_{n-1} is embedded in S_n fixing the last point, which is therefore
    the distinguished point of the (i, lambda) coset labels.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    key = ("sn-sn1", n)
    with _cache_lock:
        got = _pair_cache.get(key)
    if got is not None:
        return got
    G = symmetric_group(n, cap=cap)
    H = symmetric_group(n - 1, cap=cap)
    P = opposite_product(G, H, cap=cap, name=f"S{n}xS{n - 1}^opp")
    members = []
    for x in range(H.order):
        xhat = G.index[H.elements[x] + (n - 1,)]
        members.append(encode_pair(P, xhat, H.inverse[x]))
    gens = []
    for g in H.generators:
        ghat = G.index[H.elements[g] + (n - 1,)]
        gens.append(encode_pair(P, ghat, H.inverse[g]))
    diag = Subgroup(P, sorted(members), sorted(gens), name=f"diag(S{n - 1})")
    pair = pairs.build_pair(P, diag, kind="sn-sn1", name=f"({P.name}, diag S{n - 1})")
    labels = []
    for r in pair.dc.reps:
        a, b = divmod(r, H.order)
        labels.append(sn_sn1_label(G.elements[a], H.elements[b]))
    if len(set(labels)) != len(labels):
        raise AssertionError("(i, lambda) labels do not separate the cosets")
    pair.coset_labels = labels
    pair.base_group = G
    with _cache_lock:
        _pair_cache[key] = pair
    return pair


# -- the hook-product form of the coefficients of (S_2n, B_n) ----------------


def hss_coeff(n: int, lam, delta, rho) -> int:
    """Structure coefficient of the pair (S_2n, B_n) on coset-type labels,
    evaluated through the hook-product form and cross-checked against the
    zonal character-sum form.

    The hook form is (1/|K_rho|) sum_theta (1/H_{2theta}) phi_theta(lam)
    phi_theta(delta) phi_theta(rho) with phi_theta(mu) = |K_mu| omega_theta(mu)
    and H_{2theta} the product of the hook lengths of 2*theta.
    """
    from fractions import Fraction

    if n > 4:
        raise ValueError("hook-form coefficients supported for n <= 4")
    pair = s2n_bn_pair(n)
    lam, delta, rho = tuple(lam), tuple(delta), tuple(rho)
    a = pair.label_index(lam)
    b = pair.label_index(delta)
    c = pair.label_index(rho)
    sizes = pair.dc.sizes
    total = Fraction(0)
    for t, theta in enumerate(pair.constituent_labels):
        h2 = hook_product(double_partition(theta))
        phi = (sizes[a] * pair.zonal[t][a]) * (sizes[b] * pair.zonal[t][b]) \
            * (sizes[c] * pair.zonal[t][c])
        total += Fraction(1, h2) * phi
    total /= sizes[c]
    if total.denominator != 1 or total < 0:
        raise AssertionError(f"hook form gave non-integer {total}")
    zonal_value = pairs.structure_coeff(pair, a, b, c)
    if int(total) != zonal_value:
        raise AssertionError(
            f"hook form {total} disagrees with zonal form {zonal_value}")
    return int(total)


# -- pair specs (shared by the CLI and the service) ---------------------------


def pair_from_spec(kind: str, *, n: int | None = None, group: dict | None = None,
                   subgroup: dict | None = None, cap: int = DEFAULT_CAP) -> pairs.PairData:
    if kind == "s2n-bn":
        if not n:
            raise ValueError("s2n-bn needs n")
        return s2n_bn_pair(n, cap=cap)
    if kind == "sn-sn1":
        if not n:
            raise ValueError("sn-sn1 needs n")
        return sn_sn1_pair(n, cap=cap)
    if kind == "gxgopp":
        if group is None:
            raise ValueError("gxgopp needs a base group spec")
        return gxgopp_pair(group_from_spec(group, cap=cap), cap=cap)
    if kind == "custom":
        G, K, name = custom_pair_groups(group, subgroup, cap=cap)
        return pairs.build_pair(G, K, kind="custom", name=name)
    raise ValueError(f"unknown pair kind {kind!r}")


def custom_pair_groups(group: dict | None, subgroup: dict | None,
                       cap: int = DEFAULT_CAP) -> tuple[GroupTable, Subgroup, str]:
    """The (G, K) of a custom pair spec, without assuming it is Gelfand."""
    if group is None or subgroup is None:
        raise ValueError("custom pairs need group and subgroup specs")
    G = group_from_spec(group, cap=cap)
    gens = [parse_cycles(s, G.degree) for s in subgroup.get("generators", [])]
    K = subgroup_from_generators(G, gens, name=subgroup.get("name") or "K")
    return G, K, f"({G.name}, {K.name})"


def pair_groups_from_spec(kind: str, *, n: int | None = None, group: dict | None = None,
                          subgroup: dict | None = None,
                          cap: int = DEFAULT_CAP) -> tuple[GroupTable, Subgroup, str]:
    """(G, K, name) for any pair spec; never requires the pair to be Gelfand."""
    if kind == "custom":
        return custom_pair_groups(group, subgroup, cap=cap)
    pair = pair_from_spec(kind, n=n, group=group, subgroup=subgroup, cap=cap)
    return pair.group, pair.sub, pair.name


def pair_label_json(pair: pairs.PairData, c: int):
    """JSON-renderable label of a double coset, per preset convention."""
    lab = pair.coset_labels[c]
    if isinstance(lab, PairLabel):
        return lab.to_json()
    if isinstance(lab, tuple):
        return list(lab)
    return lab
