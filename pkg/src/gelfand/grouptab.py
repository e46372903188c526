"""Enumerated finite permutation groups: element tables, conjugacy classes,
subgroups, double cosets, and products with opposite groups.

A :class:`GroupTable` lists every element once, identity first, in a
deterministic order (breadth-first layers from the identity, ties broken
by lexicographic image array).  All completed tables are immutable in
practice and safe to share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .perm import Perm, compose, cycle_string, identity, inverse, parse_cycles

DEFAULT_CAP = 2_000_000


class EnumerationOverflow(RuntimeError):
    """Raised when a closure exceeds the element cap."""

    def __init__(self, cap: int, count: int):
        super().__init__(f"enumeration exceeded cap {cap} (at {count} elements)")
        self.cap = cap
        self.count = count


class GroupTable:
    """A fully enumerated permutation group."""

    def __init__(self, degree: int, elements: list[Perm], generators: list[int],
                 name: str | None = None):
        self.degree = degree
        self.elements = elements
        self.index: dict[Perm, int] = {p: i for i, p in enumerate(elements)}
        self.generators = generators
        self.name = name or f"G<deg {degree}, order {len(elements)}>"
        self.inverse = [self.index[inverse(p)] for p in elements]
        # caches filled on demand
        self._class_of: list[int] | None = None
        self._class_reps: list[int] | None = None
        self._class_sizes: list[int] | None = None
        self._class_members: list[list[int]] | None = None
        self._element_orders: list[int] | None = None
        self._left_rows: dict[int, object] = {}
        self._chartab = None
        self._class_tensor = None
        # set for products built by opposite_product()
        self.left_base: GroupTable | None = None
        self.right_base: GroupTable | None = None

    # -- basic arithmetic -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def perm(self, i: int) -> Perm:
        return self.elements[i]

    def mul(self, a: int, b: int) -> int:
        return self.index[compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """Id of g x g^{-1}."""
        p = compose(self.elements[g], self.elements[x])
        return self.index[compose(p, self.elements[self.inverse[g]])]

    def element_order(self, i: int) -> int:
        if self._element_orders is None:
            self._element_orders = [0] * self.order
        o = self._element_orders[i]
        if o == 0:
            o, x = 1, i
            while x != 0:
                x = self.mul(x, i)
                o += 1
            self._element_orders[i] = o
        return o

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_data(self):
        """(class_of, class_reps, class_sizes); computed once and cached."""
        if self._class_of is None:
            self._compute_classes()
        return self._class_of, self._class_reps, self._class_sizes

    @property
    def class_of(self) -> list[int]:
        return self.conjugacy_data()[0]

    @property
    def class_reps(self) -> list[int]:
        return self.conjugacy_data()[1]

    @property
    def class_sizes(self) -> list[int]:
        return self.conjugacy_data()[2]

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def class_members(self, c: int) -> list[int]:
        if self._class_members is None:
            members = [[] for _ in self.class_reps]
            for x, cl in enumerate(self.class_of):
                members[cl].append(x)
            self._class_members = members
        return self._class_members[c]

    def _compute_classes(self):
        n = self.order
        class_of = [-1] * n
        reps, sizes = [], []
        gen_ids = self.generators
        for seed in range(n):
            if class_of[seed] >= 0:
                continue
            cid = len(reps)
            reps.append(seed)
            class_of[seed] = cid
            queue = [seed]
            size = 1
            while queue:
                x = queue.pop()
                for g in gen_ids:
                    y = self.conj(g, x)
                    if class_of[y] < 0:
                        class_of[y] = cid
                        size += 1
                        queue.append(y)
            sizes.append(size)
        self._class_of, self._class_reps, self._class_sizes = class_of, reps, sizes

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(r) for r in self.class_reps))

    def inverse_class(self, c: int) -> int:
        return self.class_of[self.inverse[self.class_reps[c]]]

    # -- left-translation rows (for exact convolution) ---------------------

    def left_row(self, z: int):
        """numpy index row r with r[x] = id of z*x."""
        row = self._left_rows.get(z)
        if row is None:
            import numpy as np

            zp = self.elements[z]
            row = np.fromiter(
                (self.index[compose(zp, p)] for p in self.elements),
                dtype=np.int64, count=self.order)
            self._left_rows[z] = row
        return row

    def __repr__(self):
        return f"GroupTable({self.name}, order={self.order})"


def generate_group(degree: int, generators: list[Perm], cap: int = DEFAULT_CAP,
                   name: str | None = None) -> GroupTable:
    """Breadth-first closure of the generators under left-multiplication.

    Element order is deterministic: identity first, then BFS layers with
    lexicographic tie-break inside each layer.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ident = identity(degree)
    for g in generators:
        if len(g) != degree:
            raise ValueError(f"generator degree {len(g)} != {degree}")
        if not is_perm(g):
            raise ValueError(f"not a permutation: {g}")
    elements: list[Perm] = [ident]
    seen = {ident}
    layer = [ident]
    gens = sorted(set(g for g in generators if g != ident))
    while layer:
        nxt = set()
        for x in layer:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    nxt.add(y)
        layer = sorted(nxt)
        for y in layer:
            seen.add(y)
            elements.append(y)
            if len(elements) > cap:
                raise EnumerationOverflow(cap, len(elements))
    table = GroupTable(degree, elements, [], name=name)
    table.generators = sorted({table.index[g] for g in gens})
    return table


def is_perm(word) -> bool:
    return sorted(word) == list(range(len(word)))


@dataclass
class Subgroup:
    """A subgroup of an enumerated group, stored as sorted element ids."""

    parent: GroupTable
    member_ids: list[int]
    generators: list[int]
    name: str = ""
    member_set: frozenset = field(init=False)

    def __post_init__(self):
        self.member_set = frozenset(self.member_ids)
        if 0 not in self.member_set:
            raise ValueError("subgroup must contain the identity")

    @property
    def order(self) -> int:
        return len(self.member_ids)

    def __contains__(self, eid: int) -> bool:
        return eid in self.member_set

    def __repr__(self):
        return f"Subgroup({self.name or 'K'}, order={self.order})"


def subgroup_from_generators(G: GroupTable, gens: list[Perm] | list[int],
                             name: str = "") -> Subgroup:
    gen_ids = []
    for g in gens:
        if isinstance(g, tuple):
            gid = G.index.get(g)
            if gid is None:
                raise ValueError(f"subgroup generator {g} is not in {G.name}")
        else:
            gid = int(g)
        gen_ids.append(gid)
    members = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for g in gen_ids:
            y = G.mul(g, x)
            if y not in members:
                members.add(y)
                queue.append(y)
    return Subgroup(G, sorted(members), sorted(set(gen_ids)), name=name)


def full_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, list(range(G.order)), list(G.generators), name=G.name)


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(G, [0], [], name="1")


@dataclass
class DoubleCosetPartition:
    """Partition of a group into H g K orbits.

    Coset ids are assigned by increasing minimal element id, so the coset
    of the identity (i.e. HK itself) is always coset 0.
    """

    dc_of: list[int]
    reps: list[int]
    sizes: list[int]

    @property
    def n_cosets(self) -> int:
        return len(self.reps)

    def members(self, c: int) -> list[int]:
        got = getattr(self, "_members", None)
        if got is None:
            got = [[] for _ in self.reps]
            for x, cl in enumerate(self.dc_of):
                got[cl].append(x)
            self._members = got
        return got[c]


def double_cosets(G: GroupTable, left: Subgroup, right: Subgroup) -> DoubleCosetPartition:
    """Decompose G into double cosets ``left * g * right``.

    Verifies |HgK| = |H||K| / |H ∩ gKg^{-1}| for every representative, and
    that the coset sizes sum to |G|.
    """
    n = G.order
    dc_of = [-1] * n
    reps, sizes = [], []
    lgen = left.generators or []
    rgen = right.generators or []
    for seed in range(n):
        if dc_of[seed] >= 0:
            continue
        cid = len(reps)
        reps.append(seed)
        dc_of[seed] = cid
        queue = [seed]
        size = 1
        while queue:
            x = queue.pop()
            for g in lgen:
                y = G.mul(g, x)
                if dc_of[y] < 0:
                    dc_of[y] = cid
                    size += 1
                    queue.append(y)
            for g in rgen:
                y = G.mul(x, g)
                if dc_of[y] < 0:
                    dc_of[y] = cid
                    size += 1
                    queue.append(y)
        sizes.append(size)
    if sum(sizes) != n:
        raise AssertionError("double cosets do not partition the group")
    for cid, g in enumerate(reps):
        ginv = G.inv(g)
        meet = sum(
            1 for k in right.member_ids
            if G.mul(G.mul(g, k), ginv) in left.member_set)
        if sizes[cid] * meet != left.order * right.order:
            raise AssertionError(
                f"double-coset size formula fails at coset {cid}: "
                f"{sizes[cid]} * {meet} != {left.order} * {right.order}")
    return DoubleCosetPartition(dc_of, reps, sizes)


# -- products with opposite groups ----------------------------------------


def opposite_product(G: GroupTable, H: GroupTable, cap: int = DEFAULT_CAP,
                     name: str | None = None) -> GroupTable:
    """The group G x H^opp with multiplication (a,b)(c,d) = (ac, db).

    Realized as permutations of degree(G) + degree(H): the pair (a, b) acts
    as ``a`` on the first block and as ``b^{-1}`` on the second.  Sending
    b to b^{-1} is an isomorphism H^opp -> H, so the second slot composes
    in reversed order, as required; no separate opposite table is built.
    Element ids are ``a_id * |H| + b_id``.
    """
    total = G.order * H.order
    if total > cap:
        raise EnumerationOverflow(cap, total)
    dG, dH = G.degree, H.degree
    shifted = [tuple(x + dG for x in H.elements[H.inverse[b]])
               for b in range(H.order)]
    elements = [a + blk for a in G.elements for blk in shifted]
    gens = [g * H.order for g in G.generators] + list(H.generators)
    P = GroupTable(dG + dH, elements, gens,
                   name=name or f"{G.name}x{H.name}^opp")
    P.left_base = G
    P.right_base = H
    return P


def encode_pair(P: GroupTable, a: int, b: int) -> int:
    """Id in the product table of the pair (a, b) in G x H^opp."""
    return a * P.right_base.order + b


def decode_pair(P: GroupTable, pid: int) -> tuple[int, int]:
    return divmod(pid, P.right_base.order)


def product_with_opposite(G: GroupTable, cap: int = DEFAULT_CAP) -> tuple[GroupTable, Subgroup]:
    """G x G^opp together with its diagonal subgroup {(x, x^{-1})}."""
    P = opposite_product(G, G, cap=cap)
    members = sorted(encode_pair(P, x, G.inverse[x]) for x in range(G.order))
    gens = sorted(encode_pair(P, g, G.inverse[g]) for g in G.generators)
    diag = Subgroup(P, members, gens, name=f"diag({G.name})")
    return P, diag


# -- group specification files ---------------------------------------------


def group_from_spec(spec: dict, cap: int = DEFAULT_CAP) -> GroupTable:
    """Build a group from a JSON spec {degree, generators, name?}."""
    degree = int(spec["degree"])
    gens = [parse_cycles(s, degree) for s in spec.get("generators", [])]
    return generate_group(degree, gens, cap=cap, name=spec.get("name"))


def load_group(path: str, cap: int = DEFAULT_CAP) -> GroupTable:
    with open(path) as fh:
        return group_from_spec(json.load(fh), cap=cap)


def class_label(G: GroupTable, c: int) -> str:
    return cycle_string(G.elements[G.class_reps[c]])
