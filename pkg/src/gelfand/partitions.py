"""Integer partitions, symmetric-group characters, and coset labels.

Partitions are tuples of weakly decreasing positive integers.  Characters
of irreducible symmetric-group modules are computed by the rim-hook
recursion on beta-sets; coset types label the double cosets of the
hyperoctahedral subgroup, and (i, lambda) pairs label the double cosets of
a diagonally embedded one-point stabilizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .perm import Perm, inverse

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(p > 0 for p in parts)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order; p(0) = [()]."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(total: int, max_part: int):
        if total == 0:
            yield ()
            return
        for k in range(min(total, max_part), 0, -1):
            for rest in gen(total - k, k):
                yield (k,) + rest

    return tuple(gen(n, n))


def z_number(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i."""
    out = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part ** m * math.factorial(m)
    return out


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def hook_product(lam: Partition) -> int:
    out = 1
    for row in hook_lengths(lam):
        for h in row:
            out *= h
    return out


def partition_dim(lam: Partition) -> int:
    """Dimension n! / (product of hook lengths)."""
    n = sum(lam)
    return math.factorial(n) // hook_product(lam)


def partition_stats(lam: Partition) -> tuple[int, int, int]:
    """(z_lambda, hook product, dimension)."""
    return z_number(lam), hook_product(lam), partition_dim(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def double_partition(lam: Partition) -> Partition:
    return tuple(2 * p for p in lam)


def sn_class_size(lam: Partition) -> int:
    return math.factorial(sum(lam)) // z_number(lam)


# -- rim-hook character recursion -------------------------------------------


def mn_character(lam: Partition, mu: Partition) -> int:
    """Exact character of the irreducible module lam on cycle type mu."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| = {sum(lam)} != |mu| = {sum(mu)}")
    if not is_partition(lam) or not is_partition(mu):
        raise ValueError("parts must be positive and weakly decreasing")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    strip, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        # re-insert nb in order
        pos = 0
        while pos < len(newbeta) and newbeta[pos] > nb:
            pos += 1
        newbeta.insert(pos, nb)
        newlam = tuple(c - (ell - 1 - i) for i, c in enumerate(newbeta))
        newlam = tuple(p for p in newlam if p > 0)
        total += (-1) ** height * _mn(newlam, rest)
    return total


# -- coset types for the hyperoctahedral double cosets -----------------------


def coset_type(p: Perm) -> Partition:
    """Coset type of a permutation of even degree 2n: a partition of n.

    Chains alternate p, the pairing swap 2k-1 <-> 2k, p^{-1}, swap; each
    chain closes after an even number of p-steps and contributes half its
    length.  Chains are traced from the smallest point not yet consumed;
    a chain consumes its own points and their swaps.
    """
    deg = len(p)
    if deg % 2:
        raise ValueError("coset type needs even degree")
    q = inverse(p)
    consumed = bytearray(deg)
    parts = []
    for s in range(deg):
        if consumed[s]:
            continue
        cur = s
        length = 0
        while True:
            consumed[cur] = 1
            consumed[cur ^ 1] = 1
            cur = q[p[cur] ^ 1] ^ 1
            length += 1
            if cur == s:
                break
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


# -- (i, lambda) labels for the one-point-stabilizer pair --------------------


@dataclass(frozen=True)
class PairLabel:
    """Label (i, lambda): cycle length i through the distinguished point,
    plus the cycle type lambda of what remains."""

    i: int
    lam: Partition

    @property
    def n(self) -> int:
        return self.i + sum(self.lam)

    def to_json(self) -> dict:
        return {"i": self.i, "lambda": list(self.lam)}

    def __str__(self):
        return f"({self.i}, {list(self.lam)})"


def all_pair_labels(n: int) -> tuple[PairLabel, ...]:
    return tuple(PairLabel(i, lam) for i in range(1, n + 1)
                 for lam in partitions_of(n - i))


def extend_perm(b: Perm, degree: int) -> Perm:
    """Embed a permutation into a larger degree, fixing the new last points."""
    if len(b) > degree:
        raise ValueError("cannot shrink a permutation")
    return b + tuple(range(len(b), degree))


def point_cycle_label(x: Perm, point: int) -> PairLabel:
    """(cycle length through ``point``, cycle type of the other cycles)."""
    seen = bytearray(len(x))
    i = 0
    cur = point
    while not seen[cur]:
        seen[cur] = 1
        i += 1
        cur = x[cur]
    rest = []
    for s in range(len(x)):
        if seen[s]:
            continue
        k = 0
        cur = s
        while not seen[cur]:
            seen[cur] = 1
            k += 1
            cur = x[cur]
        rest.append(k)
    return PairLabel(i, tuple(sorted(rest, reverse=True)))


def sn_sn1_label(a: Perm, b: Perm) -> PairLabel:
    """Double-coset label of the pair (a, b), b of degree n-1.

    b is embedded fixing the last point, so the distinguished point whose
    cycle length gives i is that fixed point.
    """
    n = len(a)
    if len(b) != n - 1:
        raise ValueError(f"expected degrees (n, n-1), got ({len(a)}, {len(b)})")
    x = tuple(a[y] for y in extend_perm(b, n))  # a * b, apply b first
    return point_cycle_label(x, n - 1)
