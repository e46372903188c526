"""The Plancherel measure on the irreducible characters and the moments of
the normalized-character random variable.

The m-th moment of F_g has two independent evaluations: directly from the
character table, and structurally from the class-algebra structure
constants via the product expansion of F_g F_{g'}.  Both are exact
rationals whenever the character table is integer-valued.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import CharTable, character_table
from .grouptab import GroupTable
from .oracle import class_constants_tensor


@dataclass
class MomentReport:
    class_id: int
    m: int
    direct: object
    structural: object
    equal: bool


def plancherel(table: CharTable) -> list[Fraction]:
    """Exact probabilities dim^2 / |G| per irreducible."""
    n = table.group.order
    probs = [Fraction(d * d, n) for d in table.degrees]
    if sum(probs) != 1:
        raise AssertionError("Plancherel probabilities do not sum to 1")
    return probs


def moment_direct(table: CharTable, class_id: int, m: int):
    """sum_X (dim X)^2/|G| * (chi(g)/dim X)^m for g in the given class."""
    if m < 0:
        raise ValueError("m must be >= 0")
    n = table.group.order
    if table.int_rows is not None:
        return sum(Fraction(d * d, n) * Fraction(row[class_id], d) ** m
                   for d, row in zip(table.degrees, table.int_rows))
    rows = table.complex_rows()
    return sum(d * d / n * (rows[i][class_id] / d) ** m
               for i, d in enumerate(table.degrees))


def moment_mixed(table: CharTable, lam: int, delta: int):
    """Expectation of F_g F_{g'} for g in C_lam, g' in C_delta."""
    n = table.group.order
    if table.int_rows is not None:
        return sum(Fraction(row[lam] * row[delta], n) for row in table.int_rows)
    rows = table.complex_rows()
    return sum(rows[i][lam] * rows[i][delta] for i in range(len(rows))) / n


def moment_structural(G: GroupTable, lam: int, m: int) -> Fraction:
    """m-th moment via the structure-constant recursion.

    F-products expand over classes: multiplying by F_g maps the coefficient
    vector v to v'[rho] = sum_mu v[mu] c_{mu,lam}^rho |C_rho|/(|C_mu||C_lam|);
    the expectation of the result is the coefficient at the identity class.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    tensor = class_constants_tensor(G)
    sizes = G.class_sizes
    r = G.n_classes
    vec = [Fraction(0)] * r
    vec[lam] = Fraction(1)
    for _ in range(m - 1):
        nxt = [Fraction(0)] * r
        for mu in range(r):
            if vec[mu]:
                base = vec[mu] / (sizes[mu] * sizes[lam])
                row = tensor[mu][lam]
                for rho in range(r):
                    if row[rho]:
                        nxt[rho] += base * row[rho] * sizes[rho]
        vec = nxt
    return vec[0]


def moment_structural_closed(G: GroupTable, lam: int, m: int) -> Fraction:
    """The closed forms for m <= 4, kept as an independent cross-check."""
    tensor = class_constants_tensor(G)
    sizes = G.class_sizes
    size = sizes[lam]
    if m == 1:
        return Fraction(1) if lam == 0 else Fraction(0)
    if m == 2:
        return Fraction(tensor[lam][lam][0], size * size)
    if m == 3:
        return Fraction(tensor[lam][lam][lam], size * size)
    if m == 4:
        tot = sum(tensor[lam][lam][rho] * tensor[rho][lam][lam]
                  for rho in range(G.n_classes))
        return Fraction(tot, size ** 3)
    raise ValueError("closed forms cover m <= 4 only")


def moment_reports(G: GroupTable, max_m: int = 4) -> list[MomentReport]:
    table = character_table(G)
    out = []
    for c in range(G.n_classes):
        for m in range(1, max_m + 1):
            direct = moment_direct(table, c, m)
            structural = moment_structural(G, c, m)
            if isinstance(direct, Fraction):
                equal = direct == structural
            else:
                equal = abs(direct - complex(structural)) <= 1e-9
            out.append(MomentReport(c, m, direct, structural, equal))
    return out
