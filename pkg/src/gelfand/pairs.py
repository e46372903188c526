"""Gelfand pairs: zonal spherical functions, idempotents, and the
character-sum formulas for double-coset structure coefficients.

All final coefficients are nonnegative integers; when the character table
is integer-valued (every symmetric-group-family pair) the whole pipeline
runs in exact rational arithmetic, otherwise in complex doubles behind an
integrality gate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .chartab import CharTable, IntegralityError, character_table, require_nonneg_int
from .grouptab import (
    DoubleCosetPartition,
    GroupTable,
    Subgroup,
    class_label,
    double_cosets,
)

FULL_CHECK_BOUND = 5000  # exhaustive coset constancy up to this group order


class NotGelfandError(RuntimeError):
    """The pair is not a Gelfand pair (induced module not multiplicity-free)."""


class ConsistencyError(RuntimeError):
    """The two Gelfand criteria disagreed; that contradicts the theory."""


def induced_multiplicities(G: GroupTable, K: Subgroup,
                           table: CharTable | None = None) -> list[int]:
    """Multiplicity of each irreducible in the induced trivial module,
    m_chi = (1/|K|) sum_{k in K} chi(k)."""
    table = table or character_table(G)
    counts = [0] * G.n_classes
    for k in K.member_ids:
        counts[G.class_of[k]] += 1
    out = []
    for i in range(table.n_irreducibles):
        if table.int_rows is not None:
            raw = Fraction(sum(c * v for c, v in zip(counts, table.int_rows[i])), K.order)
        else:
            row = table.complex_rows()[i]
            raw = sum(c * v for c, v in zip(counts, row)) / K.order
        out.append(require_nonneg_int(raw, f"multiplicity of irreducible {i}"))
    return out


@dataclass
class GelfandCertificate:
    multiplicity_free: bool
    commutative: bool
    multiplicities: list[int]
    witness: tuple | None = None  # a non-commuting (lam, delta) if any

    @property
    def gelfand(self) -> bool:
        return self.multiplicity_free and self.commutative


def is_gelfand(G: GroupTable, K: Subgroup,
               dc: DoubleCosetPartition | None = None) -> GelfandCertificate:
    """Evaluate both Gelfand criteria and cross-check them.

    (a) every multiplicity in the induced trivial module is at most one;
    (b) the double-coset algebra is commutative, by brute-force counting.
    A disagreement contradicts the theory and raises ConsistencyError.
    """
    mult = induced_multiplicities(G, K)
    mfree = all(m <= 1 for m in mult)
    dc = dc or double_cosets(G, K, K)
    tensor = oracle.dc_constants_tensor(G, dc)
    witness = None
    for a in range(dc.n_cosets):
        for b in range(a + 1, dc.n_cosets):
            if tensor[a][b] != tensor[b][a]:
                witness = (a, b)
                break
        if witness:
            break
    commutative = witness is None
    if mfree != commutative:
        raise ConsistencyError(
            f"multiplicity-free={mfree} but commutative={commutative}")
    return GelfandCertificate(mfree, commutative, mult, witness)


@dataclass
class PairData:
    """A Gelfand pair with its double cosets and zonal table.

    ``zonal[t][c]`` is the value of the t-th zonal spherical function on
    the c-th double coset, as an exact Fraction when the character table
    is integer-valued and as a complex double otherwise.  Coset 0 is the
    coset of the identity (the subgroup itself).
    """

    group: GroupTable
    sub: Subgroup
    dc: DoubleCosetPartition
    table: CharTable
    multiplicities: list[int]
    constituents: list[int]
    degrees: list[int]
    zonal: list[list]
    kind: str = "custom"
    name: str = ""
    coset_labels: list = field(default_factory=list)
    constituent_labels: list | None = None

    @property
    def exact(self) -> bool:
        return self.table.int_rows is not None

    @property
    def n_cosets(self) -> int:
        return self.dc.n_cosets

    def coset_label(self, c: int):
        return self.coset_labels[c]

    def label_index(self, label) -> int:
        for c, lab in enumerate(self.coset_labels):
            if lab == label:
                return c
        raise KeyError(f"no double coset labelled {label!r}")

    def zonal_value(self, t: int, element_id: int):
        return self.zonal[t][self.dc.dc_of[element_id]]

    def __repr__(self):
        return f"PairData({self.name}, cosets={self.n_cosets})"


def _coset_k_counts(G: GroupTable, K: Subgroup, x_inv: int) -> list[int]:
    """Class counts of { x^{-1} k : k in K }."""
    counts = [0] * G.n_classes
    class_of = G.class_of
    for k in K.member_ids:
        counts[class_of[G.mul(x_inv, k)]] += 1
    return counts


def _zonal_from_counts(table: CharTable, constituents: list[int],
                       counts: list[int], k_order: int) -> list:
    if table.int_rows is not None:
        return [Fraction(sum(c * v for c, v in zip(counts, table.int_rows[i])), k_order)
                for i in constituents]
    rows = table.complex_rows()
    return [sum(c * v for c, v in zip(counts, rows[i])) / k_order
            for i in constituents]


def build_pair(G: GroupTable, K: Subgroup, *, kind: str = "custom",
               name: str = "", coset_labels: list | None = None,
               check_constancy: bool = True, seed: int = 0) -> PairData:
    """Construct the zonal table of a Gelfand pair.

    Raises NotGelfandError if the induced trivial module is not
    multiplicity-free.  Zonal values are verified to be constant on the
    double cosets (on full cosets for |G| <= 5000, on 100 random elements
    otherwise) and to equal 1 at the identity coset.
    """
    table = character_table(G)
    dc = double_cosets(G, K, K)
    mult = induced_multiplicities(G, K, table)
    if any(m > 1 for m in mult):
        raise NotGelfandError(
            f"{name or 'pair'}: multiplicities {mult} are not all <= 1")
    constituents = [i for i, m in enumerate(mult) if m == 1]
    if len(constituents) != dc.n_cosets:
        raise ConsistencyError(
            f"{len(constituents)} constituents vs {dc.n_cosets} double cosets")
    degrees = [table.degrees[i] for i in constituents]

    zonal_cols = []
    for c in range(dc.n_cosets):
        counts = _coset_k_counts(G, K, G.inverse[dc.reps[c]])
        zonal_cols.append(_zonal_from_counts(table, constituents, counts, K.order))
    zonal = [[zonal_cols[c][t] for c in range(dc.n_cosets)]
             for t in range(len(constituents))]

    one = Fraction(1) if table.int_rows is not None else 1.0
    for t in range(len(constituents)):
        if not _close(zonal[t][0], one):
            raise ConsistencyError(f"zonal function {t} is {zonal[t][0]} at identity coset")

    pair = PairData(G, K, dc, table, mult, constituents, degrees, zonal,
                    kind=kind, name=name or f"({G.name}, {K.name})")
    pair.coset_labels = coset_labels or [class_label(G, G.class_of[r]) for r in dc.reps]
    if check_constancy:
        _check_constancy(pair, seed=seed)
    return pair


def _close(a, b, tol: float = 1e-9) -> bool:
    if isinstance(a, (Fraction, int)) and isinstance(b, (Fraction, int)):
        return a == b
    return abs(a - b) <= tol


def _check_constancy(pair: PairData, seed: int = 0, samples: int = 100) -> None:
    G, K, dc = pair.group, pair.sub, pair.dc
    if G.order <= FULL_CHECK_BOUND:
        todo = range(G.order)
    else:
        rng = random.Random(seed)
        todo = [rng.randrange(G.order) for _ in range(samples)]
    for x in todo:
        counts = _coset_k_counts(G, K, G.inverse[x])
        vals = _zonal_from_counts(pair.table, pair.constituents, counts, K.order)
        c = dc.dc_of[x]
        for t, v in enumerate(vals):
            if not _close(v, pair.zonal[t][c]):
                raise ConsistencyError(
                    f"zonal function {t} is not constant on coset {c}")


def zonal_table(pair: PairData) -> list[list]:
    """The matrix omega[t][c] of zonal values (already built with the pair)."""
    return pair.zonal


def _conj(v):
    return v.conjugate() if isinstance(v, complex) else v


def _zonal_sum(pair: PairData, lams: list[int], rho: int):
    scale = Fraction(1, pair.group.order) if pair.exact else 1.0 / pair.group.order
    for lam in lams:
        scale *= pair.dc.sizes[lam]
    tot = Fraction(0) if pair.exact else 0j
    for t, d in enumerate(pair.degrees):
        term = d * _conj(pair.zonal[t][rho])
        for lam in lams:
            term *= pair.zonal[t][lam]
        tot += term
    return scale * tot


def structure_coeff(pair: PairData, lam: int, delta: int, rho: int) -> int:
    """Coefficient of DC_rho in DC_lam * DC_delta, from the zonal table."""
    return require_nonneg_int(_zonal_sum(pair, [lam, delta], rho),
                              f"structure coefficient ({lam},{delta};{rho})")


def structure_coeff_multi(pair: PairData, lams: list[int], rho: int) -> int:
    """Coefficient of DC_rho in the product of r >= 2 double-coset sums."""
    if len(lams) < 2:
        raise ValueError("need at least two factors")
    return require_nonneg_int(_zonal_sum(pair, list(lams), rho),
                              f"structure coefficient ({lams};{rho})")


def formula_tensor(pair: PairData):
    """Full k[lam][delta][rho] tensor from the zonal formula."""
    n = pair.n_cosets
    return [[[structure_coeff(pair, a, b, c) for c in range(n)]
             for b in range(n)] for a in range(n)]


def oracle_tensor(pair: PairData):
    return oracle.dc_constants_tensor(pair.group, pair.dc)


# -- idempotents -------------------------------------------------------------


def idempotents(pair: PairData) -> list[list]:
    """Coefficient vector over double cosets of each idempotent E_t."""
    G = pair.group
    out = []
    for t, d in enumerate(pair.degrees):
        if pair.exact:
            out.append([Fraction(d, G.order) * pair.zonal[t][c]
                        for c in range(pair.n_cosets)])
        else:
            out.append([d / G.order * _conj(pair.zonal[t][c])
                        for c in range(pair.n_cosets)])
    return out


def verify_idempotents(pair: PairData, tol: float = 1e-9) -> None:
    """E_s * E_t = delta_st E_s under the oracle product, and the coset sums
    expand as DC_c = |DC_c| sum_t omega_t(c) E_t."""
    es = idempotents(pair)
    tensor = oracle_tensor(pair)
    n = pair.n_cosets
    for s in range(len(es)):
        for t in range(len(es)):
            for rho in range(n):
                got = sum(es[s][a] * es[t][b] * tensor[a][b][rho]
                          for a in range(n) for b in range(n))
                want = es[s][rho] if s == t else 0
                if not _close(got, want, tol):
                    raise ConsistencyError(
                        f"E_{s} E_{t} has coefficient {got} at coset {rho}, want {want}")
    for c in range(n):
        for rho in range(n):
            got = pair.dc.sizes[c] * sum(pair.zonal[t][c] * es[t][rho]
                                         for t in range(len(es)))
            want = 1 if rho == c else 0
            if not _close(got, want, tol):
                raise ConsistencyError(f"DC_{c} expansion fails at coset {rho}")


# -- verification helpers ------------------------------------------------------


def zonal_inner_products(pair: PairData):
    """Gram matrix <omega_s, omega_t> = (1/|G|) sum_x omega_s(x) conj(omega_t(x))."""
    G = pair.group
    n = pair.n_cosets
    sizes = pair.dc.sizes
    out = []
    for s in range(len(pair.degrees)):
        row = []
        for t in range(len(pair.degrees)):
            tot = sum(sizes[c] * pair.zonal[s][c] * _conj(pair.zonal[t][c])
                      for c in range(n))
            row.append(tot / G.order if not pair.exact else Fraction(tot, G.order))
        out.append(row)
    return out


def check_zonal_orthogonality(pair: PairData, tol: float = 1e-9) -> None:
    gram = zonal_inner_products(pair)
    for s in range(len(gram)):
        for t in range(len(gram)):
            want = (Fraction(1, pair.degrees[s]) if pair.exact
                    else 1.0 / pair.degrees[s]) if s == t else 0
            if not _close(gram[s][t], want, tol):
                raise ConsistencyError(
                    f"<omega_{s}, omega_{t}> = {gram[s][t]}, want {want}")


def check_functional_equation(pair: PairData, samples: int = 50, seed: int = 0,
                              tol: float = 1e-9) -> None:
    """omega(x) omega(y) = (1/|K|) sum_k omega(x k y) on random pairs."""
    G, K = pair.group, pair.sub
    rng = random.Random(seed)
    for _ in range(samples):
        x = rng.randrange(G.order)
        y = rng.randrange(G.order)
        xk = [G.mul(x, k) for k in K.member_ids]
        coset_counts: dict[int, int] = {}
        for z in xk:
            c = pair.dc.dc_of[G.mul(z, y)]
            coset_counts[c] = coset_counts.get(c, 0) + 1
        for t in range(len(pair.degrees)):
            rhs = sum(cnt * pair.zonal[t][c] for c, cnt in coset_counts.items())
            rhs = Fraction(rhs, K.order) if pair.exact else rhs / K.order
            lhs = pair.zonal_value(t, x) * pair.zonal_value(t, y)
            if not _close(lhs, rhs, tol):
                raise ConsistencyError(
                    f"functional equation fails for omega_{t} at ({x},{y})")


def check_morphism(pair: PairData, tol: float = 1e-9) -> None:
    """Linear extension of each zonal function is multiplicative on the
    double-coset algebra: omega(DC_a DC_b) = omega(DC_a) omega(DC_b)."""
    tensor = oracle_tensor(pair)
    sizes = pair.dc.sizes
    n = pair.n_cosets
    for t in range(len(pair.degrees)):
        vals = pair.zonal[t]
        for a in range(n):
            for b in range(n):
                lhs = sum(tensor[a][b][rho] * sizes[rho] * vals[rho] for rho in range(n))
                rhs = sizes[a] * vals[a] * sizes[b] * vals[b]
                if not _close(lhs, rhs, tol):
                    raise ConsistencyError(
                        f"omega_{t} is not multiplicative at ({a},{b})")


def check_zonal_convolution(pair: PairData, tol: float = 1e-9) -> None:
    """omega_s * omega_t = delta_st (|G|/deg_s) omega_s as functions on G.

    Exhaustive; intended for |G| <= ~720.  Exact pairs are checked in
    scaled integer arithmetic, others in complex doubles.
    """
    G, K = pair.group, pair.sub
    n = G.order
    dc_of = pair.dc.dc_of
    if pair.exact:
        svecs = []
        for t in range(len(pair.degrees)):
            scaled = [pair.zonal[t][dc_of[x]] * K.order for x in range(n)]
            if any(v.denominator != 1 for v in scaled):
                raise ConsistencyError("scaled zonal values are not integers")
            svecs.append([int(v) for v in scaled])
        for s in range(len(svecs)):
            for t in range(len(svecs)):
                conv = oracle.convolve(G, svecs[s], svecs[t])
                if s == t:
                    factor = G.order * K.order // pair.degrees[s]
                    if G.order * K.order % pair.degrees[s]:
                        raise ConsistencyError("non-integral convolution factor")
                    want = [factor * v for v in svecs[s]]
                else:
                    want = [0] * n
                if conv != want:
                    raise ConsistencyError(f"omega_{s} * omega_{t} convolution fails")
    else:
        fvecs = [[complex(pair.zonal[t][dc_of[x]]) for x in range(n)]
                 for t in range(len(pair.degrees))]
        for s in range(len(fvecs)):
            for t in range(len(fvecs)):
                conv = oracle.convolve_general(G, fvecs[s], fvecs[t])
                for x in range(n):
                    want = (G.order / pair.degrees[s]) * fvecs[s][x] if s == t else 0
                    if abs(conv[x] - want) > tol * max(1.0, G.order):
                        raise ConsistencyError(
                            f"omega_{s} * omega_{t} convolution fails at {x}")
