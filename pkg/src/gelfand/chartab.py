"""Exact character tables of enumerated finite groups.

The method is the classical modular one: the class-sum matrices of the
group act on the span of the class sums; their common eigenvectors over a
prime field F_p (p = 1 mod the group exponent, p > 2*sqrt(|G|)) are the
normalized irreducible characters.  Degrees are recovered from the
orthogonality relation mod p, and each character value is lifted exactly
to a multiset of roots of unity by counting eigenvalue multiplicities.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from . import oracle
from .cyclotomic import (
    modular_prime,
    root_sum_as_int,
    root_sum_eval,
    smallest_primitive_root,
    sqrt_mod,
)
from .grouptab import GroupTable


class IntegralityError(ArithmeticError):
    """A quantity that must be a nonnegative integer failed its gate."""

    def __init__(self, message: str, raw):
        super().__init__(f"{message} (raw value {raw!r})")
        self.raw = raw


class CharTableError(RuntimeError):
    """Internal inconsistency while building a character table."""


@dataclass(frozen=True)
class RootMultiset:
    """A character value as eigenvalue multiplicities: sum of mult[k] * zeta_e^k."""

    e: int
    mult: tuple[tuple[int, int], ...]  # sorted (power, multiplicity) pairs

    @staticmethod
    def from_dict(e: int, d: dict[int, int]) -> "RootMultiset":
        return RootMultiset(e, tuple(sorted((k, m) for k, m in d.items() if m)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.mult)

    def total(self) -> int:
        return sum(m for _, m in self.mult)

    def eval_complex(self) -> complex:
        return sum(m * cmath.exp(2j * cmath.pi * k / self.e) for k, m in self.mult)

    def conjugate(self) -> "RootMultiset":
        return RootMultiset(self.e, tuple(sorted(((-k) % self.e, m) for k, m in self.mult)))

    def as_int(self) -> int | None:
        return root_sum_as_int(self.as_dict(), self.e)


def eval_complex(v: RootMultiset) -> complex:
    """Numeric value of a root multiset, double precision."""
    return v.eval_complex()


# -- modular linear algebra --------------------------------------------------


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _nullspace(A: list[list[int]], p: int) -> list[list[int]]:
    d = len(A)
    rr, piv = _rref(A, p)
    free = [j for j in range(d) if j not in piv]
    basis = []
    for j in free:
        v = [0] * d
        v[j] = 1
        for i, pc in enumerate(piv):
            v[pc] = (-rr[i][j]) % p
        basis.append(v)
    return basis


def _charpoly(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial mod p (low degree first, monic) via
    Hessenberg reduction; only divides by invertible pivots."""
    d = len(A)
    H = [[x % p for x in row] for row in A]
    for j in range(d - 2):
        piv = next((i for i in range(j + 1, d) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[j + 1], H[piv] = H[piv], H[j + 1]
            for row in H:
                row[j + 1], row[piv] = row[piv], row[j + 1]
        inv = pow(H[j + 1][j], p - 2, p)
        for i in range(j + 2, d):
            if H[i][j]:
                t = H[i][j] * inv % p
                H[i] = [(a - t * b) % p for a, b in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + t * row[i]) % p
    polys = [[1]]  # char polys of leading minors
    for m in range(1, d + 1):
        prev = polys[m - 1]
        cur = [(-H[m - 1][m - 1]) * c % p for c in prev] + [0]
        for k in range(len(prev)):
            cur[k + 1] = (cur[k + 1] + prev[k]) % p
        run = 1
        for i in range(m - 1, 0, -1):
            run = run * H[i][i - 1] % p
            if run == 0:
                break
            f = H[i - 1][m - 1] * run % p
            if f:
                pim1 = polys[i - 1]
                for k in range(len(pim1)):
                    cur[k] = (cur[k] - f * pim1[k]) % p
        polys.append(cur)
    return polys[d]


def _poly_roots(coeffs: list[int], p: int) -> list[int]:
    roots = []
    for z in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * z + c) % p
        if acc == 0:
            roots.append(z)
    return roots


def _split_common_eigenvectors(mats, r: int, p: int) -> list[list[int]]:
    """One-dimensional common eigenspaces of a commuting split family.

    ``mats`` maps a class index to its class-sum matrix action; subspaces
    are refined until every one is a line.
    """
    spaces: list[tuple[list[list[int]], list[int]]] = [
        ([[1 if i == j else 0 for j in range(r)] for i in range(r)], list(range(r)))
    ]
    for lam in range(1, r):
        if all(len(B) == 1 for B, _ in spaces):
            break
        M = mats(lam)
        refined = []
        for B, piv in spaces:
            d = len(B)
            if d == 1:
                refined.append((B, piv))
                continue
            images = []
            for b in B:
                images.append([sum(M[i][k] * b[k] for k in range(r)) % p
                               for i in range(r)])
            A = [[images[j][piv[i]] for j in range(d)] for i in range(d)]
            for j in range(d):
                recon = [0] * r
                for i in range(d):
                    aij = A[i][j]
                    if aij:
                        for k in range(r):
                            recon[k] = (recon[k] + aij * B[i][k]) % p
                if recon != images[j]:
                    raise CharTableError("class matrix does not preserve subspace")
            total = 0
            for z in sorted(_poly_roots(_charpoly(A, p), p)):
                shifted = [[(A[i][j] - (z if i == j else 0)) % p for j in range(d)]
                           for i in range(d)]
                coords = _nullspace(shifted, p)
                vecs = []
                for c in coords:
                    v = [0] * r
                    for jj, cj in enumerate(c):
                        if cj:
                            for k in range(r):
                                v[k] = (v[k] + cj * B[jj][k]) % p
                    vecs.append(v)
                sub, subpiv = _rref(vecs, p)
                total += len(sub)
                refined.append((sub, subpiv))
            if total != d:
                raise CharTableError("class matrix failed to split over F_p")
        spaces = refined
    if any(len(B) != 1 for B, _ in spaces):
        raise CharTableError("common eigenspaces did not all reach dimension 1")
    return [B[0] for B, _ in spaces]


# -- the character table ------------------------------------------------------


class CharTable:
    """Irreducible characters of an enumerated group, exactly.

    Rows are sorted by (degree, value tuple) and therefore deterministic;
    row 0 is the trivial character.
    """

    def __init__(self, group: GroupTable, degrees: list[int],
                 values: list[list[RootMultiset]], power_map: list[list[int]],
                 prime: int, exponent: int, mod_rows: list[list[int]]):
        self.group = group
        self.degrees = degrees
        self.values = values
        self.power_map = power_map
        self.prime = prime
        self.exponent = exponent
        self.mod_rows = mod_rows
        ints: list[list[int]] | None = []
        for row in values:
            irow = [v.as_int() for v in row]
            if any(x is None for x in irow):
                ints = None
                break
            ints.append(irow)
        self.int_rows = ints
        self._complex_rows: list[list[complex]] | None = None

    @property
    def n_irreducibles(self) -> int:
        return len(self.degrees)

    @property
    def is_integer_valued(self) -> bool:
        return self.int_rows is not None

    def value(self, i: int, c: int) -> RootMultiset:
        return self.values[i][c]

    def complex_rows(self) -> list[list[complex]]:
        if self._complex_rows is None:
            self._complex_rows = [[v.eval_complex() for v in row] for row in self.values]
        return self._complex_rows

    def power_class(self, c: int, j: int) -> int:
        pm = self.power_map[c]
        return pm[j % len(pm)]

    def verify(self, tol: float = 1e-9) -> None:
        """Exhaustive health check; raises CharTableError on any failure."""
        G = self.group
        r = G.n_classes
        if len(self.values) != r:
            raise CharTableError("row count != class count")
        if sum(d * d for d in self.degrees) != G.order:
            raise CharTableError("sum of squared degrees != |G|")
        for i, row in enumerate(self.values):
            if row[0].as_dict() != ({0: self.degrees[i]} if self.degrees[i] else {}):
                raise CharTableError(f"row {i}: value at identity != degree")
        if any(v.as_int() != 1 for v in self.values[0]):
            raise CharTableError("row 0 is not the trivial character")
        sizes = G.class_sizes
        inv_cls = [G.inverse_class(c) for c in range(r)]
        # orthogonality mod p (exact images used by the construction)
        p = self.prime
        for i in range(len(self.values)):
            for j in range(i, len(self.values)):
                s = sum(sizes[c] * self.mod_rows[i][c] * self.mod_rows[j][inv_cls[c]]
                        for c in range(r)) % p
                want = G.order % p if i == j else 0
                if s != want:
                    raise CharTableError(f"mod-p row orthogonality fails at ({i},{j})")
        if self.int_rows is not None:
            rows = self.int_rows
            for i in range(len(rows)):
                for j in range(i, len(rows)):
                    s = sum(sizes[c] * rows[i][c] * rows[j][c] for c in range(r))
                    if s != (G.order if i == j else 0):
                        raise CharTableError(f"row orthogonality fails at ({i},{j})")
            for c in range(r):
                for c2 in range(c, r):
                    s = sum(row[c] * row[c2] for row in rows)
                    want = G.order // sizes[c] if c == c2 else 0
                    if s != want:
                        raise CharTableError(f"column orthogonality fails at ({c},{c2})")
        else:
            self._verify_nonrational(tol)

    def _verify_nonrational(self, tol: float) -> None:
        G = self.group
        r = G.n_classes
        sizes = G.class_sizes
        e = self.exponent
        for i in range(len(self.values)):
            for j in range(i, len(self.values)):
                acc: dict[int, int] = {}
                for c in range(r):
                    cj = self.values[j][c].conjugate()
                    for k1, m1 in self.values[i][c].mult:
                        for k2, m2 in cj.mult:
                            key = (k1 + k2) % e
                            acc[key] = acc.get(key, 0) + sizes[c] * m1 * m2
                got = root_sum_as_int(acc, e)
                if got != (G.order if i == j else 0):
                    raise CharTableError(f"row orthogonality fails at ({i},{j})")
        cols = self.complex_rows()
        for c in range(r):
            for c2 in range(r):
                s = sum(cols[i][c] * cols[i][c2].conjugate() for i in range(len(cols)))
                want = G.order / sizes[c] if c == c2 else 0.0
                if abs(s - want) > tol * max(1.0, G.order):
                    raise CharTableError(f"column orthogonality fails at ({c},{c2})")


def class_constants(G: GroupTable):
    """Structure-constant tensor a[lam][delta][rho] of the class algebra."""
    return oracle.class_constants_tensor(G)


def character_table(G: GroupTable) -> CharTable:
    """Compute (and cache on G) the exact character table."""
    if G._chartab is not None:
        return G._chartab
    class_of, reps, sizes = G.conjugacy_data()
    r = len(reps)
    tensor = class_constants(G)
    e = G.exponent()
    p = modular_prime(e, G.order)

    def mat(lam: int) -> list[list[int]]:
        return [[tensor[lam][d][rho] % p for rho in range(r)] for d in range(r)]

    eigvecs = _split_common_eigenvectors(mat, r, p)
    inv_cls = [G.inverse_class(c) for c in range(r)]
    size_inv = [pow(s % p, p - 2, p) for s in sizes]
    order_mod = G.order % p

    rows_mod: list[list[int]] = []
    degrees: list[int] = []
    for u in eigvecs:
        if u[0] % p == 0:
            raise CharTableError("eigenvector vanishes at the identity class")
        norm = pow(u[0], p - 2, p)
        u = [x * norm % p for x in u]
        s = sum(u[c] * u[inv_cls[c]] % p * size_inv[c] for c in range(r)) % p
        if s == 0:
            raise CharTableError("degenerate norm in degree recovery")
        dsq = order_mod * pow(s, p - 2, p) % p
        d = sqrt_mod(dsq, p)
        d = min(d, p - d)
        degrees.append(d)
        rows_mod.append([d * u[c] % p * size_inv[c] % p for c in range(r)])

    # power maps: class of rep^j for j < order(rep)
    power_map: list[list[int]] = []
    for c in range(r):
        pm = [0]
        x = reps[c]
        while x != 0:
            pm.append(class_of[x])
            x = G.mul(x, reps[c])
        power_map.append(pm)

    w = smallest_primitive_root(p)
    rows: list[list[RootMultiset]] = []
    for i, chim in enumerate(rows_mod):
        row = []
        for c in range(r):
            pm = power_map[c]
            o = len(pm)
            zeta_inv = pow(w, (p - 1) - (p - 1) // o, p)
            o_inv = pow(o, p - 2, p)
            mult: dict[int, int] = {}
            tot = 0
            for k in range(o):
                acc = 0
                for s in range(o):
                    acc = (acc + chim[pm[s]] * pow(zeta_inv, (s * k) % o, p)) % p
                m = acc * o_inv % p
                if m:
                    mult[k * (e // o)] = m
                    tot += m
            if tot != degrees[i]:
                raise CharTableError(
                    f"eigenvalue multiplicities of irrep {i} at class {c} "
                    f"sum to {tot}, expected degree {degrees[i]}")
            row.append(RootMultiset.from_dict(e, mult))
        rows.append(row)

    order_key = sorted(range(len(rows)),
                       key=lambda i: (degrees[i], [rows[i][c].mult for c in range(r)]))
    degrees = [degrees[i] for i in order_key]
    rows = [rows[i] for i in order_key]
    rows_mod = [rows_mod[i] for i in order_key]

    if sum(d * d for d in degrees) != G.order:
        raise CharTableError("sum of squared degrees != |G|")

    table = CharTable(G, degrees, rows, power_map, p, e, rows_mod)
    G._chartab = table
    return table


def frobenius_center_coeff(table: CharTable, lam: int, delta: int, rho: int) -> int:
    """Class-algebra structure coefficient from the character sum.

    Evaluated in complex doubles; the result must be a nonnegative integer
    within 1e-6, else an IntegralityError is raised.
    """
    G = table.group
    sizes = G.class_sizes
    rows = table.complex_rows()
    tot = 0j
    for i, d in enumerate(table.degrees):
        tot += rows[i][lam] * rows[i][delta] * rows[i][rho].conjugate() / d
    raw = tot * sizes[lam] * sizes[delta] / G.order
    return require_nonneg_int(raw, "class structure coefficient")


def require_nonneg_int(raw, what: str, tol: float = 1e-6) -> int:
    """Gate a numeric value that must be an exact nonnegative integer."""
    from fractions import Fraction

    if isinstance(raw, Fraction):
        if raw.denominator != 1 or raw < 0:
            raise IntegralityError(f"{what} is not a nonnegative integer", raw)
        return int(raw)
    if isinstance(raw, complex):
        if abs(raw.imag) >= tol:
            raise IntegralityError(f"{what} has nonzero imaginary part", raw)
        raw = raw.real
    n = round(raw)
    if abs(raw - n) >= tol or n < 0:
        raise IntegralityError(f"{what} is not a nonnegative integer", raw)
    return int(n)
