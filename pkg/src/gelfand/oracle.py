"""Brute-force ground truth for structure coefficients.

Everything here is exact integer counting or convolution in the group
algebra; no formula from the character-theoretic side is used.  The
counting form fixes a representative z of the target class and scans one
factor class, which is O(|C|) per target; the quadratic pairwise form is
kept as a cross-check for small groups.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .grouptab import DoubleCosetPartition, GroupTable

DEFAULT_THREADS = 1  # cap on counting workers; raised by the CLI --threads flag


def _count_rows(G: GroupTable, part_of: list[int], reps: list[int],
                n_parts: int, rho_list: list[int]):
    """For each rho in rho_list: tensor slice t[lam][delta] counting
    {x : part(x) = lam, part(x^{-1} z_rho) = delta}."""
    out = {}
    for rho in rho_list:
        z = reps[rho]
        slice_ = [[0] * n_parts for _ in range(n_parts)]
        for x in range(G.order):
            y = G.mul(G.inverse[x], z)
            slice_[part_of[x]][part_of[y]] += 1
        out[rho] = slice_
    return out


def _constants_tensor(G: GroupTable, part_of: list[int], reps: list[int],
                      threads: int = 1):
    n_parts = len(reps)
    tensor = [[[0] * n_parts for _ in range(n_parts)] for _ in range(n_parts)]
    rhos = list(range(n_parts))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            chunks = [rhos[i::threads] for i in range(threads)]
            results = ex.map(lambda ch: _count_rows(G, part_of, reps, n_parts, ch),
                             chunks)
        merged = {}
        for res in results:
            merged.update(res)
    else:
        merged = _count_rows(G, part_of, reps, n_parts, rhos)
    for rho, slice_ in merged.items():
        for lam in range(n_parts):
            for delta in range(n_parts):
                tensor[lam][delta][rho] = slice_[lam][delta]
    return tensor


def class_constants_tensor(G: GroupTable, threads: int | None = None):
    """a[lam][delta][rho] = #{x in C_lam : x^{-1} z_rho in C_delta}; cached."""
    if G._class_tensor is None:
        class_of, reps, _ = G.conjugacy_data()
        G._class_tensor = _constants_tensor(G, class_of, reps,
                                            threads=threads or DEFAULT_THREADS)
    return G._class_tensor


def class_product_oracle(G: GroupTable, lam: int, delta: int,
                         reps: list[int] | None = None) -> list[int]:
    """Coefficient vector of C_lam * C_delta over all classes.

    ``reps`` optionally overrides the representative of each target class;
    the result must not depend on that choice.
    """
    class_of, default_reps, _ = G.conjugacy_data()
    reps = reps or default_reps
    n = len(default_reps)
    out = [0] * n
    members = G.class_members(lam)
    for rho in range(n):
        z = reps[rho]
        cnt = 0
        for x in members:
            if class_of[G.mul(G.inverse[x], z)] == delta:
                cnt += 1
        out[rho] = cnt
    return out


def class_product_pairwise(G: GroupTable, lam: int, delta: int) -> list[int]:
    """Quadratic cross-check: multiply out C_lam * C_delta pair by pair."""
    class_of, _, sizes = G.conjugacy_data()
    n = len(sizes)
    counts = [0] * n
    for x in G.class_members(lam):
        for y in G.class_members(delta):
            counts[class_of[G.mul(x, y)]] += 1
    out = [0] * n
    for rho in range(n):
        q, r = divmod(counts[rho], sizes[rho])
        if r:
            raise AssertionError("pairwise product is not constant on classes")
        out[rho] = q
    return out


def dc_constants_tensor(G: GroupTable, dc: DoubleCosetPartition,
                       threads: int | None = None):
    """k[lam][delta][rho] for the double-coset basis; cached on the partition."""
    got = getattr(dc, "_tensor", None)
    if got is None:
        got = _constants_tensor(G, dc.dc_of, dc.reps,
                                threads=threads or DEFAULT_THREADS)
        dc._tensor = got
    return got


def dc_product_oracle(G: GroupTable, dc: DoubleCosetPartition, lam: int, delta: int,
                      reps: list[int] | None = None) -> list[int]:
    """Coefficient vector of DC_lam * DC_delta over all double cosets."""
    reps = reps or dc.reps
    n = dc.n_cosets
    out = [0] * n
    members = dc.members(lam)
    for rho in range(n):
        z = reps[rho]
        cnt = 0
        for x in members:
            if dc.dc_of[G.mul(G.inverse[x], z)] == delta:
                cnt += 1
        out[rho] = cnt
    return out


def algebra_commutes(G: GroupTable, dc: DoubleCosetPartition) -> bool:
    """Whether the double-coset algebra is commutative (by direct counting)."""
    tensor = dc_constants_tensor(G, dc)
    n = dc.n_cosets
    return all(tensor[a][b] == tensor[b][a] for a in range(n) for b in range(a + 1, n))


# -- exact convolution in the group algebra ---------------------------------


def indicator(members: list[int], n: int) -> list[int]:
    v = [0] * n
    for x in members:
        v[x] = 1
    return v


def convolve(G: GroupTable, u, v) -> list[int]:
    """Exact integer convolution (fg)(x) = sum_y f(y) g(y^{-1} x)."""
    import numpy as np

    va = np.asarray(v, dtype=np.int64)
    out = np.zeros(G.order, dtype=np.int64)
    for y, uy in enumerate(u):
        if uy:
            out += uy * va[G.left_row(G.inverse[y])]
    return out.tolist()


def convolve_general(G: GroupTable, u, v) -> list:
    """Convolution for exact rational or complex coefficient vectors."""
    out = [0] * G.order
    for y, uy in enumerate(u):
        if uy:
            row = G.left_row(G.inverse[y])
            for x in range(G.order):
                out[x] += uy * v[row[x]]
    return out


def iterated_dc_oracle(G: GroupTable, dc: DoubleCosetPartition,
                       lams: list[int]) -> list[int]:
    """Coefficients of DC_{lam_1} * ... * DC_{lam_r} over the coset basis.

    The product vector must be constant on every double coset; the
    coefficient at coset rho is its value at the representative.
    """
    if not lams:
        raise ValueError("need at least one factor")
    cache = getattr(dc, "_conv_cache", None)
    if cache is None:
        cache = dc._conv_cache = {}
    vec = None
    for cut in range(len(lams), 0, -1):
        vec = cache.get(tuple(lams[:cut]))
        if vec is not None:
            break
    if vec is None:
        cut = 1
        vec = indicator(dc.members(lams[0]), G.order)
        cache[(lams[0],)] = vec
    for pos in range(cut, len(lams)):
        vec = convolve(G, vec, indicator(dc.members(lams[pos]), G.order))
        cache[tuple(lams[:pos + 1])] = vec
    for c in range(dc.n_cosets):
        ref = vec[dc.reps[c]]
        if any(vec[x] != ref for x in dc.members(c)):
            raise AssertionError("product is not constant on double cosets")
    return [vec[dc.reps[c]] for c in range(dc.n_cosets)]
