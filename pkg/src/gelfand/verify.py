"""The full invariant suite for a Gelfand pair, used by the ``verify``
command and the acceptance tests.  Each check reports pass/fail with a
short detail string instead of raising, so a run always yields a complete
report.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle, pairs


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _run(name: str, fn, results: list[CheckResult], detail_ok: str = "") -> None:
    try:
        out = fn()
        results.append(CheckResult(name, True, detail_ok or (out if isinstance(out, str) else "")))
    except Exception as exc:  # report, don't abort the suite
        results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))


CONVOLUTION_BOUND = 720  # exhaustive zonal convolution check up to this order


def run_pair_verification(pair: pairs.PairData, seed: int = 0) -> list[CheckResult]:
    results: list[CheckResult] = []
    G, K, dc = pair.group, pair.sub, pair.dc

    def group_sanity():
        assert sum(dc.sizes) == G.order
        assert sum(G.class_sizes) == G.order
        for c, rep in enumerate(G.class_reps):
            stab = G.order // G.class_sizes[c]
            assert G.class_sizes[c] * stab == G.order
        return f"|G| = {G.order}, {dc.n_cosets} double cosets"

    _run("group-and-coset-sizes", group_sanity, results)
    _run("character-table-health", pair.table.verify, results,
         detail_ok=f"{pair.table.n_irreducibles} irreducibles")

    def gelfand_concordance():
        cert = pairs.is_gelfand(G, K, dc)
        assert cert.gelfand, "pair is not Gelfand"
        return "multiplicity-free and commutative"

    _run("gelfand-concordance", gelfand_concordance, results)

    def zonal_identity():
        for t in range(len(pair.degrees)):
            assert pairs._close(pair.zonal[t][0], 1), f"omega_{t}(1) != 1"
        return f"{len(pair.degrees)} zonal functions"

    _run("zonal-at-identity", zonal_identity, results)
    _run("zonal-orthogonality", lambda: pairs.check_zonal_orthogonality(pair), results)
    _run("functional-equation",
         lambda: pairs.check_functional_equation(pair, seed=seed), results,
         detail_ok="50 random pairs")
    _run("idempotents", lambda: pairs.verify_idempotents(pair), results)
    _run("morphism-property", lambda: pairs.check_morphism(pair), results)

    def formula_vs_oracle():
        formula = pairs.formula_tensor(pair)
        truth = pairs.oracle_tensor(pair)
        assert formula == truth, "zonal formula disagrees with counting"
        return f"{pair.n_cosets ** 3} coefficients agree"

    _run("structure-coefficients-vs-oracle", formula_vs_oracle, results)

    def multi_product():
        n = pair.n_cosets
        tuples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
        if len(tuples) > 64:
            tuples = tuples[:: max(1, len(tuples) // 64)]
        for lams in tuples:
            got = [pairs.structure_coeff_multi(pair, list(lams), rho)
                   for rho in range(n)]
            want = oracle.iterated_dc_oracle(G, dc, list(lams))
            assert got == want, f"triple product disagrees at {lams}"
        return f"{len(tuples)} triple products agree"

    _run("triple-products-vs-oracle", multi_product, results)

    if G.order <= CONVOLUTION_BOUND:
        _run("zonal-convolution", lambda: pairs.check_zonal_convolution(pair), results)

    return results
