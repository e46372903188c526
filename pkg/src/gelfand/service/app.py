"""HTTP service exposing the computational-algebra engine.

Every endpoint is a POST taking a JSON body; results are deterministic
for a fixed input.  Expensive tables are cached across requests (see
``state``), which is the point of running this as a long-lived service.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import oracle, pairs, plancherel, presets, verify
from ..chartab import CharTableError, IntegralityError, character_table
from ..grouptab import EnumerationOverflow, class_label
from ..perm import cycle_string
from . import schemas, state

app = FastAPI(title="gelfand", description="double-coset algebras, character "
              "tables and zonal spherical functions of finite Gelfand pairs")


@app.exception_handler(EnumerationOverflow)
async def _overflow_handler(request: Request, exc: EnumerationOverflow):
    return JSONResponse(status_code=422, content=schemas.ErrorBody(
        error="enumeration-overflow", detail=str(exc), count=exc.count).model_dump())


@app.exception_handler(ValueError)
async def _value_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content=schemas.ErrorBody(
        error="invalid-input", detail=str(exc)).model_dump())


@app.exception_handler(pairs.NotGelfandError)
async def _not_gelfand_handler(request: Request, exc: pairs.NotGelfandError):
    return JSONResponse(status_code=400, content=schemas.ErrorBody(
        error="not-gelfand", detail=str(exc)).model_dump())


for _exc in (pairs.ConsistencyError, CharTableError, IntegralityError, AssertionError):
    @app.exception_handler(_exc)
    async def _internal_handler(request: Request, exc: Exception):
        return JSONResponse(status_code=500, content=schemas.ErrorBody(
            error="internal-assertion", detail=str(exc)).model_dump())


@app.get("/health")
def health():
    return {"status": "ok"}


def _class_infos(G) -> list[schemas.ClassInfo]:
    return [schemas.ClassInfo(rep=class_label(G, c), size=G.class_sizes[c])
            for c in range(G.n_classes)]


def _cval(z) -> schemas.ComplexValue:
    z = complex(z)
    re = 0.0 if abs(z.real) < 1e-12 else z.real
    im = 0.0 if abs(z.imag) < 1e-12 else z.imag
    return schemas.ComplexValue(re=re, im=im)


@app.post("/classes", response_model=schemas.ClassesResponse)
def classes(req: schemas.GroupRequest):
    G = state.get_group(req.group.model_dump())
    return schemas.ClassesResponse(group=G.name, order=G.order,
                                   classes=_class_infos(G))


@app.post("/chartable", response_model=schemas.CharTableResponse)
def chartable(req: schemas.GroupRequest):
    G = state.get_group(req.group.model_dump())
    table = character_table(G)
    irreducibles = []
    for i, d in enumerate(table.degrees):
        row = table.values[i]
        irreducibles.append(schemas.Irreducible(
            degree=d,
            values=[_cval(v.eval_complex()) for v in row],
            exact=[[[k, m] for k, m in v.mult] for v in row]))
    return schemas.CharTableResponse(group=G.name, order=G.order,
                                     exponent=table.exponent,
                                     classes=_class_infos(G),
                                     irreducibles=irreducibles)


def _coset_infos(pair) -> list[schemas.CosetInfo]:
    return [schemas.CosetInfo(rep=cycle_string(pair.group.elements[pair.dc.reps[c]]),
                              size=pair.dc.sizes[c],
                              label=presets.pair_label_json(pair, c))
            for c in range(pair.n_cosets)]


@app.post("/cosets", response_model=schemas.CosetsResponse)
def cosets(req: schemas.PairRequest):
    pair = state.get_pair(req.pair.model_dump())
    return schemas.CosetsResponse(pair=pair.name, order=pair.group.order,
                                  subgroup_order=pair.sub.order,
                                  cosets=_coset_infos(pair))


@app.post("/gelfand-check", response_model=schemas.GelfandCheckResponse)
def gelfand_check(req: schemas.PairRequest):
    G, K, name = state.get_pair_groups(req.pair.model_dump())
    cert = pairs.is_gelfand(G, K)
    return schemas.GelfandCheckResponse(
        pair=name, gelfand=cert.gelfand,
        multiplicity_free=cert.multiplicity_free,
        commutative=cert.commutative,
        multiplicities=cert.multiplicities)


@app.post("/zonal", response_model=schemas.ZonalResponse)
def zonal(req: schemas.PairRequest):
    pair = state.get_pair(req.pair.model_dump())
    omega = [[_cval(v) for v in row] for row in pair.zonal]
    return schemas.ZonalResponse(pair=pair.name, cosets=_coset_infos(pair),
                                 omega=omega)


@app.post("/coeffs", response_model=schemas.CoeffsResponse)
def coeffs(req: schemas.CoeffsRequest):
    if req.r < 2:
        raise ValueError("r must be >= 2")
    pair = state.get_pair(req.pair.model_dump())
    n = pair.n_cosets
    labels = [presets.pair_label_json(pair, c) for c in range(n)]

    def tuples(r):
        if r == 0:
            yield ()
            return
        for rest in tuples(r - 1):
            for c in range(n):
                yield rest + (c,)

    entries = []
    agree = True
    for lhs in tuples(req.r):
        formula_row = oracle_row = None
        if req.method in ("formula", "both"):
            formula_row = [pairs.structure_coeff_multi(pair, list(lhs), rho)
                           for rho in range(n)]
        if req.method in ("oracle", "both"):
            oracle_row = oracle.iterated_dc_oracle(pair.group, pair.dc, list(lhs))
        if req.method == "both" and formula_row != oracle_row:
            agree = False
        row = formula_row if formula_row is not None else oracle_row
        for rho in range(n):
            entries.append(schemas.CoeffEntry(lhs=[labels[c] for c in lhs],
                                              rhs=labels[rho], value=row[rho]))
    return schemas.CoeffsResponse(pair=pair.name, method=req.method,
                                  agree=agree if req.method == "both" else None,
                                  entries=entries)


@app.post("/moments", response_model=schemas.MomentsResponse)
def moments(req: schemas.MomentsRequest):
    G = state.get_group(req.group.model_dump())
    rows = [schemas.MomentRow(class_rep=class_label(G, rep.class_id), m=rep.m,
                              direct=str(rep.direct), structural=str(rep.structural),
                              equal=rep.equal)
            for rep in plancherel.moment_reports(G, max_m=req.max_m)]
    return schemas.MomentsResponse(group=G.name, rows=rows)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify_pair(req: schemas.PairRequest):
    try:
        pair = state.get_pair(req.pair.model_dump())
    except pairs.NotGelfandError as exc:
        checks = [schemas.CheckInfo(name="gelfand-concordance", ok=False,
                                    detail=str(exc))]
        return schemas.VerifyResponse(pair="(not a Gelfand pair)", ok=False,
                                      checks=checks)
    results = verify.run_pair_verification(pair, seed=req.seed)
    checks = [schemas.CheckInfo(name=r.name, ok=r.ok, detail=r.detail)
              for r in results]
    return schemas.VerifyResponse(pair=pair.name, ok=all(r.ok for r in results),
                                  checks=checks)
