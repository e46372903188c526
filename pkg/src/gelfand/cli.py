"""Command-line front end.

The CLI is a thin client of the HTTP service: each subcommand builds one
request and renders the response.  By default requests are served
in-process; pass --server to talk to a running ``gelfand serve``.

Exit codes: 0 success, 1 internal assertion, 2 invalid arguments,
3 enumeration overflow, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_VERIFY = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_pair_spec(text: str) -> dict:
    """Parse 'kind:params' pair specs.

    s2n-bn:N | sn-sn1:N | gxgopp:GROUP.json | custom:GROUP.json:SUBGROUP.json
    """
    kind, _, rest = text.partition(":")
    if kind in ("s2n-bn", "sn-sn1"):
        if not rest.isdigit():
            raise CliError(f"{kind} needs an integer parameter, got {rest!r}", EXIT_USAGE)
        return {"kind": kind, "n": int(rest)}
    if kind == "gxgopp":
        if not rest:
            raise CliError("gxgopp needs a group spec file", EXIT_USAGE)
        return {"kind": kind, "group": _load_spec(rest)}
    if kind == "custom":
        gpath, _, kpath = rest.partition(":")
        if not gpath or not kpath:
            raise CliError("custom needs GROUP.json:SUBGROUP.json", EXIT_USAGE)
        return {"kind": kind, "group": _load_spec(gpath), "subgroup": _load_spec(kpath)}
    raise CliError(f"unknown pair kind {kind!r}", EXIT_USAGE)


def _load_spec(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_USAGE)
    except json.JSONDecodeError as exc:
        raise CliError(f"bad JSON in {path}: {exc}", EXIT_USAGE)


def _post(args, path: str, body: dict) -> dict:
    if args.server:
        import httpx

        try:
            resp = httpx.post(args.server.rstrip("/") + path, json=body,
                              timeout=None)
        except httpx.HTTPError as exc:
            raise CliError(f"cannot reach {args.server}: {exc}", EXIT_INTERNAL)
        status, data = resp.status_code, resp.json()
    else:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            from fastapi.testclient import TestClient

        from .service.app import app

        with TestClient(app, raise_server_exceptions=False) as client:
            resp = client.post(path, json=body)
            status, data = resp.status_code, resp.json()
    if status == 200:
        return data
    detail = data.get("detail", data) if isinstance(data, dict) else data
    error = data.get("error", "") if isinstance(data, dict) else ""
    if error == "enumeration-overflow":
        raise CliError(f"enumeration overflow: {detail}", EXIT_OVERFLOW)
    if status in (400, 422):
        raise CliError(f"invalid input: {detail}", EXIT_USAGE)
    raise CliError(f"internal error: {detail}", EXIT_INTERNAL)


# -- output rendering ---------------------------------------------------------


def _render_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _csv_rows(command: str, data: dict):
    if command == "classes":
        yield ["rep", "size"]
        for c in data["classes"]:
            yield [c["rep"], c["size"]]
    elif command == "cosets":
        yield ["rep", "size", "label"]
        for c in data["cosets"]:
            yield [c["rep"], c["size"], json.dumps(c["label"])]
    elif command == "chartable":
        yield ["degree"] + [c["rep"] for c in data["classes"]]
        for irr in data["irreducibles"]:
            yield [irr["degree"]] + [
                f"{v['re']:.10g}{v['im']:+.10g}i" for v in irr["values"]]
    elif command == "zonal":
        yield ["label"] + [json.dumps(c["label"]) for c in data["cosets"]]
        for t, row in enumerate(data["omega"]):
            yield [t] + [f"{v['re']:.10g}{v['im']:+.10g}i" for v in row]
    elif command == "coeffs":
        yield ["lhs", "rhs", "value"]
        for e in data["entries"]:
            yield [json.dumps(e["lhs"]), json.dumps(e["rhs"]), e["value"]]
    elif command == "moments":
        yield ["class", "m", "direct", "structural", "equal"]
        for r in data["rows"]:
            yield [r["class"], r["m"], r["direct"], r["structural"], r["equal"]]
    elif command == "verify":
        yield ["check", "ok", "detail"]
        for r in data["checks"]:
            yield [r["name"], r["ok"], r["detail"]]
    elif command == "gelfand-check":
        yield ["pair", "gelfand", "multiplicity_free", "commutative"]
        yield [data["pair"], data["gelfand"], data["multiplicity_free"],
               data["commutative"]]
    else:
        raise CliError(f"no CSV rendering for {command}", EXIT_USAGE)


def _render(command: str, data: dict, fmt: str) -> str:
    if fmt == "json":
        return _render_json(data)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in _csv_rows(command, data):
        writer.writerow(row)
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------


def _add_common(sp):
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", help="write output to a file instead of stdout")
    sp.add_argument("--server", help="base URL of a running service "
                    "(default: serve the request in-process)")
    sp.add_argument("--threads", type=int, default=1,
                    help="cap on worker threads for structure-constant counting")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gelfand",
        description="character tables, double-coset algebras and zonal "
                    "spherical functions of finite Gelfand pairs")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, help_ in (("classes", "conjugacy classes of a group"),
                        ("chartable", "exact character table of a group")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--group", required=True, help="group spec JSON file")
        _add_common(sp)

    for name, help_ in (("cosets", "double cosets of a pair"),
                        ("gelfand-check", "test both Gelfand criteria"),
                        ("zonal", "zonal spherical function table"),
                        ("verify", "run the full invariant suite")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--pair", required=True,
                        help="s2n-bn:N | sn-sn1:N | gxgopp:G.json | custom:G.json:K.json")
        if name == "verify":
            sp.add_argument("--seed", type=int, default=0)
        _add_common(sp)

    sp = sub.add_parser("coeffs", help="structure coefficients of a pair")
    sp.add_argument("--pair", required=True)
    sp.add_argument("--method", choices=("formula", "oracle", "both"),
                    default="formula")
    sp.add_argument("--r", type=int, default=2, help="number of factors (>= 2)")
    _add_common(sp)

    sp = sub.add_parser("moments", help="Plancherel moments of a group")
    sp.add_argument("--group", required=True)
    sp.add_argument("--max-m", type=int, default=4, dest="max_m")
    _add_common(sp)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    return ap


def run(args) -> int:
    if getattr(args, "threads", 1) > 1:
        from . import oracle

        oracle.DEFAULT_THREADS = args.threads
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    if args.command in ("classes", "chartable"):
        body = {"group": _load_spec(args.group)}
        data = _post(args, f"/{args.command}", body)
    elif args.command == "moments":
        body = {"group": _load_spec(args.group), "max_m": args.max_m}
        data = _post(args, "/moments", body)
    elif args.command == "coeffs":
        if args.r < 2:
            raise CliError("--r must be >= 2", EXIT_USAGE)
        body = {"pair": parse_pair_spec(args.pair), "method": args.method,
                "r": args.r}
        data = _post(args, "/coeffs", body)
    else:
        body = {"pair": parse_pair_spec(args.pair)}
        if args.command == "verify":
            body["seed"] = args.seed
        data = _post(args, f"/{args.command}", body)

    _emit(args, _render(args.command, data, args.format))

    if args.command == "verify" and not data["ok"]:
        return EXIT_VERIFY
    if args.command == "coeffs" and data.get("agree") is False:
        return EXIT_VERIFY
    if args.command == "moments" and not all(r["equal"] for r in data["rows"]):
        return EXIT_VERIFY
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return run(args)
    except CliError as exc:
        print(f"gelfand: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
