"""Command-line client.

Subcommands: eval, table, expand, verify, serve.  The first four build a
request, send it to the service, and render the response as text, json,
or csv.  Without --server the request goes to an in-process instance of
the app over an ASGI transport, so no server needs to be running; with
--server URL it goes over the network to a `springer serve` instance.

Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 for usage
or validation errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .compgroup import parse_z
from .partitions import parse_partition
from .polynomials import Poly

USAGE_ERROR = 2


class ServiceError(Exception):
    """The service refused the request; the reason was already printed."""


def _poly_text(coeff_strings):
    return str(Poly.from_coeff_strings(coeff_strings))


def _z_text(support):
    return "*".join("z%d" % i for i in sorted(support)) if support else "id"


def _partition_text(parts, sep=","):
    return sep.join(str(p) for p in parts)


def _parse_partition_arg(text):
    """Partition flag, optionally carrying a series-D orbit label '2,2:+'."""
    body, sep, label = text.partition(":")
    if sep:
        if label not in ("+", "-"):
            raise ValueError("bad orbit label %r (expected '+' or '-')" % label)
        print(
            "note: orbit label %r ignored; the two orbits share one value" % label,
            file=sys.stderr,
        )
    return parse_partition(body)


def _request(server, path, payload):
    """POST to the service; returns (status_code, decoded json)."""
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            resp = client.post(path, json=payload)
            return resp.status_code, resp.json()

    async def go():
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://springer.internal", timeout=None
        ) as client:
            resp = await client.post(path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(go())


def _call(args, path, payload):
    status, data = _request(args.server, path, payload)
    if status != 200:
        detail = data.get("detail", data) if isinstance(data, dict) else data
        print("error: %s" % detail, file=sys.stderr)
        raise ServiceError(detail)
    return data


def _print_csv_row(fields):
    print(",".join(fields))


def _row_csv_fields(row):
    return [
        _partition_text(row["partition"], sep="."),
        _z_text(row["z"]),
        _poly_text(row["poly"]),
        ";".join(str(b) for b in row["betti"]),
    ]


def cmd_eval(args):
    payload = {
        "series": args.series,
        "partition": list(_parse_partition_arg(args.partition).parts),
        "z": sorted(parse_z(args.z).support),
    }
    data = _call(args, "/eval", payload)
    if args.format == "json":
        print(json.dumps(data))
    elif args.format == "csv":
        _print_csv_row(["partition", "z", "poly", "betti"])
        _print_csv_row(_row_csv_fields(data))
    else:
        print(_poly_text(data["poly"]))
    return 0


def cmd_table(args):
    data = _call(args, "/table", {"series": args.series, "n": args.n})
    if args.format == "json":
        print(json.dumps(data))
        return 0
    if args.format == "csv":
        _print_csv_row(["partition", "z", "poly", "betti"])
        for row in data["rows"]:
            _print_csv_row(_row_csv_fields(row))
        return 0
    for row in data["rows"]:
        note = "  (very even: one row for both orbits)" if row.get("very_even") else ""
        print(
            "(%s)  %s  %s%s"
            % (
                _partition_text(row["partition"]),
                _z_text(row["z"]),
                _poly_text(row["poly"]),
                note,
            )
        )
    return 0


def cmd_expand(args):
    payload = {
        "series": args.series,
        "partition": list(_parse_partition_arg(args.partition).parts),
        "z": sorted(parse_z(args.z).support),
        "show_null": args.show_null,
    }
    data = _call(args, "/expand", payload)
    if args.format == "json":
        print(json.dumps(data))
        return 0
    if args.format == "csv":
        _print_csv_row(["coeff", "child", "child_z"])
        for t in data["terms"]:
            child = "null" if t["null"] else _partition_text(t["child"], sep=".")
            _print_csv_row([_poly_text(t["coeff"]), child, _z_text(t["child_z"])])
        return 0
    for t in data["terms"]:
        if t["null"]:
            print("[%s]  null" % _poly_text(t["coeff"]))
        else:
            print(
                "[%s]  ((%s), %s)"
                % (_poly_text(t["coeff"]), _partition_text(t["child"]), _z_text(t["child_z"]))
            )
    return 0


def cmd_verify(args):
    payload = {
        "series": args.series,
        "max_size": args.max_size,
        "q": args.q,
        "twisted": args.twisted,
        "twisted_max_size": args.twisted_max_size,
    }
    data = _call(args, "/verify", payload)
    if args.format == "json":
        print(json.dumps(data))
    elif args.format == "csv":
        _print_csv_row(["series", "partition", "z", "q", "count", "predicted", "match"])
        for r in data["rows"]:
            _print_csv_row(
                [
                    r["series"],
                    _partition_text(r["partition"], sep="."),
                    _z_text(r["z"]),
                    str(r["q"]),
                    str(r["count"]),
                    str(r["predicted"]),
                    "true" if r["match"] else "false",
                ]
            )
    else:
        for r in data["rows"]:
            print(
                "%s (%s) %s q=%d: count=%d predicted=%d %s"
                % (
                    r["series"],
                    _partition_text(r["partition"]),
                    _z_text(r["z"]),
                    r["q"],
                    r["count"],
                    r["predicted"],
                    "ok" if r["match"] else "MISMATCH",
                )
            )
        n_bad = sum(1 for r in data["rows"] if not r["match"])
        print(
            "all %d counts match" % len(data["rows"])
            if n_bad == 0
            else "%d of %d counts mismatch" % (n_bad, len(data["rows"])),
            file=sys.stderr,
        )
    return 0 if data["all_match"] else 1


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="springer",
        description="Graded traces and Betti numbers of Springer fibers for "
        "classical groups (SO(2n+1), Sp(2n), SO(2n)).",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running service; default is an in-process instance",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, partition=True, z=True):
        p.add_argument("--series", required=True, choices=["B", "C", "D"])
        if partition:
            p.add_argument(
                "--partition",
                required=True,
                help="comma-separated parts, e.g. 2,2,1,1 (series D may carry ':+' or ':-')",
            )
        if z:
            p.add_argument("--z", default="id", help="component-group element: id or z2*z4")
        p.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = sub.add_parser("eval", help="print the graded trace of z as a polynomial")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="all (partition, z) rows at a given rank")
    p.add_argument("--series", required=True, choices=["B", "C", "D"])
    p.add_argument("--n", required=True, type=int, help="rank")
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("expand", help="one symbolic restriction step")
    common(p)
    p.add_argument("--show-null", action="store_true", help="include formally-zero terms")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="compare with finite-field flag counts")
    p.add_argument("--series", required=True, choices=["B", "C", "D"])
    p.add_argument("--max-size", required=True, type=int, help="largest partition size")
    p.add_argument("--q", default=3, type=int, help="odd prime field size (default 3)")
    p.add_argument("--twisted", action="store_true", help="also count twisted Frobenius fixed flags")
    p.add_argument(
        "--twisted-max-size",
        default=4,
        type=int,
        help="size cap for twisted counts (they enumerate over F_{q^2})",
    )
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", default=8000, type=int)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ServiceError:
        return USAGE_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except httpx.HTTPError as exc:
        print("error: cannot reach service: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
