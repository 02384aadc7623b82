"""Command-line front end.

One subcommand per library operation, JSON on stdout (CSV for the
table, which is meant for spreadsheets), human diagnostics on stderr.
Exit codes: 0 success, 1 domain error, 2 usage error.  Output is
deterministic for identical invocations, except the elapsed_ms field
of ed reports, which is honest wall-clock time.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cohomology import product, schubert_class
from .divisibility import (
    default_jobs,
    effective_good_divisibility,
    gd_upper_bound_witness,
)
from .errors import DomainError, SearchBudgetExceeded
from .partitions import GrassContext, Partition, skew
from .tableaux import count_lr_tableaux, enumerate_lr_tableaux
from .tango import TargetSpec, chern_system_search
from .witness import witness


@dataclass
class CommandResult:
    exit_code: int
    payload: str
    diagnostics: list[str] = field(default_factory=list)
    out_path: Optional[str] = None


def _partition_arg(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    return Partition(parts)


def _weight_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _add_ctx_args(p: argparse.ArgumentParser):
    p.add_argument("-k", type=int, required=True, help="projective k (k-planes)")
    p.add_argument("-n", type=int, required=True, help="ambient P^n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasscalc",
        description="Schubert calculus on Grassmannians: products, "
        "nonvanishing certificates, effective good divisibility, and "
        "Chern-system searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="enumerate or count LR tableaux")
    p.add_argument("--outer", type=_partition_arg, required=True)
    p.add_argument("--inner", type=_partition_arg, default=Partition(()))
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("product", help="expand a Schubert product")
    _add_ctx_args(p)
    p.add_argument("--a", type=_partition_arg, required=True)
    p.add_argument("--b", type=_partition_arg, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("witness", help="nonvanishing certificate")
    _add_ctx_args(p)
    p.add_argument("--a", type=_partition_arg, required=True)
    p.add_argument("--b", type=_partition_arg, required=True)
    p.add_argument("--render", action="store_true",
                   help="include the ASCII diagram in the payload")
    p.add_argument("--figure", default=None, metavar="PATH",
                   help="also draw the certificate to an image file")
    p.add_argument("--out", default=None)

    p = sub.add_parser("ed", help="effective good divisibility scan")
    _add_ctx_args(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("gd-witness", help="bounded zero-divisor search")
    _add_ctx_args(p)
    p.add_argument("--degree-sum", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--support", type=int, default=3)
    p.add_argument("--out", default=None)

    p = sub.add_parser("tango-search", help="candidate Chern systems")
    _add_ctx_args(p)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--out", default=None)

    p = sub.add_parser("table", help="divisibility table rows")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--figure", default=None, metavar="PATH",
                   help="also draw the ed values to an image file")
    p.add_argument("--out", default=None)

    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _cmd_lr(ns) -> tuple[str, list[str]]:
    shape = skew(ns.outer, ns.inner)
    if ns.count_only:
        count = count_lr_tableaux(shape, ns.weight)
        body = {
            "outer": ns.outer.to_json(),
            "inner": ns.inner.to_json(),
            "weight": list(ns.weight),
            "count": count,
        }
        return _dump(body), []
    fillings = enumerate_lr_tableaux(shape, ns.weight)
    body = {
        "outer": ns.outer.to_json(),
        "inner": ns.inner.to_json(),
        "weight": list(ns.weight),
        "count": len(fillings),
        "tableaux": [f.to_json() for f in fillings],
    }
    return _dump(body), []


def _cmd_product(ns) -> tuple[str, list[str]]:
    ctx = GrassContext(ns.k, ns.n)
    result = product(schubert_class(ns.a, ctx), schubert_class(ns.b, ctx))
    return _dump(result.to_json()), []


def _cmd_witness(ns) -> tuple[str, list[str]]:
    ctx = GrassContext(ns.k, ns.n)
    cert = witness(ns.a, ns.b, ctx)
    body = cert.to_json()
    diags = []
    if ns.render:
        body["render"] = cert.render()
    if ns.figure:
        from .figures import save_figure, witness_figure

        path = save_figure(witness_figure(cert), ns.figure)
        diags.append(f"figure written to {path}")
    return _dump(body), diags


def _cmd_ed(ns) -> tuple[str, list[str]]:
    ctx = GrassContext(ns.k, ns.n)
    report = effective_good_divisibility(ctx, jobs=default_jobs())
    return _dump(report.to_json()), []


def _cmd_gd_witness(ns) -> tuple[str, list[str]]:
    ctx = GrassContext(ns.k, ns.n)
    hit = gd_upper_bound_witness(
        ctx, ns.degree_sum,
        coeff_bound=ns.coeff_bound,
        support_bound=ns.support,
    )
    body = {
        "k": ns.k,
        "n": ns.n,
        "degree_sum": ns.degree_sum,
        "coeff_bound": ns.coeff_bound,
        "support_bound": ns.support,
        "found": hit is not None,
        "witness": hit.to_json() if hit is not None else None,
    }
    diags = [] if hit is not None else [
        "no zero divisor within bounds; this is not a lower-bound proof"
    ]
    return _dump(body), diags


def _cmd_tango(ns) -> tuple[str, list[str]]:
    ctx = GrassContext(ns.k, ns.n)
    target = TargetSpec(ns.l, ns.m)
    result = chern_system_search(ctx, target, ns.coeff_bound,
                                 node_budget=ns.budget)
    body = result.to_json()
    body["source"] = {"k": ns.k, "n": ns.n}
    body["target"] = {"l": ns.l, "m": ns.m}
    diags = ["necessary conditions only: surviving systems do not "
             "certify that a morphism exists"]
    return _dump(body), diags


def _table_rows(max_n: int) -> list[dict]:
    if max_n < 1:
        raise DomainError("--max-n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        report = effective_good_divisibility(GrassContext(0, n))
        rows.append({
            "variety": f"P^{n}", "k": 0, "n": n,
            "gd": n, "ed": report.ed_value,
        })
    for n in range(3, max_n + 1):
        report = effective_good_divisibility(GrassContext(1, n))
        rows.append({
            "variety": f"G(1,{n})", "k": 1, "n": n,
            "gd": n - 1, "ed": report.ed_value,
        })
    return rows


def _cmd_table(ns) -> tuple[str, list[str]]:
    rows = _table_rows(ns.max_n)
    diags = []
    if ns.figure:
        from .figures import divisibility_chart, save_figure

        chart_rows = [{"label": r["variety"], "ed": r["ed"]} for r in rows]
        path = save_figure(divisibility_chart(chart_rows), ns.figure)
        diags.append(f"figure written to {path}")
    if ns.format == "json":
        return _dump({"rows": rows}), diags
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["variety", "k", "n", "gd", "ed"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n"), diags


_HANDLERS = {
    "lr": _cmd_lr,
    "product": _cmd_product,
    "witness": _cmd_witness,
    "ed": _cmd_ed,
    "gd-witness": _cmd_gd_witness,
    "tango-search": _cmd_tango,
    "table": _cmd_table,
}


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse already printed usage or help
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(code, "")
    except DomainError as exc:
        # a structurally bad partition value, e.g. parts out of order
        body = {"error": type(exc).__name__, "message": str(exc)}
        return CommandResult(1, _dump(body), [str(exc)])
    try:
        payload, diags = _HANDLERS[ns.command](ns)
    except SearchBudgetExceeded as exc:
        body = {
            "error": type(exc).__name__,
            "message": str(exc),
            "nodes_visited": exc.nodes_visited,
            "partial_systems": [s.to_json() for s in exc.partial],
        }
        return CommandResult(1, _dump(body),
                             [f"search stopped early: {exc}"],
                             getattr(ns, "out", None))
    except DomainError as exc:
        body = {"error": type(exc).__name__, "message": str(exc)}
        return CommandResult(1, _dump(body), [str(exc)],
                             getattr(ns, "out", None))
    return CommandResult(0, payload, diags, getattr(ns, "out", None))


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    if result.payload:
        if result.out_path:
            with open(result.out_path, "w") as fh:
                fh.write(result.payload + "\n")
        else:
            print(result.payload)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
