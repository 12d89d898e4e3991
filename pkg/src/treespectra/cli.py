"""Command-line front end.

Three subcommands: ``check`` (full verdict for one tree), ``eigenbasis``
(construct and certify the p-1 eigenvectors), ``enumerate`` (cross-checked
catalog of all small trees).  Input trees arrive as edge-list text files;
every report first relabels the tree canonically so isomorphic inputs
produce identical output.

JSON output is byte-stable: floating values are rendered as 15-significant-
digit strings, rationals as "num/den" strings, polynomials as integer
coefficient arrays (low degree first), and keys are emitted sorted.  Exit
codes: 0 success, 2 bad input or parameters, 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .census import FILTERS, ORDER_CAP, build_catalog, canonical_relabel
from .classify import classify_m1
from .construct import eigenbasis_extremal
from .errors import (
    CapExceeded,
    CongruenceViolated,
    InvalidTree,
    LabelOutOfRange,
    NoMajorVertex,
    NotExtremal,
    OracleDisagreement,
    ParseError,
    TooFewPendants,
    TreeSpectraError,
)
from .exact import laplacian, minimal_poly_lambda, multiplicity_exact
from .numeric import cluster_multiplicity, eigen_symmetric, numeric_rank, residual_norm
from .trees import classify_vertices, from_edge_list, parse_edge_list_text

SCHEMA_VERSION = 1

_USAGE_ERRORS = (
    ParseError,
    InvalidTree,
    LabelOutOfRange,
    CongruenceViolated,
    NoMajorVertex,
    NotExtremal,
    TooFewPendants,
    CapExceeded,
)


def fmt_float(x: float) -> str:
    """Canonical 15-significant-digit rendering used in all reports."""
    return "%.15g" % float(x)


def dumps_report(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_tree(path: str):
    text = Path(path).read_text()
    return from_edge_list(parse_edge_list_text(text))


def _envelope(command: str, parameters: dict, tree, payload: dict, started: float) -> dict:
    if tree is not None:
        classes = classify_vertices(tree)
        echo = {
            "n": tree.n,
            "p": len(classes.pendants),
            "edges": [[u, v] for u, v in tree.edges],
        }
    else:
        echo = None
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "treespectra",
        "tool_version": __version__,
        "command": command,
        "parameters": parameters,
        "input": echo,
        "payload": payload,
        "timing_seconds": fmt_float(time.perf_counter() - started),
    }


def _witness_dict(witness):
    if witness is None:
        return None
    return {
        "major": witness.major,
        "endpoints": list(witness.endpoints),
        "leg_residues": list(witness.leg_residues),
        "omega": witness.omega,
        "attachments": [
            {
                "anchor": a.anchor,
                "vertices": list(a.vertices),
                "family": a.family,
            }
            for a in witness.attachments
        ],
    }


def _check_payload(tree, tol: float) -> dict:
    report = classify_m1(tree)
    p = report.p
    spectrum = eigen_symmetric(laplacian(tree), tol=tol)
    has_big_cluster = any(mult == p - 1 for _, mult in spectrum.clusters)
    if report.extremal != has_big_cluster:
        raise OracleDisagreement(
            "numeric clusters disagree with the extremal verdict", edges=tree.edges
        )

    lambda_rows = []
    for param in report.lambda_set:
        exact_mult = multiplicity_exact(tree, param)
        numeric_mult = cluster_multiplicity(spectrum, param.value)
        if exact_mult != p - 1 or numeric_mult != p - 1:
            raise OracleDisagreement(
                f"multiplicity of {param.ratio} is not p-1 on every route",
                edges=tree.edges,
            )
        lambda_rows.append(
            {
                "q": param.q,
                "b": param.b,
                "ratio": str(param.ratio),
                "value": fmt_float(param.value),
                "minimal_poly": list(minimal_poly_lambda(param).coeffs),
                "multiplicity_exact": exact_mult,
                "multiplicity_numeric": numeric_mult,
            }
        )

    m1_numeric = cluster_multiplicity(spectrum, 1.0)
    if m1_numeric != report.m1_exact:
        raise OracleDisagreement(
            "numeric multiplicity at 1 disagrees with the exact nullity",
            edges=tree.edges,
        )

    cert = report.certificate
    return {
        "congruence": {
            "g": cert.g,
            "admissible_moduli": list(cert.admissible_moduli),
            "q_list": list(cert.q_list),
            "is_path": cert.is_path,
        },
        "is_extremal": report.extremal,
        "lambda_set": lambda_rows,
        "m1": {
            "exact": report.m1_exact,
            "class": report.m1_class,
            "gamma_witness": _witness_dict(report.gamma_witness),
        },
        "oracles": {
            "numeric_cluster_reaches_p_minus_1": has_big_cluster,
            "m1_numeric": m1_numeric,
            "agree": True,
        },
        "spectrum": {
            "eigenvalues": [fmt_float(x) for x in spectrum.eigenvalues],
            "clusters": [[fmt_float(rep), mult] for rep, mult in spectrum.clusters],
            "tau": fmt_float(spectrum.tau),
        },
    }


def _check_text(payload: dict, tree) -> str:
    lines = []
    cong = payload["congruence"]
    lines.append(f"tree: n={tree.n} (canonical labels)")
    lines.append(
        "congruence: g={g} moduli={m} q={q} path={p}".format(
            g=cong["g"],
            m=cong["admissible_moduli"],
            q=cong["q_list"],
            p="yes" if cong["is_path"] else "no",
        )
    )
    lines.append("extremal: " + ("yes" if payload["is_extremal"] else "no"))
    for row in payload["lambda_set"]:
        lines.append(
            "lambda {ratio} = {value} (q={q}, b={b}): exact mult {em}, "
            "numeric mult {nm}, minimal poly {mp}".format(
                ratio=row["ratio"],
                value=row["value"],
                q=row["q"],
                b=row["b"],
                em=row["multiplicity_exact"],
                nm=row["multiplicity_numeric"],
                mp=row["minimal_poly"],
            )
        )
    m1 = payload["m1"]
    lines.append(f"m(T,1): class {m1['class']}, exact {m1['exact']}")
    if m1["gamma_witness"]:
        w = m1["gamma_witness"]
        lines.append(
            f"core witness: major {w['major']}, endpoints {w['endpoints']}, "
            f"type {w['omega']}, {len(w['attachments'])} attachment(s)"
        )
    lines.append("oracles: all routes agree")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    started = time.perf_counter()
    tree = canonical_relabel(_load_tree(args.input))
    payload = _check_payload(tree, args.tol)
    envelope = _envelope("check", {"tol": fmt_float(args.tol)}, tree, payload, started)
    if args.text:
        sys.stdout.write(_check_text(payload, tree))
    else:
        sys.stdout.write(dumps_report(envelope))
    return 0


def cmd_eigenbasis(args) -> int:
    started = time.perf_counter()
    tree = canonical_relabel(_load_tree(args.input))
    pairs, trace = eigenbasis_extremal(tree, args.q, args.b)
    residuals = [residual_norm(tree, pair.value, pair.vector) for pair in pairs]
    rank = numeric_rank([pair.vector for pair in pairs], tol=1e-8)
    param = pairs[0].param

    payload = {
        "q": args.q,
        "b": args.b,
        "ratio": str(param.ratio),
        "lambda": fmt_float(param.value),
        "count": len(pairs),
        "rank": rank,
        "residuals": [fmt_float(r) for r in residuals],
        "vectors": [[fmt_float(x) for x in pair.vector] for pair in pairs],
        "trace": {
            "gamma": str(trace.gamma),
            "path_records": [
                {"k1": r.k1, "k2": r.k2, "n1": r.n1, "n2": r.n2, "delta": r.delta}
                for r in trace.path_records
            ],
            "glue_steps": [
                {
                    "pendant_pair": list(s.pendant_pair),
                    "anchor": s.anchor,
                    "component": list(s.component),
                }
                for s in trace.glue_steps
            ],
        },
    }

    if args.out:
        with open(args.out, "w") as fh:
            labels = ",".join(f"v{i}" for i in range(1, tree.n + 1))
            fh.write(f"vector,{labels}\n")
            for idx, pair in enumerate(pairs, start=1):
                fh.write(f"{idx}," + ",".join(fmt_float(x) for x in pair.vector) + "\n")
        payload["out"] = args.out

    parameters = {"q": args.q, "b": args.b, "tol": fmt_float(args.tol)}
    envelope = _envelope("eigenbasis", parameters, tree, payload, started)
    if args.text:
        lines = [
            f"lambda = {payload['lambda']} (ratio {payload['ratio']})",
            f"vectors: {payload['count']}, rank {payload['rank']}",
            f"max residual: {fmt_float(max(residuals))}",
        ]
        if args.out:
            lines.append(f"written to {args.out}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(dumps_report(envelope))
    return 0


def _entry_dict(entry) -> dict:
    return {
        "n": entry.n,
        "canonical": entry.canonical,
        "name": entry.name,
        "p": entry.p,
        "extremal": entry.extremal,
        "lambda_ratios": list(entry.lambda_ratios),
        "m1_class": entry.m1_class,
        "m1_exact": entry.m1_exact,
        "edges": [[u, v] for u, v in entry.edges],
    }


CSV_HEADER = "n,canonical,name,p,extremal,lambda_ratios,m1_class,m1_exact,edges"


def entry_csv_row(entry) -> str:
    edges = ";".join(f"{u}-{v}" for u, v in entry.edges)
    ratios = "|".join(entry.lambda_ratios)
    name = entry.name.replace(",", ";")
    return (
        f"{entry.n},\"{entry.canonical}\",\"{name}\",{entry.p},"
        f"{'true' if entry.extremal else 'false'},{ratios},"
        f"{entry.m1_class},{entry.m1_exact},{edges}"
    )


def _entry_dot(entry, index: int) -> str:
    label = f"{entry.name or 'tree'} | n={entry.n} p={entry.p}"
    if entry.extremal:
        label += " | extremal"
    label += f" | m1={entry.m1_class}"
    lines = [f"graph t{entry.n}_{index:04d} {{", f'  label="{label}";']
    if entry.n == 1:
        lines.append("  1;")
    for u, v in entry.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    started = time.perf_counter()
    entries = build_catalog(args.max_n, args.filter, jobs=args.jobs, tol=args.tol)

    if args.format == "csv":
        body = CSV_HEADER + "\n" + "".join(entry_csv_row(e) + "\n" for e in entries)
    elif args.format == "dot":
        body = "\n\n".join(_entry_dot(e, i) for i, e in enumerate(entries, 1)) + "\n"
    else:
        parameters = {
            "max_n": args.max_n,
            "filter": args.filter,
            "format": args.format,
            "jobs": args.jobs,
            "tol": fmt_float(args.tol),
        }
        payload = {
            "count": len(entries),
            "entries": [_entry_dict(e) for e in entries],
        }
        body = dumps_report(_envelope("enumerate", parameters, None, payload, started))

    if args.out:
        out = Path(args.out)
        if args.format == "dot" and out.is_dir():
            for i, entry in enumerate(entries, 1):
                name = f"tree_n{entry.n}_{i:04d}.dot"
                (out / name).write_text(_entry_dot(entry, i) + "\n")
        else:
            out.write_text(body)
        sys.stderr.write(f"{len(entries)} entries written to {args.out}\n")
    else:
        sys.stdout.write(body)
        sys.stderr.write(f"{len(entries)} entries\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treespectra",
        description="Certificates for trees whose Laplacian reaches the "
        "maximal eigenvalue multiplicity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode_flags(p):
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--json", action="store_true", help="JSON report (default)")
        mode.add_argument("--text", action="store_true", help="human-readable report")

    p_check = sub.add_parser("check", help="classify one tree from an edge-list file")
    p_check.add_argument("input", help="edge-list file: one 'u v' pair per line")
    p_check.add_argument("--tol", type=float, default=1e-12, help="eigensolver tolerance")
    add_mode_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    p_basis = sub.add_parser(
        "eigenbasis", help="construct the p-1 eigenvectors for one extremal eigenvalue"
    )
    p_basis.add_argument("input", help="edge-list file: one 'u v' pair per line")
    p_basis.add_argument("--q", type=int, required=True, help="modulus parameter, 2q+1 >= 3")
    p_basis.add_argument("--b", type=int, default=0, help="branch index in [0, q)")
    p_basis.add_argument("--tol", type=float, default=1e-12, help="eigensolver tolerance")
    p_basis.add_argument("--out", help="write vectors as CSV to this file")
    add_mode_flags(p_basis)
    p_basis.set_defaults(func=cmd_eigenbasis)

    p_enum = sub.add_parser("enumerate", help="catalog all trees up to an order")
    p_enum.add_argument("--max-n", type=int, required=True, help=f"largest order, <= {ORDER_CAP}")
    p_enum.add_argument("--filter", choices=FILTERS, default="all")
    p_enum.add_argument("--format", choices=("csv", "json", "dot"), default="csv")
    p_enum.add_argument("--out", help="output file (or directory for dot)")
    p_enum.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_enum.add_argument("--tol", type=float, default=1e-12, help="eigensolver tolerance")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except OracleDisagreement as exc:
        sys.stderr.write(f"oracle disagreement: {exc}\n")
        if exc.edges:
            sys.stderr.write(f"offending edges: {list(exc.edges)}\n")
        return 3
    except _USAGE_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except TreeSpectraError as exc:  # anything else package-raised is misuse
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
