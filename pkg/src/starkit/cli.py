"""Command-line entry point: ``starkit <command> ...``.

Exit codes:
  0  success or valid verdict
  1  a check came back negative
  2  domain error
  3  I/O error
  4  search budget or timeout exhausted
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
import time
from pathlib import Path

from .cuts import CutCertificate, tail_certificates, verify_vertex_cut
from .errors import DomainError, OracleTimeout, ResourceError
from .formulas import formula
from .iso import edge_sets_equal, isomorphic
from .oracle import exact
from .split import split_graph, split_nkstar
from .topology import Graph, build_family, build_nkstar, from_dimacs, from_edgelist, to_dimacs, to_edgelist

EXIT_OK, EXIT_INVALID, EXIT_DOMAIN, EXIT_IO, EXIT_RESOURCE = 0, 1, 2, 3, 4
DEFAULT_TIMEOUT = 600.0
REPORT_HEADER = ["family", "n", "k", "h", "measure", "formula", "exact", "witness_size", "agree", "runtime_ms"]

log = logging.getLogger("starkit")


class _IOFailure(Exception):
    pass


# -- file helpers ------------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from exc


def _labels_path(path: str) -> Path:
    return Path(path + ".labels.json")


def read_graph(path: str, labels: str | None = None) -> Graph:
    """Load an edgelist or DIMACS file (DIMACS detected by its ``p`` line).

    For DIMACS the label map is taken from ``labels`` or, when present, from
    the ``<path>.labels.json`` file written by ``gen``.
    """
    text = _read_text(path)
    first = next((ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith(("c", "#"))), [])
    if first and first[0] == "p":
        if labels is None and path != "-" and _labels_path(path).exists():
            labels = str(_labels_path(path))
        return from_dimacs(text, _read_text(labels) if labels else None)
    return from_edgelist(text)


def _resolve_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return read_graph(args.graph, getattr(args, "labels", None))
    if getattr(args, "family", None):
        return build_family(args.family, args.n, args.k)
    raise DomainError("give --graph PATH or --family/--n/--k")


# -- commands ----------------------------------------------------------------


def cmd_gen(args) -> int:
    G = build_family(args.family, args.n, args.k)
    if args.format == "edgelist":
        _write_text(args.out, to_edgelist(G))
    else:
        text, labels = to_dimacs(G)
        _write_text(args.out, text)
        if args.out and args.out != "-":
            _write_text(str(_labels_path(args.out)), labels)
    stream = sys.stdout if args.out and args.out != "-" else sys.stderr
    print(f"vertices={G.vertex_count} edges={G.edge_count}", file=stream)
    return EXIT_OK


def cmd_formula(args) -> int:
    print(formula(args.family, args.n, args.h, args.k, args.measure))
    return EXIT_OK


def cmd_cut(args) -> int:
    _, vcert, ecert = tail_certificates(args.n, args.k, args.h)
    cert = vcert if args.kind == "vertex" else ecert
    _write_text(args.out, cert.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    text = _read_text(args.cert)
    cert = CutCertificate.from_json(text) if text.strip() else None
    if args.graph:
        G = read_graph(args.graph, args.labels)
    elif cert is not None:
        G = build_nkstar(cert.params.n, cert.params.k)
    else:
        raise DomainError("an empty certificate needs --graph")
    if cert is None:
        # nothing removed: the graph is whole
        verdict = verify_vertex_cut(G, [], args.h if args.h is not None else 0)
        size = 0
    else:
        verdict = cert.verify(G)
        size = cert.claimed_size
    print(f"{verdict} size={size}")
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_exact(args) -> int:
    G = _resolve_graph(args)
    res = exact(
        G,
        args.h,
        args.measure,
        symmetry=args.symmetry,
        fragment_cap=args.fragment_cap,
        workers=args.workers,
        timeout=args.timeout,
    )
    _write_text(args.out, res.to_json(G))
    return EXIT_OK


def cmd_split(args) -> int:
    if args.graph:
        G = read_graph(args.graph, args.labels)
        Gt, smap = split_graph(G, args.t, args.rule)
    else:
        if args.n is None or args.k is None:
            raise DomainError("split needs --graph PATH or --n and --k")
        Gt, smap = split_nkstar(args.n, args.k)
    _write_text(args.out, to_edgelist(Gt))
    if args.map:
        _write_text(args.map, smap.to_json())
    return EXIT_OK


def cmd_iso(args) -> int:
    A = read_graph(args.a)
    B = read_graph(args.b)
    if args.mode == "labels":
        same = edge_sets_equal(A, B)
        print("equal" if same else "different")
        return EXIT_OK if same else EXIT_INVALID
    w = isomorphic(A, B, node_budget=args.budget)
    if w is None:
        print("none")
        return EXIT_INVALID
    _write_text(args.out, w.to_json(A, B))
    return EXIT_OK


def report_rows(n_max: int, measures: list[str], *, symmetry: bool, workers, timeout: float, timings: bool):
    """Yield (row dict, certificate ok) for every (n, k, h) in the high-h range."""
    for n in range(4, n_max + 1):
        for k in range(2, n):
            G = build_nkstar(n, k)
            for h in range(n - k, n - 1):
                _, vcert, ecert = tail_certificates(n, k, h)
                for measure in measures:
                    cert = vcert if measure == "kappa" else ecert
                    cert_ok = bool(cert.verify(G))
                    f = formula("nkstar", n, h, k, measure).value
                    started = time.monotonic()
                    try:
                        res = exact(G, h, measure, symmetry=symmetry, workers=workers, timeout=timeout)
                        ex = "none" if res.value is None else str(res.value)
                        wsize = "" if res.value is None else str(len(res.witness_cut))
                        agree = "true" if res.value == f else "false"
                    except OracleTimeout:
                        ex, wsize, agree = "timeout", "", ""
                    ms = int((time.monotonic() - started) * 1000)
                    row = {
                        "family": "nkstar",
                        "n": n,
                        "k": k,
                        "h": h,
                        "measure": measure,
                        "formula": f,
                        "exact": ex,
                        "witness_size": wsize,
                        "agree": agree,
                        "runtime_ms": ms if timings else "",
                    }
                    log.info("n=%d k=%d h=%d %s: formula=%d exact=%s (%d ms)", n, k, h, measure, f, ex, ms)
                    yield row, cert_ok and cert.claimed_size == f


def cmd_report(args) -> int:
    if args.n_max > 5 and not args.allow_large:
        raise DomainError("report runs the exact oracle; n_max > 5 needs --allow-large")
    if args.n_max < 4:
        raise DomainError("n_max must be >= 4")
    measures = [m.strip() for m in args.measures.split(",") if m.strip()]
    for m in measures:
        if m not in ("kappa", "lambda"):
            raise DomainError(f"unknown measure {m!r}")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_HEADER, lineterminator="\n")
    writer.writeheader()
    problems = 0
    for row, cert_ok in report_rows(
        args.n_max, measures, symmetry=args.symmetry, workers=args.workers, timeout=args.timeout, timings=args.timings
    ):
        writer.writerow(row)
        if row["agree"] == "false" or not cert_ok:
            problems += 1
    _write_text(args.out, buf.getvalue())
    return EXIT_OK if problems == 0 else EXIT_INVALID


# -- argument parsing --------------------------------------------------------


def _family_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=["nkstar", "star", "an", "complete", "cycle"], required=required)
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--k", type=int)


def _oracle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="seconds per oracle call")
    p.add_argument("--workers", type=int, help="worker processes (default: STARKIT_THREADS or all CPUs)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starkit", description="h-super connectivity of star-type networks")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph")
    _family_args(p)
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("formula", help="closed-form value and branch")
    p.add_argument("--family", choices=["nkstar", "star", "an"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--measure", choices=["kappa", "lambda"], default="kappa")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("cut", help="write a constructive cut certificate for S_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--kind", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("--graph", help="graph file (default: rebuild S_{n,k} from the certificate)")
    p.add_argument("--labels", help="label map for a DIMACS graph")
    p.add_argument("--cert", required=True)
    p.add_argument("--h", type=int, help="level for an empty certificate (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact kappa/lambda by fragment search")
    p.add_argument("--graph")
    p.add_argument("--labels")
    _family_args(p, required=False)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--measure", choices=["kappa", "lambda"], default="kappa")
    p.add_argument("--symmetry", action="store_true", help="fix vertex 0 in the fragment (vertex-transitive graphs only)")
    p.add_argument("--fragment-cap", type=int)
    p.add_argument("--out")
    _oracle_args(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("split", help="t-split graph")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--graph")
    p.add_argument("--labels")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--rule", choices=["parallel", "lemma2_6"], default="parallel")
    p.add_argument("--out")
    p.add_argument("--map", help="write the block map JSON here")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("iso", help="compare two graphs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=["labels", "search"], default="labels")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("report", help="formula vs exact table for S_{n,k}, n-k <= h <= n-2")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--measures", default="kappa,lambda")
    p.add_argument("--out")
    p.add_argument("--no-symmetry", dest="symmetry", action="store_false")
    p.add_argument("--timings", action="store_true", help="fill runtime_ms (output no longer reproducible)")
    p.add_argument("--allow-large", action="store_true")
    _oracle_args(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ResourceError, OracleTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
