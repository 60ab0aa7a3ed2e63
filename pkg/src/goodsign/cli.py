"""Command-line front end.

Exit codes are a stable contract: 0 for success (or a ``good`` verdict),
1 for a check that came back false, 2 for usage, parse, or precondition
errors. Whenever ``--out`` is given, a ``<out>.manifest.json`` sidecar records
the command, inputs, parameters, version, and tolerance settings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .conference import normalize, paley_conference
from .constructions import (
    lex_k2_signing,
    lex_k4_signing,
    sign_complete_from_conference,
    signing_equivalence,
    switching_witness_cycle,
    two_lift_signed,
)
from .fileio import (
    DEFAULT_TOLERANCES,
    RunManifest,
    dumps_json,
    graph_to_json_dict,
    load_graph,
    load_matrix,
    load_partition,
    load_signed_graph,
    load_signing_for,
    matrix_to_text,
    signed_graph_to_json_dict,
)
from .graphs import signed_adjacency
from .partition import is_equitable, quotient_matrix, verify_quotient_identity
from .reproduce import example_ids, run_example
from .search import min_rho
from .spectra import check_good_signing, eigenvalues_symmetric

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _emit(text: str, out: str | None, manifest: RunManifest | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        if manifest is not None:
            manifest.write_alongside(out)


def _manifest(args: argparse.Namespace, inputs: list[str], skip=("out", "func", "command")) -> RunManifest:
    parameters = {
        k: v for k, v in vars(args).items() if k not in skip and not callable(v)
    }
    return RunManifest(
        command=args.command,
        inputs=tuple(inputs),
        parameters=parameters,
        output=args.out or "-",
        version=__version__,
        tolerances=dict(DEFAULT_TOLERANCES),
    )


def _cmd_conference(args) -> int:
    c = paley_conference(args.q)
    if args.normalized:
        c = normalize(c)
    _emit(matrix_to_text(c.matrix), args.out, _manifest(args, []))
    return EXIT_OK


def _cmd_sign_complete(args) -> int:
    sg = sign_complete_from_conference(paley_conference(args.q), args.case)
    if args.format == "matrix":
        text = matrix_to_text(signed_adjacency(sg))
    else:
        text = dumps_json(signed_graph_to_json_dict(sg))
    _emit(text, args.out, _manifest(args, []))
    return EXIT_OK


def _cmd_lex_k2(args) -> int:
    g = load_graph(args.graph)
    h1 = load_signed_graph(args.h1)
    h2 = load_signed_graph(args.h2)
    sg = lex_k2_signing(g, h1, h2)
    _emit(
        dumps_json(signed_graph_to_json_dict(sg)),
        args.out,
        _manifest(args, [args.graph, args.h1, args.h2]),
    )
    return EXIT_OK


def _cmd_lex_k4(args) -> int:
    sigma = load_signed_graph(args.signing)
    sg = lex_k4_signing(sigma.graph, sigma)
    _emit(dumps_json(signed_graph_to_json_dict(sg)), args.out, _manifest(args, [args.signing]))
    return EXIT_OK


def _cmd_lift2(args) -> int:
    sigma = load_signed_graph(args.sigma)
    sigma_prime = load_signed_graph(args.sigma_prime)
    lifted = two_lift_signed(sigma.graph, sigma, sigma_prime)
    if args.graph_only:
        text = dumps_json(graph_to_json_dict(lifted.graph))
    else:
        text = dumps_json(signed_graph_to_json_dict(lifted))
    _emit(text, args.out, _manifest(args, [args.sigma, args.sigma_prime]))
    return EXIT_OK


def _cmd_equiv(args) -> int:
    sigma = load_signed_graph(args.sigma)
    sigma_prime = load_signed_graph(args.sigma_prime)
    d = signing_equivalence(sigma.graph, sigma, sigma_prime)
    if d is not None:
        sys.stdout.write(dumps_json({"equivalent": True, "diagonal": [int(x) for x in d]}))
        return EXIT_OK
    cycle = switching_witness_cycle(sigma.graph, sigma, sigma_prime)
    sys.stdout.write(
        dumps_json({"equivalent": False, "witness_cycle": list(cycle or ())})
    )
    return EXIT_FALSE


def _cmd_verify(args) -> int:
    g = load_graph(args.graph)
    sg = load_signing_for(g, args.signing)
    report = check_good_signing(sg, mode=args.mode)
    sys.stdout.write(dumps_json(report.to_json_dict()))
    return EXIT_OK if report.is_good else EXIT_FALSE


def _cmd_spectrum(args) -> int:
    if args.matrix:
        a = load_matrix(args.matrix)
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be symmetric")
    elif args.signed:
        a = signed_adjacency(load_signed_graph(args.signed))
    else:
        a = load_graph(args.graph).adjacency()
    eig = eigenvalues_symmetric(a)
    rho = float(max(-eig[0], eig[-1], 0.0)) if eig.size else 0.0
    sys.stdout.write(dumps_json({"eigenvalues": list(eig), "rho": rho}))
    return EXIT_OK


def _cmd_partition_check(args) -> int:
    sg = load_signed_graph(args.signed)
    p = load_partition(args.partition)
    equitable, witness = is_equitable(sg, p)
    if not equitable:
        sys.stdout.write(
            dumps_json(
                {
                    "equitable": False,
                    "witness": {
                        "cell": witness.cell,
                        "target_cell": witness.target_cell,
                        "vertices": [witness.vertex_a, witness.vertex_b],
                        "degrees": [witness.degree_a, witness.degree_b],
                    },
                }
            )
        )
        return EXIT_FALSE
    b = quotient_matrix(sg, p)
    sys.stdout.write(
        dumps_json(
            {
                "equitable": True,
                "quotient": b.matrix.tolist(),
                "identity_holds": verify_quotient_identity(sg, p, b),
            }
        )
    )
    return EXIT_OK


def _cmd_search(args) -> int:
    g = load_graph(args.graph)
    result = min_rho(g, mode=args.mode, max_free_edges=args.max_free_edges, jobs=args.jobs)
    payload = {
        "best_rho": result.best_rho,
        "best_signing": signed_graph_to_json_dict(result.best_signing),
        "classes_examined": result.classes_examined,
        "good_found": result.good_found,
        "bound_used": result.bound_used,
    }
    _emit(dumps_json(payload), args.out, _manifest(args, [args.graph]))
    return EXIT_OK if result.good_found else EXIT_FALSE


def _cmd_reproduce(args) -> int:
    if args.list:
        for example_id in example_ids():
            sys.stdout.write(example_id + "\n")
        return EXIT_OK
    ids = list(example_ids()) if args.all else [args.id]
    if ids == [None]:
        raise ValueError("give --id, --all, or --list")
    all_ok = True
    for example_id in ids:
        report = run_example(example_id)
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            sys.stdout.write(f"{status} [{report.example_id}] {check.name}{detail}\n")
        for note in report.notes:
            sys.stdout.write(f"NOTE [{report.example_id}] {note}\n")
        all_ok = all_ok and report.passed
    return EXIT_OK if all_ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goodsign",
        description="Edge signings of graphs: constructions, spectra, and bound checks.",
    )
    parser.add_argument("--version", action="version", version=f"goodsign {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conference", help="emit a Paley conference matrix")
    p.add_argument("--q", type=int, required=True, help="prime congruent to 1 mod 4")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--raw", action="store_true", help="emit as constructed (default)")
    group.add_argument("--normalized", action="store_true", help="normalize before emitting")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_conference)

    p = sub.add_parser("sign-complete", help="sign a complete graph around a conference core")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--case", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--format", choices=("json", "matrix"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sign_complete)

    p = sub.add_parser("lex-k2", help="sign the product with the edgeless 2-vertex graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--h1", required=True, help="signed JSON for the uniform-block part")
    p.add_argument("--h2", required=True, help="signed JSON for the alternating-block part")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lex_k2)

    p = sub.add_parser("lex-k4", help="sign the product with the edgeless 4-vertex graph")
    p.add_argument("--signing", required=True, help="signed JSON of the base signing")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lex_k4)

    p = sub.add_parser("lift2", help="signed 2-lift driven by a pair of signings")
    p.add_argument("--sigma", required=True)
    p.add_argument("--sigma-prime", required=True, dest="sigma_prime")
    p.add_argument("--graph-only", action="store_true", dest="graph_only")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lift2)

    p = sub.add_parser("equiv", help="test switching equivalence of two signings")
    p.add_argument("--sigma", required=True)
    p.add_argument("--sigma-prime", required=True, dest="sigma_prime")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("verify", help="check a signing against the spectral bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--signing", required=True)
    p.add_argument("--mode", choices=("regular", "maxdeg"), default="regular")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="eigenvalues of a matrix or graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix")
    group.add_argument("--graph")
    group.add_argument("--signed")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("partition-check", help="equitability and quotient of a partition")
    p.add_argument("--signed", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=_cmd_partition_check)

    p = sub.add_parser("search", help="exhaustive minimum spectral radius over signings")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=("regular", "maxdeg"), default="regular")
    p.add_argument("--max-free-edges", type=int, default=24, dest="max_free_edges")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("reproduce", help="re-run the bundled reference constructions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--id", choices=example_ids())
    group.add_argument("--all", action="store_true")
    group.add_argument("--list", action="store_true")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
