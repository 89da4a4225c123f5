"""Command-line front end: rb values, witness certificates, verification, tables.

Exit codes: 0 ok, 1 rainbow triple found during verify, 2 input/scope error,
3 formula/oracle mismatch, 4 inconclusive search (time budget exhausted).
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from typing import Optional

from . import __version__
from .certificates import make_certificate, read_certificate, write_certificate
from .coloring import Coloring, find_rainbow_triple, residue_palettes
from .constructions import witness_general, witness_schur
from .errors import (
    CertificateError,
    ConfigError,
    InputError,
    RainbowLabError,
    UnsupportedCaseError,
)
from .formulas import load_two_power_table, rb_general, rb_schur
from .modcore import CyclicInstance, is_prime
from .results import RbResult
from .search import SearchConfig, max_rainbow_free_r, rb_oracle

EXIT_OK = 0
EXIT_RAINBOW = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_INCONCLUSIVE = 4

BUDGET_ENV_VAR = "RAINBOW_LAB_BUDGET_SECS"
TABLE_COLUMNS = ["n", "k", "rb_formula", "rb_search", "agree", "elapsed_ms", "nodes"]

log = logging.getLogger("rainbow_lab")


def _default_budget() -> float:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None:
        try:
            return float(raw)
        except ValueError:
            log.warning("ignoring non-numeric %s=%r", BUDGET_ENV_VAR, raw)
    return 60.0


def _formula_rb(n: int, k: int, table_path: Optional[str]) -> RbResult:
    """Formula path: k=1 uses the factorization formula, prime k the general
    recursion. Anything else is out of formula scope."""
    k_red = k % n if n > 1 else 0
    if k_red == 1:
        return rb_schur(n)
    if is_prime(k_red):
        table = load_two_power_table(table_path) if table_path else None
        return rb_general(n, k_red, two_power_table=table)
    raise UnsupportedCaseError(
        f"no closed form for (n={n}, k={k}): the formulas cover k = 1 mod n "
        "and prime k mod n only"
    )


def cmd_rb(args) -> int:
    try:
        inst = CyclicInstance(args.n, args.k)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    formula = search = None
    if args.method in ("formula", "both"):
        try:
            formula = _formula_rb(args.n, args.k, args.two_power_table)
        except (UnsupportedCaseError, ConfigError, InputError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    if args.method in ("search", "both"):
        search = rb_oracle(inst, SearchConfig(time_budget=args.budget_secs, parallel=args.parallel))
        if not search.conclusive:
            print(
                f"rb({args.n},{args.k}) >= {search.value} (search inconclusive: "
                f"budget of {args.budget_secs}s exhausted after "
                f"{search.detail['nodes_explored']} nodes)"
            )
            return EXIT_INCONCLUSIVE

    if args.method == "formula":
        print(f"rb({args.n},{args.k}) = {formula.value} [{formula.method.value}]")
        for term in formula.detail.get("terms", ()):
            log.info("contribution: %s", term)
    elif args.method == "search":
        print(
            f"rb({args.n},{args.k}) = {search.value} [oracle: "
            f"{search.detail['nodes_explored']} nodes, "
            f"{search.detail['elapsed']:.3f}s]"
        )
    else:
        if formula.value != search.value:
            print(
                f"MISMATCH: formula says {formula.value}, search says {search.value}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
        print(f"rb({args.n},{args.k}) = {formula.value}, formula=search")
    return EXIT_OK


def _construct_witness(n: int, k: int, budget: float, parallel: bool):
    """Pick the strongest applicable path: construction if one exists, else
    the search oracle's witness."""
    k_red = k % n if n > 1 else 0
    if n >= 2 and k_red == 1:
        return witness_schur(n), "schur-lift"
    if is_prime(k_red):
        try:
            return witness_general(n, k_red), "general-lift"
        except (UnsupportedCaseError, InputError):
            pass
    outcome = max_rainbow_free_r(
        CyclicInstance(n, k), SearchConfig(time_budget=budget, parallel=parallel)
    )
    name = "oracle-search" if outcome.exhausted else "oracle-search-partial"
    return outcome.witness, name


def cmd_witness(args) -> int:
    try:
        coloring, source = _construct_witness(args.n, args.k, args.budget_secs, args.parallel)
    except (InputError, RainbowLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cert = make_certificate(
        coloring,
        args.k,
        meta={"construction": source, "tool": "rainbow-lab", "version": __version__},
    )
    # re-verify through the same predicate the verifier uses
    rt = find_rainbow_triple(cert.coloring(), cert.k)
    if rt is not None:
        raise RuntimeError(f"internal error: witness for ({args.n},{args.k}) has rainbow triple {rt}")
    try:
        write_certificate(args.out, cert)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(
        f"wrote {args.out}: n={cert.n} k={cert.k} "
        f"colors={len(set(cert.colors))} [{source}]"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = read_certificate(args.path)
    except CertificateError as exc:
        print(f"invalid certificate: {exc}", file=sys.stderr)
        if exc.hint:
            print(exc.hint, file=sys.stderr)
        return EXIT_INPUT
    c = cert.coloring()
    r = len(set(cert.colors))
    triple = find_rainbow_triple(c, cert.k)
    if triple is not None:
        cols = tuple(c.colors[x] for x in triple)
        print(
            f"NOT rainbow-free: triple {tuple(triple)} has colors {cols} "
            f"(n={cert.n}, k={cert.k})"
        )
        return EXIT_RAINBOW
    print(f"rainbow-free: n={cert.n} k={cert.k} colors={r} (exact)")
    if args.palettes is not None:
        t = args.palettes
        if t < 1 or cert.n % t != 0:
            print(f"error: --palettes {t} does not divide n={cert.n}", file=sys.stderr)
            return EXIT_INPUT
        for i, p in enumerate(residue_palettes(c, t)):
            print(f"P_{i} (mod {t}) = {sorted(p)}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.k != 1 and not is_prime(args.k):
        print(
            f"error: no closed form for k={args.k}; table needs k = 1 or prime",
            file=sys.stderr,
        )
        return EXIT_INPUT
    rows = []
    any_inconclusive = False
    table = load_two_power_table(args.two_power_table) if args.two_power_table else None
    for n in range(2, args.n_max + 1):
        # per-row: a prime k may reduce mod n to 0 or a composite, where no
        # closed form applies; such rows are search-only with a blank formula
        try:
            k_red = args.k % n
            if k_red == 1:
                formula_value = rb_schur(n).value
            elif is_prime(k_red):
                formula_value = rb_general(n, k_red, two_power_table=table).value
            else:
                formula_value = ""
        except (ConfigError, UnsupportedCaseError) as exc:
            print(f"error at n={n}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        search = rb_oracle(
            CyclicInstance(n, args.k),
            SearchConfig(time_budget=args.budget_secs, parallel=args.parallel),
        )
        elapsed_ms = round(search.detail["elapsed"] * 1000)
        nodes = search.detail["nodes_explored"]
        if not search.conclusive:
            any_inconclusive = True
            rows.append([n, args.k, formula_value, "", "inconclusive", elapsed_ms, nodes])
            continue
        if formula_value == "":
            rows.append([n, args.k, "", search.value, "", elapsed_ms, nodes])
            continue
        if search.value != formula_value:
            print(
                f"MISMATCH at n={n}, k={args.k}: formula={formula_value} "
                f"search={search.value}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
        rows.append([n, args.k, formula_value, search.value, "yes", elapsed_ms, nodes])

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(rows)
    else:
        doc = [
            {
                col: (None if value == "" else value)
                for col, value in zip(TABLE_COLUMNS, row)
            }
            for row in rows
        ]
        json.dump(doc, sys.stdout, indent=2)
        print()
    return EXIT_INCONCLUSIVE if any_inconclusive else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbow-lab",
        description="Rainbow numbers rb(Z_n, k) for x1 + x2 = k*x3: formulas, "
        "exhaustive search, witness certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log details to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--budget-secs",
            type=float,
            default=None,
            help=f"search time budget in seconds (default 60; env {BUDGET_ENV_VAR} overrides)",
        )
        p.add_argument("--parallel", action="store_true", help="parallelize the search frontier")

    p_rb = sub.add_parser("rb", help="compute rb(Z_n, k)")
    p_rb.add_argument("--n", type=int, required=True)
    p_rb.add_argument("--k", type=int, required=True)
    p_rb.add_argument("--method", choices=["formula", "search", "both"], default="both")
    p_rb.add_argument("--two-power-table", help="JSON table of rb(Z_{2^a}, 2) values")
    add_common(p_rb)
    p_rb.set_defaults(func=cmd_rb)

    p_wit = sub.add_parser("witness", help="emit a verified rainbow-free certificate")
    p_wit.add_argument("--n", type=int, required=True)
    p_wit.add_argument("--k", type=int, required=True)
    p_wit.add_argument("--out", required=True, help="output certificate path")
    add_common(p_wit)
    p_wit.set_defaults(func=cmd_witness)

    p_ver = sub.add_parser("verify", help="re-check a certificate file")
    p_ver.add_argument("path")
    p_ver.add_argument(
        "--palettes", type=int, default=None, metavar="T",
        help="also print residue palettes modulo T (T must divide n)",
    )
    p_ver.set_defaults(func=cmd_verify)

    p_tab = sub.add_parser("table", help="formula-vs-search table for n = 2..n_max")
    p_tab.add_argument("--n-max", type=int, required=True)
    p_tab.add_argument("--k", type=int, required=True)
    p_tab.add_argument("--format", choices=["csv", "json"], default="csv")
    p_tab.add_argument("--two-power-table", help="JSON table of rb(Z_{2^a}, 2) values")
    add_common(p_tab)
    p_tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    if getattr(args, "budget_secs", None) is None and hasattr(args, "budget_secs"):
        args.budget_secs = _default_budget()
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
