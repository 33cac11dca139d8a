"""Command-line entry point.

Subcommands wire the library modules together with JSON input/output and
deterministic exit codes:

    0   success / all checks passed
    1   a verification failed, or a rank did not match --expect
    2   usage error or malformed input

All randomized subcommands require an explicit --seed so that two runs with
identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from . import expr, ranklab, relations, thooft
from .curvature import (
    SCHEMA,
    rational_to_str,
    riemann_from_json,
    riemann_to_dict,
)
from .decomp import (
    decompose,
    fblocks_from_dict,
    fblocks_to_dict,
    reconstruct,
)
from .gen import GenConfig, random_fblocks_stream

__all__ = ["main", "run"]


class _UsageError(Exception):
    pass


def _dump(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _read_input(path):
    try:
        if path in (None, "-"):
            return sys.stdin.read()
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise _UsageError(f"cannot read {path!r}: {e}") from e


def _samples_to_dict(fbs, config):
    return {
        "schema": SCHEMA,
        "config": {"bound": config.bound, "einstein": config.einstein},
        "samples": [fblocks_to_dict(fb) for fb in fbs],
    }


def _samples_from_json(text, path):
    try:
        data = json.loads(text)
        return [fblocks_from_dict(d) for d in data["samples"]]
    except (ValueError, KeyError, TypeError) as e:
        raise _UsageError(f"malformed samples file {path!r}: {e}") from e


def _get_samples(args, count, config):
    if getattr(args, "import_samples", None):
        fbs = _samples_from_json(
            _read_input(args.import_samples), args.import_samples
        )
        if len(fbs) < count:
            raise _UsageError(
                f"imported {len(fbs)} samples but {count} are needed"
            )
        return fbs[:count]
    if args.seed is None:
        raise _UsageError("--seed is required (or use --import-samples)")
    fbs = random_fblocks_stream(args.seed, count, config)
    if getattr(args, "export_samples", None):
        with open(args.export_samples, "w") as f:
            f.write(_dump(_samples_to_dict(fbs, config)))
    return fbs


# ---------------------------------------------------------------------------
# Subcommand handlers (each returns the exit code)


def _cmd_thooft_check(args):
    report = thooft.verify_appendix_a()
    if args.format == "table":
        lines = [
            f"{'PASS' if ok else 'FAIL'} {name}"
            for name, ok, _ in report.results
        ]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(report.to_dict()), args.out)
    return 0 if report.all_ok else 1


def _cmd_generate(args):
    if args.seed is None:
        raise _UsageError("--seed is required (no wall-clock default)")
    config = GenConfig(bound=args.bound, einstein=args.einstein)
    fbs = random_fblocks_stream(args.seed, args.samples, config)
    _emit(_dump(_samples_to_dict(fbs, config)), args.out)
    return 0


def _cmd_decompose(args):
    text = _read_input(args.input)
    try:
        tensor = riemann_from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise _UsageError(f"malformed tensor input: {e}") from e
    try:
        fb = decompose(tensor)
    except ValueError as e:
        raise _UsageError(str(e)) from e
    _emit(_dump(fblocks_to_dict(fb)), args.out)
    return 0


def _cmd_reconstruct(args):
    text = _read_input(args.input)
    try:
        fb = fblocks_from_dict(json.loads(text))
    except (ValueError, KeyError, TypeError) as e:
        raise _UsageError(f"malformed blocks input: {e}") from e
    tensor = reconstruct(fb)
    _emit(_dump(riemann_to_dict(tensor, format=args.tensor_format)), args.out)
    return 0


def _cmd_invariants(args):
    entries = _resolve_catalog(args.catalog)
    if args.input:
        fb = fblocks_from_dict(json.loads(_read_input(args.input)))
    else:
        config = GenConfig(bound=args.bound, einstein=args.einstein)
        fb = _get_samples(args, 1, config)[0]
    ctx = catalog_mod.contexts_for(fb)
    values = {}
    for e in entries:
        v = catalog_mod.evaluate_entry(e, ctx)
        values[e.label] = rational_to_str(v)
    report = {"schema": SCHEMA, "catalog": args.catalog, "values": values}
    if args.format == "table":
        lines = [f"{k} = {v}" for k, v in values.items()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(report), args.out)
    return 0


def _select_relations(args):
    rels = relations.load_relations()
    if args.names:
        by_name = {r.name: r for r in rels}
        missing = [n for n in args.names if n not in by_name]
        if missing:
            raise _UsageError(f"unknown relations: {', '.join(missing)}")
        return [by_name[n] for n in args.names]
    if args.set == "all":
        return list(rels)
    selected = [
        r for r in rels if args.set == r.domain or args.set in r.tags
    ]
    if not selected:
        raise _UsageError(f"--set {args.set!r} selects no relations")
    return selected


def _cmd_verify(args):
    rels = _select_relations(args)
    report = relations.verify_all(
        seed=args.seed, n_samples=args.samples, relations=rels,
        bound=args.bound,
    )
    if args.format == "table":
        lines = [
            f"{'PASS' if r.ok else 'FAIL'} {r.name}" for r in report.results
        ]
        lines.append(f"{'OK' if report.ok else 'FAILED'}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(report.to_dict()), args.out)
    return 0 if report.ok else 1


def _resolve_catalog(name):
    try:
        return catalog_mod.catalog(name)
    except KeyError as e:
        raise _UsageError(str(e)) from e


def _rank_common(args):
    entries = _resolve_catalog(args.catalog)
    config = GenConfig(bound=args.bound, einstein=args.einstein)
    n = args.samples
    if args.import_samples:
        fbs = _samples_from_json(
            _read_input(args.import_samples), args.import_samples
        )
        if n is not None:
            if len(fbs) < n:
                raise _UsageError(
                    f"imported {len(fbs)} samples but {n} are needed"
                )
            fbs = fbs[:n]
        rows = ranklab.sample_matrix(entries, fbs, args.representation)
        reduced, pivots = ranklab.rref(rows)
        labels = [e.label for e in entries]
        null = ranklab.nullspace(rows, ncols=len(entries))
        half = ranklab.sample_matrix(
            entries, fbs[: max(1, len(fbs) // 2)], args.representation
        )
        report = ranklab.RankReport(
            catalog=args.catalog,
            labels=labels,
            n_samples=len(fbs),
            n_rows=len(rows),
            rank=len(pivots),
            pivots=[labels[c] for c in pivots],
            nullspace=null,
            stable=ranklab.rank(half) == len(pivots),
            seed=args.seed if args.seed is not None else -1,
            config={"bound": config.bound, "einstein": config.einstein},
        )
    else:
        if args.seed is None:
            raise _UsageError("--seed is required (or use --import-samples)")
        report = ranklab.rank_report(
            entries, seed=args.seed, n_samples=n, config=config,
            representation=args.representation, catalog_name=args.catalog,
        )
        if args.export_samples:
            fbs = random_fblocks_stream(args.seed, report.n_samples, config)
            with open(args.export_samples, "w") as f:
                f.write(_dump(_samples_to_dict(fbs, config)))
    return report


def _cmd_rank(args):
    report = _rank_common(args)
    if args.format == "table":
        lines = [
            f"catalog: {report.catalog}",
            f"rank: {report.rank} / {len(report.labels)}",
            f"stable: {report.stable}",
        ]
        for vec in report.nullspace:
            terms = [
                f"{c}*{lbl}" for c, lbl in zip(vec, report.labels) if c
            ]
            lines.append("null: " + " + ".join(terms))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(report.to_dict()), args.out)
    if args.expect is not None and report.rank != args.expect:
        return 1
    return 0


def _cmd_discover(args):
    args.expect = None
    return _cmd_rank(args)


# ---------------------------------------------------------------------------
# Argument parsing


def _build_parser():
    p = argparse.ArgumentParser(
        prog="riemann-syzygy",
        description="Exact block decomposition, invariant catalogs, and "
                    "identity verification for 4D curvature tensors.",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, seed=False, samples=None, bound=True):
        sp.add_argument("--out", help="write the report to a file")
        sp.add_argument("--format", choices=("json", "table"),
                        default="json")
        if seed:
            sp.add_argument("--seed", type=int, default=None,
                            help="random seed (required; no clock default)")
        if samples is not None:
            sp.add_argument("--samples", type=int, default=samples)
        if bound:
            sp.add_argument("--bound", type=int, default=9,
                            help="integer entry bound for random blocks")

    sp = sub.add_parser("thooft-check",
                        help="exhaustively verify the symbol-table identities")
    common(sp, bound=False)
    sp.set_defaults(func=_cmd_thooft_check)

    sp = sub.add_parser("generate", help="emit random block samples as JSON")
    common(sp, seed=True, samples=1)
    sp.add_argument("--einstein", action="store_true")
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("decompose",
                        help="rank-4 tensor JSON -> block triple JSON")
    common(sp, bound=False)
    sp.add_argument("input", nargs="?", default="-",
                    help="tensor JSON file (default stdin)")
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("reconstruct",
                        help="block triple JSON -> rank-4 tensor JSON")
    common(sp, bound=False)
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--tensor-format", choices=("sparse", "dense"),
                    default="sparse")
    sp.set_defaults(func=_cmd_reconstruct)

    sp = sub.add_parser("invariants",
                        help="evaluate one catalog on a sample")
    common(sp, seed=True)
    sp.add_argument("--catalog", required=True)
    sp.add_argument("--einstein", action="store_true")
    sp.add_argument("--import-samples", dest="import_samples")
    sp.add_argument("--export-samples", dest="export_samples")
    sp.add_argument("input", nargs="?", default=None,
                    help="block triple JSON file (alternative to --seed)")
    sp.set_defaults(func=_cmd_invariants)

    sp = sub.add_parser("verify", help="verify cataloged relations")
    common(sp, seed=True, samples=50)
    sp.add_argument("--set", default="all",
                    help="relation subset: all, a domain, or a tag")
    sp.add_argument("--names", nargs="*", default=None,
                    help="explicit relation names (overrides --set)")
    sp.set_defaults(func=_cmd_verify)

    for name, helptext, func in (
        ("rank", "exact rank of a catalog on random samples", _cmd_rank),
        ("discover", "report candidate linear identities of a catalog",
         _cmd_discover),
    ):
        sp = sub.add_parser(name, help=helptext)
        common(sp, seed=True)
        sp.add_argument("--samples", type=int, default=None,
                        help="sample count (default: 2*|catalog| + 8)")
        sp.add_argument("--catalog", required=True)
        sp.add_argument("--einstein", action="store_true")
        sp.add_argument("--representation",
                        choices=("tensor", "matrix", "fform"), default=None)
        sp.add_argument("--import-samples", dest="import_samples")
        sp.add_argument("--export-samples", dest="export_samples")
        if name == "rank":
            sp.add_argument("--expect", type=int, default=None,
                            help="exit 1 unless the rank equals this value")
        sp.set_defaults(func=func)

    return p


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (expr.ExprError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
