"""Command-line surface: make / analyze / peirce / decompose / fuzz.

Exit codes: 0 success, 1 violated precondition or hypothesis, 2 bad input,
3 broken internal invariant (a bug).  With --json the report is emitted as
sorted-key JSON with no timing, so identical inputs and seed give
byte-identical output; human-readable reports add elapsed time at the end.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import catalog, jsonio
from .algebra import Algebra, Element, check_alternative, check_associative, check_flexible
from .errors import (
    AltRingsError,
    HypothesisFailedError,
    InputError,
    InternalInvariantError,
    LieLawViolatedError,
    PreconditionError,
)
from .liederiv import (
    MapSpec,
    SampleBudget,
    check_hypotheses,
    check_lie_law,
    decompose,
)
from .peirce import check_conditions, make_context, verify_relations
from .report import Check
from .structure import analyze, center

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _echo(argv: list[str]) -> str:
    return "altrings " + " ".join(argv)


def _emit(report: dict, as_json: bool, started: float):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    _print_human(report)
    print(f"elapsed: {time.perf_counter() - started:.2f}s")


def _print_human(report: dict, indent: str = ""):
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_human(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                if "name" in item:
                    line = f"{indent}  - {item['name']}: {'pass' if item.get('ok') else 'FAIL'}"
                    if "mode" in item:
                        line += f" [{item['mode']}]"
                    if item.get("witness"):
                        line += f" witness: {item['witness']}"
                    print(line)
                else:
                    print(f"{indent}  - {json.dumps(item, sort_keys=True)}")
        else:
            print(f"{indent}{key}: {value}")


def _require_positive(**named_counts):
    for name, value in named_counts.items():
        if value < 1:
            raise InputError(f"--{name} must be at least 1 (got {value})")


def _parse_idempotent(spec: str, algebra: Algebra) -> Element:
    """Inline comma-separated rationals, or @path to a JSON list."""
    if spec.startswith("@"):
        data = jsonio._load_json(spec[1:])
        coeffs = jsonio.vector_from_json(data, algebra.dim)
    else:
        parts = [p.strip() for p in spec.split(",")]
        if len(parts) != algebra.dim:
            raise InputError(
                f"idempotent has {len(parts)} entries, algebra dimension is {algebra.dim}"
            )
        coeffs = tuple(jsonio.parse_rational(p) for p in parts)
    return Element(algebra, coeffs)


def _recipe_from_args(args) -> catalog.ConstructionRecipe:
    kind = args.kind
    if kind == "matrix":
        if args.n is None:
            raise InputError("make matrix requires --n")
        return catalog.parse_recipe(f"matrix:{args.n}")
    if kind in ("cayley-dickson", "cd"):
        if not args.mus:
            raise InputError("make cayley-dickson requires --mus")
        return catalog.parse_recipe(f"cayley-dickson:{args.mus}")
    return catalog.parse_recipe(kind)


def cmd_make(args, argv) -> int:
    started = time.perf_counter()
    recipe = _recipe_from_args(args)
    algebra = catalog.build(recipe)
    jsonio.save_algebra(algebra, args.output, provenance=recipe.describe())
    report = {
        "command": _echo(argv),
        "recipe": recipe.describe(),
        "dim": algebra.dim,
        "output": str(args.output),
        "identities": {
            "alternative": check_alternative(algebra),
            "flexible": check_flexible(algebra),
            "associative": check_associative(algebra),
        },
    }
    _emit(report, args.json, started)
    return EXIT_OK


def cmd_analyze(args, argv) -> int:
    started = time.perf_counter()
    algebra = jsonio.load_algebra(args.algebra)
    rep = analyze(algebra)
    report = {
        "command": _echo(argv),
        "dim": algebra.dim,
        "nucleus_dim": rep.nucleus.dim,
        "center_dim": rep.center.dim,
        "derivation_dim": rep.derivation_dim,
        "is_alternative": rep.is_alternative,
        "is_flexible": rep.is_flexible,
        "is_associative": rep.is_associative,
        "center_basis": [jsonio.vector_to_json(v) for v in rep.center.basis],
        "nucleus_basis": [jsonio.vector_to_json(v) for v in rep.nucleus.basis],
    }
    _emit(report, args.json, started)
    return EXIT_OK


def cmd_peirce(args, argv) -> int:
    started = time.perf_counter()
    _require_positive(samples=args.samples)
    algebra = jsonio.load_algebra(args.algebra)
    e1 = _parse_idempotent(args.idempotent, algebra)
    ctx = make_context(algebra, e1)
    relations = verify_relations(ctx)
    conditions = check_conditions(ctx, seed=args.seed, samples=args.samples)
    checks = list(conditions.checks)
    rel_check = Check(
        "relations-i-iv", relations.ok, "exact",
        witness=None if relations.ok else
        f"{relations.violations[0].relation}: {relations.violations[0].x!r}"
        f" * {relations.violations[0].y!r} = {relations.violations[0].product!r}",
    )
    report = {
        "command": _echo(argv),
        "seed": args.seed,
        "dims": list(ctx.dims),
        "checks": [rel_check.to_dict()] + [c.to_dict() for c in checks],
    }
    if conditions.checks[0].ok and conditions.checks[1].ok and conditions.checks[2].ok:
        from .peirce import verify_offdiag_centralizer, verify_prop_spade_club

        spade, club = verify_prop_spade_club(ctx)
        offdiag = verify_offdiag_centralizer(ctx)
        report["checks"] += [
            Check("prop-spade", spade, "exact").to_dict(),
            Check("prop-club", club, "exact").to_dict(),
            Check("offdiag-centralizer", offdiag, "exact").to_dict(),
        ]
    report["ok"] = all(c["ok"] for c in report["checks"])
    _emit(report, args.json, started)
    return EXIT_OK


def cmd_decompose(args, argv) -> int:
    started = time.perf_counter()
    _require_positive(samples=args.samples)
    algebra = jsonio.load_algebra(args.algebra)
    e1 = _parse_idempotent(args.idempotent, algebra)
    ctx = make_context(algebra, e1)
    spec = jsonio.load_mapspec(args.map, algebra)
    budget = SampleBudget(seed=args.seed, pair_samples=args.samples,
                          element_samples=args.samples)

    lie = check_lie_law(spec, budget)
    if not lie.ok:
        raise LieLawViolatedError(f"LieLawViolated: witness {lie.witness}")
    conditions = check_conditions(ctx, seed=args.seed, samples=args.samples)
    if not conditions.all_hold:
        bad = conditions.failed()
        raise PreconditionError(f"ConditionsFailed: {bad.name} (witness {bad.witness})")
    hyp = check_hypotheses(ctx, spec, budget)
    if not hyp.a.ok:
        raise HypothesisFailedError("a", f"HypothesisAFailed: {hyp.a.witness}")
    if not hyp.b.ok:
        raise HypothesisFailedError("b", f"HypothesisBFailed: {hyp.b.witness}")

    result = decompose(ctx, spec, budget)
    outputs = {}
    if args.output:
        prefix = Path(args.output)
        delta_path = prefix.with_name(prefix.name + ".delta.json")
        tau_path = prefix.with_name(prefix.name + ".tau.json")
        jsonio.save_mapspec(MapSpec(algebra, result.delta), delta_path)
        jsonio.save_mapspec(result.tau, tau_path)
        outputs = {"delta": str(delta_path), "tau": str(tau_path)}

    report = {
        "command": _echo(argv),
        "seed": args.seed,
        "samples": args.samples,
        "checks": [lie.to_dict(), *(c.to_dict() for c in conditions.checks),
                   hyp.a.to_dict(), hyp.b.to_dict(),
                   *(c.to_dict() for c in result.checks)],
        "tau_identically_zero": result.tau.is_identically_zero
        if isinstance(result.tau, MapSpec) else None,
        "ok": result.ok,
    }
    if outputs:
        report["outputs"] = outputs
    _emit(report, args.json, started)
    return EXIT_OK


def _fuzz_trial(ctx, algebra, trial: int, master_seed: int, samples: int) -> dict:
    trial_seed = master_seed * 1_000_003 + trial
    budget = SampleBudget(seed=trial_seed, pair_samples=samples, element_samples=samples)
    spec = catalog.random_lie_derivation(algebra, budget)
    result = decompose(ctx, spec, budget)
    cen = center(algebra)
    diff = result.delta - spec.linear
    drift_central = all(cen.contains_vector(diff.col(k)) for k in range(algebra.dim))
    ok = result.ok and drift_central
    entry = {
        "trial": trial,
        "seed": trial_seed,
        "ok": ok,
        "delta_drift_central": drift_central,
        "failed_checks": [c.to_dict() for c in result.checks if not c.ok],
    }
    if not ok:
        entry["replay_map"] = jsonio.mapspec_to_dict(spec)
    return entry


def cmd_fuzz(args, argv) -> int:
    started = time.perf_counter()
    _require_positive(trials=args.trials, samples=args.samples)
    recipe = catalog.parse_recipe(args.recipe)
    algebra = catalog.build(recipe)
    e1 = catalog.canonical_idempotent(recipe, algebra)
    ctx = make_context(algebra, e1)
    conditions = check_conditions(ctx, seed=args.seed, samples=args.samples)
    if not conditions.all_hold:
        bad = conditions.failed()
        raise PreconditionError(
            f"ConditionsFailed: {bad.name} for the canonical idempotent "
            f"(witness {bad.witness})"
        )
    results = [
        _fuzz_trial(ctx, algebra, t, args.seed, args.samples) for t in range(args.trials)
    ]
    ok = all(r["ok"] for r in results)
    report = {
        "command": _echo(argv),
        "recipe": recipe.describe(),
        "seed": args.seed,
        "trials": args.trials,
        "samples": args.samples,
        "idempotent": jsonio.vector_to_json(e1.coeffs),
        "results": results,
        "ok": ok,
    }
    _emit(report, args.json, started)
    if not ok:
        first_bad = next(r for r in results if not r["ok"])
        print(f"fuzz trial {first_bad['trial']} (seed {first_bad['seed']}) failed; "
              "replay map embedded in report", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altrings",
        description="Exact structure theory and Lie-derivation splitting for "
                    "finite-dimensional alternative algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", help="construct a stock algebra and write its JSON file")
    p.add_argument("kind", help="zorn | matrix | cayley-dickson | recipe string "
                                "(matrix:2, m2m2, sum(zorn|matrix:1), ...)")
    p.add_argument("--n", type=int, help="size for matrix algebras")
    p.add_argument("--mus", help="comma-separated doubling parameters, e.g. -1,-1,-1")
    p.add_argument("-o", "--output", required=True, help="output algebra JSON path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_make)

    p = sub.add_parser("analyze", help="nucleus, center, derivations, identity flags")
    p.add_argument("algebra", help="algebra JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("peirce", help="corner decomposition report for an idempotent")
    p.add_argument("algebra", help="algebra JSON file")
    p.add_argument("--idempotent", required=True,
                   help="comma-separated rationals or @file.json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_peirce)

    p = sub.add_parser("decompose", help="split a Lie multiplicative derivation")
    p.add_argument("algebra", help="algebra JSON file")
    p.add_argument("--idempotent", required=True,
                   help="comma-separated rationals or @file.json")
    p.add_argument("--map", required=True, help="map JSON file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("-o", "--output", help="prefix for .delta.json / .tau.json outputs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("fuzz", help="random round-trips of the decomposition")
    p.add_argument("recipe", help="algebra recipe (zorn, matrix:2, m2m2, ...)")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fuzz)

    return parser


def _merge_dash_values(argv: list[str]) -> list[str]:
    """Allow `--mus -1,-1,-1` by folding the value into `--mus=...`."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--mus" and i + 1 < len(argv):
            out.append(f"--mus={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_merge_dash_values(argv))
    try:
        return args.fn(args, argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except AltRingsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
