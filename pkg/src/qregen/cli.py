"""Command-line harness: encode, retrieve, repair, sweep, tradeoff, demo.

Every command reads flags, runs deterministically from --seed, and emits
line-buffered JSON or CSV; identical flags and seed produce byte-identical
output. Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import errors, tradeoff
from .pmcode import (
    NodeStorage,
    SystemParams,
    encode_file,
    make_params,
    random_symbols,
    retrieve_file,
)
from .reference import replay
from .repair import run_repair, run_repair_extended, plan_subfiles
from .rng import SplitMix64

USAGE_ERRORS = (
    errors.InvalidParams,
    errors.NoValidPoints,
    errors.WrongLength,
    errors.BadShareSet,
    errors.InvalidHelperSet,
    errors.ZeroU,
    errors.NotAHelper,
    errors.ModeUnavailable,
    errors.RepeatedPoint,
    errors.TooLarge,
    errors.InvalidRegime,
    errors.RegimeViolation,
    errors.Indivisible,
)


def _write_out(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _params_from_args(args) -> SystemParams:
    for name in ("n", "k", "d", "prime"):
        if getattr(args, name, None) is None:
            raise errors.InvalidParams(f"--{name} is required for this command")
    return make_params(args.n, args.k, args.d, args.prime)


def _params_json(params: SystemParams) -> dict:
    return {
        "n": params.n,
        "k": params.k,
        "d": params.d,
        "p": params.p,
        "evalPoints": list(params.eval_points),
    }


def _storage_to_json(params: SystemParams, storage) -> dict:
    return {
        "params": _params_json(params),
        "subfiles": [
            [
                {"nodeId": s.node_id, "rowM": list(s.row_m), "rowMp": list(s.row_mp)}
                for s in sub
            ]
            for sub in storage
        ],
    }


def _storage_from_json(doc: dict) -> tuple[SystemParams, tuple]:
    meta = doc["params"]
    params = make_params(
        meta["n"], meta["k"], meta["d"], meta["p"], meta.get("evalPoints")
    )
    storage = tuple(
        tuple(
            NodeStorage(s["nodeId"], tuple(s["rowM"]), tuple(s["rowMp"]))
            for s in sub
        )
        for sub in doc["subfiles"]
    )
    if len(storage) != params.subfiles or any(
        len(sub) != params.n for sub in storage
    ):
        raise errors.BadShareSet("storage file does not match its own parameters")
    for sub in storage:
        if any(s.node_id != i + 1 for i, s in enumerate(sub)):
            raise errors.BadShareSet("storage nodes must appear in id order")
    return params, storage


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise errors.InvalidParams(f"cannot read {path}: {exc}") from None


def cmd_demo_example1(args) -> int:
    report = replay(seed=args.seed)
    matched = sum(1 for r in report if r["pass"])
    if args.format == "json":
        doc = {"golden": report, "matched": matched, "total": len(report)}
        _write_out(_json_text(doc), args.out)
    else:
        lines = []
        for r in report:
            if r["pass"]:
                lines.append(f"PASS {r['name']}")
            else:
                lines.append(
                    f"FAIL {r['name']} expected={r['expected']} got={r['got']}"
                )
        lines.append(f"{matched}/{len(report)} golden values match")
        _write_out("\n".join(lines) + "\n", args.out)
    return 0 if matched == len(report) else 1


def cmd_encode(args) -> int:
    params = _params_from_args(args)
    symbols = _load_json(args.in_path)
    if not isinstance(symbols, list) or not all(isinstance(x, int) for x in symbols):
        raise errors.WrongLength("--in must be a JSON array of integers")
    storage = encode_file(params, [x % params.p for x in symbols])
    _write_out(_json_text(_storage_to_json(params, storage)), args.out)
    return 0


def cmd_retrieve(args) -> int:
    params, storage = _storage_from_json(_load_json(args.in_path))
    if args.nodes:
        ids = _parse_ids(args.nodes)
        if any(not 1 <= i <= params.n for i in ids):
            raise errors.BadShareSet(f"node ids must lie in [1, {params.n}]")
    else:
        ids = list(range(1, params.k + 1))
    shares = [[sub[i - 1] for i in ids] for sub in storage]
    symbols = retrieve_file(params, shares)
    _write_out(_json_text(list(symbols)), args.out)
    return 0


def cmd_repair(args) -> int:
    if args.in_path:
        params, storage = _storage_from_json(_load_json(args.in_path))
    else:
        params = _params_from_args(args)
        rng = SplitMix64(args.seed)
        storage = encode_file(params, random_symbols(params, rng))
    helpers = _parse_ids(args.helpers)
    transcript = run_repair_extended(
        params, storage, args.failed, helpers, mode=args.mode
    )
    _write_out(_json_text(transcript.to_json_dict()), args.out)
    return 0


def cmd_sweep(args) -> int:
    params = _params_from_args(args)
    rng = SplitMix64(args.seed)
    base = params.subfiles == 1
    node_ids = range(1, params.n + 1)
    m = 2 * params.k - 2

    repair_trials = 0
    retrieval_trials = 0
    failures = 0
    qudit_seen: set[int] = set()
    repair_cases = 0
    for trial in range(args.trials):
        symbols = random_symbols(params, rng)
        storage = encode_file(params, symbols)
        for failed in node_ids:
            rest = [i for i in node_ids if i != failed]
            for helpers in combinations(rest, params.d):
                if trial == 0:
                    repair_cases += 1
                repair_trials += 1
                try:
                    if base:
                        u = [rng.unit(params.p) for _ in range(m)]
                        transcript = run_repair(
                            params, storage[0], failed, helpers, u, args.mode
                        )
                    else:
                        transcript = run_repair_extended(
                            params, storage, failed, helpers, mode=args.mode
                        )
                    qudit_seen.add(transcript.qudit_total)
                except errors.QregenError:
                    failures += 1
        for subset in combinations(node_ids, params.k):
            retrieval_trials += 1
            recovered = retrieve_file(
                params, [[sub[i - 1] for i in subset] for sub in storage]
            )
            if list(recovered) != [x % params.p for x in symbols]:
                failures += 1

    summary = {
        "params": _params_json(params),
        "seed": args.seed,
        "mode": args.mode,
        "trials": args.trials,
        "repairCases": repair_cases,
        "repairTrials": repair_trials,
        "retrievalSubsets": retrieval_trials // max(args.trials, 1),
        "retrievalTrials": retrieval_trials,
        "failures": failures,
        "quditTotal": {
            "min": min(qudit_seen) if qudit_seen else None,
            "max": max(qudit_seen) if qudit_seen else None,
            "expected": params.B // params.k,
        },
        "perHelperQudits": plan_subfiles(params).per_helper_qudits,
    }
    _write_out(_json_text(summary), args.out)
    return 0 if failures == 0 else 1


def _parse_betas(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [Fraction(part) for part in text.split(",")]


def cmd_tradeoff(args) -> int:
    k, d, b = args.k, args.d, args.B
    if k is None or d is None or b is None:
        raise errors.InvalidParams("--k, --d and --B are required for tradeoff")
    if args.betas is not None:
        betas = _parse_betas(args.betas)
    else:
        base = Fraction(b, k * d)
        betas = [base * t for t in (1, 2, 3, 4)]
    rows = tradeoff.tradeoff_table(k, d, b, betas)
    _write_out(tradeoff.table_csv(rows), args.out)
    if d >= 2 * k - 2:
        try:
            point = tradeoff.optimal_point(k, d, b)
            classical = tradeoff.classical_msr_bandwidth(k, d, b)
            print(
                f"optimal alpha={point.alpha} d_beta_q={point.beta * d} "
                f"classical_msr_bandwidth={classical}"
            )
        except errors.Indivisible as exc:
            print(f"warning: {exc}")
    else:
        print(f"warning: no simultaneous optimum, d={d} < 2k-2={2 * k - 2}")
    return 0


def cmd_selftest(args) -> int:
    checks: list[tuple[str, bool]] = []

    report = replay(seed=args.seed)
    checks.append(("golden-replay", all(r["pass"] for r in report)))

    from .css import build_repair_css, check_dual_containment

    params = make_params(6, 3, 4, 13)
    rng = SplitMix64(args.seed)
    ok = True
    for failed in range(1, 7):
        rest = [i for i in range(1, 7) if i != failed]
        for helpers in combinations(rest, 4):
            u = [rng.unit(13) for _ in range(4)]
            c = build_repair_css(params, failed, helpers, u)
            ok = ok and check_dual_containment(c.hx, c.hz)
    checks.append(("dual-containment", ok))

    symbols = random_symbols(params, rng)
    storage = encode_file(params, symbols)
    ok = True
    for failed in range(1, 7):
        rest = [i for i in range(1, 7) if i != failed]
        for helpers in combinations(rest, 4):
            for mode in ("linear", "symplectic"):
                t = run_repair(params, storage[0], failed, helpers, None, mode)
                ok = ok and t.qudit_total == 4
    t_sv = run_repair(params, storage[0], 1, (2, 4, 5, 6), None, "statevector")
    ok = ok and t_sv.qudit_total == 4
    checks.append(("exact-repair", ok))

    ok = True
    for subset in combinations(range(1, 7), 3):
        rec = retrieve_file(params, [[storage[0][i - 1] for i in subset]])
        ok = ok and list(rec) == [x % 13 for x in symbols]
    checks.append(("retrieval", ok))

    ext = make_params(6, 2, 3, 13)
    symbols = random_symbols(ext, rng)
    ext_storage = encode_file(ext, symbols)
    ok = True
    for failed in range(1, 7):
        rest = [i for i in range(1, 7) if i != failed]
        for helpers in combinations(rest, 3):
            t = run_repair_extended(ext, ext_storage, failed, helpers)
            ok = ok and t.qudit_total == ext.B // ext.k
    checks.append(("extension-repair", ok))

    point = tradeoff.optimal_point(3, 4, 12)
    checks.append(
        ("tradeoff-optimum", point.alpha == 4 and point.beta * point.d == 4)
    )

    failures = 0
    lines = []
    for name, passed in checks:
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}")
        failures += 0 if passed else 1
    lines.append(f"{len(checks) - failures}/{len(checks)} selftest checks pass")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 1


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise errors.InvalidParams(f"expected comma-separated ids, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qregen",
        description=(
            "Simulator for entanglement-assisted exact-repair regenerating codes"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, need_mode=True, formats=("json", "csv")):
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--prime", type=int)
        sp.add_argument("--seed", type=int, default=1)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=formats, default=formats[0])
        if need_mode:
            sp.add_argument(
                "--mode",
                choices=("linear", "symplectic", "statevector"),
                default="linear",
            )

    sp = sub.add_parser("demo-example1", help="replay the six-node reference values")
    add_common(sp, need_mode=False, formats=("text", "json"))
    sp.set_defaults(func=cmd_demo_example1)

    sp = sub.add_parser("encode", help="encode a message file across n nodes")
    add_common(sp, need_mode=False)
    sp.add_argument("--in", dest="in_path", required=True)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("retrieve", help="rebuild the message from k nodes")
    add_common(sp, need_mode=False)
    sp.add_argument("--in", dest="in_path", required=True)
    sp.add_argument("--nodes", default=None, help="comma-separated node ids")
    sp.set_defaults(func=cmd_retrieve)

    sp = sub.add_parser("repair", help="regenerate a failed node from d helpers")
    add_common(sp)
    sp.add_argument("--in", dest="in_path", default=None)
    sp.add_argument("--failed", type=int, required=True)
    sp.add_argument("--helpers", required=True, help="comma-separated helper ids")
    sp.set_defaults(func=cmd_repair)

    sp = sub.add_parser("sweep", help="exhaustive repair and retrieval trials")
    add_common(sp)
    sp.add_argument("--trials", type=int, default=20)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("tradeoff", help="tabulate the storage-bandwidth bounds")
    add_common(sp, need_mode=False)
    sp.add_argument("--B", type=int)
    sp.add_argument("--betas", default=None, help="comma-separated rationals")
    sp.set_defaults(func=cmd_tradeoff)

    sp = sub.add_parser("selftest", help="quick verification battery")
    add_common(sp, need_mode=False)
    sp.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except errors.QregenError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
