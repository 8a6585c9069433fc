"""Command-line interface: params, encode, corrupt, decode, simulate,
mindist, matrix.

All input and output is JSON with field elements as coefficient arrays
(least significant first, always 2n entries).  Every command is
deterministic given its flags; commands that need randomness require an
explicit --seed.  Exit codes: 0 on success, 1 when a decode reports
failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .channel import MODE_ARBITRARY, MODE_HERMITIAN, ChannelSpec, corrupt, random_rank_error
from .code import build_params, codeword_to_matrix, params_from_json_obj, params_to_json_obj
from .codec import (
    decode,
    decode_result_to_json_obj,
    encode,
    message_from_json_obj,
    message_to_json_obj,
    random_message,
    word_from_json_obj,
    word_to_json_obj,
)
from .exceptions import HermrankError
from .oracle import DEFAULT_ENUM_LIMIT, brute_min_distance, enumerate_code
from .rng import SplitMix64, substream_seed


def _emit(obj: dict, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_params(path: str):
    return params_from_json_obj(_read_json(path))


def cmd_params(args) -> int:
    params = build_params(args.q, args.n, args.d)
    _emit(params_to_json_obj(params), args.out)
    return 0


def cmd_encode(args) -> int:
    params = _load_params(args.params)
    msg = message_from_json_obj(params, _read_json(args.message))
    word = encode(params, msg)
    _emit(word_to_json_obj(params, word), args.out)
    return 0


def cmd_corrupt(args) -> int:
    params = _load_params(args.params)
    word = word_from_json_obj(params, _read_json(args.infile))
    err = random_rank_error(params, ChannelSpec(t=args.rank, mode=args.mode, seed=args.seed))
    _emit(word_to_json_obj(params, corrupt(params.ctx, word, err)), args.out)
    if args.error_out:
        _emit(word_to_json_obj(params, err), args.error_out)
    return 0


def cmd_decode(args) -> int:
    params = _load_params(args.params)
    word = word_from_json_obj(params, _read_json(args.infile))
    result = decode(params, word)
    _emit(decode_result_to_json_obj(params, result), args.out)
    return 0 if result.ok else 1


def _parse_ranks(text: str) -> list:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token:
            lo, hi = token.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(token))
    seen = set()
    ranks = [t for t in out if not (t in seen or seen.add(t))]
    if not ranks or any(t < 0 for t in ranks):
        raise ValueError(f"bad rank list {text!r}")
    return ranks


def _sim_chunk(q, n, d, mode, master_seed, t, start, stop, want_timing):
    """One shard of simulate trials; trial i is fully determined by
    (master_seed, t, i) so sharding cannot change any outcome."""
    params = build_params(q, n, d)
    counts = {
        "trials": 0,
        "successes": 0,
        "failures": 0,
        "mismatches": 0,
        "inconsistent_events": 0,
    }
    lats = []
    for i in range(start, stop):
        rng = SplitMix64(substream_seed(master_seed, (t << 32) + i))
        msg = random_message(params, rng)
        err = random_rank_error(params, ChannelSpec(t=t, mode=mode, seed=rng.next_u64()))
        word = corrupt(params.ctx, encode(params, msg), err)
        t0 = time.perf_counter()
        result = decode(params, word)
        elapsed = time.perf_counter() - t0
        if want_timing:
            lats.append(elapsed * 1000.0)
        counts["trials"] += 1
        if result.ok:
            if result.message == msg:
                counts["successes"] += 1
            else:
                counts["mismatches"] += 1
        else:
            counts["failures"] += 1
        if result.diagnostics.get("bm_gaussian_agree") is False:
            counts["inconsistent_events"] += 1
    return counts, lats


def _p95(lats: list) -> float:
    ordered = sorted(lats)
    idx = max(0, (len(ordered) * 95 + 99) // 100 - 1)
    return ordered[idx]


def cmd_simulate(args) -> int:
    ranks = _parse_ranks(args.ranks)
    params = build_params(args.q, args.n, args.d)
    if any(t > params.n for t in ranks):
        raise ValueError(f"ranks must not exceed n = {params.n}")
    wall0 = time.perf_counter()
    results = []
    for t in ranks:
        shards = []
        if args.threads > 1 and args.trials > 0:
            bounds = [args.trials * j // args.threads for j in range(args.threads + 1)]
            jobs = [
                (args.q, args.n, args.d, args.mode, args.seed, t, lo, hi, args.with_timing)
                for lo, hi in zip(bounds, bounds[1:])
                if lo < hi
            ]
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                shards = list(pool.map(_sim_chunk, *zip(*jobs)))
        else:
            shards = [
                _sim_chunk(args.q, args.n, args.d, args.mode, args.seed, t, 0, args.trials, args.with_timing)
            ]
        merged = {"t": t, "trials": 0, "successes": 0, "failures": 0, "mismatches": 0, "inconsistent_events": 0}
        lats = []
        for counts, shard_lats in shards:
            for key in counts:
                merged[key] += counts[key]
            lats.extend(shard_lats)
        if args.with_timing and lats:
            merged["mean_ms"] = round(sum(lats) / len(lats), 3)
            merged["p95_ms"] = round(_p95(lats), 3)
        results.append(merged)
    wall = time.perf_counter() - wall0
    report = {
        "mode": args.mode,
        "params": {"d": args.d, "n": args.n, "q": args.q},
        "ranks": ranks,
        "results": results,
        "seed": args.seed,
        "trials_per_rank": args.trials,
    }
    total = sum(r["trials"] for r in results)
    print(f"simulate: {total} trials in {wall:.2f}s", file=sys.stderr)
    _emit(report, args.out)
    return 0


def cmd_mindist(args) -> int:
    params = build_params(args.q, args.n, args.d)
    t0 = time.perf_counter()
    table = enumerate_code(params, args.limit)
    dist = brute_min_distance(params, args.limit)
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000.0))
    _emit(
        {
            "code_size": len(table.words),
            "d": args.d,
            "elapsed_ms": elapsed_ms,
            "min_distance": dist,
            "n": args.n,
            "q": args.q,
        },
        args.out,
    )
    return 0


def _fq2_str(ctx, a) -> str:
    s, t = ctx.fq2_coords(a)
    if t == 0:
        return str(s)
    wpart = "w" if t == 1 else f"{t}w"
    return wpart if s == 0 else f"{s}+{wpart}"


def cmd_matrix(args) -> int:
    params = _load_params(args.params)
    word = word_from_json_obj(params, _read_json(args.infile))
    mat = codeword_to_matrix(params, word)
    hermitian = mat.is_hermitian(params.ctx)
    cells = [[_fq2_str(params.ctx, v) for v in row] for row in mat.rows]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print("  ".join(c.rjust(width) for c in row))
    print(f"hermitian: {'true' if hermitian else 'false'}")
    if args.out:
        ctx = params.ctx
        _emit(
            {
                "entries": [[ctx.felt_to_json(v) for v in row] for row in mat.rows],
                "hermitian": hermitian,
            },
            args.out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermrank",
        description="Hermitian rank-metric codes: encode, decode, simulate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="build and serialize code parameters")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="encode a message file to a codeword")
    p.add_argument("--params", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add a seeded rank-t error to a word")
    p.add_argument("--params", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=[MODE_ARBITRARY, MODE_HERMITIAN], default=MODE_ARBITRARY)
    p.add_argument("--error-out")
    p.add_argument("--out")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("--params", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo decode trials")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--ranks", required=True, help="error ranks, e.g. '0,1' or '0-3'")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=[MODE_ARBITRARY, MODE_HERMITIAN], default=MODE_ARBITRARY)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--with-timing",
        action="store_true",
        help="include latency statistics in the report (breaks byte-identical reruns)",
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("mindist", help="exhaustive minimum distance scan")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("matrix", help="print the matrix form of a word")
    p.add_argument("--params", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HermrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # console-script hook
    sys.exit(main())
