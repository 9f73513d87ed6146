"""``dimsolve`` command line.

Exit codes: 0 success / DIM / OK, 1 NODIM / FAIL / mismatch, 2 usage or
input errors (including inputs outside the S_{2,2,3}-free class).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .errors import NotInClassError
from .generate import GenerationError, GenSpec, SplitMix64, gen_planted, gen_random_s223free
from .graph import Graph, dim_violations
from .io import FormatError, format_edge_list, format_matching, parse_matching, read_edge_list
from .oracle import OracleLimit, OracleTooLarge, enumerate_all_dims, oracle_solve
from .patterns import find_induced, get_pattern
from .ysolver import solve

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


class CliError(Exception):
    pass


def _load(path: str) -> Graph:
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from None
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _verdict(m) -> str:
    if m is None:
        return "NODIM"
    return ("DIM " + format_matching(m)).rstrip()


def cmd_solve(args) -> int:
    g = _load(args.file)
    anchor = None
    if args.xy is not None:
        u, v = args.xy
        if not (1 <= u <= g.n and 1 <= v <= g.n) or not g.has_edge(u - 1, v - 1):
            raise CliError(f"--xy {u} {v} is not an edge of the input")
        anchor = (u - 1, v - 1)
    try:
        res = solve(g, allow_out_of_class=args.allow_out_of_class, anchor=anchor)
    except NotInClassError as exc:
        raise CliError(f"{exc}; rerun with --allow-out-of-class to use the exact fallback") from None
    if args.trace:
        for kind, vs in res.trace:
            print(" ".join(["STEP", kind, *(str(v + 1) for v in vs)]))
    print(_verdict(res.matching))
    return EXIT_OK if res.has_dim else EXIT_NO


def cmd_verify(args) -> int:
    g = _load(args.file)
    try:
        m = parse_matching(args.matching)
        bad = dim_violations(g, m)
    except (FormatError, ValueError) as exc:
        raise CliError(f"--matching: {exc}") from None
    if bad:
        u, v = bad[0]
        print(f"FAIL {u + 1}-{v + 1}")
        return EXIT_NO
    print("OK")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args.file)
    try:
        if args.all:
            dims = enumerate_all_dims(g)
            for m in dims:
                print(_verdict(m))
            if not dims:
                print("NODIM")
            return EXIT_OK if dims else EXIT_NO
        m = oracle_solve(g)
    except OracleTooLarge as exc:
        raise CliError(str(exc)) from None
    print(_verdict(m))
    return EXIT_OK if m is not None else EXIT_NO


def cmd_detect(args) -> int:
    g = _load(args.file)
    try:
        p = get_pattern(args.pattern)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    emb = find_induced(g, p)
    if emb is None:
        print("NONE")
        return EXIT_NO
    print(" ".join(f"{r}={emb[r] + 1}" for r in p.roles))
    return EXIT_OK


def cmd_gen(args) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise CliError("--p must lie in [0, 1]")
    try:
        if args.mode == "random":
            if args.n is None:
                raise CliError("--n is required for --mode random")
            g = gen_random_s223free(GenSpec(args.n, args.p, args.seed))
            comments = [f"random n={args.n} p={args.p} seed={args.seed}"]
        else:
            k = args.k if args.k is not None else max(1, (args.n or 10) // 10)
            white = args.white if args.white is not None else max(0, (args.n or 2 * k) - 2 * k)
            g, planted = gen_planted(GenSpec(2 * k + white, args.p, args.seed, "planted", k, white))
            comments = [
                f"planted k={k} white={white} p={args.p} seed={args.seed}",
                f"planted {format_matching(planted)}",
            ]
    except (GenerationError, ValueError) as exc:
        raise CliError(str(exc)) from None
    sys.stdout.write(format_edge_list(g, comments))
    return EXIT_OK


def fuzz_specs(count: int, max_n: int, seed: int) -> list[GenSpec]:
    """The instance list of a fuzz run; a pure function of its arguments."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = 1 + rng.below(max_n)
        p = 0.1 + 0.5 * rng.random()
        out.append(GenSpec(n, round(p, 4), rng.next_u64()))
    return out


def fuzz_one(spec: GenSpec) -> Optional[str]:
    """None when solve agrees with the oracle, else the instance as a file."""
    g = gen_random_s223free(spec)
    res = solve(g)
    truth = oracle_solve(g, lim=OracleLimit(max_n=max(20, g.n)))
    ok = res.has_dim == (truth is not None)
    if ok and res.has_dim:
        ok = not dim_violations(g, res.matching)
    if ok:
        return None
    return format_edge_list(g, [f"mismatch n={spec.n} p={spec.p} seed={spec.seed}",
                                f"solve {_verdict(res.matching)}", f"oracle {_verdict(truth)}"])


def _threads() -> int:
    raw = os.environ.get("DIMSOLVE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliError(f"DIMSOLVE_THREADS={raw!r} is not an integer") from None


def cmd_fuzz(args) -> int:
    if args.count < 0 or not 1 <= args.max_n <= 20:
        raise CliError("--count must be nonnegative and --max-n within 1..20")
    specs = fuzz_specs(args.count, args.max_n, args.seed)
    threads = _threads()
    if threads > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = ex.map(fuzz_one, specs, chunksize=16)
            first = next((r for r in results if r is not None), None)
    else:
        first = next((r for r in map(fuzz_one, specs) if r is not None), None)
    if first is not None:
        sys.stdout.write(first)
        return EXIT_NO
    print(f"PASS {args.count}/{args.count}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dimsolve", description="Dominating induced matchings in S_{2,2,3}-free graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a d.i.m. or report NODIM")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="print each reduction step before the verdict")
    p.add_argument("--xy", nargs=2, type=int, metavar=("U", "V"), help="try only this anchor edge")
    p.add_argument("--allow-out-of-class", action="store_true",
                   help="solve inputs containing an induced S_{2,2,3} with the exact fallback")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate matching")
    p.add_argument("file")
    p.add_argument("--matching", required=True, help='edges as "u1-v1,u2-v2,..."')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force answer (n <= 20)")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="list every d.i.m.")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("detect", help="find an induced copy of a named pattern")
    p.add_argument("file")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("gen", help="emit a seeded instance")
    p.add_argument("--mode", choices=("random", "planted"), default="random")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, help="planted edges (default n/10)")
    p.add_argument("--white", type=int, help="white vertices (default n - 2k)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="cross-check solve against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"dimsolve: error: {exc}", file=sys.stderr)
        return EXIT_ERR


if __name__ == "__main__":
    sys.exit(main())
