"""Command-line driver: run stream files or generate instances.

Reports are line-oriented ``key=value`` text on stdout.  Exit codes:
0 ok, 2 parse error, 3 invalid stream, 4 promise violation.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from ..core import Config, Edge, InvalidStream, ShadowGraph, covers
from ..dpsa import DpsaState, dpsa_query, dpsa_update
from ..fvs import FvsState, fvs_insert, fvs_query, _is_forest
from ..pdpsa import MatchingState, SketchFail, pdpsa_query
from ..psa import PsaState, psa_insert, psa_query
from .generators import (edges_to_stream, gen_disjointness_gadget,
                         gen_index_gadget, gen_promised_stream,
                         gen_random_stream)
from .streams import (MODES, QUERY, ParseError, StreamFile, emit_stream,
                      parse_stream)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_PROMISE = 4


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vcstream",
        description="streaming vertex cover / feedback vertex set driver")
    p.add_argument("--mode", choices=MODES,
                   help="override the mode in the stream header")
    p.add_argument("--k", type=int, help="override the header budget k")
    p.add_argument("--n", type=int, help="vertex count (generators)")
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--validate", action="store_true",
                   help="reject semantically invalid streams while parsing")
    p.add_argument("--input", metavar="FILE",
                   help="stream file to run ('-' for stdin)")
    p.add_argument("--gen", choices=("random", "promised", "index",
                                     "disjointness"),
                   help="emit a generated stream instead of running one")
    p.add_argument("--length", type=int, default=100,
                   help="update count for random/promised generators")
    p.add_argument("--churn", type=float, default=0.3,
                   help="delete fraction for random/promised generators")
    p.add_argument("--gadget-k", type=int, default=2,
                   help="matrix side for the index gadget")
    p.add_argument("--probe-i", type=int, default=1)
    p.add_argument("--probe-j", type=int, default=1)
    p.add_argument("--x-bits", default="0",
                   help="bit string for the disjointness gadget, e.g. 0110")
    p.add_argument("--y-bits", default="0")
    return p


# -- generation -------------------------------------------------------------


def _generate(args) -> str:
    rng = random.Random(args.seed)
    if args.gen == "random":
        n = args.n or 20
        k = args.k if args.k is not None else 3
        events = gen_random_stream(n, args.length, args.churn, rng)
        return emit_stream(StreamFile(n, k, args.mode or "dpsa",
                                      events + [QUERY]))
    if args.gen == "promised":
        n = args.n or 20
        k = args.k if args.k is not None else 3
        cfg = Config(n=n, k=k, delta=args.delta, c=args.c,
                     alpha=args.alpha, seed=args.seed)
        events = gen_promised_stream(cfg, args.length, args.churn, rng,
                                     verify=True)
        return emit_stream(StreamFile(n, k, args.mode or "pdpsa",
                                      events + [QUERY]))
    if args.gen == "index":
        gk = args.gadget_k
        x = [[rng.randint(0, 1) for _ in range(gk)] for _ in range(gk)]
        edges = gen_index_gadget(x, args.probe_i, args.probe_j)
        k = args.k if args.k is not None else 2 * gk - 1
        return emit_stream(StreamFile(6 * gk, k, args.mode or "psa",
                                      edges_to_stream(edges) + [QUERY]))
    xb = [int(ch) for ch in args.x_bits]
    yb = [int(ch) for ch in args.y_bits]
    edges = gen_disjointness_gadget(xb, yb)
    k = args.k if args.k is not None else 0
    return emit_stream(StreamFile(8 * len(xb), k, args.mode or "fvs",
                                  edges_to_stream(edges) + [QUERY]))


# -- execution --------------------------------------------------------------


def _verify(mode: str, cover, shadow: ShadowGraph) -> bool:
    if mode == "fvs":
        return _is_forest(shadow.edges(), set(cover))
    return covers(cover, shadow.edges())


def _run(sf: StreamFile, args, out) -> int:
    mode = args.mode or sf.mode
    k = args.k if args.k is not None else sf.k
    cfg = Config(n=sf.n, k=k, delta=args.delta, c=args.c,
                 alpha=args.alpha, seed=args.seed)
    print(f"mode={mode}", file=out)
    print(f"n={sf.n}", file=out)
    print(f"k={k}", file=out)
    print(f"seed={args.seed}", file=out)

    shadow = ShadowGraph(sf.n)
    psa = PsaState(k=k)
    pdpsa = MatchingState(cfg) if mode == "pdpsa" else None
    dpsa = DpsaState(cfg) if mode == "dpsa" else None
    fvs = FvsState()
    started = time.perf_counter()
    n_queries = 0

    for ev in sf.events:
        if ev == QUERY:
            n_queries += 1
            print(f"query={n_queries}", file=out)
            if mode == "psa":
                ans = psa_query(psa, k)
            elif mode == "pdpsa":
                ans = pdpsa_query(pdpsa, k)
            elif mode == "dpsa":
                gated = dpsa.live > cfg.n * k
                ans = dpsa_query(dpsa, k)
                print(f"recovery_skipped={str(gated).lower()}", file=out)
            else:
                ans = fvs_query(fvs, k)
            print(f"answer={ans.kind}", file=out)
            if ans.kind == "promise-violation":
                print(f"violated_at={pdpsa.promise.violated_at}", file=out)
                return EXIT_PROMISE
            if ans.is_yes:
                cover = sorted(ans.cover)
                print("cover=" + ",".join(map(str, cover)), file=out)
                ok = _verify(mode, cover, shadow)
                print(f"verified={str(ok).lower()}", file=out)
                if not ok:
                    return EXIT_INVALID
            continue

        try:
            shadow.apply(ev)
        except InvalidStream as exc:
            print(f"error={exc}", file=out)
            return EXIT_INVALID
        if mode == "psa":
            if ev.op != "+":
                print("error=deletion in insertion-only mode", file=out)
                return EXIT_INVALID
            psa_insert(psa, ev.edge)
        elif mode == "pdpsa":
            try:
                pdpsa.apply(ev)
            except SketchFail as exc:
                print(f"error={exc}", file=out)
                return EXIT_INVALID
        elif mode == "dpsa":
            dpsa_update(dpsa, ev)
        else:
            if ev.op != "+":
                print("error=deletion in insertion-only mode", file=out)
                return EXIT_INVALID
            fvs_insert(fvs, ev.edge, sf.n, k)

    if mode == "psa":
        words = psa.words()
    elif mode == "pdpsa":
        words = pdpsa.words()
    elif mode == "dpsa":
        words = dpsa.sketch.words() + 2
    else:
        words = 2 * len(fvs.stored) + 1
    print(f"words_stored={words}", file=out)
    if mode == "pdpsa":
        print(f"sketch_fails={pdpsa.sketch_fail_count}", file=out)
        print(f"rematch_misses={pdpsa.rematch_miss_count}", file=out)
        print(f"rematches={pdpsa.rematch_count}", file=out)
    print(f"elapsed_s={time.perf_counter() - started:.3f}", file=out)
    return EXIT_OK


def run_cli(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = _build_parser().parse_args(argv)
    if args.gen:
        try:
            out.write(_generate(args))
        except ValueError as exc:
            print(f"error={exc}", file=sys.stderr)
            return EXIT_PARSE
        return EXIT_OK
    if not args.input:
        print("error=need --input FILE or --gen", file=sys.stderr)
        return EXIT_PARSE
    try:
        text = (sys.stdin.read() if args.input == "-"
                else open(args.input, encoding="utf-8").read())
        sf = parse_stream(text, validate=args.validate)
    except OSError as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidStream as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_INVALID
    return _run(sf, args, out)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
