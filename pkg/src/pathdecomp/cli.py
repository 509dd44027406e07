"""Command-line front end.

Exit codes: 0 ok, 1 verification failed (or oracle found nothing), 2 bad
input, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cayley import MatchingError, assemble_gr_graph, random_matching, random_power_matching
from .engine import EngineError, InputCorruption, decompose, format_trace
from .formats import (
    FormatError,
    Instance,
    format_decomposition,
    format_instance,
    parse_decomposition,
    parse_group_spec,
    parse_instance,
)
from .groups import validate_scg
from .powers import PowerCycleInstance, decompose_complete, decompose_power_cycle
from .verify import brute_force_p_l, verify_decomposition

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get("PD_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"PD_SEED={raw!r} is not an integer") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii", newline="\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str) -> Instance:
    try:
        return parse_instance(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_gen(args) -> int:
    G = parse_group_spec(args.group)
    try:
        p = validate_scg(G, G.parse_element(args.g), G.parse_element(args.r))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    seed = default_seed() if args.seed is None else args.seed
    try:
        M = random_matching(G, p, seed)
    except MatchingError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, format_instance(Instance(gg=assemble_gr_graph(G, p, M))))
    return EXIT_OK


def cmd_power(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    try:
        M = random_power_matching(args.n, args.k, seed)
        inst = Instance(power=PowerCycleInstance(args.n, args.k, M))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, format_instance(inst))
    return EXIT_OK


def solve_instance(inst: Instance):
    """``(decomposition, route, trace text)`` for a parsed instance, verified."""
    if inst.power is not None:
        D = decompose_power_cycle(inst.power)
        rep = verify_decomposition(inst.graph, D, D.length, inst.matching)
        if not rep.ok:
            raise EngineError(f"power route produced an invalid decomposition: {rep.failures()}")
        return D, "power", ""
    res = decompose(inst.gg)
    return res.decomposition, res.route, format_trace(res.trace)


def _decompose_one(src: str, out: str | None, trace: str | None) -> tuple[str, str, int]:
    inst = _load_instance(src)
    D, route, tr = solve_instance(inst)
    _write(out, format_decomposition(D, inst.group))
    if trace:
        Path(trace).write_text(tr, encoding="ascii", newline="\n")
    return src, route, tr.count("\n")


def _batch_job(job):
    src, out, trace = job
    try:
        return _decompose_one(src, out, trace), None
    except InputError as exc:
        return None, (EXIT_INPUT, str(exc))
    except (EngineError, AssertionError) as exc:
        return None, (EXIT_INTERNAL, str(exc))


def cmd_decompose(args) -> int:
    status = sys.stdout if args.out not in (None, "-") or args.out_dir else sys.stderr
    if len(args.inputs) == 1 and not args.out_dir:
        src, route, k = _decompose_one(args.inputs[0], args.out, args.trace)
        print(f"route {route} rewrites {k}", file=status)
        return EXIT_OK
    if not args.out_dir:
        raise InputError("several inputs need --out-dir")
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    jobs = []
    for src in args.inputs:
        stem = Path(src).stem
        jobs.append((src, str(outdir / f"{stem}.dec"), str(outdir / f"{stem}.trace") if args.trace_all else None))
    worst = EXIT_OK
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_batch_job, jobs))
    else:
        results = [_batch_job(j) for j in jobs]
    for job, (ok, err) in zip(jobs, results):
        if err:
            print(f"{job[0]} error {err[1]}", file=sys.stderr)
            worst = max(worst, err[0])
        else:
            print(f"{ok[0]} route {ok[1]} rewrites {ok[2]}", file=status)
    return worst


def cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    try:
        D = parse_decomposition(_read(args.decomposition), inst.group)
    except FormatError as exc:
        raise InputError(f"{args.decomposition}: {exc}") from None
    l = args.length if args.length else (2 * inst.power.k + 1 if inst.power else 5)
    rep = verify_decomposition(inst.graph, D, l, inst.matching if args.m_centered else None)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_complete(args) -> int:
    try:
        D = decompose_complete(args.l)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, format_decomposition(D))
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _load_instance(args.instance)
    l = args.length if args.length else (2 * inst.power.k + 1 if inst.power else 5)
    try:
        res = brute_force_p_l(inst.graph, l, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(f"status {res.status} nodes {res.nodes}", file=sys.stderr if args.out in (None, "-") else sys.stdout)
    if res.decomposition is not None:
        _write(args.out, format_decomposition(res.decomposition, inst.group))
        return EXIT_OK
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathdecomp", description="Path decompositions of regular graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a {g,r}-graph instance with a random matching")
    p.add_argument("--group", required=True, help="cyclic:N or product:M1,M2,...")
    p.add_argument("--g", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--seed", type=int, default=None, help="defaults to $PD_SEED or 0")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("power", help="generate a power-of-cycle instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("decompose", help="decompose one or more instances")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out", default=None)
    p.add_argument("--trace", default=None, help="write the rewrite trace here")
    p.add_argument("--out-dir", default=None, help="batch mode output directory")
    p.add_argument("--trace-all", action="store_true", help="batch mode: write a .trace next to each output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition against an instance")
    p.add_argument("instance")
    p.add_argument("decomposition")
    p.add_argument("--m-centered", action="store_true")
    p.add_argument("--length", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complete", help="Hamilton path decomposition of K_{L+1}")
    p.add_argument("l", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("oracle", help="brute-force search for a path decomposition")
    p.add_argument("instance")
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, InputCorruption) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EngineError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
