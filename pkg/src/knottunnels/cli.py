"""Command-line front end.

    knottunnels gst 0011100011100 --verbose
    knottunnels bridge-lb 0011100011100 --c2 2 --c3 2
    knottunnels torus-slopes 181 -48
    knottunnels torus-table 41 --from 2 --to 40 --field depth

``--json`` switches any command to one JSON record per line.
Exit status is 0 on success and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import bounds, corridor, giantsteps, torus
from .verify import verify

EXIT_INVALID = 2


class _Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, command: str, inp: dict, result, human: list[str], trace: dict | None = None):
        if self.as_json:
            rec = {"command": command, "input": inp, "result": result}
            if trace is not None:
                rec["trace"] = trace
            print(json.dumps(rec), file=self.stream)
        else:
            for line in human:
                print(line, file=self.stream)


def _fmt_list(xs) -> str:
    return ", ".join(str(x) for x in xs)


def cmd_gst(args, out: _Output):
    s = corridor.parse_sstring(args.sstring)
    res = giantsteps.count_minimal_fast(s)
    dec = res.decomposition
    trace = None
    human = []
    if args.verbose:
        if dec is None:
            trace = {"configs": [], "matrices": [], "product": res.product.rows(), "final_block": None}
            human.append("The tunnel has depth at most 1.")
        else:
            inter = dec.intermediate_configs
            final = "leftover 1" if dec.leftover else str(dec.final_config)
            trace = {
                "blocks": list(dec.blocks),
                "configs": [str(c) for c in inter],
                "matrices": [c.matrix.rows() for c in inter],
                "product": res.product.rows(),
                "final_block": final,
                "final_vector": list(dec.final_vector),
            }
            human.append(f"The intermediate configurations are {_fmt_list(inter)}.")
            human.append("The transformation matrices are:")
            human.extend(f"    {c.matrix}" for c in inter)
            human.append(f"and their product is {res.product}.")
            if dec.leftover:
                human.append("The string ends in a leftover 1.")
            else:
                human.append(f"The final block has configuration {final}.")
    human.append(f"This tunnel has {res.count} minimal giant step constructions.")
    out.emit("gst", {"sstring": s.bits}, res.count, human, trace)


def cmd_depth(args, out: _Output):
    s = corridor.parse_sstring(args.sstring)
    prof = corridor.depth_profile(corridor.build_corridor(s))
    trace = None
    human = [str(prof.depth[-1])]
    if args.verbose:
        trace = {"depths": list(prof.depth), "counts": list(prof.counts)}
        human.append(f"depths: {_fmt_list(prof.depth)}")
        human.append(f"shortest paths: {_fmt_list(prof.counts)}")
    out.emit("depth", {"sstring": s.bits}, prof.depth[-1], human, trace)


def _iteration(command, s, it, out, verbose, extra_inp):
    if command == "bridge-lb":
        human = [f"The bridge number of K-tau is at least {it.final} "
                 f"(given c2={it.seeds[0]}, c3={it.seeds[1]})."]
    else:
        human = [f"The bridge number of K-tau is at most {it.final}."]
    trace = None
    if verbose:
        trace = {"m": it.m, "sequence": list(it.sequence)}
        human.append("The iteration sequence is:")
        human.append(f"    {_fmt_list(it.sequence)}")
    out.emit(command, {"sstring": s.bits, **extra_inp}, it.final, human, trace)


def cmd_bridge_lb(args, out: _Output):
    s = corridor.parse_sstring(args.sstring)
    it = bounds.additive_iteration(s, args.c2, args.c3)
    _iteration("bridge-lb", s, it, out, args.verbose, {"c2": args.c2, "c3": args.c3})


def cmd_bridge_ub(args, out: _Output):
    s = corridor.parse_sstring(args.sstring)
    m = corridor.first_regular_index(s)
    it = bounds.additive_iteration(s, m, m + 1)
    _iteration("bridge-ub", s, it, out, args.verbose, {})


def _scalar(name, fn, *keys):
    def run(args, out: _Output):
        vals = [getattr(args, k) for k in keys]
        result = fn(*vals)
        out.emit(name, dict(zip(keys, vals)), result, [str(result)])
    return run


def _torus_record(field: str, p: int, q: int):
    nt = torus.normalize(p, q)
    if field == "depth":
        return torus.torus_depth(nt)
    if field == "class":
        return str(torus.torus_classify(p, q))
    if field == "bridge":
        return torus.torus_bridge_number(nt)
    if nt.is_trivial:
        return "" if field == "sstring" else []
    if field == "sstring":
        return torus.s_string(nt).bits
    if field == "slopes":
        return torus.cabling_trace(nt).slopes
    raise ValueError(field)


def _trace_dict(tr: torus.CablingTrace) -> dict:
    return {
        "cf": list(tr.cf),
        "letters": tr.letters,
        "m0": [tr.m0.numerator, tr.m0.denominator],
        "steps": [{"letter": st.letter, "matrix": st.matrix.rows(), "slope": st.slope,
                   "stage_knot": list(st.stage_knot)} for st in tr.steps],
        "sstring": tr.s_string.bits,
    }


def cmd_torus_slopes(args, out: _Output):
    tr = torus.cabling_trace(torus.normalize(args.p, args.q))
    human = [tr.slope_line()]
    trace = None
    if args.verbose:
        trace = _trace_dict(tr)
        human.append(f"continued fraction: [{', '.join(map(str, tr.cf))}]")
        for st in tr.steps:
            human.append(f"  {st.letter}  {st.matrix}  slope {st.slope}  knot {st.stage_knot}")
    out.emit("torus-slopes", {"p": args.p, "q": args.q},
             {"m0": [tr.m0.numerator, tr.m0.denominator], "slopes": tr.slopes}, human, trace)


def cmd_torus_depth(args, out: _Output):
    d = torus.torus_depth(torus.normalize(args.p, args.q))
    out.emit("torus-depth", {"p": args.p, "q": args.q}, d, [str(d)])


def cmd_torus_sstring(args, out: _Output):
    bits = _torus_record("sstring", args.p, args.q)
    out.emit("torus-sstring", {"p": args.p, "q": args.q}, bits, [bits])


def cmd_torus_classify(args, out: _Output):
    c = str(torus.torus_classify(args.p, args.q))
    out.emit("torus-classify", {"p": args.p, "q": args.q}, c, [c])


def cmd_torus_table(args, out: _Output):
    rows = []
    for n in range(args.from_, args.to + 1):
        if n == 0 or gcd(args.p, n) != 1:
            continue
        rows.append((n, _torus_record(args.field, args.p, n)))
    if out.as_json:
        for n, v in rows:
            out.emit("torus-table", {"p": args.p, "q": n, "field": args.field}, v, [])
    else:
        vals = [v if not isinstance(v, str) else repr(v) for _, v in rows]
        print("[" + ",".join(str(v).replace(" ", "") for v in vals) + "]", file=out.stream)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(f"q\t{args.field}\n")
            for n, v in rows:
                fh.write(f"{n}\t{v if not isinstance(v, list) else ','.join(map(str, v))}\n")


def cmd_verify(args, out: _Output):
    rep = verify(args.max_len, args.max_pq)
    checks = {c.name: {"cases": c.cases, "failures": c.failures, "first_failure": c.first_failure}
              for c in rep.checks.values()}
    human = [rep.summary()]
    for c in rep.checks.values():
        line = f"  {c.name:24s} {c.cases:7d} cases  {c.failures} failures"
        if c.first_failure:
            line += f"  (first: {c.first_failure})"
        human.append(line)
    out.emit("verify", {"max_len": args.max_len, "max_pq": args.max_pq},
             {"ok": rep.ok, "strings": rep.strings, "pairs": rep.pairs, "checks": checks}, human)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    common.add_argument("-v", "--verbose", action="store_true", help="print the full trace")

    parser = argparse.ArgumentParser(prog="knottunnels", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, h in [("gst", cmd_gst, "count minimal giant-step sequences"),
                        ("depth", cmd_depth, "depth of the tunnel with this s-string")]:
        add(name, fn, h).add_argument("sstring", help="s_2 ... s_n as a string of 0s and 1s")

    sp = add("bridge-lb", cmd_bridge_lb, "lower bound for bridge number (conditional on c2, c3)")
    sp.add_argument("sstring")
    sp.add_argument("--c2", type=int, required=True, help="bridge number of the knot at tau_{m-2}")
    sp.add_argument("--c3", type=int, required=True, help="bridge number of the knot at tau_{m-1}")
    add("bridge-ub", cmd_bridge_ub, "upper bound for bridge number").add_argument("sstring")

    add("minbridge", _scalar("minbridge", bounds.min_bridge_at_depth, "d"),
        "minimum bridge number at depth d").add_argument("d", type=int)
    add("torus-minbridge", _scalar("torus-minbridge", bounds.torus_min_bridge_at_depth, "d"),
        "minimum torus-knot bridge number at depth d").add_argument("d", type=int)
    add("maxbridge", _scalar("maxbridge", bounds.max_bridge, "n"),
        "maximum bridge number after n cablings").add_argument("n", type=int)
    sp = add("fib-ub", _scalar("fib-ub", bounds.fibonacci_upper, "n", "m"),
             "m F_{n-m+2} + F_{n-m+1}")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)

    for name, fn, h in [("torus-slopes", cmd_torus_slopes, "slope sequence of the short tunnel"),
                        ("torus-depth", cmd_torus_depth, "depth of the short tunnel"),
                        ("torus-sstring", cmd_torus_sstring, "s-string of the short tunnel"),
                        ("torus-classify", cmd_torus_classify, "class of the short tunnel")]:
        sp = add(name, fn, h)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)

    sp = add("torus-table", cmd_torus_table, "scan (p, q) for a range of q")
    sp.add_argument("p", type=int)
    sp.add_argument("--from", dest="from_", type=int, default=2)
    sp.add_argument("--to", type=int, default=None)
    sp.add_argument("--field", choices=["depth", "sstring", "class", "slopes", "bridge"], default="depth")
    sp.add_argument("-o", "--output", help="also write a tab-separated table here")

    sp = add("verify", cmd_verify, "run the differential self-check")
    sp.add_argument("--max-len", type=int, default=14)
    sp.add_argument("--max-pq", type=int, default=200)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "to", "unset") is None:
        args.to = abs(args.p) - 1
    out = _Output(args.json)
    try:
        status = args.func(args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
