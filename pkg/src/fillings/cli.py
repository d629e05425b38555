"""Command-line front end.  Exit status: 0 on success, 2 when a result is
Unknown or only bounded because a budget tripped, 1 on usage errors."""

import argparse
import sys

from . import families
from .combing import (cockleshell, cockleshell_bound, fellow_traveler_check, standard_combing)
from .dps import SearchBudget, fl_search, ffl_search, reduced_area_search
from .errors import BallTooSmall, IllegalMove, NotNullHomotopic, OracleIndecisive
from .fillfuncs import Budgets, default_jobs, filling_table, word_measures
from .heisenberg import OutOfRange, compress_sequence, h3_fill
from .presentation import (Presentation, Verdict, cayley_ball, four_point_delta, l_delta_check,
                           make_oracle, preset)
from .words import WordError

OK, USAGE, BUDGET = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text!r}")
    return value


def _group_args(sp):
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--preset", help="catalog presentation: f<m>, z<m>, z3, bs12, h3, bridson, bg, ffl")
    g.add_argument("--file", help="presentation file (gens:/rel: lines)")
    sp.add_argument("--oracle", default="auto",
                    help="word-problem oracle: auto, free, expsum, heisenberg, bs12, dehn, search")


def _budget_args(sp):
    sp.add_argument("--max-len", type=_positive, default=12, help="longest intermediate word")
    sp.add_argument("--max-states", type=_positive, default=200_000)
    sp.add_argument("--max-cost", type=_positive, default=32)


def _load(args):
    if args.file:
        p = Presentation.load(args.file)
    elif args.preset:
        try:
            p = preset(args.preset)
        except KeyError as e:
            raise UsageError(e.args[0]) from None
    else:
        raise UsageError("give --preset NAME or --file PATH")
    try:
        oracle = make_oracle(p, args.oracle)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return p, oracle


def _word(args, p):
    try:
        return p.parse(args.word)
    except (WordError, ValueError) as e:
        raise UsageError(str(e)) from None


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_null(w, oracle):
    try:
        if not oracle.decide(w):
            raise UsageError(f"{w!r} is not null-homotopic")
    except OracleIndecisive as e:
        print(f"Unknown ({e})")
        return False
    return True


def cmd_wp(args):
    p, oracle = _load(args)
    verdict = oracle.is_trivial(_word(args, p))
    print(verdict)
    return BUDGET if verdict is Verdict.UNKNOWN else OK


_SEARCHES = {"area": reduced_area_search, "fl": fl_search, "ffl": ffl_search}


def cmd_search(args):
    p, oracle = _load(args)
    w = _word(args, p)
    if not _require_null(w, oracle):
        return BUDGET
    budget = SearchBudget(args.max_len, args.max_states, args.max_cost)
    res = _SEARCHES[args.command](w, p, budget)
    print(res)
    if args.witness and res.witness is not None:
        _emit(res.witness.dumps(), args.witness)
    return OK if res.exact else BUDGET


def cmd_measure(args):
    p, oracle = _load(args)
    w = _word(args, p)
    if not _require_null(w, oracle):
        return BUDGET
    budgets = Budgets(args.max_len, args.max_states, args.max_cost)
    ms = word_measures(w, p, oracle, budgets)
    val = ms[args.command]
    if val.value is None:
        print("Unknown")
        return BUDGET
    print(f"{val.value} ({'exact' if val.exact else 'upper bound'})")
    if args.witness and val.witness is not None:
        _emit(val.witness.dumps(), args.witness)
    # an upper bound from optimal witnesses is a result, not a tripped budget
    return OK if ms["area"].exact and ms["fl"].exact else BUDGET


def cmd_table(args):
    p, oracle = _load(args)
    budgets = Budgets(args.max_len, args.max_states, args.max_cost)
    table = filling_table(p, oracle, args.n, budgets, jobs=args.jobs or default_jobs())
    _emit(table.to_csv(), args.out)
    # diagram measures are minima over witnessed diagrams and are only flagged
    # exact when they meet a lower bound; only the searches can trip a budget
    exact = all(e for (_, m), (_, e, _) in table.values.items() if m in ("area", "fl", "ffl"))
    return OK if exact else BUDGET


def cmd_comb_check(args):
    p, oracle = _load(args)
    status = OK
    for r in args.radius:
        ball = cayley_ball(p, oracle, r)
        metric = cayley_ball(p, oracle, args.metric_radius) if args.metric_radius else None
        try:
            c = standard_combing(args.kind, ball)
        except ValueError as e:
            raise UsageError(str(e)) from None
        k = fellow_traveler_check(c, metric_ball=metric)
        print(f"radius={r} syncK={k['syncK']} asyncK={k['asyncK']}")
    return status


def cmd_cockleshell(args):
    p, oracle = _load(args)
    w = _word(args, p)
    if not _require_null(w, oracle):
        return BUDGET
    radius = args.radius or max(len(w), 1)
    ball = cayley_ball(p, oracle, radius)
    c = standard_combing(args.kind, ball)
    try:
        d = cockleshell(w, c)
        bound = cockleshell_bound(w, c)
    except BallTooSmall as e:
        print(f"Unknown ({e})")
        return BUDGET
    _emit(d.dumps(), args.out)
    print(f"area={d.area} bound={bound}", file=sys.stderr)
    return OK


def cmd_h3_fill(args):
    p = preset("h3")
    w = _word(args, p)
    try:
        ns = h3_fill(w)
    except NotNullHomotopic as e:
        raise UsageError(str(e)) from None
    _emit(ns.dumps(), args.out)
    from .dps import replay
    r = replay(ns, p)
    print(f"relatorCount={r.relator_count} maxLen={r.max_len}", file=sys.stderr)
    return OK


def cmd_compress(args):
    p = preset("h3")
    try:
        ns = compress_sequence(args.s, args.n)
    except OutOfRange as e:
        raise UsageError(str(e)) from None
    _emit(ns.dumps(), args.out)
    from .dps import replay
    r = replay(ns, p)
    print(f"relatorCount={r.relator_count} maxLen={r.max_len}", file=sys.stderr)
    return OK


def _csv(rows):
    keys = list(rows[0])
    lines = [",".join(keys)]
    lines += [",".join(str(r[k]) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_family(args):
    chosen = [x for x in (args.gamma, args.delta, args.tree) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --gamma N, --delta N, --tree N")
    if args.gamma is not None:
        d = families.gamma_n(args.gamma)
        r = families.gamma_report(args.gamma)
        report = {"n": r.n, "diamGamma": r.diam_gamma, "diamDual": r.diam_dual,
                  "diamT": r.diam_t, "diamTstar": r.diam_tstar,
                  "tstarGeodesic": str(r.tstar_geodesic).lower(),
                  "diamS": r.diam_s, "diamSstar": r.diam_sstar}
        body = d.dumps()
    elif args.delta is not None:
        d = families.delta_n(args.delta)
        r = families.delta_report(args.delta)
        report = {"n": r.n, "area": r.area, "boundary": r.boundary, **r.measures,
                  "fl": r.fl, "flExact": str(r.fl_exact).lower(), "roundDiscFl": r.round_fl}
        body = d.dumps()
    else:
        t = families.ternary_tree(args.tree)
        report = {"n": t.n, "edges": len(t.edges), "vertices": t.n_vertices}
        if t.n_vertices <= 22:
            report["sweepWidth"] = families.sweep_width(t)
        body = f"vertices {t.n_vertices}\n" + "".join(f"edge {a} {b}\n" for a, b in t.edges)
    _emit(body, args.out)
    if args.report:
        _emit(_csv([report]), args.report)
    else:
        sys.stdout.write(_csv([report]))
    return OK


def cmd_delta_probe(args):
    p, oracle = _load(args)
    ball = cayley_ball(p, oracle, args.radius)
    delta = four_point_delta(ball, strict=args.strict)
    print(f"four_point_delta={delta}")
    if args.delta is not None:
        print(f"l_delta({args.delta})={str(l_delta_check(ball, args.delta)).lower()}")
    return OK


def build_parser():
    ap = _Parser(prog="fillings", description="Filling invariants of finitely presented groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("wp", help="decide whether a word is trivial")
    _group_args(sp)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_wp)

    for name in ("area", "fl", "ffl"):
        sp = sub.add_parser(name, help=f"exact {name} of a null-homotopic word by search")
        _group_args(sp)
        _budget_args(sp)
        sp.add_argument("--word", required=True)
        sp.add_argument("--witness", help="write the optimal null-sequence here")
        sp.set_defaults(func=cmd_search)

    for name in ("idiam", "ediam", "gl", "dgl", "rad"):
        sp = sub.add_parser(name, help=f"{name} of a null-homotopic word")
        _group_args(sp)
        _budget_args(sp)
        sp.add_argument("--word", required=True)
        sp.add_argument("--witness", help="write the realising diagram here")
        sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("table", help="filling functions up to length n as CSV")
    _group_args(sp)
    _budget_args(sp)
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=_positive, help="worker processes (default FILLINGS_JOBS or 1)")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("comb-check", help="fellow-traveller constants of a standard combing")
    _group_args(sp)
    sp.add_argument("--kind", default="free", help="free, zm, finite-ball or bs12")
    sp.add_argument("--radius", type=_natural, nargs="+", default=[3])
    sp.add_argument("--metric-radius", type=_natural, default=None,
                    help="measure distances in this larger ball")
    sp.set_defaults(func=cmd_comb_check)

    sp = sub.add_parser("cockleshell", help="cockleshell diagram of a word")
    _group_args(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--kind", default="free")
    sp.add_argument("--radius", type=_natural, default=None)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cockleshell)

    sp = sub.add_parser("h3-fill", help="linear filling-length null-sequence in H3")
    sp.add_argument("--word", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_h3_fill)

    sp = sub.add_parser("compress", help="sequence from z^s to its compression word")
    sp.add_argument("--s", type=_natural, required=True)
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compress)

    sp = sub.add_parser("family", help="generate a member of a diagram family")
    sp.add_argument("--gamma", type=_positive)
    sp.add_argument("--delta", type=_positive)
    sp.add_argument("--tree", type=_positive)
    sp.add_argument("--out", help="diagram or graph serialization")
    sp.add_argument("--report", help="report CSV (default stdout)")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("delta-probe", help="hyperbolicity constants of a Cayley ball")
    _group_args(sp)
    sp.add_argument("--radius", type=_natural, default=2)
    sp.add_argument("--delta", default=None, help="also test the L_delta property")
    sp.add_argument("--strict", action="store_true", help="only vertices within radius/2")
    sp.set_defaults(func=cmd_delta_probe)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"fillings {args.command}: error: {e}", file=sys.stderr)
        return USAGE
    except (IllegalMove, ValueError, OSError) as e:
        print(f"fillings {args.command}: error: {e}", file=sys.stderr)
        return USAGE


def run(argv):
    try:
        return main(argv)
    except SystemExit as e:
        return e.code


if __name__ == "__main__":
    sys.exit(main())
