"""Command-line front door.

Exit codes: 0 success or PASS, 1 a check returned FAIL (witness printed
on standard output), 2 usage or input error, 3 enumeration budget
exceeded.  ``AMALGAM_BUDGET`` in the environment overrides the default
effort caps.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .closure import ChiStrategy, enumerate_minimal_resolutions, is_closed_copy, mcl, resolve
from .companion import (
    biminimal_coincide,
    derive_forall,
    find_free_amalg_counterexample,
    roundtrip_check,
)
from .generic import build_generic, verify_age, verify_injectivity
from .graphs import FiniteGraph, vset
from .io import GraphFormatError, format_graph, load_graph, save_graph, to_dot
from .kernel import (
    BudgetExceededError,
    PreconditionError,
    check_axioms,
    check_free_amalgamation,
    check_full_amalgamation,
    enumerate_biminimal_extensions,
)
from .moss import build_truncation, closure_growth, find_minimal_pair_chain, injectivity_suite
from .zoo import ExactZeroError, class_names, get_class

PASS, FAIL, USAGE, BUDGET = 0, 1, 2, 3


def _parse_set(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return vset(int(p) for p in text.split(","))
    except ValueError:
        raise GraphFormatError(0, f"vertex set {text!r} must be comma-separated integers") from None


def _spec(args) -> "ClassSpec":
    return get_class(args.klass, getattr(args, "alpha", None))


def _print_graph(g: FiniteGraph, header: str) -> None:
    sys.stdout.write(f"# {header}\n{format_graph(g)}")


def cmd_classes(args) -> int:
    for name in class_names():
        print(name)
    return PASS


def cmd_check_strong(args) -> int:
    spec = _spec(args)
    m = load_graph(args.ambient)
    a = _parse_set(args.set)
    ok = spec.strong(a, m)
    print(f"{'PASS' if ok else 'FAIL'} strong({args.set or 'empty'}) in {args.ambient} under {spec.name}")
    if not ok:
        _print_graph(m, f"witness ambient; replay: check-strong --class {args.klass} --set {args.set}")
    return PASS if ok else FAIL


def cmd_biminimal(args) -> int:
    spec = _spec(args)
    base = load_graph(args.base)
    pairs = enumerate_biminimal_extensions(spec, base, args.max_new)
    print(f"{len(pairs)} biminimal extension(s) of {args.base} under {spec.name} (max new {args.max_new})")
    for i, p in enumerate(pairs):
        _print_graph(p.y, f"extension {i}: base occupies vertices 0..{base.n - 1}")
    return PASS


def cmd_amalgam(args) -> int:
    spec = _spec(args)
    b = load_graph(args.left)
    c = load_graph(args.right)
    a = _parse_set(args.shared)
    if args.mode == "free":
        verdict = check_free_amalgamation(spec, a, b, c)
        detail = f"member={verdict.member} left-strong={verdict.b_strong} right-strong={verdict.c_strong}"
    else:
        verdict = check_full_amalgamation(spec, a, b, c)
        detail = f"member={verdict.member} right-strong={verdict.c_strong}"
    print(f"{'PASS' if verdict.passed else 'FAIL'} {args.mode} amalgamation over {args.shared or 'empty'} ({detail})")
    _print_graph(verdict.parts.graph, f"amalgam; right side landed at {verdict.parts.c_image}")
    return PASS if verdict.passed else FAIL


def cmd_closure(args) -> int:
    spec = _spec(args)
    m = load_graph(args.ambient)
    a = _parse_set(args.set)
    if args.mode == "mcl":
        rep = mcl(spec, a, m)
        print(f"mcl {rep.result} layers {rep.layers}")
    elif args.mode == "resolve":
        rep = resolve(spec, a, m, ChiStrategy(args.tiebreak))
        print(f"resolve({args.tiebreak}) {rep.result} layers {rep.layers}")
    else:
        sets = enumerate_minimal_resolutions(spec, a, m, bound=args.bound)
        print(f"{len(sets)} minimal resolution(s)")
        for s in sets:
            print(" ", ",".join(map(str, s)))
    return PASS


def cmd_generic(args) -> int:
    spec = _spec(args)
    m, log = build_generic(spec, args.stages, args.bound, args.seed)
    if args.out:
        save_graph(args.out, m, comment=f"build {spec.name} stages={args.stages} seed={args.seed}")
    sys.stdout.write(log.format())
    if args.verify:
        age = verify_age(spec, m)
        rep = verify_injectivity(spec, m, min(args.bound, 4))
        print(f"age={'PASS' if age else 'FAIL'} injectivity unmet={len(rep.unmet)}/{rep.total}")
        if not age or rep.unmet:
            return FAIL
    return PASS


def cmd_companion(args) -> int:
    spec = _spec(args)
    if args.action == "derive":
        derived = derive_forall(spec)
        print(f"derived {derived.name}; probe it via coincide/roundtrip")
        return PASS
    if args.action == "break-free":
        w = find_free_amalg_counterexample(spec, args.max_a, args.max_ext)
        if w is None:
            print(f"PASS no free-amalgamation counterexample up to ({args.max_a}, {args.max_ext})")
            return PASS
        print(f"FAIL free amalgamation breaks: {w.failed}")
        _print_graph(w.a, "shared part")
        _print_graph(w.b, "left extension")
        _print_graph(w.c, "right extension")
        _print_graph(w.d, f"amalgam; right side landed at {w.c_image}")
        return FAIL
    other = get_class(args.other, getattr(args, "alpha", None))
    if args.action == "coincide":
        verdict = biminimal_coincide(spec, other, args.bound)
    else:
        verdict = roundtrip_check(spec, other, args.bound)
    print(f"{'PASS' if verdict.passed else 'FAIL'} {args.action} {spec.name} vs {other.name}: {verdict.reason}")
    if not verdict.passed and verdict.witness_graph is not None:
        _print_graph(verdict.witness_graph, f"witness pair, base {verdict.witness_base}")
    return PASS if verdict.passed else FAIL


def _growth_radii(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(",")]


def _growth_worker(payload):
    name, alpha, params, x, r = payload
    spec = get_class(name, alpha)
    t = build_truncation(*params)
    table = closure_growth(spec, x, t, [r])
    return table.rows[0]


def cmd_moss(args) -> int:
    spec = _spec(args)
    if args.action == "chain":
        chain = find_minimal_pair_chain(spec, args.length)
        if chain is None:
            print(f"NONE no minimal-pair chain of length {args.length} within the search bounds")
            return FAIL
        print(f"chain of {len(chain)} graphs, sizes {[g.n for g in chain]}")
        for i, g in enumerate(chain):
            _print_graph(g, f"link {i}")
        return PASS
    params = (args.paths, args.path_len, args.filler, args.margin)
    t = build_truncation(*params)
    if args.action == "truncate":
        comment = f"truncation paths={args.paths} path-len={args.path_len} filler={args.filler} margin={args.margin}"
        if args.out:
            save_graph(args.out, t.graph, comment=comment)
        else:
            _print_graph(t.graph, comment)
        return PASS
    if args.action == "growth":
        radii = _growth_radii(args.radii)
        x = args.vertex if args.vertex is not None else t.paths[0][len(t.paths[0]) // 2]
        if args.jobs > 1:
            import multiprocessing

            payloads = [(args.klass, getattr(args, "alpha", None), params, x, r) for r in sorted(radii)]
            with multiprocessing.Pool(args.jobs) as pool:
                rows = pool.map(_growth_worker, payloads)
            from .moss import GrowthTable

            table = GrowthTable(x, rows)
        else:
            table = closure_growth(spec, x, t, radii)
        sys.stdout.write(table.as_csv() if args.csv else table.as_text())
        return PASS
    rep = injectivity_suite(spec, t, args.bound)
    print(f"{'PASS' if not rep.unmet else 'FAIL'} injectivity suite: unmet {len(rep.unmet)}/{rep.total}")
    for pattern, anchor in rep.unmet:
        print(f"  unmet {pattern.describe()} anchored at {anchor}")
    return PASS if not rep.unmet else FAIL


def cmd_axioms(args) -> int:
    spec = _spec(args)
    report = check_axioms(spec, args.max_n, seed=args.seed)
    for axiom in sorted(report.verdicts):
        verdict, witness = report.verdicts[axiom]
        print(f"{axiom} {verdict}")
        if witness is not None:
            print(f"  {witness.detail}; sets {witness.sets}")
            _print_graph(witness.ambient, f"witness ambient for {axiom}")
    return PASS if report.all_passed() else FAIL


def cmd_dot(args) -> int:
    g = load_graph(args.graph)
    sys.stdout.write(to_dot(g, highlight=_parse_set(args.set)))
    return PASS


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="amalgam", description=__doc__)
    top.add_argument("--version", action="version", version=f"amalgam {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def klass(p):
        p.add_argument("--class", dest="klass", required=True, help="registered class name")
        p.add_argument("--alpha", default=None, help="slope NUM/DEN for the predimension class")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers where supported")

    p = sub.add_parser("classes", help="list registered classes")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("check-strong", help="test a vertex set for strength in an ambient graph")
    klass(p)
    p.add_argument("--ambient", required=True)
    p.add_argument("--set", default="")
    p.set_defaults(fn=cmd_check_strong)

    p = sub.add_parser("biminimal", help="enumerate biminimal extensions of a base graph")
    klass(p)
    p.add_argument("--base", required=True)
    p.add_argument("--max-new", type=int, default=2)
    p.set_defaults(fn=cmd_biminimal)

    p = sub.add_parser("amalgam", help="check free or full amalgamation of a triple")
    klass(p)
    p.add_argument("--mode", choices=["free", "full"], default="free")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--shared", default="", help="shared vertex set, same indices in both sides")
    p.set_defaults(fn=cmd_amalgam)

    p = sub.add_parser("closure", help="closure fixpoints and minimal resolutions")
    klass(p)
    p.add_argument("--mode", choices=["mcl", "resolve", "enumerate"], required=True)
    p.add_argument("--ambient", required=True)
    p.add_argument("--set", default="")
    p.add_argument("--tiebreak", choices=["lex", "revlex"], default="lex")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(fn=cmd_closure)

    p = sub.add_parser("generic", help="finite-stage generic construction")
    gsub = p.add_subparsers(dest="action", required=True)
    b = gsub.add_parser("build", help="grow a chain of members serving injectivity tasks")
    klass(b)
    b.add_argument("--stages", type=int, required=True)
    b.add_argument("--bound", type=int, default=2)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default=None, help="write the final stage in graph text format")
    b.add_argument("--verify", action="store_true", help="run age and injectivity checks on the result")
    b.set_defaults(fn=cmd_generic)

    p = sub.add_parser("companion", help="derived companions and class comparisons")
    csub = p.add_subparsers(dest="action", required=True)
    for action, help_text in [
        ("derive", "derive the universal companion"),
        ("coincide", "compare biminimal classification of two classes"),
        ("roundtrip", "universal companion of a companion recovers the base"),
        ("break-free", "search for a free-amalgamation counterexample"),
    ]:
        q = csub.add_parser(action, help=help_text)
        klass(q)
        if action in ("coincide", "roundtrip"):
            q.add_argument("--other", required=True, help="the companion class")
            q.add_argument("--bound", type=int, default=5)
        if action == "break-free":
            q.add_argument("--max-a", type=int, default=5)
            q.add_argument("--max-ext", type=int, default=1)
        q.set_defaults(fn=cmd_companion, action=action)

    p = sub.add_parser("moss", help="finite certificates around unbounded closures")
    msub = p.add_subparsers(dest="action", required=True)
    q = msub.add_parser("chain", help="search a chain of consecutive minimal pairs")
    klass(q)
    q.add_argument("--length", type=int, default=10)
    q.set_defaults(fn=cmd_moss, action="chain")
    for action, help_text in [
        ("truncate", "build a truncation and print or save it"),
        ("growth", "resolution size per window radius around a vertex"),
        ("inject", "injectivity suite anchored in the interior"),
    ]:
        q = msub.add_parser(action, help=help_text)
        klass(q)
        q.add_argument("--paths", type=int, default=1)
        q.add_argument("--path-len", type=int, default=40)
        q.add_argument("--filler", type=int, default=6)
        q.add_argument("--margin", type=int, default=16)
        if action == "truncate":
            q.add_argument("--out", default=None)
        if action == "growth":
            q.add_argument("--radii", default="1..15", help="range lo..hi or comma list")
            q.add_argument("--vertex", type=int, default=None, help="default: center of the first path")
            q.add_argument("--csv", action="store_true")
        if action == "inject":
            q.add_argument("--bound", type=int, default=2)
        q.set_defaults(fn=cmd_moss, action=action)

    p = sub.add_parser("axioms", help="check the closure axioms on all small members")
    klass(p)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_axioms)

    p = sub.add_parser("dot", help="render a graph file as DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", default="", help="vertices to highlight")
    p.set_defaults(fn=cmd_dot)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (GraphFormatError, PreconditionError, ExactZeroError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
