"""Command-line front end: ``metacause <command> ...``.

Exit status is 0 when the command succeeds or the property holds, 1 when the
property is refuted and 2 on errors, including an exceeded path cap.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from . import corpus, properties as props
from .errors import LimitExceeded, MetacauseError
from .lts import LtsGraph
from .model import rules_of
from .paths import DEFAULT_MAX_PATHS, chi_paths_to, rho_paths_to, tr_p
from .textio import export_dot, export_json, load_network, serialize_network

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2

_WORDS = {
    props.ESSENTIAL: ("essential", "not essential"),
    props.MUTUALLY_ESSENTIAL: ("mutually essential", "not mutually essential"),
    props.CHECKPOINT: ("necessary", "not necessary"),
    props.CAUSES: ("causes", "does not cause"),
    props.EXCLUDABLE: ("excludable", "not excludable"),
    props.REDUNDANT: ("redundant", "not redundant"),
    props.STRONG_ROBUST: ("strongly robust", "not strongly robust"),
    props.WEAK_ROBUST: ("weakly robust", "not weakly robust"),
}


def _load(ref: str):
    """A network from a file path, or a bundled corpus name such as ``ex1``."""
    p = FsPath(ref)
    if p.exists():
        return load_network(p)
    name = corpus.ALIASES.get(p.stem, p.stem)
    if name in corpus.NAMES:
        return corpus.load(name)
    raise FileNotFoundError(f"no such network file or bundled network: {ref}")


def _graph(ref: str) -> LtsGraph:
    net, sol = _load(ref)
    return LtsGraph.from_network(net, sol)


def _fmt_set(xs) -> str:
    return "{" + ", ".join(sorted(xs)) + "}"


def _fmt_witness(w) -> str:
    if isinstance(w, str):
        return w
    if hasattr(w, "steps"):
        return f"{w}   U = {_fmt_set(w.used_initial())}"
    return str(w)


def _report(v: props.PropertyVerdict, args) -> int:
    if args.json:
        print(export_json(v, indent=2))
    else:
        yes, no = _WORDS[v.property]
        args_txt = ", ".join(str(x) if not isinstance(x, list) else "|".join(x)
                             for x in v.inputs.values())
        n = len(v.witnesses)
        print(f"{v.property}({args_txt}): {yes if v.holds else no} "
              f"[method: {v.method}; {n} witness{'es' if n != 1 else ''}]")
        for w in v.witnesses:
            print(f"  {_fmt_witness(w)}")
    return EXIT_OK if v.holds else EXIT_REFUTED


# -- commands -----------------------------------------------------------------

def cmd_parse(args) -> int:
    net, sol = _load(args.file)
    sys.stdout.write(serialize_network(net, sol))
    return EXIT_OK


def cmd_lts(args) -> int:
    g = _graph(args.file)
    if args.dot:
        FsPath(args.dot).write_text(export_dot(g, args.collapse_self_loops), encoding="utf-8")
    if args.json:
        FsPath(args.json).write_text(export_json(g, indent=2) + "\n", encoding="utf-8")
    print(f"states: {len(g.states)}")
    print(f"transitions: {len(g.transitions)}")
    return EXIT_OK


def cmd_paths(args) -> int:
    g = _graph(args.file)
    if args.rho:
        paths, kind = rho_paths_to(g, args.target, args.max_paths), "rho"
    else:
        paths, kind = chi_paths_to(g, args.target, args.max_paths), "chi"
    print(f"{len(paths)} {kind}-path{'s' if len(paths) != 1 else ''} leading to {args.target}")
    for i, p in enumerate(paths, 1):
        print(f"p{i}: {_fmt_witness(p)}")
    return EXIT_OK


def cmd_explain(args) -> int:
    g = _graph(args.file)
    seen = {}
    for p in chi_paths_to(g, args.target, args.max_paths):
        e = tr_p(p, args.target)
        seen.setdefault(str(e), e)
    exps = [seen[k] for k in sorted(seen)]
    print(f"{len(exps)} explanation{'s' if len(exps) != 1 else ''} of {args.target}")
    for i, e in enumerate(exps, 1):
        print(f"E{i}: {e}   rules = {_fmt_set(rules_of(e))}")
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            if props.vicarious(exps[i], exps[j]):
                print(f"vicarious: E{i + 1}, E{j + 1}")
    return EXIT_OK


def cmd_check(args) -> int:
    kw = {"method": args.method, "limit": args.max_paths}
    prop = args.property
    if prop == "robust":
        g1, g2 = _graph(args.file), _graph(args.file2)
        fn = props.weak_robust if args.weak else props.strong_robust
        return _report(fn(g1, g2, args.target, **kw), args)
    g = _graph(args.file)
    if prop == "essential":
        v = props.essential(g, args.rule, args.target, **kw)
    elif prop == "mutual":
        v = props.mutually_essential(g, args.first, args.second, args.target, **kw)
    elif prop == "checkpoint":
        v = props.checkpoint(g, args.necessary, args.target, **kw)
    elif prop == "causes":
        v = props.causes(g, args.first, args.second, **kw)
    elif prop == "exclude":
        v = props.excludable(g, args.metabolite, args.target, **kw)
    else:
        v = props.redundant(g, args.target, **kw)
    return _report(v, args)


def cmd_screen(args) -> int:
    g = _graph(args.file)
    res = props.screen(g, args.target, args.method, args.max_paths)
    if args.json:
        print(export_json(res, indent=2))
        return EXIT_OK
    print(f"target: {args.target} ({'derivable' if res['derivable'] else 'not derivable'})")
    for title, key, yes in (("essential rules", "essential", "essential"),
                            ("excludable initial metabolites", "excludable", "excludable"),
                            ("checkpoints", "checkpoints", "necessary")):
        hits = [k for k, v in res[key].items() if v.holds]
        print(f"{title}: {len(hits)}")
        for k in hits:
            print(f"  {k}: {yes}")
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------

def _common(p, method=False):
    p.add_argument("--max-paths", type=int, default=DEFAULT_MAX_PATHS,
                   help="cap on enumerated paths (default: %(default)s, "
                        "or $METACAUSE_MAX_PATHS)")
    if method:
        p.add_argument("--method", choices=("reach", "enum", "both"), default="reach",
                       help="decision procedure; 'both' cross-checks the two")
        p.add_argument("--json", action="store_true", help="print the verdict as JSON")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metacause",
                                 description="Causal analysis of metabolic networks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate a network and print it normalized")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("lts", help="build the transition graph")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT")
    p.add_argument("--collapse-self-loops", action="store_true")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_lts)

    p = sub.add_parser("paths", help="list the paths leading to a metabolite")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--rho", action="store_true", help="rho-paths instead of chi-paths")
    _common(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("explain", help="list the explanations of a metabolite")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    _common(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("check", help="decide a property")
    checks = p.add_subparsers(dest="property", required=True)
    c = checks.add_parser("essential")
    c.add_argument("file")
    c.add_argument("--rule", required=True)
    c.add_argument("--target", required=True)
    for name in ("mutual", "causes"):
        c = checks.add_parser(name)
        c.add_argument("file")
        c.add_argument("--first", required=True)
        c.add_argument("--second", required=True)
        if name == "mutual":
            c.add_argument("--target", required=True)
    c = checks.add_parser("checkpoint")
    c.add_argument("file")
    c.add_argument("--necessary", required=True, metavar="B")
    c.add_argument("--target", required=True)
    c = checks.add_parser("exclude")
    c.add_argument("file")
    c.add_argument("--metabolite", required=True, metavar="B")
    c.add_argument("--target", required=True)
    c = checks.add_parser("redundant")
    c.add_argument("file")
    c.add_argument("--target", required=True)
    c = checks.add_parser("robust")
    c.add_argument("file")
    c.add_argument("file2")
    c.add_argument("--target", required=True)
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--strong", action="store_true")
    mode.add_argument("--weak", action="store_true")
    for c in checks.choices.values():
        _common(c, method=True)
        c.set_defaults(func=cmd_check)

    p = sub.add_parser("screen", help="what-if sweep for one target")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    _common(p, method=True)
    p.set_defaults(func=cmd_screen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as e:
        print(f"undecided: {e}", file=sys.stderr)
    except MetacauseError as e:
        print(f"error: {e}", file=sys.stderr)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
