"""The `gp` command line tool.

Conventions shared by every subcommand:

  * exit 0 is an affirmative or successful run, exit 1 a well-formed
    negative answer (not equal, not conjugate, invalid spec or diagram, a
    move that does not apply), exit 2 a malformed input, exit 3 a resource
    limit;
  * errors are a single `error: <Class>: <message>` line on stderr;
  * `--format text` prints `key: value` lines, `--format machine` one JSON
    object with sorted keys; clf-scan instead always prints CSV rows, its
    report being tabular by nature.

Words are quoted strings of space-separated `vertex:atom` tokens, e.g.
`gp reduce --spec g.json "a:1 c:2 a:1"`.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .conjugacy import are_conjugate, clf_upper_bound, cyclically_reduce
from .diagrams import (
    MOVES,
    apply_move,
    boundary_label,
    check_curve_laws,
    parse_diagram,
    save_diagram,
)
from .errors import (
    BfsLimitExceeded,
    CapExceeded,
    GraphProductError,
    PatternMismatch,
)
from .graph import dehn_class
from .report import clf_scan_rows, render_plot, write_csv
from .specfile import load_spec, parse_spec
from .words import (
    canonical_form,
    equal,
    format_word,
    parse_word,
    reduce,
    word_length,
)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise GraphProductError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphProductError(f"{path} is not valid JSON: {exc}") from exc


def _with_overrides(spec, args):
    overrides = {}
    if getattr(args, "limit_states", None) is not None:
        overrides["states"] = args.limit_states
    if getattr(args, "oracle_cap", None) is not None:
        overrides["oracle-cap"] = args.oracle_cap
    if overrides:
        spec = dataclasses.replace(spec, limits={**spec.limits, **overrides})
    return spec


def _spec(args):
    return _with_overrides(load_spec(args.spec), args)


def _emit(args, data):
    if args.format == "machine":
        print(json.dumps(data, sort_keys=True))
        return
    for k, v in data.items():
        if isinstance(v, bool):
            v = "true" if v else "false"
        elif isinstance(v, (list, tuple)):
            v = " ".join(str(x) for x in v)
        print(f"{k}: {v}")


def _error(exc, code):
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return code


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args):
    data = _read_json(args.spec)
    try:
        spec = parse_spec(data)
    except GraphProductError as exc:
        return _error(exc, 1)
    _emit(args, {
        "ok": True,
        "vertices": list(spec.vertices),
        "edges": [f"{spec.vertices[i]}-{spec.vertices[j]}"
                  for i, j in spec.graph.edges()],
    })
    return 0


def cmd_reduce(args):
    spec = _spec(args)
    word = reduce(spec, parse_word(spec, args.word))
    _emit(args, {
        "word": format_word(spec, word),
        "syllables": len(word),
        "length": word_length(spec, word),
    })
    return 0


def cmd_canon(args):
    spec = _spec(args)
    nf = canonical_form(spec, parse_word(spec, args.word))
    _emit(args, {
        "word": format_word(spec, nf.word),
        "syllables": len(nf),
        "length": word_length(spec, nf.word),
    })
    return 0


def cmd_equal(args):
    spec = _spec(args)
    same = equal(spec, parse_word(spec, args.word1), parse_word(spec, args.word2))
    _emit(args, {"equal": same})
    return 0 if same else 1


def cmd_conj(args):
    spec = _spec(args)
    a = parse_word(spec, args.word1)
    b = parse_word(spec, args.word2)
    witness = are_conjugate(spec, a, b)
    if witness is None:
        _emit(args, {"conjugate": False})
        return 1
    _emit(args, {
        "conjugate": True,
        "witness": format_word(spec, witness.conjugator),
        "witness-length": word_length(spec, witness.conjugator),
        "bound": witness.bound,
        "floating": list(witness.floating),
        "core-a": format_word(spec, witness.core_a),
        "core-b": format_word(spec, witness.core_b),
    })
    return 0


def cmd_cyclred(args):
    spec = _spec(args)
    red = cyclically_reduce(spec, parse_word(spec, args.word))
    _emit(args, {
        "core": format_word(spec, red.core),
        "conjugator": format_word(spec, red.conjugator),
        "core-length": word_length(spec, red.core),
        "conjugator-length": word_length(spec, red.conjugator),
    })
    return 0


def cmd_clf_bound(args):
    spec = _spec(args)
    _emit(args, {"n": args.n, "bound": clf_upper_bound(spec, args.n)})
    return 0


def cmd_clf_scan(args):
    spec = _spec(args)
    rows = clf_scan_rows(spec, args.nmax, args.cap)
    write_csv(rows, sys.stdout)
    if args.plot is not None:
        render_plot(rows, args.plot)
    return 0


def cmd_dehn(args):
    spec = _spec(args)
    cls = dehn_class(spec.graph, [g.infinite for g in spec.groups])
    _emit(args, {"case": cls.case, "dehn": str(cls)})
    return 0


def _optional_spec(args):
    if args.spec is None:
        return None
    return _with_overrides(load_spec(args.spec), args)


def cmd_diagram_check(args):
    data = _read_json(args.file)
    try:
        diagram = parse_diagram(data, _optional_spec(args))
    except GraphProductError as exc:
        return _error(exc, 1)
    report = check_curve_laws(diagram)
    out = {
        "ok": report.ok,
        "darts": len(diagram.darts),
        "faces": len(diagram.faces),
        "curves": len(report.curves),
        "boundary": format_word(diagram.spec, boundary_label(diagram)),
    }
    if diagram.inner is not None:
        out["inner"] = format_word(diagram.spec, boundary_label(diagram, "inner"))
    if report.violations:
        out["violations"] = list(report.violations)
    _emit(args, out)
    return 0 if report.ok else 1


def cmd_diagram_move(args):
    diagram = parse_diagram(_read_json(args.file), _optional_spec(args))
    result = apply_move(diagram, args.move, args.at)
    if args.out is not None:
        save_diagram(result, args.out)
    _emit(args, {
        "ok": True,
        "move": args.move,
        "at": args.at,
        "darts": len(result.darts),
        "faces": len(result.faces),
        "boundary": format_word(result.spec, boundary_label(result)),
    })
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gp",
        description="Word problem, conjugacy and diagram tools for graph products.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, spec_required=True):
        p.add_argument("--spec", required=spec_required, default=None,
                       help="path to a JSON group spec")
        p.add_argument("--limit-states", type=int, default=None, metavar="N",
                       help="override the conjugacy search state limit")
        p.add_argument("--oracle-cap", type=int, default=None, metavar="N",
                       help="override the rewrite closure size cap")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        return p

    p = common(sub.add_parser("validate", help="check a spec file"))
    p.set_defaults(func=cmd_validate)

    p = common(sub.add_parser("reduce", help="graphically reduce a word"))
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = common(sub.add_parser("canon", help="canonical normal form of a word"))
    p.add_argument("word")
    p.set_defaults(func=cmd_canon)

    p = common(sub.add_parser("equal", help="decide equality of two words"))
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = common(sub.add_parser("conj", help="decide conjugacy, with witness"))
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_conj)

    p = common(sub.add_parser("cyclred", help="constructive cyclic reduction"))
    p.add_argument("word")
    p.set_defaults(func=cmd_cyclred)

    p = common(sub.add_parser("clf-bound", help="conjugator length bound at n"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_clf_bound)

    p = common(sub.add_parser(
        "clf-scan", help="observed vs bounded conjugator lengths, CSV"))
    p.add_argument("nmax", type=int)
    p.add_argument("--cap", type=int, default=6,
                   help="refuse scans past this n (they get expensive)")
    p.add_argument("--plot", metavar="FILE", default=None,
                   help="also render the scan to an image file")
    p.set_defaults(func=cmd_clf_scan)

    p = common(sub.add_parser("dehn", help="Dehn function classification"))
    p.set_defaults(func=cmd_dehn)

    p = common(sub.add_parser(
        "diagram-check", help="validate a diagram file and its dual curves"),
        spec_required=False)
    p.add_argument("file")
    p.set_defaults(func=cmd_diagram_check)

    p = common(sub.add_parser(
        "diagram-move", help="apply an elementary move to a diagram file"),
        spec_required=False)
    p.add_argument("file")
    p.add_argument("move", choices=MOVES)
    p.add_argument("at", type=int, help="dart id the move is anchored at")
    p.add_argument("--out", metavar="FILE", default=None,
                   help="write the resulting diagram here")
    p.set_defaults(func=cmd_diagram_move)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BfsLimitExceeded, CapExceeded) as exc:
        return _error(exc, 3)
    except PatternMismatch as exc:
        return _error(exc, 1)
    except GraphProductError as exc:
        return _error(exc, 2)


def main(argv=None):
    raise SystemExit(run(argv))
