"""Command-line front end.

Subcommands: ``matrices`` (operator dumps), ``eval`` (word evaluation),
``search`` (entangling-gate search), ``fusion-count`` (trivial-representation
multiplicities) and ``render`` (ASCII diagrams).  Batch style: arguments in,
one document out, numbers printed to 12 significant digits.

Exit codes: 0 success, 2 input error, 3 degenerate parameters,
4 non-identity permutation in gate mode.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .cables import cable_matrices
from .core import DegenerateParamsError, theory_params
from .fusion import RepLabel, trivial_multiplicity
from .onequbit import one_qubit_matrices
from .plat import (
    BraidWord,
    NonIdentityPermutationError,
    assign_crossing_kinds,
    evaluate_braid,
    plat_connectivity,
    render_ascii,
    two_qubit_gate,
    word_from_text,
    word_to_text,
)
from .search import (
    SearchConfig,
    result_to_csv,
    result_to_json,
    search_entangling,
    search_with_fallback,
)

_SIG = "{:.12g}"


def _num(x: float) -> float:
    return float(_SIG.format(float(x)))


def _cnum(z: complex) -> list[float]:
    return [_num(z.real), _num(z.imag)]


def _cmat(M: np.ndarray) -> list:
    return [[_cnum(complex(z)) for z in row] for row in M]


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load_word(args: argparse.Namespace) -> BraidWord:
    if getattr(args, "word_file", None):
        return word_from_text(Path(args.word_file).read_text(encoding="utf-8"))
    if getattr(args, "word", None) is None:
        raise ValueError("a braid word is required (--word or --word-file)")
    return word_from_text(args.word)


def _fmt_matrix_text(name: str, M: np.ndarray) -> str:
    lines = [name + ":"]
    for row in M:
        lines.append("  " + "  ".join(
            f"{_SIG.format(z.real)}{z.imag:+.12g}j" for z in row))
    return "\n".join(lines)


def _cmd_matrices(args: argparse.Namespace) -> str:
    params = theory_params(args.k, args.n, tol=args.degeneracy_tol)
    ops = one_qubit_matrices(params)
    cab = cable_matrices(params)
    if args.format == "json":
        doc = {
            "k": params.k,
            "N": params.N,
            "q": _cnum(params.q),
            "A": _cnum(params.A),
            "one_qubit": {
                "S": _cmat(ops.S), "T": _cmat(ops.T),
                "Sbar": _cmat(ops.Sbar), "Tbar": _cmat(ops.Tbar),
            },
            "cable": {
                "R": _cmat(cab.R),
                "Smix": _cmat(cab.Smix.astype(complex)),
                "Sinv": _cmat(cab.Sinv.astype(complex)),
                "T_same_parallel": _cmat(cab.T_same_parallel),
                "T_same_antiparallel": _cmat(cab.T_same_antiparallel),
                "T_different": _cmat(cab.T_different),
            },
        }
        return json.dumps(doc, indent=1) + "\n"
    parts = [f"k = {params.k}  N = {params.N}"]
    for name, M in (("S", ops.S), ("T", ops.T), ("Sbar", ops.Sbar),
                    ("Tbar", ops.Tbar), ("R", cab.R),
                    ("Smix", cab.Smix.astype(complex)),
                    ("Sinv", cab.Sinv.astype(complex)),
                    ("T_same_parallel", cab.T_same_parallel),
                    ("T_same_antiparallel", cab.T_same_antiparallel),
                    ("T_different", cab.T_different)):
        parts.append(_fmt_matrix_text(name, M))
    return "\n".join(parts) + "\n"


def _cmd_eval(args: argparse.Namespace) -> str:
    params = theory_params(args.k, args.n, tol=args.degeneracy_tol)
    cables = cable_matrices(params)
    word = _load_word(args)
    result = evaluate_braid(word, cables, mode=args.mode)
    diagram = plat_connectivity(word)
    kinds = [kind.value for kind in assign_crossing_kinds(diagram)]

    doc = {
        "k": params.k,
        "N": params.N,
        "word": list(word),
        "mode": args.mode,
        "kinds": kinds,
        "P": _num(result.P),
        "phi": _num(result.phi),
        "phi_over_pi": _num(result.phi / math.pi),
        "leakage": _num(result.leakage),
        "amplitude": _cnum(result.amplitude),
        "B": _cmat(result.B),
    }
    gate = two_qubit_gate(word, cables) if args.mode == "gate" else None
    if gate is not None:
        doc["gate"] = {
            "entries": [_cnum(z) for z in gate.entries],
            "case_iv_leakage": _num(gate.case_iv_leakage),
        }
    if args.format == "json":
        return json.dumps(doc, indent=1) + "\n"
    lines = [
        f"word: {word_to_text(word)}",
        f"k = {params.k}  N = {params.N}  mode = {args.mode}",
        f"kinds: {' '.join(kinds) if kinds else '(none)'}",
        f"P = {_SIG.format(result.P)}",
        f"phi = {_SIG.format(result.phi)} rad = {_SIG.format(result.phi / math.pi)} pi",
        f"leakage = {_SIG.format(result.leakage)}",
    ]
    if gate is not None:
        entries = ", ".join(
            f"{_SIG.format(z.real)}{z.imag:+.12g}j" for z in gate.entries)
        lines.append(f"gate diag: {entries}")
    return "\n".join(lines) + "\n"


def _cmd_search(args: argparse.Namespace) -> str:
    params = theory_params(args.k, args.n, tol=args.degeneracy_tol)
    config = SearchConfig(
        params=params,
        mode=args.mode,
        max_syllables=args.max_syllables,
        max_abs_exponent=args.max_exponent,
        max_length=args.max_length,
        p_min=args.p_min,
        phi_min=args.phi_min,
        top_n=args.top,
    )
    if args.fallback_max_length > 0:
        result = search_with_fallback(config, args.fallback_max_length)
    else:
        result = search_entangling(config)
    if result.status != "ok":
        print(f"no candidates matched P >= {args.p_min} and |phi| >= {args.phi_min}",
              file=sys.stderr)
    if args.format == "json":
        return result_to_json(result, params) + "\n"
    return result_to_csv(result, params)


def _parse_label(token: str, n: int) -> RepLabel:
    if token == "fund":
        return RepLabel.fundamental()
    if token == "antifund":
        return RepLabel.antifundamental(n)
    if token == "adj":
        return RepLabel.adjoint(n)
    if token in ("trivial", "triv"):
        return RepLabel.trivial()
    if token.startswith("[") and token.endswith("]"):
        inner = token[1:-1].strip()
        parts = tuple(int(p) for p in inner.split(",")) if inner else ()
        return RepLabel.from_partition(parts, n)
    raise ValueError(
        f"unknown representation label {token!r} "
        "(use fund, antifund, adj, trivial or a partition like [2,1])")


def _cmd_fusion_count(args: argparse.Namespace) -> str:
    tokens = args.pattern.split()
    if not tokens:
        raise ValueError("pattern must list at least one factor")
    labels = [_parse_label(tok, args.n) for tok in tokens]
    count = trivial_multiplicity(labels, args.n)
    if args.format == "json":
        return json.dumps({"N": args.n, "pattern": tokens, "count": count},
                          indent=1) + "\n"
    return f"{count}\n"


def _cmd_render(args: argparse.Namespace) -> str:
    word = _load_word(args)
    return render_ascii(word) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platgate",
        description="Braid-gate calculus for cabled anyons: evaluate plat-closed "
                    "braid words, count fusion multiplicities, and search for "
                    "high-fidelity entangling gates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, needs_params: bool = True) -> None:
        if needs_params:
            p.add_argument("--k", type=int, required=True, help="level (k >= 1)")
            p.add_argument("--n", type=int, default=2, help="rank N (default 2)")
            p.add_argument("--degeneracy-tol", type=float, default=1e-9,
                           help="denominator-vanishing threshold override")
        p.add_argument("--output", help="write the document here instead of stdout")

    p = sub.add_parser("matrices", help="dump the one-qubit and cable operator sets")
    add_common(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_matrices)

    p = sub.add_parser("eval", help="evaluate a braid word into B, P, phi and the gate")
    add_common(p)
    p.add_argument("--word", help="braid word text, e.g. '2 2 -1 -1'")
    p.add_argument("--word-file", help="file containing the braid word text")
    p.add_argument("--mode", choices=("gate", "invariant"), default="gate")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("search", help="search braid space for entangling gates")
    add_common(p)
    p.add_argument("--mode", choices=("even-syllable", "general-dfs"),
                   default="even-syllable")
    p.add_argument("--max-syllables", type=int, default=6)
    p.add_argument("--max-exponent", type=int, default=6,
                   help="largest |exponent| per syllable (even)")
    p.add_argument("--max-length", type=int, default=12,
                   help="length cap for general-dfs mode")
    p.add_argument("--p-min", type=float, default=0.99)
    p.add_argument("--phi-min", type=float, default=0.1 * math.pi,
                   help="minimum |phi| in radians")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--fallback-max-length", type=int, default=0,
                   help="if > 0, run a deepening general search when the "
                        "primary mode finds nothing")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("fusion-count",
                       help="multiplicity of the trivial representation in a tensor product")
    p.add_argument("--n", type=int, required=True, help="rank N (>= 2)")
    p.add_argument("--pattern", required=True,
                   help="factor list, e.g. 'adj adj adj adj' or 'fund antifund'")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output", help="write the document here instead of stdout")
    p.set_defaults(func=_cmd_fusion_count)

    p = sub.add_parser("render", help="render a braid word as an ASCII diagram")
    p.add_argument("--word", help="braid word text, e.g. '2 2 -1 -1'")
    p.add_argument("--word-file", help="file containing the braid word text")
    p.add_argument("--output", help="write the document here instead of stdout")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    document = args.func(args)
    _emit(document, args.output)
    return 0


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        return run(argv)
    except SystemExit as exc:  # argparse help/usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    except NonIdentityPermutationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DegenerateParamsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
