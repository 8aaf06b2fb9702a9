"""Command-line front end.

Commands:
    analyze <word>          full invariant report for one word
    batch <file>            one report per line of a word list
    conjugate <w1> <w2>     decide conjugacy of two words

Flags: --json (machine output), --oracle (Seifert-matrix cross-check),
--torus-bundle (add the zero-surgery block).

Exit codes: 0 ok, 1 not conjugate, 2 parse error, 3 internal inconsistency
(an oracle disagreement), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import invariants, murasugi, seifert
from . import words as w_
from .murasugi import InternalInconsistency
from .words import ParseError

EXIT_OK = 0
EXIT_NOT_CONJUGATE = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3
EXIT_IO = 4


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _oracle_block(word, report) -> tuple[dict, bool]:
    """Oracle determinant/signature plus an agreement verdict against the
    representation-theoretic values.  Split closures get an error record."""
    try:
        matrix = seifert.seifert_matrix(word)
    except seifert.SplitClosure as error:
        return {"error": str(error)}, True
    det = seifert.sym_determinant(matrix)
    sig = seifert.sym_signature(matrix)
    agrees = det == report.determinant and \
        (report.signature is None or report.signature == sig)
    return {"determinant": det, "signature": sig, "agrees": agrees}, agrees


def _fraction_str(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _pretty_report(report, oracle: dict | None,
                   torus_requested: bool = False) -> str:
    lines = [
        f"word:                {report.word or '(empty)'}",
        f"normal form:         {report.normal_form}",
        f"canonical word:      {murasugi.canonical_word(report.normal_form) or '(empty)'}",
        f"components:          {report.components}",
        f"determinant:         {report.determinant}",
        f"H1 of double cover:  {report.h1}",
        f"b1 of double cover:  {report.b1}",
        f"L-space:             {report.l_space}",
        f"tight:               {report.tight} (inverse: {report.tight_inverse})",
        f"knot type tag:       {report.knot_type_tag}",
    ]
    if report.hf_plus_s0 is None:
        lines.append("HF+ (s0):            undefined: b1 > 0")
    else:
        lines.append(f"HF+ (s0):            {report.hf_plus_s0}")
        lines.append(f"spin-c structures:   {report.spin_c_count}")
        lines.append(f"correction term:     {_fraction_str(report.correction_term)}")
    if report.delta is not None:
        lines.append(f"delta:               {_fraction_str(report.delta)}")
    if report.signature is not None:
        lines.append(f"signature:           {report.signature}")
    lines.append(f"quasi-alternating:   {report.qa}")
    lines.append(f"finite-order screen: {report.finite_order_screen}")
    stein = report.stein
    euler = "" if stein.euler_char is None else f", euler characteristic {stein.euler_char}"
    lines.append(f"Stein filling:       {stein.fillable}{euler} "
                 f"(twist bound {stein.dehn_twist_count_bound})")
    if report.torus_bundle is not None:
        bundle = report.torus_bundle
        lines.append(f"torus bundle (s0):   {bundle.s0}")
        lines.append(f"  other torsion spin-c: {bundle.non_s0_count} x "
                     f"[{bundle.non_s0_relative}]")
    elif torus_requested:
        lines.append("torus bundle:        undefined: monodromy is parabolic "
                     "or central, so the bundle's b1 is not 1")
    if oracle is not None:
        if "error" in oracle:
            lines.append(f"oracle:              {oracle['error']}")
        else:
            lines.append(f"oracle:              det {oracle['determinant']}, "
                         f"signature {oracle['signature']}, "
                         f"{'agrees' if oracle['agrees'] else 'DISAGREES'}")
    return "\n".join(lines)


def _analyze(args) -> int:
    try:
        word = w_.parse(args.word)
        report = invariants.analyze_word(word, raw_text=args.word,
                                         include_torus_bundle=args.torus_bundle)
    except ParseError as error:
        print(f"parse error: {error}", file=sys.stderr)
        return EXIT_PARSE
    oracle = None
    consistent = True
    if args.oracle:
        oracle, consistent = _oracle_block(word, report)
    if args.json:
        payload = invariants.report_json(report)
        if oracle is not None:
            payload["oracle"] = oracle
        print(_dumps(payload))
    else:
        print(_pretty_report(report, oracle, torus_requested=args.torus_bundle))
    return EXIT_OK if consistent else EXIT_INCONSISTENT


def _batch_line(report, oracle: dict | None) -> str:
    summary = (f"{report.word!r}: {report.normal_form}; "
               f"components {report.components}; det {report.determinant}; "
               f"L-space {report.l_space}; tight {report.tight}; qa {report.qa}")
    if oracle is not None:
        summary += (f"; oracle {oracle.get('determinant', 'n/a')}"
                    if "error" not in oracle else "; oracle split")
    return summary


def _batch(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as handle:
            raw_lines = handle.read().splitlines()
    except OSError as error:
        print(f"cannot read {args.path}: {error}", file=sys.stderr)
        return EXIT_IO

    ok = failed = 0
    consistent = True
    for line in raw_lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            word = w_.parse(text)
            report = invariants.analyze_word(
                word, raw_text=text, include_torus_bundle=args.torus_bundle)
        except ParseError as error:
            failed += 1
            if args.json:
                print(_dumps({"word": text, "error": {
                    "type": type(error).__name__,
                    "position": error.position,
                    "message": str(error)}}))
            else:
                print(f"{text!r}: error: {error}")
            continue
        ok += 1
        oracle = None
        if args.oracle:
            oracle, agrees = _oracle_block(word, report)
            consistent = consistent and agrees
        if args.json:
            payload = invariants.report_json(report)
            if oracle is not None:
                payload["oracle"] = oracle
            print(_dumps(payload))
        else:
            print(_batch_line(report, oracle))
    if args.json:
        print(_dumps({"summary": {"ok": ok, "failed": failed}}))
    else:
        print(f"{ok} ok, {failed} failed")
    return EXIT_OK if consistent else EXIT_INCONSISTENT


def _conjugate(args) -> int:
    forms = []
    for position, text in enumerate((args.word1, args.word2), start=1):
        try:
            forms.append(murasugi.classify(w_.parse(text)))
        except ParseError as error:
            print(f"parse error in word {position}: {error}", file=sys.stderr)
            return EXIT_PARSE
    conjugate = forms[0] == forms[1]
    if args.json:
        print(_dumps({
            "conjugate": conjugate,
            "normal_form_1": invariants.normal_form_json(forms[0]),
            "normal_form_2": invariants.normal_form_json(forms[1]),
        }))
    else:
        print(f"word 1: {forms[0]}")
        print(f"word 2: {forms[1]}")
        print("conjugate" if conjugate else "not conjugate")
    return EXIT_OK if conjugate else EXIT_NOT_CONJUGATE


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threebraid",
        description="Normal forms and closure invariants of 3-braid words.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report on a single word")
    analyze.add_argument("word")
    batch = sub.add_parser("batch", help="report on each word in a file")
    batch.add_argument("path")
    for command in (analyze, batch):
        command.add_argument("--json", action="store_true")
        command.add_argument("--oracle", action="store_true")
        command.add_argument("--torus-bundle", dest="torus_bundle",
                             action="store_true")
    conjugate = sub.add_parser("conjugate", help="decide conjugacy of two words")
    conjugate.add_argument("word1")
    conjugate.add_argument("word2")
    conjugate.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _analyze(args)
        if args.command == "batch":
            return _batch(args)
        return _conjugate(args)
    except InternalInconsistency as error:
        print(f"internal inconsistency: {error}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
