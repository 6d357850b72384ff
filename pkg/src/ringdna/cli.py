"""Command-line front end.

Exit status: 0 on success, 1 when a requested constraint (or a reproduction)
fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .codes import (
    InvalidSpecError,
    R1CodeSpec,
    RCodeSpec,
    code_size_log2,
    enumerate_code,
    minimal_generating_set_r,
    validate_r_spec,
)
from .constraints import (
    check_code,
    contains_all_u,
    fixed_gc_report,
    griesmer_check,
    min_hamming_distance,
    module_rank,
    rank_of_code,
)
from .dna import phi, to_decimal_lines, to_fasta
from .factor import divisors_xn_minus_1, factor_xn_minus_1, format_factorization
from .reproduce import IDS, reproduce
from .ring import U
from .sigma import (
    SigmaSetSpec,
    format_matrix,
    generator_matrix,
    phi_image_rc_closed,
    phi_image_reverse_closed,
    span_basis,
    span_enumerate,
    span_equals_ideal,
)
from .words import DEFAULT_BOUND, CodeWords, EnumerationBoundError, components

EXIT_OK, EXIT_CONSTRAINT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ input


def _component(n: int, text: str) -> R1CodeSpec:
    # "g", "g:p" or "g:p:a"
    parts = text.split(":")
    if not 1 <= len(parts) <= 3:
        raise InputError(f"component {text!r} must look like g, g:p or g:p:a")
    g = parts[0]
    p = parts[1] if len(parts) > 1 else "0"
    a = parts[2] if len(parts) > 2 else None
    return R1CodeSpec.parse(n, g, p, a)


def _read_spec_doc(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read spec {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"spec {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"spec {path} must be a JSON object")
    return doc


def load_code(args) -> RCodeSpec | SigmaSetSpec:
    """A cyclic code spec or a sigma-set spec, from --spec or inline flags."""
    if getattr(args, "spec", None):
        doc = _read_spec_doc(args.spec)
        if "f1" in doc or "f2" in doc:
            spec = SigmaSetSpec.from_json(doc)
            if args.augment_complement:
                spec = SigmaSetSpec(spec.n, spec.f1, spec.f2, True)
            spec.validate()
            return spec
        return RCodeSpec.from_json(doc)
    if args.n is None:
        raise InputError("give --spec FILE, or --n with --f1/--f2 or --c1/--c2")
    if args.f1 or args.f2:
        if not (args.f1 and args.f2):
            raise InputError("--f1 and --f2 must be given together")
        spec = SigmaSetSpec.parse(args.n, args.f1, args.f2, args.augment_complement)
        spec.validate()
        return spec
    if args.c1 and args.c2:
        return RCodeSpec(args.n, _component(args.n, args.c1), _component(args.n, args.c2))
    raise InputError("give --f1/--f2 (sigma-set code) or --c1/--c2 (cyclic code)")


def _words_of(code, bound: int) -> CodeWords:
    if isinstance(code, SigmaSetSpec):
        return span_enumerate(code, bound)
    return enumerate_code(code, bound)


def _require_valid(spec: RCodeSpec) -> None:
    problems = []
    for name, rep in zip(("C1", "C2"), validate_r_spec(spec)):
        problems += [f"{name}: {c.name} fails ({c.detail})" for c in rep.failures()]
    if problems:
        raise InvalidSpecError("invalid code spec:\n  " + "\n  ".join(problems))


# ------------------------------------------------------------------ commands


def cmd_factor(args) -> tuple[str, int]:
    factors = factor_xn_minus_1(args.n)
    count = len(divisors_xn_minus_1(args.n))
    if args.format == "json":
        doc = {
            "n": args.n,
            "factorization": format_factorization(factors),
            "factors": [{"factor": str(f), "multiplicity": e} for f, e in factors],
            "divisors": count,
        }
        return _dump(doc), EXIT_OK
    return f"{format_factorization(factors)}\ndivisors: {count}\n", EXIT_OK


def cmd_construct(args) -> tuple[str, int]:
    code = load_code(args)
    if isinstance(code, SigmaSetSpec):
        return _sigma_output(code, args, full=False)
    reports = validate_r_spec(code)
    ok = all(r.ok for r in reports)
    doc = {
        "spec": code.to_json(),
        "validation": {"c1": reports[0].to_json(), "c2": reports[1].to_json()},
    }
    if ok:
        gens = minimal_generating_set_r(code)
        doc["size_log2"] = code_size_log2(code)
        doc["rank"] = rank_of_code(code)
        doc["generating_set"] = [str(f) for f in gens.polys]
    status = EXIT_OK if ok else EXIT_INPUT
    if args.format == "json":
        return _dump(doc), status
    lines = [f"n = {code.n}"]
    for name, comp, rep in (("C1", code.c1, reports[0]), ("C2", code.c2, reports[1])):
        lines.append(f"{name} = {comp}  [{rep.form}] {'valid' if rep.ok else 'INVALID'}")
        lines += [f"  {c.name} fails: {c.detail}" for c in rep.failures()]
        lines += [f"  warning: {w}" for w in rep.warnings]
    if ok:
        lines.append(f"|C| = 2^{doc['size_log2']}, rank {doc['rank']}")
        lines.append(f"minimal generating set ({len(doc['generating_set'])} polynomials):")
        lines += [f"  {g}" for g in doc["generating_set"]]
    return "\n".join(lines) + "\n", status


def _verdict_line(name: str, holds: bool, requested: bool, detail: str = "") -> str:
    tag = "yes" if holds else "no"
    req = " (required)" if requested else ""
    return f"{name}: {tag}{req}" + (f"  {detail}" if detail else "")


def _sigma_output(spec: SigmaSetSpec, args, full: bool = True) -> tuple[str, int]:
    rows = generator_matrix(spec)
    log2 = len(span_basis(spec))
    doc = {
        "spec": spec.to_json(),
        "f": str(spec.f),
        "sigma_h": str(spec.sigma_h),
        "m": spec.m,
        "generator_matrix": [[str(c) for c in r] for r in rows],
        "span_size_log2": log2,
        "span_equals_ideal": span_equals_ideal(spec),
    }
    status = EXIT_OK
    if full:
        try:
            words = span_enumerate(spec, args.bound)
        except EnumerationBoundError as exc:
            doc["note"] = str(exc)
            words = None
        if words is not None:
            rev, rev_w = phi_image_reverse_closed(words)
            rc, rc_w = phi_image_rc_closed(words)
            gc = fixed_gc_report(words)
            doc["phi_reverse_closed"] = rev
            doc["phi_reverse_complement_closed"] = rc
            doc["contains_all_u"] = (U,) * spec.n in words
            doc["min_distance"] = min_hamming_distance(words) if len(words) > 1 else None
            doc["gc"] = gc.to_json()
            if rev_w is not None:
                doc["reverse_witness"] = [str(c) for c in rev_w]
            if rc_w is not None:
                doc["rc_witness"] = [str(c) for c in rc_w]
            failed = (args.reversible and not rev) or (args.rc and not rc)
            if args.gc_mode and not gc.verdict(args.gc_mode):
                failed = True
            status = EXIT_CONSTRAINT if failed else EXIT_OK
        elif args.reversible or args.rc or args.gc_mode:
            status = EXIT_INPUT
    if args.format == "json":
        return _dump(doc), status
    lines = [
        f"n = {spec.n}, f1 = {spec.f1}, f2 = {spec.f2}, m = {spec.m}",
        f"f = {doc['f']}",
        f"sigma(h) = {doc['sigma_h']}",
        "generator matrix (E0, F0, E1, F1, ...):",
        format_matrix(rows),
        f"span size 2^{log2}; span equals the ideal (f): {'yes' if doc['span_equals_ideal'] else 'no'}",
    ]
    if "phi_reverse_closed" in doc:
        lines.append(_verdict_line("phi-image reverse-closed", doc["phi_reverse_closed"], args.reversible))
        lines.append(
            _verdict_line(
                "phi-image reverse-complement closed", doc["phi_reverse_complement_closed"], args.rc
            )
        )
        lines.append(f"(u,...,u) in span: {'yes' if doc['contains_all_u'] else 'no'}")
        lines.append(f"minimum distance: {doc['min_distance']}")
        lines += _gc_lines(doc["gc"], args.gc_mode)
    if "note" in doc:
        lines.append(f"note: {doc['note']}")
    return "\n".join(lines) + "\n", status


def _gc_lines(gc: dict, mode: str | None) -> list[str]:
    hist = ", ".join(f"{k}:{v}" for k, v in gc["histogram"].items())
    out = [f"GC histogram {{{hist}}}"]
    out.append(f"  joint: |G|+|C| constant on nonzero words: {'yes' if gc['joint_constant'] else 'no'}")
    out.append(f"  balanced: #G = #C on nonzero words: {'yes' if gc['balanced'] else 'no'}")
    if mode:
        out.append(f"  required mode: {mode}")
    return out


def cmd_check(args) -> tuple[str, int]:
    code = load_code(args)
    if isinstance(code, SigmaSetSpec):
        return _sigma_output(code, args)
    _require_valid(code)
    report = check_code(code, args.bound)
    failed = (args.reversible and not report.reversible.holds) or (
        args.rc and not report.reverse_complement.holds
    )
    if args.gc_mode:
        if report.gc is None:
            raise InputError("GC check needs enumeration; raise --bound")
        failed = failed or not report.gc.verdict(args.gc_mode)
    status = EXIT_CONSTRAINT if failed else EXIT_OK
    if args.format == "json":
        return _dump(report.to_json()), status
    lines = [f"n = {code.n}, C1 = {code.c1}, C2 = {code.c2}"]
    lines.append(f"|C| = {report.size if report.size >= 0 else '2^' + str(code_size_log2(code))}")
    lines.append(_verdict_line("reversible", report.reversible.holds, args.reversible, report.reversible.method))
    lines += [f"  {r}" for r in report.reversible.reasons]
    lines.append(
        _verdict_line("reverse-complement", report.reverse_complement.holds, args.rc, report.reverse_complement.method)
    )
    lines += [f"  {r}" for r in report.reverse_complement.reasons]
    for name, v in report.brute_force.items():
        lines.append(f"brute force {name}: {'yes' if v.holds else 'no'}")
        if v.witness is not None:
            lines.append(f"  counterexample: {' '.join(map(str, v.witness))}")
    lines.append(f"minimum distance: {report.min_distance}")
    lines.append(f"rank: {report.rank}")
    if report.griesmer:
        lines.append(f"Griesmer sum: {report.griesmer[0]} (n = {code.n}, satisfied: {report.griesmer[1]})")
    if report.gc:
        lines += _gc_lines(report.gc.to_json(), args.gc_mode)
    lines += [f"note: {x}" for x in report.notes]
    return "\n".join(lines) + "\n", status


def _format_words(words: CodeWords, fmt: str) -> str:
    ordered = words.words()
    if fmt == "fasta":
        return to_fasta(ordered)
    if fmt == "decimal":
        return to_decimal_lines(ordered)
    if fmt == "json":
        doc = {
            "n": words.n,
            "size": len(words),
            "words": [[str(c) for c in w] for w in ordered],
            "dna": [phi(w) for w in ordered],
        }
        return _dump(doc)
    return "".join(",".join(str(c) for c in w) + "\n" for w in ordered)


def cmd_enumerate(args) -> tuple[str, int]:
    words = _words_of(load_code(args), args.bound)
    return _format_words(words, args.format), EXIT_OK


def cmd_export(args) -> tuple[str, int]:
    words = _words_of(load_code(args), args.bound)
    text = _format_words(words, args.format)
    if args.output and args.output != "-":
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from exc
        return f"wrote {len(words)} codewords to {args.output}\n", EXIT_OK
    return text, EXIT_OK


def cmd_sigma_set(args) -> tuple[str, int]:
    if not (args.f1 and args.f2) and not args.spec:
        raise InputError("sigma-set needs --n with --f1 and --f2, or --spec")
    code = load_code(args)
    if not isinstance(code, SigmaSetSpec):
        raise InputError("sigma-set needs f1 and f2, not a cyclic code spec")
    return _sigma_output(code, args)


def cmd_distance(args) -> tuple[str, int]:
    code = load_code(args)
    if isinstance(code, RCodeSpec):
        _require_valid(code)
    words = _words_of(code, args.bound)
    if len(words) < 2:
        raise InputError("the zero code has no minimum distance")
    d = min_hamming_distance(words)
    c1, c2 = components(words)
    dists = [min_hamming_distance(c) if len(c) > 1 else None for c in (c1, c2)]
    k = rank_of_code(code) if isinstance(code, RCodeSpec) else module_rank(words)
    bound, ok = griesmer_check(words.n, k, d) if k >= 1 else (None, None)
    doc = {
        "n": words.n,
        "size": len(words),
        "min_distance": d,
        "component_distances": dists,
        "rank": k,
        "griesmer": {"sum": bound, "satisfied": ok, "attained": bound == words.n},
    }
    if isinstance(code, RCodeSpec):
        doc["contains_all_u"] = contains_all_u(code)
    if args.format == "json":
        return _dump(doc), EXIT_OK
    lines = [
        f"[{words.n}, {k}, {d}] over R, {len(words)} codewords",
        f"component distances: d(C1) = {dists[0]}, d(C2) = {dists[1]}",
    ]
    if bound is not None:
        lines.append(f"Griesmer sum {bound} <= n = {words.n}: {ok}; attained: {bound == words.n}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_reproduce(args) -> tuple[str, int]:
    targets = IDS if args.id == "all" else (args.id,)
    results = [reproduce(t) for t in targets]
    if args.format == "json":
        doc = [
            {"id": r.id, "passed": r.passed, "lines": r.lines, "diff": r.diff, "data": r.data}
            for r in results
        ]
        text = _dump(doc if len(doc) > 1 else doc[0])
    else:
        text = "".join(r.text() for r in results)
    return text, EXIT_OK if all(r.passed for r in results) else EXIT_CONSTRAINT


# ------------------------------------------------------------------ parser


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="JSON spec file ('-' for stdin): a cyclic code or a sigma-set code")
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--c1", help="component C1 as g, g:p or g:p:a (binary polynomials)")
    p.add_argument("--c2", help="component C2 as g, g:p or g:p:a")
    p.add_argument("--f1", help="sigma-set polynomial f1 over F2+uF2")
    p.add_argument("--f2", help="sigma-set polynomial f2 over F2+uF2")
    p.add_argument("--augment-complement", action="store_true", help="add (u,...,u) to the sigma-set generators")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="enumeration bound (default 2^20 words)")


def _add_constraint_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--reversible", action="store_true", help="require reversibility")
    p.add_argument("--rc", action="store_true", help="require the reverse-complement constraint")
    p.add_argument(
        "--gc-mode",
        choices=("joint", "balanced"),
        help="require fixed GC content: joint |G|+|C| constant, or balanced #G = #C",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringdna", description="Cyclic DNA codes over F2+uF2+vF2+uvF2")
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^n-1 over F2 and count its divisors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("construct", help="validate a code spec and list a minimal generating set")
    _add_code_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="structural and brute-force constraint checks")
    _add_code_args(p)
    _add_constraint_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    for name, fn, default, help_ in (
        ("enumerate", cmd_enumerate, "text", "list all codewords"),
        ("export", cmd_export, "fasta", "write the DNA code as FASTA, decimal or JSON"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_code_args(p)
        p.add_argument("--format", choices=("text", "json", "fasta", "decimal"), default=default)
        if name == "export":
            p.add_argument("--output", "-o", help="output file (default stdout)")
        p.set_defaults(func=fn)

    p = sub.add_parser("sigma-set", help="generator matrix and DNA properties of <L(f)>")
    _add_code_args(p)
    _add_constraint_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sigma_set)

    p = sub.add_parser("distance", help="minimum Hamming distance and Griesmer comparison")
    _add_code_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("reproduce", help="regenerate a worked example and diff against golden data")
    p.add_argument("id", choices=(*IDS, "all"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s: %(message)s")
    if getattr(args, "bound", 1) < 1:
        print("error: --bound must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, status = args.func(args)
    except (InputError, InvalidSpecError, EnumerationBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OverflowError) as exc:
        # parse errors for polynomials and ring elements
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
