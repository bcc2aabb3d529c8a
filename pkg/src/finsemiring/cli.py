"""Command line: analyze, catalog, enumerate, verify, export.

Exit status is 0 when nothing failed, 1 when a verification claim failed
and 2 on input errors (bad tables, unknown names, orders beyond the caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .congruences import LATTICE_ORDER_CAP, congruence_lattice, is_congruence_simple, monolith
from .constructions import catalog, catalog_names, catalog_semiring
from .divisibility import is_mult_divisible
from .enumeration import ConstraintSet, default_threads, enumerate_semirings, write_result
from .errors import AxiomError, SemiringError
from .ideals import is_bi_ideal_simple, is_ideal_simple
from .morphisms import canonical_form
from .tables import FiniteSemiring, classify_elements, format_semiring, format_table, parse_semiring, predicates
from .verifier import verify_classification, verify_corpus_properties, verify_semiring

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

_FLAGS = {
    "mult_idempotent": "multiplication idempotent (xx = x)",
    "add_idempotent": "addition idempotent (x + x = x)",
    "commutative_mul": "commutative multiplication",
    "has_mult_absorbing": "keep classes with a multiplicatively absorbing element",
    "congruence_simple_filter": "keep congruence-simple classes",
    "ideal_simple_filter": "keep ideal-simple classes",
    "bi_ideal_simple_filter": "keep bi-ideal-simple classes",
    "mult_divisible_filter": "keep multiplicatively divisible classes",
}


def load_target(spec: str) -> FiniteSemiring:
    """A table file path, ``catalog:NAME`` or a bare catalog name."""
    if spec.startswith("catalog:"):
        return catalog_semiring(spec[len("catalog:") :])
    path = Path(spec)
    if path.is_file():
        return parse_semiring(path.read_text())
    return catalog_semiring(spec)


def _check_text(c) -> str:
    return "true" if c else f"false (witness {list(c.witness) if c.witness is not None else None})"


def analyze(s: FiniteSemiring) -> tuple[str, dict, bool]:
    pred = predicates(s)
    prof = classify_elements(s)
    cs = is_congruence_simple(s)
    ids = is_ideal_simple(s)
    bis = is_bi_ideal_simple(s)
    div = is_mult_divisible(s)
    mono = monolith(s)
    lattice_size = len(congruence_lattice(s)) if s.order <= LATTICE_ORDER_CAP else None
    report = verify_semiring(s)
    cf = canonical_form(s)

    lines = [format_semiring(s).rstrip(), ""]
    lines.append(f"canonical digest: {cf.digest()}")
    for k, v in pred.as_dict().items():
        if k != "counterexamples":
            lines.append(f"{k}: {str(v).lower()}")
    for k, v in pred.counterexamples.items():
        lines.append(f"  counterexample {k}: {list(v)}")
    lines.append("elements:")
    for p in prof:
        tags = [k[3:] for k, v in asdict(p).items() if k.startswith("is_") and v]
        lines.append(f"  {p.element}: {', '.join(tags) or '-'}")
    lines.append(f"congruence_simple: {str(cs).lower()}")
    lines.append(f"ideal_simple: {_check_text(ids)}")
    lines.append(f"bi_ideal_simple: {_check_text(bis)}")
    lines.append(f"mult_divisible: {_check_text(div)}")
    lines.append(f"monolith: {mono.partition if mono.exists else 'none'}")
    lines.append(f"congruence_lattice_size: {lattice_size if lattice_size is not None else 'above cap'}")
    lines.append("")
    lines.append(report.text())

    data = {
        "order": s.order,
        "add": [list(r) for r in s.add],
        "mul": [list(r) for r in s.mul],
        "canonical_digest": cf.digest(),
        "predicates": pred.as_dict(),
        "elements": [asdict(p) for p in prof],
        "congruence_simple": cs,
        "ideal_simple": {"value": bool(ids), "witness": ids.witness},
        "bi_ideal_simple": {"value": bool(bis), "witness": bis.witness},
        "mult_divisible": {"value": bool(div), "witness": div.witness},
        "monolith": str(mono.partition) if mono.exists else None,
        "congruence_lattice_size": lattice_size,
        "report": report.as_dict(),
    }
    return "\n".join(lines), data, report.passed


def _cmd_analyze(args):
    s = load_target(args.target)
    text, data, ok = analyze(s)
    return text, data, ok


def _cmd_catalog(args):
    if args.name is None:
        names = catalog_names()
        return "\n".join(names), {"names": names}, True
    entry = catalog(args.name)
    names = list(entry.element_names)
    if entry.is_semiring:
        body = format_semiring(entry.value).rstrip()
        data = {"name": entry.name, "kind": "semiring", "elements": names,
                "add": [list(r) for r in entry.value.add], "mul": [list(r) for r in entry.value.mul]}
    else:
        body = f"{entry.value.order}\n{format_table(entry.value.join)}"
        data = {"name": entry.name, "kind": "semilattice", "elements": names,
                "join": [list(r) for r in entry.value.join]}
    text = f"{entry.name} ({data['kind']}); elements {' '.join(names)} as 0..{len(names) - 1}\n{body}"
    return text, data, True


def _cmd_enumerate(args):
    c = ConstraintSet(**{k: getattr(args, k) for k in _FLAGS})
    result = enumerate_semirings(args.order, c, threads=args.threads)
    lines = result.manifest_lines()
    if args.out:
        out = write_result(result, args.out)
        lines.append(f"written to {out}")
    return "\n".join(lines), result.as_dict(), True


def _cmd_verify(args):
    if args.suite == "classification":
        rep = verify_classification(args.max_order, args.mode, threads=args.threads)
    elif args.suite == "corpus":
        rep = verify_corpus_properties(args.max_order, threads=args.threads)
    else:
        if not args.target:
            raise SemiringError("--target is required for the semiring suite")
        rep = verify_semiring(load_target(args.target))
    return rep.text(), rep.as_dict(), rep.passed


def _cmd_export(args):
    s = catalog_semiring(args.name)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(format_semiring(s))
    return f"wrote {args.name} to {out}", {"name": args.name, "path": str(out)}, True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finsemiring", description="Finite semiring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json-out", metavar="PATH", help="also write a JSON document here")
        return sp

    a = with_json(sub.add_parser("analyze", help="predicates, simplicity and claim report for one semiring"))
    a.add_argument("target", help="table file, catalog:NAME or NAME")
    a.set_defaults(func=_cmd_analyze)

    c = with_json(sub.add_parser("catalog", help="list catalog names or show one entry"))
    c.add_argument("name", nargs="?")
    c.set_defaults(func=_cmd_catalog)

    e = with_json(sub.add_parser("enumerate", help="all semirings of one order up to isomorphism"))
    e.add_argument("--order", type=int, required=True)
    for k, help_text in _FLAGS.items():
        e.add_argument("--" + k.replace("_", "-"), dest=k, action="store_true", help=help_text)
    e.add_argument("--out", help="directory for class files, manifest.txt and result.json")
    e.add_argument("--threads", type=int, default=default_threads())
    e.set_defaults(func=_cmd_enumerate)

    v = with_json(sub.add_parser("verify", help="run a verification suite"))
    v.add_argument("--suite", choices=["classification", "corpus", "semiring"], required=True)
    v.add_argument("--max-order", type=int, default=None)
    v.add_argument("--mode", choices=["restricted", "full", "both"], default="restricted")
    v.add_argument("--target", help="for --suite semiring: table file, catalog:NAME or NAME")
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(func=_cmd_verify)

    x = with_json(sub.add_parser("export", help="write a catalog semiring as a table file"))
    x.add_argument("--name", required=True)
    x.add_argument("--out", required=True)
    x.set_defaults(func=_cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_order", None) is None and args.command == "verify":
        args.max_order = 4 if args.suite in ("classification", "corpus") else None
    try:
        text, data, ok = args.func(args)
    except AxiomError as exc:
        print(f"error: {exc} (witness {list(exc.witness)})", file=sys.stderr)
        return EXIT_ERROR
    except (SemiringError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(text)
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(data, indent=2, sort_keys=True, default=str) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
