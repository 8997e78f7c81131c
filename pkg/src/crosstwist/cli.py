"""Command-line driver: validate, build, twist, verify-iso, corpus.

Exit codes: 0 all checks passed, 1 checks ran and at least one failed,
2 input error (bad file, unknown object, malformed flags).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algebra import Algebra, PointedSpace, check_algebra
from .corpus import (
    GaugeTransformation,
    QuasiBialgebra,
    RightModuleAlgebra,
    builtin_corpus,
    gauge_violations,
    module_algebra_violations,
    pentagon_violations,
    quasi_bialgebra_violations,
)
from .crossed import CrossedData, InvalidDataError, build_crossed_product, check_brz_axioms
from .fields import CharacteristicError, Field, FieldError, PrimeField, Rationals
from .io import DocumentError, SpecDocument, parse, report_to_json, serialize
from .linmap import LinMap
from .report import AxiomReport, format_check, merge
from .twist import (
    TheoremViolationError,
    TwistPair,
    TwistPreconditionError,
    TwistResult,
    apply_twist,
    check_twist_conditions,
    verify_twist_result,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _parse_field_flag(text: str) -> Field:
    if text == "rationals":
        return Rationals()
    if text.startswith("gf:"):
        try:
            return PrimeField(int(text[3:]))
        except (ValueError, FieldError) as exc:
            raise argparse.ArgumentTypeError(f"bad field spec {text!r}: {exc}")
    raise argparse.ArgumentTypeError(f"bad field spec {text!r} (use rationals or gf:<p>)")


def _load_document(args) -> SpecDocument:
    if not args.input:
        raise DocumentError("$", "missing --input")
    text = Path(args.input).read_text(encoding="utf-8")
    doc = parse(text)
    if getattr(args, "field", None) is not None and doc.field != args.field:
        raise DocumentError(
            "$.field",
            f"document field {doc.field.describe()} does not match requested "
            f"{args.field.describe()}",
        )
    return doc


def _emit(args, doc: SpecDocument) -> None:
    text = serialize(doc)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _print_report(args, results: list[dict]) -> None:
    if args.report == "json":
        sys.stdout.write(json.dumps({"results": results}, sort_keys=True, indent=2) + "\n")
        return
    for res in results:
        sys.stdout.write(f"== {res['object']} ({res['kind']})\n")
        for line in res.get("lines", []):
            sys.stdout.write(line + "\n")


def _report_result(name: str, kind: str, report: AxiomReport) -> dict:
    return {
        "object": name,
        "kind": kind,
        "passed": report.passed,
        "checks": json.loads(report_to_json(report))["checks"],
        "lines": [format_check(c) for c in report.checks],
    }


def _violations_result(name: str, kind: str, violations: list[str], note: str = "") -> dict:
    lines = [f"[FAIL] {v}" for v in violations]
    if not violations:
        lines = [f"[PASS] {note}" if note else "[PASS] all laws hold"]
    return {
        "object": name,
        "kind": kind,
        "passed": not violations,
        "violations": violations,
        "lines": lines,
    }


def _find_quasi(doc: SpecDocument) -> QuasiBialgebra | None:
    if isinstance(doc.objects.get("quasi"), QuasiBialgebra):
        return doc.objects["quasi"]
    candidates = [o for o in doc.objects.values() if isinstance(o, QuasiBialgebra)]
    return candidates[0] if len(candidates) == 1 else None


def _validate_one(doc: SpecDocument, name: str) -> dict:
    obj = doc.objects[name]
    if isinstance(obj, Algebra):
        return _report_result(name, "algebra", check_algebra(obj))
    if isinstance(obj, CrossedData):
        return _report_result(
            name, "crossed_data", merge(check_algebra(obj.a).checks, check_brz_axioms(obj).checks)
        )
    if isinstance(obj, QuasiBialgebra):
        violations = quasi_bialgebra_violations(obj) + pentagon_violations(obj)
        return _violations_result(name, "quasi_bialgebra", violations)
    if isinstance(obj, GaugeTransformation):
        quasi = _find_quasi(doc)
        if quasi is None:
            raise DocumentError(
                f"$.objects.{name}", "gauge validation needs a quasi_bialgebra object"
            )
        return _violations_result(name, "gauge_transformation", gauge_violations(quasi, obj))
    if isinstance(obj, RightModuleAlgebra):
        quasi = _find_quasi(doc)
        if quasi is None:
            raise DocumentError(
                f"$.objects.{name}", "module-algebra validation needs a quasi_bialgebra object"
            )
        return _violations_result(
            name, "right_module_algebra", module_algebra_violations(quasi, obj)
        )
    kind = {PointedSpace: "pointed_space", LinMap: "linmap", TwistPair: "twist_pair"}.get(
        type(obj), type(obj).__name__
    )
    return _violations_result(name, kind, [], note="shape invariants hold (checked at parse)")


def cmd_validate(args) -> int:
    doc = _load_document(args)
    if args.object is not None:
        if args.object not in doc.objects:
            raise DocumentError(f"$.objects.{args.object}", "no such object")
        names = [args.object]
    else:
        names = sorted(doc.objects)
    results = [_validate_one(doc, name) for name in names]
    _print_report(args, results)
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_FAILED


def cmd_build(args) -> int:
    doc = _load_document(args)
    name = args.object or "crossed"
    obj = doc.objects.get(name)
    if not isinstance(obj, CrossedData):
        raise DocumentError(f"$.objects.{name}", "expected a crossed_data object")
    try:
        product = build_crossed_product(obj)
    except InvalidDataError as exc:
        sys.stdout.write(f"[FAIL] {exc}\n")
        return EXIT_FAILED
    report = check_algebra(product)
    _print_report(args, [_report_result(name, "built_product", report)])
    if args.output:
        _emit(args, SpecDocument(field=doc.field, objects={f"{name}_product": product}))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_twist(args) -> int:
    doc = _load_document(args)
    name = args.object or "crossed"
    data = doc.objects.get(name)
    if not isinstance(data, CrossedData):
        raise DocumentError(f"$.objects.{name}", "expected a crossed_data object")
    pair = doc.objects.get(args.pair)
    if not isinstance(pair, TwistPair):
        raise DocumentError(f"$.objects.{args.pair}", "expected a twist_pair object")

    hypotheses = merge(check_brz_axioms(data).checks, check_twist_conditions(data, pair).checks)
    if not hypotheses.passed:
        _print_report(args, [_report_result(name, "twist_hypotheses", hypotheses)])
        return EXIT_FAILED
    try:
        result = apply_twist(data, pair)
    except (TwistPreconditionError, TheoremViolationError) as exc:
        sys.stdout.write(f"[FAIL] {exc}\n")
        return EXIT_FAILED
    report = verify_twist_result(data, result)
    _print_report(args, [_report_result(name, "twist_result", report)])
    if args.output:
        _emit(
            args,
            SpecDocument(
                field=doc.field,
                objects={
                    "crossed": data,
                    "crossed_prime": result.data_prime,
                    "r_prime": result.r_prime,
                    "sigma_prime": result.sigma_prime,
                    "phi": result.phi,
                    "phi_inverse": result.phi_inverse,
                },
            ),
        )
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_verify_iso(args) -> int:
    doc = _load_document(args)
    required = {"crossed": CrossedData, "crossed_prime": CrossedData, "phi": LinMap, "phi_inverse": LinMap}
    values = {}
    for key, kind in required.items():
        obj = doc.objects.get(key)
        if not isinstance(obj, kind):
            raise DocumentError(f"$.objects.{key}", f"expected a {kind.__name__} object")
        values[key] = obj
    prime = values["crossed_prime"]
    result = TwistResult(
        r_prime=prime.r,
        sigma_prime=prime.sigma,
        data_prime=prime,
        phi=values["phi"],
        phi_inverse=values["phi_inverse"],
    )
    report = verify_twist_result(values["crossed"], result)
    _print_report(args, [_report_result("crossed_prime", "stored_twist", report)])
    return EXIT_OK if report.passed else EXIT_FAILED


def _instance_document(field: Field, instance) -> SpecDocument:
    objects: dict = {"crossed": instance.data}
    if instance.pair is not None:
        objects["pair"] = instance.pair
    if instance.twisting is not None:
        objects["algebra_b"] = instance.twisting.b
    if instance.star is not None:
        objects["star"] = instance.star
    if instance.quasi is not None:
        objects["quasi"] = instance.quasi
    if instance.module_algebra is not None:
        objects["module_algebra"] = instance.module_algebra
    if instance.gauge is not None:
        objects["gauge"] = instance.gauge
    return SpecDocument(field=field, objects=objects)


def cmd_corpus(args) -> int:
    field = args.field if args.field is not None else Rationals()
    try:
        instances = builtin_corpus(field)
    except CharacteristicError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.emit is None:
        for idx, inst in enumerate(instances, start=1):
            tags = ",".join(inst.tags)
            sys.stdout.write(f"{idx}  {inst.name}  [{tags}]  {inst.description}\n")
        return EXIT_OK
    selected = None
    for idx, inst in enumerate(instances, start=1):
        if args.emit == str(idx) or args.emit == inst.name:
            selected = inst
            break
    if selected is None:
        sys.stderr.write(f"error: no corpus instance {args.emit!r}\n")
        return EXIT_INPUT
    _emit(args, _instance_document(field, selected))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosstwist",
        description="Validate, build, and twist crossed products of algebras with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", help="path to a document")
        p.add_argument("--object", help="name of the object to act on")
        p.add_argument("--output", help="write the resulting document to this path")
        p.add_argument("--report", choices=["json", "text"], default="text")
        p.add_argument(
            "--field",
            type=_parse_field_flag,
            default=None,
            help="rationals or gf:<p>; must match the document's field",
        )

    p = sub.add_parser("validate", help="run the axiom checks for stored objects")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build the crossed-product algebra from stored data")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("twist", help="apply a twist pair and certify the isomorphism")
    common(p)
    p.add_argument("--pair", default="pair", help="name of the twist_pair object")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("verify-iso", help="re-check a stored twist result")
    common(p)
    p.set_defaults(func=cmd_verify_iso)

    p = sub.add_parser("corpus", help="list or emit the builtin instances")
    common(p, with_input=False)
    p.add_argument("--emit", help="1-based index or name of the instance to emit")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
