"""Command-line surface: file ingestion, dispatch, and report emission.

All integers in input and output files are decimal strings so that
arbitrary precision survives any toolchain; degree keys are strings too.
Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import balmer, supportdata, verify
from .homalg import PerfectComplex, homology, tensor_chain
from .modcalc import GradedModule, kunneth
from .report import Report
from .znum import GENERIC, PrimeSet, SpclSubset, SpecZPoint


class InputError(Exception):
    pass


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")


def _load_object(path: str) -> GradedModule:
    """A graded module file, or a complex file (taken up to homology)."""
    data = _load_json(path)
    if isinstance(data, dict) and "ranks" in data:
        try:
            return homology(PerfectComplex.from_json(data, path))
        except ValueError as exc:
            raise InputError(str(exc))
    try:
        return GradedModule.from_json(data, path)
    except ValueError as exc:
        raise InputError(str(exc))


def _load_complex(path: str) -> PerfectComplex:
    try:
        return PerfectComplex.from_json(_load_json(path), path)
    except ValueError as exc:
        raise InputError(str(exc))


def _load_catalogue(path: str) -> supportdata.Catalogue:
    try:
        return supportdata.Catalogue.from_json(_load_json(path), path)
    except supportdata.CatalogueError as exc:
        raise InputError(str(exc))


def _parse_point(text: str) -> SpecZPoint:
    if text.lower() in ("generic", "0", "(0)"):
        return GENERIC
    try:
        return SpecZPoint.closed(int(text))
    except ValueError as exc:
        raise InputError(f"--point {text!r}: {exc}")


def _parse_prime_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad prime list {text!r}")


def _subset_from_args(args) -> SpclSubset:
    picked = [
        args.subset is not None,
        bool(args.all),
        args.closed is not None,
        args.closed_except is not None,
    ]
    if sum(picked) != 1:
        raise InputError("give exactly one of --subset, --all, --closed, --closed-except")
    if args.subset is not None:
        try:
            return SpclSubset.from_json(_load_json(args.subset), args.subset)
        except ValueError as exc:
            raise InputError(str(exc))
    if args.all:
        return SpclSubset.whole_space()
    try:
        if args.closed is not None:
            return SpclSubset.closed_points(PrimeSet.of(_parse_prime_list(args.closed)))
        return SpclSubset.closed_points(
            PrimeSet.cofinite(_parse_prime_list(args.closed_except))
        )
    except ValueError as exc:
        raise InputError(str(exc))


def _add_subset_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--subset", help="subset JSON file")
    p.add_argument("--all", action="store_true", help="the whole spectrum")
    p.add_argument("--closed", help="comma-separated primes (finite closed set)")
    p.add_argument(
        "--closed-except", help="comma-separated primes (all closed points except these)"
    )


def _emit(args, human_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _emit_report(args, title: str, report: Report) -> int:
    payload = {"command": title, **report.to_json()}
    _emit(args, report.lines(), payload)
    return 0 if report.passed else 1


def cmd_homology(args) -> int:
    h = homology(_load_complex(args.complex))
    _emit(args, [str(h)], {"homology": h.to_json()})
    return 0


def cmd_tensor(args) -> int:
    a, b = _load_json(args.left), _load_json(args.right)
    chain = isinstance(a, dict) and "ranks" in a
    if chain != (isinstance(b, dict) and "ranks" in b):
        raise InputError("tensor: both inputs must be complexes or both graded modules")
    if chain:
        try:
            ca = PerfectComplex.from_json(a, args.left)
            cb = PerfectComplex.from_json(b, args.right)
        except ValueError as exc:
            raise InputError(str(exc))
        h = homology(tensor_chain(ca, cb))
    else:
        try:
            h = kunneth(
                GradedModule.from_json(a, args.left), GradedModule.from_json(b, args.right)
            )
        except ValueError as exc:
            raise InputError(str(exc))
    _emit(args, [str(h)], {"tensor-homology": h.to_json()})
    return 0


def cmd_support(args) -> int:
    supp = balmer.supp_object(_load_object(args.object))
    _emit(args, [str(supp)], {"support": supp.to_json()})
    return 0


def cmd_idempotent(args) -> int:
    if args.point is not None:
        idem = balmer.gamma_point(_parse_point(args.point))
        name = f"gamma at point {idem.point}"
    else:
        v = _subset_from_args(args)
        idem = balmer.l_v(v) if args.flavor == "l" else balmer.gamma_v(v)
        name = f"{args.flavor} at {v}"
    value = idem.value
    square = kunneth(value, value)
    ok = square == value
    lines = [f"{name}: {value}", f"idempotency: {'pass' if ok else 'FAIL'}"]
    payload = {
        "idempotent": name,
        "value": value.to_json(),
        "idempotency": "pass" if ok else "fail",
    }
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_triangle_check(args) -> int:
    v = _subset_from_args(args)
    return _emit_report(args, "triangle-check", balmer.localization_triangle_check(v))


def cmd_ltg(args) -> int:
    return _emit_report(args, "ltg", balmer.ltg_check(_load_object(args.object)))


def cmd_classify(args) -> int:
    code = balmer.sigma_loc([_load_object(p) for p in args.objects])
    lines = [f"localising subcategory code: {code}"]
    _emit(args, lines, {"code": code.to_json()})
    return 0


def cmd_prime(args) -> int:
    if args.point is not None:
        x = _parse_point(args.point)
        prime = balmer.point_to_prime(x)
        lines = [
            f"{prime}",
            f"membership: complexes with support inside {prime.defining}",
        ]
        _emit(args, lines, {"point": str(x), "defining": prime.defining.to_json()})
        return 0
    v = _subset_from_args(args)
    try:
        x = balmer.prime_to_point(v, args.primes_bound)
    except balmer.NotPrimeError as exc:
        lines = [f"not prime: {exc}"]
        payload = {"prime": False, "reason": str(exc)}
        if exc.witness is not None:
            payload["witness"] = [c.to_json() for c in exc.witness]
            lines.append("witness: two cones outside whose tensor lies inside")
        _emit(args, lines, payload)
        return 1
    _emit(args, [f"point: {x}"], {"prime": True, "point": str(x)})
    return 0


def cmd_catalogue_spc(args) -> int:
    cat = _load_catalogue(args.catalogue)
    primes = supportdata.enumerate_primes(cat)
    datum = supportdata.spc_support(cat)
    lines = [f"{len(primes)} prime thick tensor-ideals"]
    payload_primes = []
    for p in primes:
        names = list(cat.names_of(p))
        lines.append("prime: {" + ", ".join(names) + "}")
        payload_primes.append(names)
    supports = {}
    for i, name in enumerate(cat.objects):
        pts = sorted(
            "{" + ", ".join(cat.names_of(p)) + "}" for p in datum.sigma[i]
        )
        supports[name] = pts
        lines.append(f"supp {name}: [" + "; ".join(pts) + "]")
    _emit(args, lines, {"primes": payload_primes, "supports": supports})
    return 0


def _load_datum(path: str, cat: supportdata.Catalogue) -> supportdata.SupportDatum:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected an object")
    try:
        points = list(data["points"])
        order = [tuple(pair) for pair in data.get("order", [])]
        space = supportdata.FiniteSpace.of(points, order)
        sigma_raw = data["sigma"]
        sigma = []
        for name in cat.objects:
            if name not in sigma_raw:
                raise InputError(f"{path}: sigma missing object {name!r}")
            sigma.append(frozenset(sigma_raw[name]))
        return supportdata.SupportDatum.of(space, sigma)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed datum ({exc})")
    except ValueError as exc:
        raise InputError(f"{path}: {exc}")


def cmd_catalogue_universal(args) -> int:
    cat = _load_catalogue(args.catalogue)
    if args.datum:
        datum = _load_datum(args.datum, cat)
    else:
        datum = supportdata.spc_support(cat)
    axioms = supportdata.check_axioms(datum, cat)
    if not axioms.passed:
        return _emit_report(args, "catalogue-universal", axioms)
    result = supportdata.universal_map(datum, cat)
    lines = []
    mapping_payload = {}
    for x, fx in result.mapping:
        names = list(cat.names_of(fx))
        label = supportdata.point_label(x, cat)
        lines.append(f"f({label}) = {{{', '.join(names)}}}")
        mapping_payload[label] = names
    report = axioms.merged(result.report)
    lines.extend(report.lines())
    payload = {"map": mapping_payload, **report.to_json()}
    _emit(args, lines, payload)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("TT_SUPPORT_WORKERS", "1"))
    report = verify.run_verify(args.seed, args.cases, args.primes_bound, workers)
    lines = list(report.lines())
    failed = len(report.failures())
    lines.append(
        f"verify: {len(report.records)} checks, {failed} failed "
        f"(seed {args.seed}, cases {args.cases}, primes-bound {args.primes_bound})"
    )
    payload = {
        "seed": args.seed,
        "cases": args.cases,
        "primes_bound": args.primes_bound,
        **report.to_json(),
    }
    _emit(args, lines, payload)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttsupport",
        description="Exact support theory for the derived category of the integers.",
    )
    parser.add_argument(
        "--format", choices=["human", "json"], default="human", help="report style"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology of a perfect complex")
    p.add_argument("complex", help="complex JSON file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("tensor", help="derived tensor of two complexes or objects")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("support", help="support of an object")
    p.add_argument("--object", required=True, help="graded module or complex JSON file")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("idempotent", help="tensor-idempotent for a point or subset")
    p.add_argument("--point", help="a prime, or 'generic'")
    _add_subset_flags(p)
    p.add_argument("--flavor", choices=["gamma", "l"], default="gamma")
    p.set_defaults(func=cmd_idempotent)

    p = sub.add_parser("triangle-check", help="acyclisation/localisation triangle checks")
    _add_subset_flags(p)
    p.set_defaults(func=cmd_triangle_check)

    p = sub.add_parser("ltg", help="local-to-global checks for an object")
    p.add_argument("--object", required=True)
    p.set_defaults(func=cmd_ltg)

    p = sub.add_parser("classify", help="subset code of the generated localising subcategory")
    p.add_argument("--objects", nargs="+", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prime", help="point/prime dictionary in both directions")
    p.add_argument("--point", help="a prime, or 'generic'")
    _add_subset_flags(p)
    p.add_argument("--primes-bound", type=int, default=100)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("catalogue-spc", help="spectrum of a finite catalogue")
    p.add_argument("catalogue")
    p.set_defaults(func=cmd_catalogue_spc)

    p = sub.add_parser("catalogue-universal", help="comparison map into the spectrum")
    p.add_argument("catalogue")
    p.add_argument("--datum", help="support datum JSON file (default: the spectrum's own)")
    p.set_defaults(func=cmd_catalogue_universal)

    p = sub.add_parser("verify", help="run the full property suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--primes-bound", type=int, default=100)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
