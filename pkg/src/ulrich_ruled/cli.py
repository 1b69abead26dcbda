"""Command-line front end.

Every subcommand prints one JSON object per line (``--table`` switches to
aligned columns).  Exit codes: 0 success, 2 invalid input, 3 internal
invariant violation.

Examples::

    ulrich-ruled verdict --g 1 --e -1 --a 3 --b 5
    ulrich-ruled oracle --e 1 --a 1 --b 2 --grid-limit 10
    ulrich-ruled sweep --g 1:3 --e=-3:0 --a 1:4 --b 3:6 --table
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from . import cohom, moduli, rank2, ulrich
from .errors import IntegralityError, InvariantViolation, ValidationError
from .surface import DivisorClass, RuledSurfaceParams

VERDICT_KEYS = ("g", "e", "a", "b", "verdict", "citation", "classes", "family_dim", "notes")

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3


def _rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def _pair(d: DivisorClass) -> list[int]:
    return [d.a, d.b]


# ---------------------------------------------------------------- records


def verdict_record(g: int, e: int, a: int, b: int, generic_bundle=False, generic_curve=False) -> dict:
    s = RuledSurfaceParams(g, e)
    h = DivisorClass(a, b)
    v = ulrich.existence_verdict(s, h, generic_bundle=generic_bundle, generic_curve=generic_curve)
    classes = []
    if v.outcome is not ulrich.Outcome.NOT_EXISTS:
        classes = [_pair(c.cls) for c in ulrich.candidate_classes(s, h)]
    notes = list(v.notes)
    if v.violated:
        notes.insert(0, f"violated: {v.violated}")
    if generic_bundle or generic_curve:
        assumed = [n for n, f in (("generic_bundle", generic_bundle), ("generic_curve", generic_curve)) if f]
        notes.append("assumed: " + ",".join(assumed))
    return {
        "g": g,
        "e": e,
        "a": a,
        "b": b,
        "verdict": v.outcome.value,
        "citation": v.citation,
        "classes": classes,
        "family_dim": v.family_dimension,
        "notes": notes,
    }


def classes_record(g: int, e: int, a: int, b: int) -> dict:
    s = RuledSurfaceParams(g, e)
    h = DivisorClass(a, b)
    high, low = ulrich.candidate_classes(s, h)
    return {
        "g": g,
        "e": e,
        "a": a,
        "b": b,
        "u_degree": high.u_degree,
        "high": _pair(high.cls),
        "low": _pair(low.cls),
        "genericity_required": high.genericity_required,
        "numerical_check": [
            ulrich.numerical_ulrich_check(s, h, high.cls),
            ulrich.numerical_ulrich_check(s, h, low.cls),
        ],
        "dual_of_high": _pair(ulrich.ulrich_dual(s, h, high.cls)),
    }


def dual_record(g: int, e: int, a: int, b: int, cls: DivisorClass) -> dict:
    s = RuledSurfaceParams(g, e)
    h = DivisorClass(a, b)
    return {
        "g": g,
        "e": e,
        "a": a,
        "b": b,
        "class": _pair(cls),
        "dual": _pair(ulrich.ulrich_dual(s, h, cls)),
        "numerical_check": ulrich.numerical_ulrich_check(s, h, cls),
    }


def rank2_record(g: int, e: int, a: int, b: int) -> dict:
    """Pick the construction whose hypotheses hold and report its data."""
    s = RuledSurfaceParams(g, e)
    h = DivisorClass(a, b)
    target = rank2.special_target(s, h)
    record = {
        "g": g,
        "e": e,
        "a": a,
        "b": b,
        "c1": _pair(target.c1),
        "c2": target.c2,
    }
    failures = []
    if g < 1 or a < 2:
        failures.append(f"hyperplane: needs g >= 1 and a >= 2 (g={g}, a={a})")
    else:
        report = rank2.hyperplane_extension(s, h)
        if report.sufficient:
            datum = report.datum
            record.update(
                construction="hyperplane",
                threshold=_rational(report.threshold),
                sufficient=True,
                family_dim=rank2.hyperplane_family_dimension(s, h),
                semistable_bound=_rational(rank2.semistable_family_bound(s, h)) if e <= 0 else None,
                stability=report.stability_note,
            )
            return _finish_rank2(s, record, datum, target)
        failures.append(f"hyperplane: b={b} does not exceed threshold {_rational(report.threshold)}")
    try:
        datum = rank2.degree_zero_extension(s, h)
    except ValidationError as exc:
        failures.append(str(exc))
        raise ValidationError("no rank-2 construction applies: " + " | ".join(failures)) from None
    record.update(
        construction="degree_zero",
        sufficient=True,
        stability=(
            "whether the degree-0 part of the determinant is trivial is invisible numerically; "
            "deg Z uses the worst case alpha+eps+1 <= (alpha+eps)b, which needs b >= 3"
        ),
    )
    return _finish_rank2(s, record, datum, target)


def _finish_rank2(s, record, datum, target) -> dict:
    ok = rank2.extension_chern_check(s, datum, target)
    if not ok:
        raise InvariantViolation(f"Chern classes of the {datum.construction} extension miss the target")
    record.update(
        sub=_pair(datum.sub),
        quot=_pair(datum.quot),
        z_degree=datum.z_degree,
        v_degree=datum.generic_v_degree,
        chern_ok=ok,
    )
    return record


def oracle_record(e: int, a: int, b: int, grid_limit: int = 12) -> dict:
    """Brute-force all Ulrich line classes on ``F_e`` and compare with the prediction.

    On the projective line ``Pic^u`` is a point, so whether the candidate
    classes are actually Ulrich is decided exactly by ``h^0(S^{a-1}E(u)) = 0``.
    """
    s = RuledSurfaceParams(0, e)
    h = DivisorClass(a, b)
    found = [_pair(c) for c in ulrich.brute_force_ulrich_g0(s, h, grid_limit)]
    try:
        high, low = ulrich.candidate_classes(s, h)
    except IntegralityError:
        candidates, predicted = [], []
    else:
        candidates = sorted([_pair(high.cls), _pair(low.cls)])
        u_ok = cohom.h0_sym_bounds(s, a - 1, high.u_degree).hi == 0
        predicted = candidates if u_ok else []
    return {
        "e": e,
        "h": [a, b],
        "grid_limit": grid_limit,
        "ulrich_classes": found,
        "candidates": candidates,
        "predicted": predicted,
        "agree": sorted(found) == predicted,
    }


def strata_records(g: int, r: int, d: int, r_prime: int, s: int | None = None) -> list[dict]:
    values = [s] if s is not None else moduli.valid_segre_values(g, r, d, r_prime)
    if s is None and not values:
        # let stratum() explain why nothing is admissible
        moduli.stratum(g, r, d, r_prime, 1)
    out = []
    for value in values:
        st = moduli.stratum(g, r, d, r_prime, value)
        out.append(
            {
                "g": g,
                "r": r,
                "d": d,
                "r_prime": r_prime,
                "s": st.s,
                "dimension": st.dimension,
                "closure_successor": st.closure_successor,
            }
        )
    return out


def theta_record(g: int, e: int, a: int, generic_bundle=False, generic_curve=False) -> dict:
    s = RuledSurfaceParams(g, e)
    inv = moduli.sym_power_invariants(s, a)
    target = moduli.theta_target(g, inv.rank, inv.degree)
    status = moduli.theta_proper_status(s, a, generic_bundle, generic_curve) if a >= 2 else None
    notes = []
    if e < 0 and e % 2 and a >= 2:
        notes.append(moduli.ODD_DEGREE_EVERY_CURVE_CONJECTURE)
    return {
        "g": g,
        "e": e,
        "a": a,
        "rank": inv.rank,
        "degree": inv.degree,
        "twist_degree": _rational(inv.twist_degree),
        "twisted_slope": _rational(inv.twisted_slope),
        "target": str(target),
        "status": status.value if status else None,
        "notes": notes,
    }


# ---------------------------------------------------------------- sweep


@dataclass(frozen=True)
class SweepSpec:
    g: tuple[int, int]
    e: tuple[int, int]
    a: tuple[int, int]
    b: tuple[int, int]
    generic_bundle: bool = False
    generic_curve: bool = False
    with_rank2: bool = False

    def points(self) -> Iterator[tuple[int, int, int, int]]:
        span = lambda r: range(r[0], r[1] + 1)  # noqa: E731
        return itertools.product(span(self.g), span(self.e), span(self.a), span(self.b))


@dataclass
class SweepResult:
    rows: list[dict]
    skipped: list[tuple[tuple[int, int, int, int], str]]


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate every point in lexicographic ``(g, e, a, b)`` order.

    Points with ``e < -g`` are clipped with reason ``nagata``; any other
    failure becomes an ``ERROR`` row and the sweep continues.
    """
    rows, skipped = [], []
    for g, e, a, b in spec.points():
        if e < -g or g < 0:
            skipped.append(((g, e, a, b), "nagata"))
            continue
        try:
            row = verdict_record(g, e, a, b, spec.generic_bundle, spec.generic_curve)
        except (ValidationError, InvariantViolation) as exc:
            row = dict.fromkeys(VERDICT_KEYS)
            row.update(g=g, e=e, a=a, b=b, verdict="ERROR", citation="", classes=[], notes=[str(exc)])
        if spec.with_rank2:
            try:
                row["rank2"] = rank2_record(g, e, a, b)
            except (ValidationError, InvariantViolation) as exc:
                row["rank2"] = {"error": str(exc)}
        rows.append(row)
    return SweepResult(rows, skipped)


# ---------------------------------------------------------------- output


def dumps(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(", ", ": "))


def format_table(records: list[dict]) -> str:
    if not records:
        return ""
    cols = list(records[0])
    for rec in records[1:]:
        cols.extend(k for k in rec if k not in cols)

    def cell(v):
        if v is None:
            return "-"
        if isinstance(v, (list, dict)):
            return json.dumps(v, separators=(",", ":"))
        return str(v)

    cells = [[cell(rec.get(c)) for c in cols] for rec in records]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def render(records: Iterable[dict], table: bool = False) -> str:
    records = list(records)
    if table:
        return format_table(records)
    return "".join(dumps(r) + "\n" for r in records)


# ---------------------------------------------------------------- argparse


def parse_range(text: str) -> tuple[int, int]:
    """``"3"`` -> ``(3, 3)``; ``"-3:0"`` -> ``(-3, 0)``."""
    head, sep, tail = text.partition(":")
    try:
        lo = int(head)
        hi = int(tail) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO:HI, got {text!r}") from None
    return lo, hi


def parse_class(text: str) -> DivisorClass:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B, got {text!r}") from None
    return DivisorClass(a, b)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrich-ruled",
        description="Ulrich line bundles and special rank-2 Ulrich data on ruled surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, b=True, flags=True):
        p.add_argument("--g", type=int, required=True, help="genus of the base curve")
        p.add_argument("--e", type=int, required=True, help="invariant e of the surface")
        p.add_argument("--a", type=int, required=True, help="h.f")
        if b:
            p.add_argument("--b", type=int, required=True, help="degree of the fibre part of h")
        if flags:
            p.add_argument("--generic-bundle", action="store_true")
            p.add_argument("--generic-curve", action="store_true")
        p.add_argument("--table", action="store_true", help="aligned columns instead of JSON lines")
        p.add_argument("--out", metavar="FILE", help="write output to FILE")

    common(sub.add_parser("verdict", help="existence of Ulrich line bundles"))
    common(sub.add_parser("classes", help="candidate Ulrich line classes"), flags=False)
    p = sub.add_parser("dual", help="Ulrich dual 3h + K - D of a class")
    common(p, flags=False)
    p.add_argument("--class", dest="cls", type=parse_class, required=True, metavar="A,B")
    common(sub.add_parser("rank2", help="special rank-2 Ulrich construction data"), flags=False)
    common(sub.add_parser("theta", help="theta target of S^(a-1)E and its known properness"), b=False)

    p = sub.add_parser("oracle", help="genus-0 brute-force Ulrich line classes")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--grid-limit", type=int, default=12)
    p.add_argument("--table", action="store_true")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("sweep", help="verdict table over ranges (use --e=-3:0 for negative ranges)")
    for name in ("g", "e", "a", "b"):
        p.add_argument(f"--{name}", type=parse_range, required=True, metavar="LO:HI")
    p.add_argument("--generic-bundle", action="store_true")
    p.add_argument("--generic-curve", action="store_true")
    p.add_argument("--rank2", action="store_true", help="attach rank-2 data to each row")
    p.add_argument("--table", action="store_true")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("strata", help="Segre strata U_{r',s}(r,d) and their dimensions")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r-prime", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--table", action="store_true")
    p.add_argument("--out", metavar="FILE")
    return parser


def _records(args) -> list[dict]:
    cmd = args.command
    if cmd == "verdict":
        return [verdict_record(args.g, args.e, args.a, args.b, args.generic_bundle, args.generic_curve)]
    if cmd == "classes":
        return [classes_record(args.g, args.e, args.a, args.b)]
    if cmd == "dual":
        return [dual_record(args.g, args.e, args.a, args.b, args.cls)]
    if cmd == "rank2":
        return [rank2_record(args.g, args.e, args.a, args.b)]
    if cmd == "theta":
        return [theta_record(args.g, args.e, args.a, args.generic_bundle, args.generic_curve)]
    if cmd == "oracle":
        if args.e < 0:
            raise ValidationError(f"Hirzebruch surfaces need e >= 0, got e={args.e}")
        return [oracle_record(args.e, args.a, args.b, args.grid_limit)]
    if cmd == "strata":
        return strata_records(args.g, args.r, args.d, args.r_prime, args.s)
    if cmd == "sweep":
        spec = SweepSpec(args.g, args.e, args.a, args.b, args.generic_bundle, args.generic_curve, args.rank2)
        result = run_sweep(spec)
        if result.skipped:
            print(f"skipped {len(result.skipped)} point(s): nagata (e < -g)", file=sys.stderr)
        return result.rows
    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        records = _records(args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    text = render(records, args.table)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
