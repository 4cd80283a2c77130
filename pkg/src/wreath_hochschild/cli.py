"""Command-line entry point: computations and verification suites.

Subcommands
    series     bivariate generating series of a preset (product form)
    betti      cohomology table of the n-th wreath product of a preset
    hilb       orbifold Poincare polynomial of a symmetric power
    deform     deformation parameter count of a preset
    cherednik  normal-order a word in the rational Cherednik algebra
    verify     run the verification suites, exit 0 iff everything passes

Exit codes: 0 success, 1 verification failure, 2 usage error.  Error
messages go to standard error.  The brute-force size cap honours the
HH_SIZE_CAP environment variable; randomized suites take --seed.
"""

import argparse
import random
import sys
from fractions import Fraction

from .betti import BettiTable
from .bruteforce import (
    FiniteDimAlgebra,
    GroupAction,
    afls_check,
    homotopy_identity_check,
    slot_permutation,
    verify_homolog_i,
)
from .cherednik import (
    associativity_check,
    confluence_check,
    normal_order,
    pbw_dimension_check,
    spherical_check,
)
from .koszul import (
    KINDS,
    TWISTS,
    build_cochain_complex,
    crossed_z2_cohomology,
    duality_check,
    hh_cohomology_rank_one,
)
from .partitions import count_by_length
from .presets_io import CheckReport, emit, load_preset
from .wreath import (
    CLOSED_FORM_PRESETS,
    closed_form,
    deformation_parameter_count,
    generating_series_product,
    generating_series_sum,
    hh_cohomology_wreath,
    hilb_poincare,
)

# group B replaces each rank-one preset by its Z/2 crossed product
Z2_COMPANIONS = {"weyl": "z2_weyl", "trig": "z2_trig", "qweyl": "z2_qweyl"}


def _cmd_series(args) -> int:
    preset = load_preset(args.preset)
    if args.group == "B":
        companion = Z2_COMPANIONS.get(preset.name)
        if companion is None:
            raise ValueError(f"preset {preset.name!r} has no Z2 companion; group B "
                             f"applies only to {sorted(Z2_COMPANIONS)}")
        preset = load_preset(companion)
    series = generating_series_product(preset.betti, preset.d, args.max_q, args.max_t)
    sys.stdout.buffer.write(emit(series, args.format))
    return 0


def _cmd_betti(args) -> int:
    preset = load_preset(args.preset)
    table = hh_cohomology_wreath(preset.betti, preset.d, args.n)
    sys.stdout.buffer.write(emit(table, args.format))
    return 0


def _cmd_hilb(args) -> int:
    try:
        dims = [int(v) for v in args.betti.split(",")]
    except ValueError:
        raise ValueError(f"--betti expects comma-separated integers, got {args.betti!r}")
    table = hilb_poincare(BettiTable(dict(enumerate(dims))), args.n)
    sys.stdout.buffer.write(emit(table, args.format))
    return 0


def _cmd_deform(args) -> int:
    preset = load_preset(args.preset)
    print(deformation_parameter_count(preset.betti, preset.d, args.n))
    return 0


def _cmd_cherednik(args) -> int:
    print(normal_order(args.word, args.n))
    return 0


# ---------------------------------------------------------------------------
# verification suites


def verify_wreath(seed: int = 0) -> list:
    reports = []

    lines, ok = [], True

    def record(flag: bool, text: str):
        nonlocal ok
        ok = ok and flag
        lines.append(("[pass] " if flag else "[FAIL] ") + text)

    for label in sorted(CLOSED_FORM_PRESETS):
        preset = load_preset(CLOSED_FORM_PRESETS[label])
        closed = closed_form(label, 8, 40)
        prod = generating_series_product(preset.betti, preset.d, 8, 40)
        sums = generating_series_sum(preset.betti, preset.d, 8, 40)
        record(closed == prod == sums,
               f"{label}: closed form == product == partition sum up to q^8 "
               f"(preset {preset.name})")
    reports.append(CheckReport("wreath closed forms", ok, tuple(lines)))

    rng = random.Random(seed)
    bad = None
    for _ in range(50):
        d = rng.choice((2, 4))
        table = BettiTable({j: rng.randint(0, 3) for j in range(d + 1)})
        if generating_series_product(table, d, 6) != generating_series_sum(table, d, 6):
            bad = (table, d)
            break
    line = ("[pass] product == partition sum up to q^6 for 50 random tables"
            if bad is None else f"[FAIL] routes disagree for {bad[0]!r}, d={bad[1]}")
    reports.append(CheckReport("wreath product vs sum property", bad is None, (line,)))

    lines, ok = [], True
    pa = closed_form("PA", 12)
    stat = all(
        pa.q_coefficient(n).get(2 * (n - parts), 0) == count
        for n in range(13)
        for parts, count in count_by_length(n).items()
    )
    total = all(
        sum(pa.q_coefficient(n).values()) == sum(count_by_length(n).values())
        for n in range(13)
    )
    record(stat and total,
           "q^n t^(2(n-l)) coefficients count partitions of n with l parts, n <= 12")
    point = BettiTable({0: 1})
    record(
        all(
            hilb_poincare(point, n).dims()
            == {2 * (n - parts): c for parts, c in count_by_length(n).items()}
            for n in range(11)
        ),
        "one-point orbifold polynomials match the partition statistic, n <= 10",
    )
    reports.append(CheckReport("wreath partition statistic", ok, tuple(lines)))

    lines, ok = [], True
    for name, want in (("weyl", 1), ("trig", 2), ("qweyl", 3), ("z2_qweyl", 6)):
        preset = load_preset(name)
        got = deformation_parameter_count(preset.betti, preset.d, 2)
        dims = preset.betti.dims()
        b1, b2 = dims.get(1, 0), dims.get(2, 0)
        generic = b2 + b1 * (b1 - 1) // 2 + (1 if preset.d == 2 else 0)
        record(got == generic, f"{name}: count {got} matches b2 + C(b1,2) + [d=2] = {generic}")
        if name in ("weyl", "qweyl", "z2_qweyl"):
            record(got == want, f"{name}: count is {want}")
    record(deformation_parameter_count(BettiTable({0: 1}), 4, 2) == 0,
           "rigid d=4 point table has no deformation parameters")
    reports.append(CheckReport("wreath deformation counts", ok, tuple(lines)))
    return reports


def verify_bruteforce(seed: int = 0) -> list:
    reports = []
    dual = FiniteDimAlgebra.truncated_polynomial(2)
    z2 = FiniteDimAlgebra.group_algebra([[0, 1], [1, 0]])
    for A in (dual, z2):
        for n, levels in ((2, 3), (3, 2)):
            reports.append(verify_homolog_i(A, n=n, max_level=levels))
    for n in (2, 3):
        for m in (1, 2, 3, 4):
            reports.append(homotopy_identity_check(z2, n, m, trials=50, seed=seed))
    cubic = FiniteDimAlgebra.truncated_polynomial(3)
    sign = [{i: Fraction(-1) ** i} for i in range(3)]
    reports.append(afls_check(cubic, GroupAction.generate(cubic, [sign]), max_level=2))
    square = z2.tensor(z2)
    sp = slot_permutation(z2, 2, (2, 1))
    swap = [{sp[i]: Fraction(1)} for i in range(square.dim)]
    reports.append(afls_check(square, GroupAction.generate(square, [swap]), max_level=2))
    return reports


_KOSZUL_TABLES = {
    ("weyl", "id"): (1, 0, 0),
    ("trig", "id"): (1, 1, 0),
    ("qweyl", "id"): (1, 2, 1),
    ("weyl", "eps"): (0, 0, 1),
    ("trig", "eps"): (0, 0, 2),
    ("qweyl", "eps"): (0, 0, 4),
}
_KOSZUL_CROSSED = {"weyl": (1, 0, 1), "trig": (1, 0, 2), "qweyl": (1, 0, 5)}


def verify_koszul(seed: int = 0) -> list:
    reports = []
    lines, ok = [], True

    def record(flag: bool, text: str):
        nonlocal ok
        ok = ok and flag
        lines.append(("[pass] " if flag else "[FAIL] ") + text)

    record(
        all(
            not any(build_cochain_complex(kind, twist, 6)[2].values())
            for kind in KINDS
            for twist in TWISTS
        ),
        "consecutive differentials compose to zero for every kind and twist",
    )
    for (kind, twist), want in sorted(_KOSZUL_TABLES.items()):
        dims = {hh_cohomology_rank_one(kind, twist, N) for N in (8, 10, 12)}
        record(dims == {want}, f"{kind}/{twist}: dimensions {want} stable at windows 8, 10, 12")
    for kind, want in sorted(_KOSZUL_CROSSED.items()):
        record(crossed_z2_cohomology(kind, 8) == want,
               f"crossed {kind}: Z2-invariant totals {want}")
    reports.append(CheckReport("koszul cohomology tables", ok, tuple(lines)))
    reports.extend(duality_check(kind) for kind in KINDS)
    return reports


def verify_cherednik(seed: int = 0) -> list:
    reports = [confluence_check(2, 4), confluence_check(3, 3)]
    reports.extend(pbw_dimension_check(n, 3) for n in (2, 3))
    reports.extend(associativity_check(n, trials=100, seed=seed) for n in (2, 3))
    reports.extend(spherical_check(n) for n in (2, 3))
    return reports


_SUITES = {
    "wreath": verify_wreath,
    "bruteforce": verify_bruteforce,
    "koszul": verify_koszul,
    "cherednik": verify_cherednik,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        for rep in _SUITES[name](args.seed):
            sys.stdout.buffer.write(emit(rep, "plain"))
            sys.stdout.buffer.flush()
            all_ok = all_ok and rep.passed
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreath-hh",
        description="Exact Hochschild (co)homology of wreath product algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="generating series of a preset")
    p.add_argument("--preset", required=True)
    p.add_argument("--group", choices=("A", "B"), default="A")
    p.add_argument("--max-q", type=int, default=6)
    p.add_argument("--max-t", type=int, default=None,
                   help="defaults to d * max-q")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("betti", help="cohomology table of the n-th wreath product")
    p.add_argument("--preset", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("hilb", help="orbifold Poincare polynomial of a symmetric power")
    p.add_argument("--betti", required=True, help="comma-separated b0,b1,b2")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=_cmd_hilb)

    p = sub.add_parser("deform", help="deformation parameter count")
    p.add_argument("--preset", required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser("cherednik", help="rational Cherednik algebra tools")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("reduce", help="normal-order a generator word")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("word")
    c.set_defaults(func=_cmd_cherednik)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("all",) + tuple(_SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
