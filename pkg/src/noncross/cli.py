"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 resource-guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import linsys, refdata, triangles
from .decomp import (all_tuples_of_rank, canonical_tuple, count_typeA,
                     full_table)
from .ncposet import (ResourceGuardError, build_ncm, characteristic_direct,
                      characteristic_polynomial, enumerate_nc,
                      load_or_enumerate, zeta_closed, zeta_direct)
from .rootsystem import SUPPORTED_AMBIENTS, build_root_system
from .typelabel import label

CACHE_ENV_VAR = "NONCROSS_CACHE_DIR"


def _parse_label(text):
    try:
        return label(text)
    except (ValueError, KeyError) as err:
        raise SystemExit(_fail_input("bad type label %r: %s" % (text, err)))


def _parse_tuple(text):
    if not text or text == "-":
        return canonical_tuple(())
    return canonical_tuple(tuple(_parse_label(tok) for tok in text.split(",")))


def _fail_input(message):
    print("error: %s" % message, file=sys.stderr)
    return 2


def _emit(payload, fmt):
    """Render a report dict deterministically in the chosen format."""
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    elif fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict):
                for sub in sorted(value, key=str):
                    writer.writerow([key, sub, value[sub]])
            elif isinstance(value, (list, tuple)):
                for item in value:
                    writer.writerow([key, item])
            else:
                writer.writerow([key, value])
        sys.stdout.write(out.getvalue())
    else:
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict):
                print("%s:" % key)
                for sub in sorted(value, key=str):
                    print("  %s = %s" % (sub, value[sub]))
            elif isinstance(value, (list, tuple)):
                print("%s:" % key)
                for item in value:
                    print("  %s" % (item,))
            else:
                print("%s: %s" % (key, value))


def _require_ambient(name):
    if name not in SUPPORTED_AMBIENTS:
        raise SystemExit(_fail_input(
            "unsupported ambient %r (choose from %s)"
            % (name, ", ".join(SUPPORTED_AMBIENTS))))
    return name


# ---------------------------------------------------------------------------
# commands


def cmd_rootsys(args):
    name = _require_ambient(args.label)
    rs = build_root_system(name)
    _emit({
        "ambient": name,
        "rank": rs.n,
        "coxeter_number": rs.coxeter_number,
        "group_order": rs.group_order,
        "positive_roots": rs.num_positive_roots,
        "degrees": list(rs.degrees),
    }, args.format)
    return 0


def cmd_nc(args):
    name = _require_ambient(args.label)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        poset = load_or_enumerate(name, cache_dir)
    else:
        poset = enumerate_nc(name)
    by_type = {str(t): len(els) for t, els in poset.by_type.items()}
    _emit({
        "ambient": name,
        "elements": len(poset),
        "rank_sizes": poset.rank_sizes(),
        "type_counts": by_type,
    }, args.format)
    return 0


def cmd_decomp_count(args):
    name = _require_ambient(args.ambient)
    key = _parse_tuple(args.tuple)
    table = linsys.production_table(name)
    print(table.lookup(key))
    return 0


def cmd_decomp_table(args):
    name = _require_ambient(args.ambient)
    table = linsys.production_table(name)
    n = label(name).rank
    entries = {}
    ranks = (n,) if args.full_rank_only else tuple(range(1, n + 1))
    for s in ranks:
        for key in all_tuples_of_rank(s):
            value = table.lookup(key)
            if value:
                entries[",".join(map(str, key))] = value
    _emit({"ambient": name, "provenance": table.provenance,
           "entries": entries}, args.format)
    return 0


def cmd_chi(args):
    t = _parse_label(args.label)
    print(characteristic_polynomial(t))
    return 0


def cmd_zeta(args):
    t = _parse_label(args.label)
    m = "m" if args.symbolic else args.m
    print(zeta_closed(t, m=m))
    return 0


def _assembled(name):
    name = _require_ambient(name)
    return triangles.assemble_dual(name, linsys.production_table(name))


def cmd_mtriangle(args):
    mt = _assembled(args.label)
    source = mt.dual if args.dual else mt.primal
    if not args.symbolic:
        source = source.substitute(m=args.m)
    print(source)
    return 0


def cmd_ftriangle(args):
    mt = _assembled(args.label)
    cand = triangles.fm_transform(mt, args.m)
    coeffs = {"x^%d*y^%d" % kl: str(v)
              for kl, v in sorted(cand.coefficients.items())}
    problems = cand.problems()
    _emit({"ambient": args.label, "m": args.m, "coefficients": coeffs,
           "problems": problems or ["none"]}, args.format)
    return 1 if problems else 0


def cmd_linsys(args):
    name = _require_ambient(args.label)
    report = linsys.replay(name)
    golden_diff = {}
    if name in refdata.REFERENCE_TABLE_NAMES:
        published = {k: v for k, v in refdata.reference_table(name).items() if v}
        mine = report.final_table.entries
        for key in sorted(set(published) | set(mine), key=str):
            if published.get(key, 0) != mine.get(key, 0):
                golden_diff[",".join(map(str, key))] = (
                    "published=%s computed=%s"
                    % (published.get(key, 0), mine.get(key, 0)))
    payload = {
        "ambient": name,
        "equations": report.equation_count,
        "variables": report.variable_count,
        "dimension": report.dimension,
        "pins": {",".join(map(str, k)): v
                 for k, v in report.pinned_values.items()},
        "assertions": {desc: ("pass" if ok else "FAIL")
                       for desc, ok in report.congruence_assertions},
        "flags": list(report.flags),
        "golden_diff": golden_diff or {"(none)": "table matches"},
    }
    if args.report:
        with open(args.report, "w") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True, default=str)
    _emit(payload, args.format)
    failed = golden_diff or not report.all_assertions_pass
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# verify suites


def _suite_appendix(extended):
    names = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"]
    if extended:
        names += ["A6", "A7", "D6", "D7"]
    for name in names:
        computed = {k: v for k, v in full_table(name).entries.items() if v}
        published = {k: v for k, v in refdata.reference_table(name).items() if v}
        yield ("table %s (%d values)" % (name, len(published)),
               computed == published)


def _suite_typeA(extended):
    from .decomp import count_bruteforce, make_bruteforce_memo
    top = 5 if not extended else 6
    for n in range(1, top + 1):
        name = "A%d" % n
        memo = make_bruteforce_memo()
        ok = True
        for s in range(0, n + 1):
            for key in all_tuples_of_rank(s):
                if any(f != "A" for t in key for f, _ in t.components):
                    continue
                if count_typeA(n, key) != count_bruteforce(name, key, _memo=memo):
                    ok = False
        yield ("closed form vs brute force on A%d" % n, ok)


def _suite_chi(extended):
    for name in refdata.CHI_STAR_COEFFS:
        published = refdata.chi_star_reference(name)
        recursive = characteristic_polynomial(label(name))
        yield ("chi* recursion %s" % name, recursive == published)
        if label(name).rank <= 6:
            direct = characteristic_direct(enumerate_nc(name))
            yield ("chi* direct %s" % name, direct == published)


def _suite_zeta(extended):
    for name in SUPPORTED_AMBIENTS:
        if label(name).rank > 4:
            continue
        poset = enumerate_nc(name)
        ok = all(zeta_direct(poset, z) == zeta_closed(label(name)).evaluate(z=z)
                 for z in range(1, 6))
        yield ("zeta multichain vs closed form %s" % name, ok)
    for name, mmax in (("A2", 3), ("A3", 2)):
        for m in range(1, mmax + 1):
            ncm = build_ncm(name, m)
            closed = zeta_closed(label(name), m=m)
            ok = all(zeta_direct(ncm, z) == closed.evaluate(z=z)
                     for z in range(1, 5))
            yield ("zeta NC^%d(%s)" % (m, name), ok)


def _replay_suite(name):
    report = linsys.replay(name)
    yield ("%s replay dimension %d" % (name, report.dimension),
           report.dimension <= linsys.EXPECTED_DIMENSION.get(name, 0))
    published = {k: v for k, v in refdata.reference_table(name).items() if v}
    yield ("%s table matches published list" % name,
           report.final_table.entries == published)
    for desc, ok in report.congruence_assertions:
        yield ("%s: %s" % (name, desc), ok)
    if name in ("E7", "E8"):
        mt = triangles.assemble_dual(name, report.final_table)
        yield ("%s assembled dual equals published polynomial" % name,
               mt.dual == refdata.golden_dual(name))


def _suite_e6(extended):
    return _replay_suite("E6")


def _suite_e7(extended):
    return _replay_suite("E7")


def _suite_e8(extended):
    return _replay_suite("E8")


def _reciprocity_ambients():
    return ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8"]


def _suite_reciprocity(extended):
    for name in _reciprocity_ambients():
        mt = _assembled(name)
        diff = triangles.reciprocity_check(mt)
        yield ("reciprocity %s" % name, not diff.terms)


def _suite_fm(extended):
    for name in _reciprocity_ambients():
        mt = _assembled(name)
        for m in (1, 2, 3):
            try:
                cand = triangles.fm_transform(mt, m)
                ok = not cand.problems()
            except triangles.TransformFailure:
                ok = False
            yield ("F=M transform %s m=%d" % (name, m), ok)


SUITES = {
    "appendix": _suite_appendix,
    "typeA": _suite_typeA,
    "chi": _suite_chi,
    "zeta": _suite_zeta,
    "e6": _suite_e6,
    "e7": _suite_e7,
    "e8": _suite_e8,
    "reciprocity": _suite_reciprocity,
    "fm": _suite_fm,
}


def cmd_verify(args):
    if args.suite not in SUITES:
        return _fail_input("unknown suite %r (choose from %s)"
                           % (args.suite, ", ".join(sorted(SUITES))))
    passed = failed = 0
    results = {}
    for description, ok in SUITES[args.suite](args.extended):
        results[description] = "pass" if ok else "FAIL"
        if ok:
            passed += 1
        else:
            failed += 1
    _emit({"suite": args.suite, "passed": passed, "failed": failed,
           "checks": results}, args.format)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    common.add_argument("--cache-dir", default=None,
                        help="poset cache directory (or $%s)" % CACHE_ENV_VAR)
    common.add_argument("--threads", type=int, default=1,
                        help="worker count (validated; computation is "
                             "single-process)")
    parents = [common]

    parser = argparse.ArgumentParser(
        prog="noncross",
        description="Exact computations on non-crossing partition posets "
                    "of ADE root systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="root-system facts")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pi = psub.add_parser("info", parents=parents)
    pi.add_argument("label")
    pi.set_defaults(func=cmd_rootsys)

    p = sub.add_parser("nc", help="non-crossing partition posets")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pe = psub.add_parser("enumerate", parents=parents)
    pe.add_argument("label")
    pe.set_defaults(func=cmd_nc)

    p = sub.add_parser("decomp", help="decomposition numbers")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pc = psub.add_parser("count", parents=parents)
    pc.add_argument("ambient")
    pc.add_argument("tuple", help="comma-separated type labels, '-' for empty")
    pc.set_defaults(func=cmd_decomp_count)
    pt = psub.add_parser("table", parents=parents)
    pt.add_argument("ambient")
    pt.add_argument("--full-rank-only", action="store_true")
    pt.set_defaults(func=cmd_decomp_table)

    p = sub.add_parser("chi", parents=parents,
                       help="characteristic polynomial chi*")
    p.add_argument("label")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("zeta", parents=parents, help="zeta polynomial of NC^m")
    p.add_argument("label")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("mtriangle", parents=parents, help="M-triangle of NC^m")
    p.add_argument("label")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--symbolic", action="store_true")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dual", action="store_true")
    group.add_argument("--primal", action="store_true")
    p.set_defaults(func=cmd_mtriangle)

    p = sub.add_parser("ftriangle", parents=parents,
                       help="F-triangle candidate via F=M")
    p.add_argument("label")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_ftriangle)

    p = sub.add_parser("linsys", help="linear-system replay")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pr = psub.add_parser("replay", parents=parents)
    pr.add_argument("label")
    pr.add_argument("--report", default=None, help="write JSON report here")
    pr.set_defaults(func=cmd_linsys)

    p = sub.add_parser("verify", parents=parents,
                       help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--extended", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        return _fail_input("--threads must be >= 1")
    try:
        return args.func(args)
    except ResourceGuardError as err:
        print("resource guard: %s" % err, file=sys.stderr)
        return 3
    except (ValueError, KeyError) as err:
        return _fail_input(str(err))


if __name__ == "__main__":
    sys.exit(main())
