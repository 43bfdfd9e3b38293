"""Command-line interface.

Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or
parse error, 3 two methods that must agree did not.
"""

from __future__ import annotations

import argparse
import sys

from . import census, uniformity
from .activity import activity_pair_mask
from .bitset import elements
from .constructors import SchubertSpec, schubert, excluded_minor_construct, uniform
from .errors import MatroidError
from .formats import read_matroid, to_text
from .isominor import find_minor, is_isomorphic
from .tutte import tutte_by_activities, tutte_by_deletion_contraction
from .verify import verify

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


def _poly_lines(T) -> list:
    # Highest power of x first, then increasing powers of y.
    terms = sorted(T.terms(), key=lambda t: (-t[0], t[1]))
    return [f"t[{i}][{j}]={c}" for i, j, c in terms]


def cmd_tutte(args, out):
    M = read_matroid(args.file)
    polys = {}
    if args.algorithm in ("activity", "both"):
        polys["activity"] = tutte_by_activities(M)
    if args.algorithm in ("dc", "both"):
        polys["dc"] = tutte_by_deletion_contraction(M, cache={})
    if len(set(polys.values())) > 1:
        for name, T in polys.items():
            out.append(f"# {name}")
            out.extend(_poly_lines(T))
        return EXIT_MISMATCH
    out.extend(_poly_lines(next(iter(polys.values()))))
    return EXIT_TRUE


def cmd_activities(args, out):
    M = read_matroid(args.file)
    for b in M.bases:
        pair = activity_pair_mask(M, b)
        out.append(f"{' '.join(map(str, elements(b)))}\t{pair.internal}\t{pair.external}")
    return EXIT_TRUE


def _predicate(methods, args, out):
    M = read_matroid(args.file)
    chosen = list(methods) if args.method == "all" else [args.method]
    values = {name: methods[name](M, args.k, args.l) for name in chosen}
    for name, value in values.items():
        out.append(f"{name}: {'true' if value else 'false'}")
    if len(set(values.values())) > 1:
        return EXIT_MISMATCH
    return EXIT_TRUE if next(iter(values.values())) else EXIT_FALSE


def cmd_profile(args, out):
    M = read_matroid(args.file)
    profile = uniformity.uniformity_profile(M, args.kmax, args.lmax)
    out.extend(f"({k},{l})" for k, l in profile.minimal_pairs)
    return EXIT_TRUE


def cmd_construct(args, out):
    if args.kind == "uniform":
        if len(args.params) != 2:
            raise _Usage("construct uniform R N")
        r, n = (int(x) for x in args.params)
        M = uniform(r, n)
    elif args.kind == "schubert":
        if len(args.params) != 2:
            raise _Usage("construct schubert N a1,a2,...")
        n = int(args.params[0])
        defining = tuple(int(x) for x in args.params[1].split(",") if x)
        M = schubert(SchubertSpec(n, defining))
    else:
        if len(args.params) != 1:
            raise _Usage("construct excluded NFILE --m M")
        M = excluded_minor_construct(read_matroid(args.params[0]), args.m)
    out.append(to_text(M).rstrip("\n"))
    return EXIT_TRUE


def cmd_iso(args, out):
    cert = is_isomorphic(read_matroid(args.file_a), read_matroid(args.file_b))
    if cert is None:
        out.append("not isomorphic")
        return EXIT_FALSE
    out.append("isomorphic")
    out.extend(f"{a} -> {cert[a]}" for a in sorted(cert))
    return EXIT_TRUE


def cmd_minor(args, out):
    found = find_minor(read_matroid(args.file_m), read_matroid(args.file_n))
    if found is None:
        out.append("no minor")
        return EXIT_FALSE
    C, D = found
    out.append(f"contract: {' '.join(map(str, C))}")
    out.append(f"delete: {' '.join(map(str, D))}")
    return EXIT_TRUE


def cmd_census(args, out):
    source = "catalog" if args.catalog else "brute_force"
    records = census.load_records(args.records) if args.records else {}
    pairs = [(k, l) for k in range(1, args.kmax + 1) for l in range(1, args.lmax + 1)]
    table = census.ratio_table(
        [args.n], pairs, source=source, catalog=args.catalog, fmt=args.format, records=records
    )
    if args.records:
        census.save_records(records, args.records)
    out.append(table.rstrip("\n"))
    return EXIT_TRUE


def cmd_verify(args, out):
    report = verify(args.n, args.kmax, args.lmax, jobs=args.jobs)
    out.append(report.render().rstrip("\n"))
    return EXIT_TRUE if report.ok else EXIT_MISMATCH


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for census/verify")
    parser = argparse.ArgumentParser(prog="klmatroids", description="Matroid Tutte coefficients and (k,l)-uniformity tools.")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for census/verify")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial coefficients")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=("activity", "dc", "both"), default="activity")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("activities", parents=[common], help="activity pair of every basis")
    p.add_argument("file")
    p.set_defaults(func=cmd_activities)

    for name, methods, summary in (
        ("uniform", uniformity.UNIFORM_METHODS, "is the matroid (k,l)-uniform"),
        ("almost", uniformity.ALMOST_METHODS, "is the matroid almost (k,l)-uniform"),
        ("excluded", uniformity.EXCLUDED_METHODS, "is it an excluded minor for almost (k,l)-uniform"),
    ):
        p = sub.add_parser(name, parents=[common], help=summary)
        p.add_argument("file")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--method", choices=(*methods, "all"), default="tutte")
        p.set_defaults(func=lambda a, o, m=methods: _predicate(m, a, o))

    p = sub.add_parser("profile", parents=[common], help="minimal (k,l) pairs of uniformity")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("construct", parents=[common], help="emit a named matroid")
    p.add_argument("kind", choices=("uniform", "schubert", "excluded"))
    p.add_argument("params", nargs="+")
    p.add_argument("--m", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("iso", parents=[common], help="isomorphism test")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("minor", parents=[common], help="minor containment test")
    p.add_argument("file_m")
    p.add_argument("file_n")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("census", parents=[common], help="m_n(k,l) ratio table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--catalog")
    p.add_argument("--format", choices=("tsv", "md"), default="tsv")
    p.add_argument("--records", help="record file reused and updated across runs")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="exhaustive equivalence checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def _validate(args) -> None:
    for name in ("k", "l", "kmax", "lmax", "jobs"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise _Usage(f"--{name} must be positive")
    if args.command in ("census", "verify") and args.n < 1:
        raise _Usage("--n must be positive")
    if args.command == "verify" and args.n > census.BRUTE_FORCE_MAX:
        raise _Usage(f"verify supports n <= {census.BRUTE_FORCE_MAX}")
    if args.command == "census" and not args.catalog and args.n > census.BRUTE_FORCE_MAX:
        raise _Usage(f"census above n={census.BRUTE_FORCE_MAX} needs --catalog")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    out = []
    try:
        _validate(args)
        code = args.func(args, out)
    except _Usage as exc:
        print(f"usage error: {exc}", file=stderr)
        print(parser.format_usage().rstrip(), file=stderr)
        return EXIT_USAGE
    except (MatroidError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if out:
        print("\n".join(out), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
