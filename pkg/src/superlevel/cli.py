"""
Command line front end.

    superlevel census --genus 1..4 [--json]
    superlevel verify {weil,psi,embedding,formula,all} [--seed N]
    superlevel table1
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .trigonal import census_rows, component_count_formula, trigonal_indexing_set
from .verify import DEFAULT_SEED, SUITES, UnknownSuite, run_suite

MAX_GENUS = 40


class BadRange(ValueError):
    pass


@dataclass
class CensusReport:
    g: int
    rows: list = field(default_factory=list)
    sp_order: int = 0
    total: int = 0
    formula_total: int = 0

    @property
    def agreement(self) -> bool:
        return self.total == self.formula_total

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "rows": [{"m": list(r.m_vector), "aut_order": r.aut_order, "components": r.components}
                     for r in self.rows],
            "sp_order": self.sp_order,
            "total": self.total,
            "formula_total": self.formula_total,
            "agreement": self.agreement,
        }


def census_report(g: int) -> CensusReport:
    rows = census_rows(g)
    return CensusReport(g, rows, rows[0].sp_order, sum(r.components for r in rows),
                        component_count_formula(g))


def parse_genus_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = (int(s) for s in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise BadRange("cannot parse genus range %r (use A..B)" % text) from None
    if not 1 <= lo <= hi <= MAX_GENUS:
        raise BadRange("need 1 <= lo <= hi <= %d, got %d..%d" % (MAX_GENUS, lo, hi))
    return lo, hi


def sci(n: int) -> str:
    s = str(n)
    if len(s) <= 12:
        return s
    return "%s.%se%d" % (s[0], s[1:4], len(s) - 1)


def format_vector(v, flag=False) -> str:
    return "(%s)%s" % (",".join(str(x) for x in v), "*" if flag else "")


def render_census_text(report: CensusReport) -> str:
    g = report.g
    lines = ["g=%d  m=%d  |Sp(%d,F_3)| = %s" % (g, g + 2, 2 * g, sci(report.sp_order))]
    if len(str(report.sp_order)) > 12:
        lines.append("  |Sp| exact = %d" % report.sp_order)
    lines.append("  %-10s %14s  %s" % ("m_vector", "|A_m|", "components"))
    for r in report.rows:
        swap = r.m_vector[0] == r.m_vector[1]
        lines.append("  %-10s %14d  %s" % (format_vector(r.m_vector, swap), r.aut_order, r.components))
    lines.append("  total %d" % report.total)
    lines.append("  formula %d  agreement=%s" % (report.formula_total, "yes" if report.agreement else "NO"))
    return "\n".join(lines)


def render_table1(g_max: int = 12) -> str:
    """Indexing sets for p = 3; entries with a nontrivial stabilizer are starred."""
    lines = [" g   m  M", "--  --  " + "-" * 30]
    for g in range(1, g_max + 1):
        vecs = trigonal_indexing_set(g).vectors
        body = ", ".join(format_vector(v.counts, v[0] == v[1]) for v in vecs)
        lines.append("%2d  %2d  {%s}" % (g, g + 2, body))
    return "\n".join(lines) + "\n"


def cmd_census(args, out) -> int:
    lo, hi = parse_genus_range(args.genus)
    for g in range(lo, hi + 1):
        report = census_report(g)
        if args.json:
            out.write(json.dumps(report.to_dict(), sort_keys=False) + "\n")
        else:
            out.write(render_census_text(report) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    name = args.suite_opt or args.suite or "all"
    results = run_suite(name, args.seed)
    for r in results:
        out.write(r.render() + "\n")
    ok = all(r.passed for r in results)
    out.write("%s\n" % ("all suites passed" if ok else "FAILED"))
    return 0 if ok else 1


def cmd_table1(args, out) -> int:
    out.write(render_table1())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superlevel",
                                     description="Level structures on superelliptic curves: censuses and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="component census of trigonal curves with level 3 structure")
    p.add_argument("--genus", required=True, help="genus or range A..B (1 <= A <= B <= %d)" % MAX_GENUS)
    p.add_argument("--json", action="store_true", help="one JSON object per genus")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", help="one of %s, all" % ", ".join(SUITES))
    p.add_argument("--suite", dest="suite_opt", help="same as the positional argument")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="indexing sets for g = 1..12")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (BadRange, UnknownSuite) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
