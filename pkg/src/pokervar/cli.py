"""``pokervar`` command line: run-it-n reports for hold'em and n-play video poker tables.

Exit status is 0 on success, 2 for usage errors or malformed cards, and 3 for
states the analysis cannot handle (duplicate cards, too many runs, a cache
built for another pay table, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .cards import CardError, DuplicateCardError, format_cards
from .exact import SummaryStats, format_decimal, format_exact
from .holdem import MONTE_CARLO, METHODS, AllInState, RunItNReport, run_it_n_report
from .videopoker import CacheError, PayTableError, load_or_solve, nplay_table, resolve_game

EXIT_USAGE = 2
EXIT_DOMAIN = 3
DEFAULT_PLAYS = "1,3,5,10,25,50,100"


class UsageError(Exception):
    pass


def _row(n: int, stats: SummaryStats) -> dict:
    return {"n": n, **stats.to_dict()}


def _document(scenario: dict, method: str, exact: dict[str, Fraction], rows: list[dict],
              extra: Optional[dict] = None) -> dict:
    doc = {
        "scenario": scenario,
        "method": method,
        "exact": {k: format_exact(v) for k, v in exact.items()},
        "decimal": {k: format_decimal(v) for k, v in exact.items()},
        "rows": rows,
    }
    if extra:
        doc.update(extra)
    return doc


def holdem_document(report: RunItNReport, state: AllInState, args) -> dict:
    scenario = {
        "hero": format_cards(state.hero),
        "villain": format_cards(state.villain),
        "board": format_cards(state.board),
        "dead": format_cards(state.dead),
        "mucked_hands": state.mucked_hands,
        "player": report.player,
        "runs": report.n_max,
    }
    first = report.row(1)
    exact = {"e_r1": first.mean, "var_r1": first.variance}
    if report.n_max >= 2:
        # back out the covariance from the two-run variance
        exact["cov_r12"] = 2 * report.row(2).variance - first.variance
    extra = {}
    if report.outs is not None:
        extra["outs"] = {"o": report.outs.outs, "t": report.outs.ties, "losses": report.outs.losses}
    if report.mc is not None:
        scenario["samples"] = report.mc.samples
        scenario["seed"] = report.mc.seed
        extra["monte_carlo"] = report.mc.to_dict()
    rows = [_row(n, s) for n, s in enumerate(report.rows, 1)]
    return _document(scenario, report.method, exact, rows, extra)


def videopoker_document(table, plays: list[int]) -> dict:
    d = table.decomposition
    scenario = {
        "game": table.pay.name,
        "variant": table.pay.variant,
        "fingerprint": table.pay.fingerprint(),
        "plays": plays,
    }
    exact = {"e_r1": d.e_r1, "var_r1": d.var_r1, "v_deal": d.v_deal, "v_draw": d.v_draw}
    rows = [_row(r.n, r.stats) for r in nplay_table(d, plays)]
    extra = {"classes": len(table), "distinct_conditional_means": table.distinct_cond_means()}
    return _document(scenario, "exact_enumeration", exact, rows, extra)


def render_table(doc: dict) -> str:
    out = []
    for key, value in doc["scenario"].items():
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        out.append(f"{key}: {value if value != '' else '-'}")
    out.append(f"method: {doc['method']}")
    for key in ("outs", "monte_carlo"):
        if key in doc:
            out.append(f"{key}: " + " ".join(f"{k}={v}" for k, v in doc[key].items()))
    for key in ("classes", "distinct_conditional_means"):
        if key in doc:
            out.append(f"{key}: {doc[key]}")
    for key, value in doc["exact"].items():
        out.append(f"{key} = {value} ~ {doc['decimal'][key]}")
    out.append("")
    header = ("n", "mean", "variance", "std dev", "mean (exact)", "variance (exact)")
    lines = [
        (str(r["n"]), r["mean"]["decimal"], r["variance"]["decimal"], r["std_dev"],
         r["mean"]["exact"], r["variance"]["exact"])
        for r in doc["rows"]
    ]
    widths = [max(len(x) for x in col) for col in zip(header, *lines)]
    for line in (header, *lines):
        out.append("  ".join(x.rjust(w) for x, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"


def emit(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    return render_table(doc)


def cmd_holdem(args) -> dict:
    state = AllInState.parse(args.hero, args.villain, args.board or "", args.dead or "",
                             args.mucked_hands)
    method = MONTE_CARLO if args.method == "mc" else args.method
    report = run_it_n_report(state, args.player, args.runs, method=method, samples=args.samples,
                             seed=args.seed, workers=args.workers)
    return holdem_document(report, state, args)


def _plays(text: str) -> list[int]:
    try:
        plays = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--plays must be a comma-separated list of integers, got {text!r}")
    if not plays or min(plays) < 1:
        raise UsageError("--plays needs positive integers")
    return plays


def cmd_videopoker(args) -> dict:
    plays = _plays(args.plays)
    pay = resolve_game(args.game)
    table = load_or_solve(pay, args.cache, workers=args.workers)
    return videopoker_document(table, plays)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pokervar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("holdem", help="mean and variance of an all-in pot run n times")
    h.add_argument("--hero", required=True, help='hero hole cards, e.g. "Ts Tc"')
    h.add_argument("--villain", required=True, help="villain hole cards")
    h.add_argument("--board", default="", help="0, 3 or 4 board cards")
    h.add_argument("--dead", default="", help="cards known to be out of the stub")
    h.add_argument("--mucked-hands", type=int, default=0, metavar="M",
                   help="folded hands with unknown cards (limits the number of runs)")
    h.add_argument("--player", choices=("hero", "villain"), default="hero")
    h.add_argument("--runs", type=int, default=4, help="largest n to report (default 4)")
    h.add_argument("--method", choices=("auto", "mc", *METHODS), default="auto")
    h.add_argument("--samples", type=int, default=10**6, help="Monte Carlo trials")
    h.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--format", choices=("table", "json"), default="table")
    h.set_defaults(func=cmd_holdem)

    v = sub.add_parser("videopoker", help="exact n-play video poker mean and variance")
    v.add_argument("--game", default="jacks-or-better-9-6", help="preset name or pay table file")
    v.add_argument("--plays", default=DEFAULT_PLAYS, help=f"comma list (default {DEFAULT_PLAYS})")
    v.add_argument("--cache", default=None, help="strategy cache file, created if missing")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.set_defaults(func=cmd_videopoker)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except DuplicateCardError as exc:
        print(f"pokervar: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CardError, UsageError) as exc:
        print(f"pokervar: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PayTableError, CacheError, ValueError, OSError) as exc:
        print(f"pokervar: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(emit(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
