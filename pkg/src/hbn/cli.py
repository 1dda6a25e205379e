"""Command line driver: reproducible experiments with JSON/CSV output.

Four subcommands cover the lab surface:

  enumerate   stratum tables for a class, an e-type, or a (degree, sections) query
  sample      sample a matrix pair on a stratum and certify the curve it cuts
  dominance   exact rank certification of the determinant map, plus lemma harnesses
  section5    scrollar bound reports: triple constraint, polytopes, abundance

Determinism contract: a fixed (config, seed) produces byte-identical output.
JSON is dumped with sorted keys and no timestamps; when --seed is absent the
HBN_SEED environment variable is used, and failing that a seed derived from
the arguments themselves, so plain reruns also reproduce.

Exit codes: 0 success, 2 empty or forced-reducible stratum, 3 certification
inconclusive (sampling retries exhausted, rank target not reached, or a lemma
harness returning False).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from hbn.curves import (
    cokernel_rank_check,
    connectedness,
    discriminant_check,
    smoothness,
)
from hbn.determinantal import (
    curve_to_json_dict,
    degree_grid,
    forced_reducibility,
    pair_to_json_dict,
    phi,
    sample_pair,
)
from hbn.differential import (
    dominance_rank,
    lemma_is_check,
    lemma_main_check,
    lemma_sq_check,
)
from hbn.exact.field import DEFAULT_PRIME, is_prime
from hbn.scrollar import (
    abundance_verdict,
    general_bound_check,
    general_cover_not_abundant,
    oo_polytope,
    ol_polytope,
    scrollar_from_class,
)
from hbn.seeds import derive_seed
from hbn.splitting import (
    HirzebruchClass,
    default_window,
    enumerate_strata,
    genus,
    stratum_report,
)

EXIT_OK = 0
EXIT_EMPTY = 2
EXIT_INCONCLUSIVE = 3

# each lemma harness is a statement about one fixed selector
LEMMA_SELECTOR = {"sq": "FULL_PRIME", "main": "T_PRIME", "is": "T_CORNER"}


@dataclass(frozen=True)
class RunConfig:
    """Plumbing shared by all subcommands."""

    p: int = DEFAULT_PRIME
    seed: Optional[int] = None
    window: Optional[tuple[int, int]] = None
    trials: int = 5
    out: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"--p must be prime, got {self.p}")
        if self.format not in ("json", "csv", "pretty"):
            raise ValueError(f"unknown format {self.format!r}")


def _rng(config: RunConfig, *parts) -> random.Random:
    if config.seed is not None:
        return random.Random(derive_seed(config.seed, *parts))
    return random.Random(derive_seed(*parts))


def _parse_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_window(text: str) -> tuple[int, int]:
    parts = _parse_tuple(text)
    if len(parts) != 2 or parts[0] > parts[1]:
        raise argparse.ArgumentTypeError(f"window must be lo,hi with lo <= hi, got {text!r}")
    return parts


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    return _render_pretty(doc)


def _render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = doc.get("rows")
    if rows is not None:
        columns = doc.get("columns") or sorted({k for r in rows for k in r})
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_csv_cell(r.get(c)) for c in columns])
    else:
        writer.writerow(["key", "value"])
        for key in sorted(doc):
            if key in ("provenance", "command"):
                continue
            writer.writerow([key, _csv_cell(doc[key])])
    return buf.getvalue()


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def _render_pretty(doc: dict) -> str:
    lines = [f"== {doc.get('command', 'report')} =="]
    rows = doc.get("rows")
    if rows is not None:
        columns = doc.get("columns") or sorted({k for r in rows for k in r})
        table = [[str(_csv_cell(r.get(c))) for c in columns] for r in rows]
        widths = [
            max(len(columns[j]), max((len(t[j]) for t in table), default=0))
            for j in range(len(columns))
        ]
        lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
        for t in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(t, widths)))
        lines.append(f"({len(rows)} rows)")
    for key in sorted(doc):
        if key in ("rows", "columns", "command", "provenance"):
            continue
        lines.append(f"{key}: {json.dumps(doc[key], sort_keys=True)}")
    for key, origin in sorted(doc.get("provenance", {}).items()):
        lines.append(f"# {key}: {origin}")
    return "\n".join(lines) + "\n"


def emit(doc: dict, config: RunConfig) -> None:
    text = render(doc, config.format)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require(args, parser, *names):
    for name in names:
        if getattr(args, name, None) is None:
            parser.error(f"--{name} is required for this command")


# ---------------------------------------------------------------------------
# subcommands


def cmd_enumerate(args, config: RunConfig, parser) -> int:
    _require(args, parser, "m", "k", "delta")
    cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
    reports = enumerate_strata(
        cls,
        window=config.window,
        e=args.e,
        degree=args.degree,
        sections=args.sections,
    )
    doc = {
        "command": "enumerate",
        "class": {"m": cls.m, "k": cls.k, "delta": cls.delta, "genus": genus(cls)},
        "window": list(config.window or default_window(cls)),
        "columns": ["e", "f", "cond", "u_e", "u_f", "nu", "dim"],
        "rows": [r.to_json_dict() for r in reports],
        "provenance": {
            "cond": "check_conditions: f_i >= e_i, f_i >= e_{i+1} - m, sum(f) - sum(e) = delta",
            "dim": "predicted_dim: sum of expected ranks minus u(e) + u(f) + nu(e, f, m)",
            "u_e": "u: count of strict inversions needed to sort against the dual order",
            "nu": "nu: matrix entry degrees below zero on the (e, f) grid",
        },
    }
    emit(doc, config)
    return EXIT_OK


def cmd_sample(args, config: RunConfig, parser) -> int:
    _require(args, parser, "m", "k", "delta", "e", "f")
    cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
    if len(args.e) != cls.k or len(args.f) != cls.k:
        parser.error("--e and --f must each have k entries")
    if sum(args.f) - sum(args.e) != cls.delta:
        parser.error("sum(f) - sum(e) must equal delta")
    grid = degree_grid(args.e, args.f, cls.m)
    verdict = forced_reducibility(grid)
    report = stratum_report(args.e, args.f, cls).to_json_dict()
    if verdict.verdict != "NONE":
        doc = {
            "command": "sample",
            "stratum": report,
            "forced_reducibility": {
                "verdict": verdict.verdict,
                "divisible_y": verdict.divisible_y,
                "block": verdict.block,
            },
            "provenance": {
                "forced_reducibility": "degree grid inspection: negative anti-diagonal entry"
            },
        }
        emit(doc, config)
        return EXIT_EMPTY

    rng = _rng(config, "sample", args.e, args.f, cls.m, cls.k, cls.delta, config.p)
    g = genus(cls)
    pair = curve = cert = None
    disc = (None, None, False)
    coker = False
    attempts = 0
    for attempts in range(1, args.retries + 1):
        pair = sample_pair(grid, args.pattern, config.p, rng)
        curve = phi(pair)
        cert = smoothness(curve, rng)
        if cert.verdict != "SMOOTH":
            continue
        disc = discriminant_check(curve)
        if not disc[2]:
            continue
        coker = cokernel_rank_check(pair, curve, 20, rng)
        if coker:
            break
    success = cert is not None and cert.verdict == "SMOOTH" and disc[2] and coker
    certification = {
        "verdict": "SMOOTH" if success else "INCONCLUSIVE",
        "attempts": attempts,
        "connected_components_h0": connectedness(cls),
        "smoothness": None
        if cert is None
        else {
            "verdict": cert.verdict,
            "chart": cert.chart,
            "witness": cert.witness,
            "method": cert.method,
        },
        "discriminant": {"degree": disc[0], "expected": disc[1], "ok": disc[2]},
        "cokernel_rank_ok": coker,
    }
    doc = {
        "command": "sample",
        "stratum": report,
        "pattern": args.pattern,
        "certification": certification,
        "pair": pair_to_json_dict(pair),
        "curve": curve_to_json_dict(curve),
        "provenance": {
            "smoothness": "chart Jacobian elimination over F_p and F_p^2 points",
            "connected_components_h0": "h0 of the structure sheaf from class numerics",
            "discriminant": "resultant degree versus 2g + 2k - 2",
            "cokernel_rank_ok": f"matrix rank k-1 at 20 sampled curve points, {attempts} attempt(s)",
        },
    }
    emit(doc, config)
    return EXIT_OK if success else EXIT_INCONCLUSIVE


def _lemma_run(args, config: RunConfig, parser) -> int:
    expected = LEMMA_SELECTOR[args.lemma]
    if args.selector is not None and args.selector != expected:
        parser.error(
            f"--lemma {args.lemma} is a statement about selector {expected}, "
            f"not {args.selector}"
        )
    _require(args, parser, "m", "k", "delta", "e", "f")
    cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
    rng = _rng(config, "lemma", args.lemma, args.e, args.f, cls.m, config.p)
    if args.lemma == "is":
        ok = lemma_is_check(cls.k, args.e, args.f, cls.m, rng=rng, p=config.p)
    else:
        grid = degree_grid(args.e, args.f, cls.m)
        pair = sample_pair(grid, "SUT", config.p, rng)
        check = lemma_sq_check if args.lemma == "sq" else lemma_main_check
        ok = check(pair, rng=rng)
    doc = {
        "command": "dominance",
        "lemma": args.lemma,
        "selector": expected,
        "e": list(args.e),
        "f": list(args.f),
        "ok": bool(ok),
        "provenance": {
            "ok": {
                "sq": "rank of the first and last coefficient blocks equals their size",
                "main": "image matches divisibility by the super-anti-diagonal product",
                "is": "evaluation rows at the distinguished point are independent",
            }[args.lemma]
        },
    }
    emit(doc, config)
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def cmd_dominance(args, config: RunConfig, parser) -> int:
    if args.lemma is not None:
        return _lemma_run(args, config, parser)
    _require(args, parser, "m", "k", "delta", "e")
    cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
    if args.f is not None:
        if sum(args.f) - sum(args.e) != cls.delta:
            parser.error("sum(f) - sum(e) must equal delta")
        strata = [(args.e, args.f)]
    else:
        strata = [
            (r.e, r.f) for r in enumerate_strata(cls, window=config.window, e=args.e)
        ]
    if not strata:
        doc = {
            "command": "dominance",
            "e": list(args.e),
            "rows": [],
            "columns": [],
            "provenance": {"rows": "no companion type passes the stratum conditions"},
        }
        emit(doc, config)
        return EXIT_EMPTY

    def one(ef):
        e, f = ef
        rng = None
        if config.seed is not None:
            rng = _rng(config, "dominance", e, f, cls.m, cls.k, cls.delta, config.p)
        rep = dominance_rank(e, f, cls, trials=config.trials, rng=rng, p=config.p)
        rep = dict(rep)
        rep["e"], rep["f"] = list(e), list(f)
        return rep

    # trials fan out to a small pool; row order follows submission order
    if len(strata) > 1:
        with ThreadPoolExecutor(max_workers=4) as pool:
            rows = list(pool.map(one, strata))
    else:
        rows = [one(strata[0])]
    doc = {
        "command": "dominance",
        "class": {"m": cls.m, "k": cls.k, "delta": cls.delta},
        "p": config.p,
        "columns": ["e", "f", "target_dim", "source_dim", "max_rank", "trials", "verdict"],
        "rows": rows,
        "provenance": {
            "target_dim": "sum of coefficient block lengths delta + (k - i) m + 1",
            "source_dim": "count of nonnegative-degree matrix entries, both letters",
            "max_rank": f"exact Gaussian elimination over F_{config.p}",
            "verdict": f"DOMINANT when some trial among {config.trials} reaches the target",
        },
    }
    emit(doc, config)
    bad = [(r["e"], r["f"]) for r in rows if r["verdict"] != "DOMINANT"]
    if not bad:
        return EXIT_OK
    if all(
        forced_reducibility(degree_grid(tuple(e), tuple(f), cls.m)).verdict != "NONE"
        for e, f in bad
    ):
        return EXIT_EMPTY
    return EXIT_INCONCLUSIVE


def cmd_section5(args, config: RunConfig, parser) -> int:
    modes = [m for m in ("abundance", "oo", "ol", "general_cover", "triple") if getattr(args, m)]
    if len(modes) != 1:
        parser.error("pick exactly one of --abundance, --oo, --ol, --general-cover, --triple")
    mode = modes[0]

    if mode == "abundance":
        _require(args, parser, "m", "k", "delta")
        cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
        res = abundance_verdict(cls, e_bound=args.bound)
        doc = {
            "command": "section5",
            "mode": "abundance",
            "class": {"m": cls.m, "k": cls.k, "delta": cls.delta},
            "scrollar": list(scrollar_from_class(cls).a),
            "verdict": res["verdict"],
            "witness": None if res["witness"] is None else list(res["witness"]),
            "e_bound": res["e_bound"],
            "provenance": {
                "verdict": "conjectured polytope swept against the realizability test",
                "witness": "least conjectured type failing the realizability test",
            },
        }
    elif mode == "oo":
        _require(args, parser, "k")
        if args.bound is None:
            parser.error("--oo requires --bound")
        rows = [{"a": list(a.a)} for a in oo_polytope(args.k, args.bound)]
        doc = {
            "command": "section5",
            "mode": "oo",
            "k": args.k,
            "bound": args.bound,
            "columns": ["a"],
            "rows": rows,
            "provenance": {"rows": "a_{i+j} <= a_i + a_j with 0 < a_1 <= ... <= a_{k-1} <= bound"},
        }
    elif mode == "ol":
        _require(args, parser, "m", "k", "delta")
        cls = HirzebruchClass(m=args.m, k=args.k, delta=args.delta)
        a = scrollar_from_class(cls)
        bound = args.bound if args.bound is not None else a.a[-1] + 2
        rows = [{"e": list(e)} for e in ol_polytope(a, bound)]
        doc = {
            "command": "section5",
            "mode": "ol",
            "class": {"m": cls.m, "k": cls.k, "delta": cls.delta},
            "scrollar": list(a.a),
            "bound": bound,
            "columns": ["e"],
            "rows": rows,
            "provenance": {"rows": "e_{i+j} <= a_i + e_j, normalized e_1 = 0, entries <= bound"},
        }
    elif mode == "general_cover":
        _require(args, parser, "k", "g")
        witness = general_cover_not_abundant(args.k, args.g)
        doc = {
            "command": "section5",
            "mode": "general_cover",
            "k": args.k,
            "g": args.g,
            "witness": None if witness is None else list(witness),
            "provenance": {
                "witness": "splitting type in the scrollar polytope of the balanced cover "
                "whose expected codimension exceeds g"
            },
        }
    else:
        _require(args, parser, "d", "e", "f")
        rep = general_bound_check(args.d, args.e, args.f, g=args.g)
        doc = {
            "command": "section5",
            "mode": "triple",
            "d": list(rep.d),
            "e": list(rep.e),
            "f": list(rep.f),
            "violations": [list(v) for v in rep.violations],
            "degree_ok": rep.degree_ok,
            "provenance": {
                "violations": "index pairs with f_{i+j-k} < d_i + e_j",
                "degree_ok": "sum(d) + sum(e) - sum(f) against -(g + k - 1)",
            },
        }
    emit(doc, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbn",
        description="Splitting-type experiments for curves on Hirzebruch surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--p", type=int, default=DEFAULT_PRIME, help="field characteristic")
        p.add_argument("--seed", type=int, default=None, help="seed (fallback: HBN_SEED)")
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--delta", type=int, default=None)
        p.add_argument("--e", type=_parse_tuple, default=None, help="comma-separated type")
        p.add_argument("--f", type=_parse_tuple, default=None, help="comma-separated type")
        p.add_argument("--window", type=_parse_window, default=None, help="lo,hi")
        p.add_argument("--trials", type=int, default=5)
        p.add_argument(
            "--pattern", choices=("FULL", "SUT"), default="FULL", help="sampling pattern"
        )
        p.add_argument(
            "--selector",
            choices=("FULL_PRIME", "T_PRIME", "T_DOUBLE_PRIME", "T_CORNER", "T_INDUCTIVE"),
            default=None,
        )
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")

    p_enum = sub.add_parser("enumerate", help="stratum tables")
    common(p_enum)
    p_enum.add_argument("--degree", type=int, default=None)
    p_enum.add_argument("--sections", type=int, default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    p_sample = sub.add_parser("sample", help="sample and certify a curve")
    common(p_sample)
    p_sample.add_argument("--retries", type=int, default=8)
    p_sample.set_defaults(func=cmd_sample)

    p_dom = sub.add_parser("dominance", help="rank certification")
    common(p_dom)
    p_dom.add_argument("--lemma", choices=("sq", "main", "is"), default=None)
    p_dom.set_defaults(func=cmd_dominance)

    p_s5 = sub.add_parser("section5", help="scrollar bound reports")
    common(p_s5)
    p_s5.add_argument("--abundance", action="store_true")
    p_s5.add_argument("--oo", action="store_true")
    p_s5.add_argument("--ol", action="store_true")
    p_s5.add_argument("--general-cover", dest="general_cover", action="store_true")
    p_s5.add_argument("--triple", action="store_true")
    p_s5.add_argument("--bound", type=int, default=None)
    p_s5.add_argument("--g", type=int, default=None)
    p_s5.add_argument("--d", type=_parse_tuple, default=None)
    p_s5.set_defaults(func=cmd_section5)

    return parser


_NUMLIST = re.compile(r"^-\d+(,-?\d+)*$")


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Let `--e -8,-4,-1` parse: glue number-list values onto their flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok in ("--e", "--f", "--d", "--window")
            and i + 1 < len(argv)
            and _NUMLIST.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_values(list(argv)))
    seed = args.seed
    if seed is None:
        env = os.environ.get("HBN_SEED")
        if env is not None:
            seed = int(env)
    try:
        config = RunConfig(
            p=args.p,
            seed=seed,
            window=args.window,
            trials=args.trials,
            out=args.out,
            format=args.format,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return args.func(args, config, parser)


if __name__ == "__main__":
    sys.exit(main())
