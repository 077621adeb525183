"""Command-line driver: inspect the combinatorics, compute the polynomial
and cohomological invariants, and run the verification suite.

Subcommands
    triples H          modular triples of a Hessenberg function
    csf H              chromatic quasisymmetric function (JSON schema)
    llt H              unicellular LLT polynomial
    betti H            Hilbert numerator of the chosen side
    character H        graded character and Frobenius series
    check --thm T      verify a theorem on one function or a full sweep

H is the comma-separated value vector, e.g. "2,3,3".  Exit codes: 0 all
checks pass, 1 a check failed, 2 usage error.  Reports are deterministic
apart from the wall-time field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from gkmhess import coloring, hessenberg, maps
from gkmhess.cohomology import (
    frobenius_series, graded_character, hilbert_numerator, solve_graph)
from gkmhess.graphs import GRAPH_N_CAP, build_graph
from gkmhess.hessenberg import HessenbergFunction, find_modular_triples
from gkmhess.symfunc import DEGREE_CAP

CACHE_ENV = "GKMHESS_CACHE_DIR"

THEOREMS = ("1.1", "1.2", "5.1", "corollary", "llt-law", "csf-law", "all")


@dataclass
class RunConfig:
    n_cap: int = GRAPH_N_CAP
    degree_cap: int | None = None
    jobs: int = 1
    cache_dir: str | None = None
    fmt: str = "json"


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, coloring_only: bool, cfg: RunConfig) -> None:
    cap = DEGREE_CAP if coloring_only else min(cfg.n_cap, GRAPH_N_CAP)
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the cap {cap} for this command")


def _parse_h(text: str) -> HessenbergFunction:
    return hessenberg.from_string(text)


# ---------------------------------------------------------------------------
# simple commands

def cmd_triples(h: HessenbergFunction, cfg: RunConfig) -> dict:
    items = []
    for t in find_modular_triples(h):
        items.append({
            "kind": t.kind,
            "params": list(t.params),
            "h_minus": str(t.h_minus),
            "h": str(t.h),
            "h_plus": str(t.h_plus),
        })
    return {"command": "triples", "h": str(h), "triples": items}


def cmd_csf(h: HessenbergFunction, basis: str, cfg: RunConfig) -> dict:
    _check_cap(h.n, True, cfg)
    gf = coloring.csf_q(h).convert(basis)
    return {"command": "csf", "h": str(h), "result": gf.to_json()}


def cmd_llt(h: HessenbergFunction, basis: str, cfg: RunConfig) -> dict:
    _check_cap(h.n, True, cfg)
    gf = coloring.llt(h).convert(basis)
    return {"command": "llt", "h": str(h), "result": gf.to_json()}


def cmd_graph(h: HessenbergFunction, side: str, cfg: RunConfig) -> dict:
    _check_cap(h.n, False, cfg)
    g = build_graph(h, side)
    return {"command": "graph", "h": str(h), "side": side,
            "graph": g.to_json()}


def cmd_betti(h: HessenbergFunction, side: str, cfg: RunConfig) -> dict:
    _check_cap(h.n, False, cfg)
    space = solve_graph(build_graph(h, side), cfg.degree_cap, cfg.cache_dir)
    numer = hilbert_numerator(space)
    return {"command": "betti", "h": str(h), "side": side,
            "numerator": numer, "total": sum(numer)}


def cmd_character(h: HessenbergFunction, side: str, cfg: RunConfig) -> dict:
    _check_cap(h.n, False, cfg)
    kind = "dot" if side == "x" else "dagger"
    space = solve_graph(build_graph(h, side), cfg.degree_cap, cfg.cache_dir)
    char = graded_character(space, kind)
    series = frobenius_series(space, kind)
    return {"command": "character", "h": str(h), "side": side,
            "action": kind, "character": char.to_json(),
            "frobenius": series.to_json()}


# ---------------------------------------------------------------------------
# verification driver

def _triple_payload(t) -> tuple:
    return (t.h.values, t.kind, t.params)


def _restore_triple(payload: tuple):
    values, kind, params = payload
    h = HessenbergFunction(tuple(values))
    for t in find_modular_triples(h):
        if t.kind == kind and t.params == tuple(params):
            return t
    raise ValueError(f"no triple {kind} {params} on {h}")


def _run_item(item: tuple) -> dict:
    """Execute one verification work item (picklable payloads only)."""
    name = item[0]
    cache_dir = item[-1]
    if name == "thm11":
        h = HessenbergFunction(item[1])
        ok, diff = maps.check_theorem_1_1(h, cache_dir=cache_dir)
        out = {"check": "1.1", "h": str(h), "pass": ok}
        if not ok:
            out["diff"] = diff.to_json()
        return out
    if name == "thm12":
        h = HessenbergFunction(item[1])
        ok, diff = maps.check_theorem_1_2(h, cache_dir=cache_dir)
        out = {"check": "1.2", "h": str(h), "pass": ok}
        if not ok:
            out["diff"] = diff.to_json()
        return out
    if name == "thm51":
        triple = _restore_triple(item[1])
        side = item[2]
        ctx = maps.TripleContext.build(triple, side, cache_dir=cache_dir)
        report = maps.check_theorem_main(ctx, raise_on_failure=False)
        return {"check": "5.1", "h": str(triple.h), "kind": triple.kind,
                "params": list(triple.params), "side": side,
                "pass": report["pass"], "degrees": report["degrees"]}
    if name == "corollary":
        triple = _restore_triple(item[1])
        side = item[2]
        ctx = maps.TripleContext.build(triple, side, cache_dir=cache_dir)
        ok, diff = maps.check_corollary_modular_law(ctx)
        out = {"check": "corollary", "h": str(triple.h), "kind": triple.kind,
               "params": list(triple.params), "side": side, "pass": ok}
        if not ok:
            out["diff"] = diff.to_json()
        return out
    if name in ("lltlaw", "csflaw"):
        triple = _restore_triple(item[1])
        fn = (coloring.check_modular_law_llt if name == "lltlaw"
              else coloring.check_modular_law_csf)
        ok = fn(triple)
        return {"check": "llt-law" if name == "lltlaw" else "csf-law",
                "h": str(triple.h), "kind": triple.kind,
                "params": list(triple.params), "pass": ok}
    raise ValueError(f"unknown item {name!r}")


def _expand_items(thm: str, hs: list[HessenbergFunction],
                  cfg: RunConfig) -> list[tuple]:
    items: list[tuple] = []
    want = [thm] if thm != "all" else ["1.1", "1.2", "5.1", "corollary",
                                       "llt-law", "csf-law"]
    for h in hs:
        triples = find_modular_triples(h)
        for t in want:
            if t == "1.1":
                _check_cap(h.n, False, cfg)
                items.append(("thm11", h.values, cfg.cache_dir))
            elif t == "1.2":
                _check_cap(h.n, False, cfg)
                items.append(("thm12", h.values, cfg.cache_dir))
            elif t == "5.1":
                _check_cap(h.n, False, cfg)
                for tr in triples:
                    if tr.kind != "C":
                        continue
                    for side in ("x", "y"):
                        items.append(
                            ("thm51", _triple_payload(tr), side, cfg.cache_dir))
            elif t == "corollary":
                _check_cap(h.n, False, cfg)
                for tr in triples:
                    if tr.kind != "C":
                        continue
                    for side in ("x", "y"):
                        items.append(
                            ("corollary", _triple_payload(tr), side,
                             cfg.cache_dir))
            elif t == "llt-law":
                _check_cap(h.n, True, cfg)
                items.extend(("lltlaw", _triple_payload(tr), cfg.cache_dir)
                             for tr in triples)
            elif t == "csf-law":
                _check_cap(h.n, True, cfg)
                items.extend(("csflaw", _triple_payload(tr), cfg.cache_dir)
                             for tr in triples)
    return items


def cmd_check(thm: str, h: HessenbergFunction | None, sweep: int | None,
              cfg: RunConfig) -> dict:
    if (h is None) == (sweep is None):
        raise CapExceeded("provide exactly one of a Hessenberg vector or --sweep")
    if sweep is not None:
        hs = list(hessenberg.enumerate_hessenberg(sweep))
        scope: dict = {"sweep": sweep}
    else:
        hs = [h]
        scope = {"h": str(h)}
    items = _expand_items(thm, hs, cfg)
    if cfg.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_item, items))
    else:
        results = [_run_item(it) for it in items]
    return {"command": "check", "thm": thm, "scope": scope,
            "pass": all(r["pass"] for r in results),
            "count": len(results), "items": results}


# ---------------------------------------------------------------------------
# rendering

def _render_text(report: dict) -> str:
    lines = []
    cmd = report.get("command")
    if cmd == "check":
        for item in report["items"]:
            flag = "PASS" if item["pass"] else "FAIL"
            extra = " ".join(f"{k}={item[k]}" for k in
                             ("kind", "params", "side") if k in item)
            lines.append(f"{flag} check={item['check']} h={item['h']} {extra}".rstrip())
        lines.append(f"{'PASS' if report['pass'] else 'FAIL'} "
                     f"{report['count']} checks")
    elif cmd == "triples":
        for t in report["triples"]:
            lines.append(f"kind {t['kind']} params {t['params']}: "
                         f"{t['h_minus']} < {t['h']} < {t['h_plus']}")
        if not report["triples"]:
            lines.append("no modular triples")
    elif cmd in ("csf", "llt"):
        from gkmhess.symfunc import GradedSymmetricFunction
        lines.append(repr(GradedSymmetricFunction.from_json(report["result"])))
    elif cmd == "betti":
        lines.append(f"numerator {report['numerator']} total {report['total']}")
    elif cmd == "character":
        lines.append(json.dumps(report["character"], indent=1))
        lines.append(f"frobenius: {report['frobenius']}")
    else:
        lines.append(json.dumps(report, indent=1))
    return "\n".join(lines)


def _emit(report: dict, cfg: RunConfig, out_path: str | None,
          wall: float) -> None:
    report["wall_time_sec"] = round(wall, 3)
    if cfg.fmt == "json":
        text = json.dumps(report, indent=1)
    else:
        text = _render_text(report)
    print(text)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(json.dumps(report, indent=1))
            fh.write("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV))
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--n", type=int, default=GRAPH_N_CAP,
                        help="cap on n for graph commands (hard max 6)")
    common.add_argument("--degree-cap", type=int, default=None,
                        help="solve equivariant degrees up to this bound")
    common.add_argument("--output", default=None,
                        help="also write the JSON report to this file")

    ap = argparse.ArgumentParser(
        prog="gkmhess",
        description="Hessenberg GKM graphs, graph cohomology, chromatic "
                    "quasisymmetric functions, LLT polynomials, and "
                    "modular-law verification (exact arithmetic).")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("triples", parents=[common],
                        help="modular triples of h")
    sp.add_argument("h")

    for name in ("csf", "llt"):
        sp = sub.add_parser(name, parents=[common],
                            help=f"{name} polynomial of h")
        sp.add_argument("h")
        sp.add_argument("--basis", choices=("m", "e", "h", "p", "s"),
                        default="m")

    for name in ("graph", "betti", "character"):
        sp = sub.add_parser(name, parents=[common],
                            help=f"{name} of the chosen side")
        sp.add_argument("h")
        sp.add_argument("--side", choices=("x", "y"), default="x")

    sp = sub.add_parser("check", parents=[common], help="verify a theorem")
    sp.add_argument("h", nargs="?", default=None)
    sp.add_argument("--thm", choices=THEOREMS, required=True)
    sp.add_argument("--sweep", type=int, default=None,
                    help="verify over every Hessenberg function of this size")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = RunConfig(n_cap=args.n, degree_cap=args.degree_cap, jobs=args.jobs,
                    cache_dir=args.cache_dir, fmt=args.format)
    t0 = time.time()
    try:
        if args.cmd == "triples":
            report = cmd_triples(_parse_h(args.h), cfg)
        elif args.cmd == "graph":
            report = cmd_graph(_parse_h(args.h), args.side, cfg)
        elif args.cmd == "csf":
            report = cmd_csf(_parse_h(args.h), args.basis, cfg)
        elif args.cmd == "llt":
            report = cmd_llt(_parse_h(args.h), args.basis, cfg)
        elif args.cmd == "betti":
            report = cmd_betti(_parse_h(args.h), args.side, cfg)
        elif args.cmd == "character":
            report = cmd_character(_parse_h(args.h), args.side, cfg)
        elif args.cmd == "check":
            h = _parse_h(args.h) if args.h else None
            report = cmd_check(args.thm, h, args.sweep, cfg)
        else:   # pragma: no cover
            ap.error(f"unknown command {args.cmd}")
            return 2
    except (CapExceeded, hessenberg.NotNonDecreasing,
            hessenberg.ValueOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, cfg, args.output, time.time() - t0)
    return 0 if report.get("pass", True) else 1


if __name__ == "__main__":
    sys.exit(main())
