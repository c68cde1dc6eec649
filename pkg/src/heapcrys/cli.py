"""
Command-line entry point: ``heapcrys <group> <action> [options]``.

Every command prints a JSON report (and writes it to ``--report`` when
given).  Exit status: 0 when every check passes, 1 when one fails, 2 for
bad usage or invalid input.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .config import DEFAULTS, Bounds
from .crystal import RppCrystal, generate_demazure, verify_gravsort
from .dynkin import build_diagram
from .export import crystal_dot, dumps, heap_dot
from .heap import build_heap, four_colouring, order_ideals
from .weyl import (check_reduced, minimal_coset_rep, minimal_witness,
                   parse_word, weak_order_below)

__all__ = ["RunConfig", "UsageError", "main", "build_parser"]


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    diagram: str | None = None
    word: tuple[int, ...] | None = None
    J: tuple[int, ...] | None = None
    n: int = 1
    seed: int = 0
    bounds: Bounds = DEFAULTS
    report: Path | None = None
    out: Path | None = None
    timing: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.word is not None and self.J is not None:
            raise UsageError("--word and --J are mutually exclusive")
        if self.n < 1:
            raise UsageError("--n must be positive")
        for name in ("max_word_length", "max_ideals", "max_crystal_size", "retry_budget"):
            if getattr(self.bounds, name) <= 0:
                raise UsageError(f"bound {name} must be positive")

    def resolve(self):
        """(diagram, word, lambda): the word is w_0^J when --J is given."""
        if self.diagram is None:
            raise UsageError("--type is required")
        d = build_diagram(self.diagram)
        if self.J is not None:
            word = minimal_coset_rep(d, self.J)
            lam = d.weight({i: 1 for i in d.vertices if i not in set(self.J)})
        elif self.word is not None:
            word = check_reduced(d, self.word)
            lam = minimal_witness(d, word)
        else:
            raise UsageError("one of --word or --J is required")
        if "lam" in self.extra and self.extra["lam"] is not None:
            lam = tuple(self.extra["lam"])
        return d, word, lam


def _ints(text: str) -> tuple[int, ...]:
    return parse_word(text)


def _weight_spec(text: str):
    """``w1`` / ``w1+w3`` (fundamental weights) or ω-coordinates ``0,1,0``."""
    if text.strip().lower().startswith("w"):
        return ("omega", tuple(int(t.strip()[1:]) for t in text.split("+")))
    return ("coords", parse_word(text))


def _heap_build(cfg: RunConfig):
    d, word, lam = cfg.resolve()
    h = build_heap(d, word, max_length=cfg.bounds.max_word_length)
    return True, {"heap": h.to_json(), "size": len(h), "witness": list(lam),
                  "beads": [h.label(x) for x in range(len(h))]}


def _heap_ideals(cfg: RunConfig):
    d, word, _ = cfg.resolve()
    h = build_heap(d, word)
    ideals = order_ideals(h, cfg.bounds.max_ideals)
    weak = len(weak_order_below(d, word))
    return len(ideals) == weak, {
        "count": len(ideals), "weak_order_count": weak,
        "ideals": [[h.label(x) for x in range(len(h)) if m >> x & 1] for m in ideals]}


def _heap_dot(cfg: RunConfig):
    d, word, _ = cfg.resolve()
    h = build_heap(d, word)
    col = four_colouring(h) if cfg.extra.get("colour") else None
    text = heap_dot(h, col)
    _emit_text(cfg, text)
    return True, {"nodes": len(h), "edges": len(h.covers), "out": str(cfg.out) if cfg.out else None}


def _crystal_generate(cfg: RunConfig):
    d, word, lam = cfg.resolve()
    elems = generate_demazure(d, word, lam, cfg.n, cfg.bounds.max_crystal_size)
    h = build_heap(d, word)
    listing = sorted(tuple(sorted(h.label(x) for x in range(len(h)) if m >> x & 1) for m in chain)
                     for chain in elems)
    return True, {"size": len(elems), "n": cfg.n, "lambda": list(lam),
                  "elements": [list(map(list, c)) for c in listing[:cfg.extra.get("limit", 200)]]}


def _crystal_gravsort(cfg: RunConfig):
    d, word, lam = cfg.resolve()
    rep = verify_gravsort(d, word, lam, cfg.n)
    return rep.ok, {"cardinality": rep.demazure_size, **rep.to_json()}


def _crystal_dot(cfg: RunConfig):
    d, word, lam = cfg.resolve()
    h = build_heap(d, word)
    c = RppCrystal(h, lam, cfg.n)
    els = c.elements()
    text = crystal_dot(c, els, label=lambda p: ",".join(map(str, p.values)))
    _emit_text(cfg, text)
    return True, {"nodes": len(els), "out": str(cfg.out) if cfg.out else None}


def _tableaux_roundtrip(cfg: RunConfig):
    from .tableaux import (all_ssyt, gt_of_tableau, random_ssyt, rectangular_tableau_of_rpp,
                           rpp_of_rectangular_tableau, tableau_of_gt)
    shape = cfg.extra["shape"]
    m = cfg.extra["m"]
    samples = cfg.extra.get("samples")
    if samples:
        rng = random.Random(cfg.seed)
        tabs = [random_ssyt(shape, m, rng) for _ in range(samples)]
    else:
        tabs = list(all_ssyt(shape, m))
    rect = len(set(shape)) == 1 and len(shape) <= m // 2
    bad = []
    for t in tabs:
        if tableau_of_gt(gt_of_tableau(t)) != t:
            bad.append({"tableau": t.to_json(), "via": "gt"})
        if rect and rectangular_tableau_of_rpp(rpp_of_rectangular_tableau(t), m, len(shape)) != t:
            bad.append({"tableau": t.to_json(), "via": "rpp"})
    return not bad, {"checked": len(tabs), "rectangular": rect, "failures": bad[:10]}


def _toggles_check(cfg: RunConfig):
    from .toggles import ActionContext, cactus_relation_failures, check_conjectures, check_identity
    d = build_diagram(cfg.diagram)
    lam = tuple(cfg.extra["lam"]) if cfg.extra.get("lam") else None
    if cfg.extra.get("weight") is not None:
        kind, vals = cfg.extra["weight"]
        lam = d.weight({i: 1 for i in vals}) if kind == "omega" else vals
    if lam is None:
        if cfg.J is None:
            raise UsageError("toggles check needs --lam or --J")
        lam = d.weight({i: 1 for i in d.vertices if i not in set(cfg.J)})
    lhs, rhs = cfg.extra.get("lhs"), cfg.extra.get("rhs")
    if cfg.extra.get("identity"):
        if lhs is not None or "=" not in cfg.extra["identity"]:
            raise UsageError('--identity takes "lhs = rhs" and excludes --lhs/--rhs')
        lhs, rhs = (t.strip() for t in cfg.extra["identity"].split("=", 1))
    if (lhs is None) != (rhs is None):
        raise UsageError("--lhs and --rhs go together")
    if lhs is not None:
        results = [check_identity(ActionContext(d, lam, n), lhs, rhs) for n in range(1, cfg.n + 1)]
    else:
        results = check_conjectures(d, lam, cfg.n)
    out = {"identities": [r.to_json() for r in results]}
    ok = all(r.equal for r in results) if cfg.extra.get("strict") else True
    if cfg.extra.get("cactus"):
        for n in range(1, cfg.n + 1):
            bad = cactus_relation_failures(ActionContext(d, lam, n))
            out[f"cactus failures n={n}"] = bad[:10]
            ok &= not bad
    return ok, out


def _module_build(cfg: RunConfig):
    from .preproj import build_heap_module
    d, word, _ = cfg.resolve()
    m = build_heap_module(d, word)
    res = {str(i): int(abs(r).sum()) for i, r in m.residuals().items()}
    return all(v == 0 for v in res.values()), {"module": m.to_json(), "residual_norms": res}


def _module_socle(cfg: RunConfig):
    from .preproj import build_heap_module, socle_and_hull_checks
    d, word, lam = cfg.resolve()
    rep = socle_and_hull_checks(build_heap_module(d, word), lam)
    return rep.ok, rep.to_json()


def _grass_verify(cfg: RunConfig):
    from .grassmannian import verify_main_theorem
    d, word, _ = cfg.resolve()
    rep = verify_main_theorem(d, word, n=cfg.n, seeds=cfg.extra.get("seeds", 5),
                              root_seed=cfg.seed, bounds=cfg.bounds)
    out = rep.to_json()
    if not cfg.timing:
        out["runtime_ms"] = 0
    return rep.ok, out


def _grass_springer(cfg: RunConfig):
    from .grassmannian import springer_compare
    rep = springer_compare(cfg.extra["m"], cfg.extra["p"], cfg.n, seeds=cfg.extra.get("seeds", 10),
                           root_seed=cfg.seed)
    out = rep.to_json()
    if not cfg.timing:
        out["runtime_ms"] = 0
    return rep.ok, out


def _suite_all(cfg: RunConfig):
    from .suite import run_all
    only = cfg.extra.get("only")
    results = run_all(cfg.extra.get("bound", "full"), cfg.seed, only)
    for r in results:
        print(f"criterion {r.criterion_id:2d} {r.status}  {r.name}", file=sys.stderr)
    return all(r.ok for r in results), {"criteria": [r.to_json(cfg.timing) for r in results]}


COMMANDS = {
    ("heap", "build"): _heap_build, ("heap", "ideals"): _heap_ideals, ("heap", "dot"): _heap_dot,
    ("crystal", "generate"): _crystal_generate, ("crystal", "verify-gravsort"): _crystal_gravsort,
    ("crystal", "dot"): _crystal_dot, ("tableaux", "roundtrip"): _tableaux_roundtrip,
    ("toggles", "check"): _toggles_check, ("module", "build"): _module_build,
    ("module", "socle"): _module_socle, ("grassmannian", "verify"): _grass_verify,
    ("grassmannian", "springer"): _grass_springer, ("suite", "all"): _suite_all,
}


def _emit_text(cfg: RunConfig, text: str) -> None:
    if cfg.out is not None:
        cfg.out.write_text(text)
    else:
        sys.stderr.write(text)


def _common(p: argparse.ArgumentParser, target: bool = True) -> None:
    if target:
        p.add_argument("--type", dest="diagram", help="Dynkin type such as A4, D5, E6")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--word", type=_ints, help="reduced word, e.g. 3,4,2,3,1,2")
        g.add_argument("--J", type=_ints, help="parabolic subset; uses w_0^J")
        p.add_argument("--lam", type=_ints, help="witness weight in omega coordinates")
    p.add_argument("--n", type=int, default=1, help="height / number of copies")
    p.add_argument("--seed", type=int, default=0, help="root seed")
    p.add_argument("--report", "--json", dest="report", type=Path,
                   help="also write the JSON report here")
    p.add_argument("--out", type=Path, help="output file for DOT text")
    p.add_argument("--no-timing", action="store_true",
                   help="write runtime_ms as 0 so reports are byte-identical across runs")
    p.add_argument("--retry-budget", type=int, default=DEFAULTS.retry_budget)
    p.add_argument("--max-crystal-size", type=int, default=DEFAULTS.max_crystal_size)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heapcrys", description=__doc__.strip().splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)
    actions: dict[str, argparse._SubParsersAction] = {}
    for (group, action) in COMMANDS:
        if group not in actions:
            actions[group] = groups.add_parser(group).add_subparsers(dest="action", required=True)
        p = actions[group].add_parser(action)
        _common(p, target=group not in ("suite",) and (group, action) != ("grassmannian", "springer")
                and group != "tableaux")
        if (group, action) == ("heap", "dot"):
            p.add_argument("--colour", action="store_true", help="colour edges by the 4-colouring")
        if (group, action) == ("crystal", "generate"):
            p.add_argument("--limit", type=int, default=200, help="elements listed in the report")
        if group == "tableaux":
            p.add_argument("--shape", type=_ints, required=True)
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--samples", type=int, help="random tableaux instead of all")
        if group == "toggles":
            p.add_argument("--weight", type=_weight_spec, help="w1, w1+w3 or 0,1,0")
            p.add_argument("--identity", help='"t1 = s2 s1 s12"')
            p.add_argument("--lhs")
            p.add_argument("--rhs")
            p.add_argument("--cactus", action="store_true", help="also check the cactus relations")
            p.add_argument("--strict", action="store_true", help="fail on an UNEQUAL identity")
        if group == "grassmannian":
            p.add_argument("--seeds", type=int, default=5 if action == "verify" else 10)
        if (group, action) == ("grassmannian", "springer"):
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--p", type=int, required=True)
        if group == "suite":
            p.add_argument("--bound", choices=("small", "full"), default="full")
            p.add_argument("--only", type=_ints, help="criterion ids to run")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    extra = {k: v for k, v in vars(args).items()
             if k not in ("group", "action", "diagram", "word", "J", "n", "seed", "report",
                          "out", "no_timing", "retry_budget", "max_crystal_size")}
    bounds = DEFAULTS.with_(retry_budget=args.retry_budget, max_crystal_size=args.max_crystal_size)
    return RunConfig(diagram=getattr(args, "diagram", None), word=getattr(args, "word", None),
                     J=getattr(args, "J", None), n=args.n, seed=args.seed, bounds=bounds,
                     report=args.report, out=args.out, timing=not args.no_timing, extra=extra)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    command = f"{args.group} {args.action}"
    try:
        cfg = _config(args)
    except UsageError as exc:
        print(f"heapcrys: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    try:
        ok, body = COMMANDS[(args.group, args.action)](cfg)
        status = "PASS" if ok else "FAIL"
        code = 0 if ok else 1
    except ValueError as exc:  # invalid input: bad word, diagram, shape, ...
        print(f"heapcrys: error: {exc}", file=sys.stderr)
        status, body, code = "ERROR", {"error": f"{type(exc).__name__}: {exc}"}, 2
    except (AssertionError, RuntimeError) as exc:
        status, body, code = "FAIL", {"error": f"{type(exc).__name__}: {exc}"}, 1
    report = {"command": command, "status": status,
              "runtime_ms": int((time.perf_counter() - t0) * 1000) if cfg.timing else 0, **body}
    text = dumps(report)
    sys.stdout.write(text)
    if cfg.report is not None:
        cfg.report.write_text(text)
    return code
