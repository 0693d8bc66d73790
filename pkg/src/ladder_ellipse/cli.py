"""Command-line front end.

Exit codes: 0 solved (any solution count), 2 invalid input, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .conic import TangentEllipse
from .errors import LadderEllipseError
from .solver import LadderProblem, critical_point, circle_s0, reduce, solve_reduced
from .svg import emit_svg
from .triangle import InscriptionParams, center_from_params, inscribed_conic, is_nondegenerate_ellipse, tangency_points
from .verify import verify_solution

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3

SIG_DIGITS = 12


@dataclass(frozen=True)
class CliConfig:
    command: str
    c: float | None = None
    d: float | None = None
    cross: float | None = None
    s: float | None = None
    u: float | None = None
    v: float | None = None
    w: float | None = None
    t: float | None = None
    output_path: str | None = None
    svg_path: str | None = None
    check: bool = False
    tolerance: float = 1e-9
    fmt: str = "json"


class InvalidInput(Exception):
    pass


def _num(x: float) -> float:
    # fixed 12 significant digits; 0.0 folds away a negative zero
    return float(f"{x:.{SIG_DIGITS}g}") + 0.0


def _clean(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(_clean(doc), indent=2) + "\n"


def _point(p) -> dict[str, float]:
    return {"x": p.x, "y": p.y}


def _require(cfg: CliConfig, *names: str) -> dict[str, float]:
    values = {}
    for name in names:
        value = getattr(cfg, name)
        if value is None:
            raise InvalidInput(f"--{name} is required for {cfg.command}")
        if not math.isfinite(value):
            raise InvalidInput(f"--{name} must be finite")
        values[name] = float(value)
    return values


def _ellipse(cfg: CliConfig) -> TangentEllipse:
    vals = _require(cfg, "c", "d", "cross")
    try:
        return TangentEllipse(vals["c"], vals["d"], vals["cross"])
    except LadderEllipseError as exc:
        raise InvalidInput(str(exc)) from exc


def solve_document(cfg: CliConfig) -> tuple[dict[str, Any], TangentEllipse, list]:
    e = _ellipse(cfg)
    s = _require(cfg, "s")["s"]
    if not s > 0:
        raise InvalidInput("ladder length s must be positive")
    r = reduce(e)
    crit = critical_point(r)
    sols = solve_reduced(r, s, crit)
    entries = []
    for sol in sols:
        entry: dict[str, Any] = {
            "t": sol.t,
            "w": sol.w,
            "u": sol.u,
            "v": sol.v,
            "tangency": _point(sol.tangency),
            "height": sol.height,
            "multiplicity": sol.multiplicity,
        }
        if cfg.check:
            entry["verification"] = verify_solution(e, s, sol, cfg.tolerance).as_dict()
        entries.append(entry)
    doc = {
        "command": "solve",
        "input": {"c": e.c, "d": e.d, "cross": e.cross, "s": s},
        "j": r.j,
        "t0": crit.t0,
        "s0": crit.s0,
        "s0_squared": crit.s0_squared,
        "count": len(sols),
        "solutions": entries,
    }
    return doc, e, sols


def critical_document(cfg: CliConfig) -> dict[str, Any]:
    e = _ellipse(cfg)
    r = reduce(e)
    crit = critical_point(r)
    doc: dict[str, Any] = {
        "command": "critical",
        "input": {"c": e.c, "d": e.d, "cross": e.cross},
        "j": r.j,
        "t0": crit.t0,
        "s0": crit.s0,
        "s0_squared": crit.s0_squared,
    }
    if e.cross == 0 and e.d == e.c:
        closed = circle_s0(e.c)
        doc["circle_closed_form"] = closed
        doc["circle_residual"] = abs(crit.s0 - closed)
    return doc


def inscribe_document(cfg: CliConfig) -> dict[str, Any]:
    vals = _require(cfg, "u", "v", "w", "t")
    try:
        p = InscriptionParams.of(vals["u"], vals["v"], vals["w"], vals["t"])
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    conic = inscribed_conic(p)
    tang = tangency_points(p)
    return {
        "command": "inscribe",
        "input": vals,
        "conic": dict(zip(("a", "b", "cxy", "dx", "ey", "f"), conic.as_tuple())),
        "nondegenerate": is_nondegenerate_ellipse(conic),
        "center": _point(center_from_params(p)),
        "tangencies": {"t1": _point(tang.t1), "t2": _point(tang.t2), "t3": _point(tang.t3)},
    }


def _text(doc: dict[str, Any]) -> str:
    doc = _clean(doc)
    out = []
    if doc["command"] == "solve":
        i = doc["input"]
        out.append(f"ellipse c={i['c']} d={i['d']} C={i['cross']}, ladder length s={i['s']}")
        out.append(f"J={doc['j']}  t0={doc['t0']}  s0={doc['s0']}  (s0^2={doc['s0_squared']})")
        out.append(f"{doc['count']} ladder position(s)")
        for k, sol in enumerate(doc["solutions"], 1):
            tp = sol["tangency"]
            out.append(
                f"  #{k}: foot u={sol['u']}, top height v={sol['v']}, touches at ({tp['x']}, {tp['y']})"
                f"  [t={sol['t']}, w={sol['w']}, multiplicity {sol['multiplicity']}]"
            )
            if "verification" in sol:
                out.append(f"      check {'passed' if sol['verification']['passed'] else 'FAILED'}")
    elif doc["command"] == "critical":
        out.append(f"J={doc['j']}  t0={doc['t0']}  s0={doc['s0']}  s0^2={doc['s0_squared']}")
        if "circle_closed_form" in doc:
            out.append(f"circle closed form 2(sqrt2+1)c={doc['circle_closed_form']}  residual={doc['circle_residual']}")
    else:
        out.append("conic: " + ", ".join(f"{k}={v}" for k, v in doc["conic"].items()))
        out.append(f"center: ({doc['center']['x']}, {doc['center']['y']})")
        for name, p in doc["tangencies"].items():
            out.append(f"{name.upper()}: ({p['x']}, {p['y']})")
    return "\n".join(out) + "\n"


def _emit(cfg: CliConfig, doc: dict[str, Any]) -> None:
    sys.stdout.write(dumps(doc) if cfg.fmt == "json" else _text(doc))
    if cfg.output_path:
        Path(cfg.output_path).write_text(dumps(doc), encoding="utf-8")


def run_solve(cfg: CliConfig) -> int:
    doc, e, sols = solve_document(cfg)
    _emit(cfg, doc)
    if cfg.svg_path:
        emit_svg(e, sols, cfg.svg_path)
    return EXIT_OK


def run_critical(cfg: CliConfig) -> int:
    _emit(cfg, critical_document(cfg))
    return EXIT_OK


def run_inscribe(cfg: CliConfig) -> int:
    _emit(cfg, inscribe_document(cfg))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladder-ellipse",
        description="Ladders of a given length touching an ellipse tangent to both axes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
        p.add_argument("--output", dest="output_path", help="also write the JSON document here")

    def ellipse_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--c", type=float, required=True, help="x-axis tangency abscissa")
        p.add_argument("--d", type=float, required=True, help="y-axis tangency ordinate")
        p.add_argument("--cross", type=float, required=True, help="xy coefficient C; needs cd > |C|")

    p_solve = sub.add_parser("solve", help="all ladder positions for length s")
    ellipse_flags(p_solve)
    p_solve.add_argument("--s", type=float, required=True, help="ladder length")
    p_solve.add_argument("--svg", dest="svg_path", help="write a drawing to this file")
    p_solve.add_argument("--check", action="store_true", help="verify each solution independently")
    p_solve.add_argument("--tolerance", type=float, default=1e-9)
    common(p_solve)

    p_crit = sub.add_parser("critical", help="critical length s0")
    ellipse_flags(p_crit)
    common(p_crit)

    p_ins = sub.add_parser("inscribe", help="ellipse inscribed in a right triangle")
    for name, help_ in (("u", "floor leg"), ("v", "wall leg"), ("w", "wall parameter in (0,1)"), ("t", "floor parameter in (0,1)")):
        p_ins.add_argument(f"--{name}", type=float, required=True, help=help_)
    common(p_ins)
    return parser


_RUNNERS = {"solve": run_solve, "critical": run_critical, "inscribe": run_inscribe}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    cfg = CliConfig(**vars(args))
    if cfg.tolerance <= 0 or not math.isfinite(cfg.tolerance):
        print("error: --tolerance must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return _RUNNERS[cfg.command](cfg)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
