"""Command line front end: ``dakernel <session> <command> [options]``.

Every run prints one JSON report ``{"command", "status", "result"}``.
Exit codes: 0 ok, 1 parse error, 2 failed precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .adjoint import from_adjoint, taylor_hom
from .diffideal import (
    ComponentIdeal,
    DiffIdeal,
    diff_dimension,
    diff_radical,
    is_pseudomaximal,
    is_pseudoprime,
    sigma_image_ideal,
    underscore_sigma,
)
from .finitering import (
    FiniteRingError,
    catalogue_specs,
    from_pseudofield,
    make_finite_ring,
    verify_pseudoprime_props,
)
from .groebner import Ideal
from .parser import ParseError, Session, load_session, parse_expr, parse_point, split_statements
from .variety import PointSet, glue_regular, ideal_of_points, nullstellensatz_check, solve_points

COMMANDS = ("solve", "adjoint", "from-adjoint", "dim", "pseudoprime", "pseudomaximal", "radical",
            "nss-check", "glue", "lab", "taylor", "sigma-ideal", "ideal-of-points")


class Precondition(Exception):
    pass


def _ideal(session: Session) -> DiffIdeal:
    return DiffIdeal(session.ring, session.equations)


def _diff_ideal_json(I: DiffIdeal) -> dict:
    return {"generators": sorted(str(f) for f in I.gens), "adjoint": I.adjoint.basis_strings()}


def _read_lines(path: Path):
    return list(split_statements(path.read_text(encoding="utf-8")))


def _points_file(session: Session, path: Path) -> PointSet:
    pts = []
    for ln, _, stmt in _read_lines(path):
        try:
            pts.append(parse_point(stmt.removeprefix("point").strip(), session.ring, ln))
        except ParseError as exc:
            exc.source = str(path)
            raise
    return PointSet(session.ring, tuple(pts))


def _patch_file(session: Session, path: Path):
    patches, normalize = [], False
    for ln, col, stmt in _read_lines(path):
        if stmt == "normalize":
            normalize = True
            continue
        body = stmt.removeprefix("patch").strip()
        if ";" not in body:
            raise ParseError("patch lines read 'patch <g> ; <h>'", ln, col, str(path))
        g, h = body.split(";", 1)
        try:
            patches.append((parse_expr(g, session.ring, ln), parse_expr(h, session.ring, ln)))
        except ParseError as exc:
            exc.source = str(path)
            raise
    return patches, normalize


def execute(session: Session | None, command: str, args: argparse.Namespace | None = None):
    """Run one command and return the JSON-ready result (raises on precondition failure)."""
    args = args or argparse.Namespace()
    ext = getattr(args, "ext", 1) or 1
    extra = list(getattr(args, "args", []) or [])
    if command == "lab":
        return _lab(session, extra)
    if session is None:
        raise Precondition(f"command {command!r} needs a session file")
    R = session.ring
    if command == "solve":
        return solve_points(_ideal(session), ext).to_json()
    if command == "adjoint":
        return _ideal(session).adjoint.basis_strings()
    if command == "from-adjoint":
        J = Ideal(R.adjoint_ring, session.adjoint_equations)
        return _diff_ideal_json(from_adjoint(J, R))
    if command == "dim":
        return diff_dimension(_ideal(session))
    if command == "pseudoprime":
        return is_pseudoprime(_ideal(session))
    if command == "pseudomaximal":
        return is_pseudomaximal(_ideal(session))
    if command == "radical":
        return _diff_ideal_json(diff_radical(_ideal(session)))
    if command == "nss-check":
        rep = nullstellensatz_check(_ideal(session), ext)
        return {"holds": rep.holds, "status": rep.status, "inclusion": rep.inclusion,
                "lhs": rep.lhs, "rhs": rep.rhs, "points": rep.points.to_json(),
                "radical_degree": rep.radical_degree, "detail": rep.detail}
    if command == "glue":
        if len(extra) != 1:
            raise Precondition("usage: glue <patch file>")
        patches, normalize = _patch_file(session, Path(extra[0]))
        return str(glue_regular(patches, _ideal(session), normalize=normalize))
    if command == "ideal-of-points":
        if len(extra) != 1:
            raise Precondition("usage: ideal-of-points <file>")
        return _diff_ideal_json(ideal_of_points(_points_file(session, Path(extra[0]))))
    if command == "taylor":
        P = session.pseudofield
        factor = getattr(args, "factor", 0) or 0
        sigma = P.group.lookup(getattr(args, "sigma", None) or "e")
        if sigma is None:
            raise Precondition(f"unknown group element {args.sigma!r}")
        T = taylor_hom(P, factor, getattr(args, "frob", 0) or 0, sigma)
        return {"status": T.status, "sigma": P.group.label(sigma),
                "table": [{"tau": P.group.label(t), "factor": j, "frobenius": x}
                          for t, (j, x) in enumerate(T.table)]}
    if command == "sigma-ideal":
        G = R.group
        sigma = G.lookup(getattr(args, "sigma", None) or G.label(min(1, G.order - 1)))
        if sigma is None:
            raise Precondition(f"unknown group element {args.sigma!r}")
        a = ComponentIdeal.from_gens(R, session.equations)
        img = sigma_image_ideal(a, sigma)
        return {"sigma": G.label(sigma),
                "components": {G.label(t): c.basis_strings() for t, c in enumerate(a.comps)},
                "image": {G.label(t): c.basis_strings() for t, c in enumerate(img.comps)},
                "is_difference": a.is_difference(),
                "underscore_sigma": _diff_ideal_json(underscore_sigma(a))}
    raise Precondition(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}")


def _lab(session: Session | None, extra: list[str]):
    if extra[:1] == ["verify"]:
        extra = extra[1:]
    if session is not None and not extra:
        P = session.pseudofield
        if P.size() is None or P.size() > 81:
            raise Precondition("lab needs a finite pseudofield with at most 81 elements")
        return [verify_pseudoprime_props(from_pseudofield(P, "session")).to_json()]
    if len(extra) != 1:
        raise Precondition(f"usage: lab verify <ring|all>; rings: {', '.join(catalogue_specs())}")
    names = list(catalogue_specs()) if extra[0] == "all" else [extra[0]]
    out = []
    for name in names:
        spec = name
        if name.endswith(".json"):
            spec = json.loads(Path(name).read_text(encoding="utf-8"))
            spec.setdefault("name", Path(name).stem)
        out.append(verify_pseudoprime_props(make_finite_ring(spec)).to_json())
    return out


def _pretty(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    res = report.get("result")
    if isinstance(res, dict):
        for k, v in res.items():
            lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(res, list):
        lines += [f"  {json.dumps(v, sort_keys=True)}" for v in res]
    else:
        lines.append(f"  {json.dumps(res)}")
    if "error" in report:
        lines.append(f"  error: {report['error']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dakernel", description="Exact difference-algebra kernel")
    ap.add_argument("session", help="session file, or 'lab' for the finite-ring laboratory")
    ap.add_argument("command", nargs="?", help=" | ".join(COMMANDS))
    ap.add_argument("args", nargs="*", help="command arguments (files, ring names)")
    ap.add_argument("--ext", type=int, default=1, help="extension degree d for solving over GF(q^d)")
    ap.add_argument("--sigma", help="group element for taylor and sigma-ideal")
    ap.add_argument("--factor", type=int, default=0, help="factor index for taylor")
    ap.add_argument("--frob", type=int, default=0, help="Frobenius exponent for taylor")
    fmt = ap.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="human-readable output")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.session == "lab":
        session, command = None, "lab"
        args.args = ([args.command] if args.command else []) + args.args
    else:
        command = args.command
        if command is None:
            print("dakernel: missing command", file=sys.stderr)
            return 1
        try:
            session = load_session(args.session)
        except ParseError as exc:
            report = {"command": command, "status": "parse-error", "result": None, "error": str(exc)}
            print(_pretty(report) if args.pretty else json.dumps(report))
            print(str(exc), file=sys.stderr)
            return 1
        except OSError as exc:
            print(f"dakernel: {exc}", file=sys.stderr)
            return 1
    try:
        result = execute(session, command, args)
        report, code = {"command": command, "status": "ok", "result": result}, 0
    except ParseError as exc:
        report, code = {"command": command, "status": "parse-error", "result": None, "error": str(exc)}, 1
    except (Precondition, ValueError, FiniteRingError, OSError) as exc:
        report, code = {"command": command, "status": "error", "result": None, "error": str(exc)}, 2
    print(_pretty(report) if args.pretty else json.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
