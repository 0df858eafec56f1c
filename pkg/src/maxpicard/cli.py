"""Command-line front end.  Every result goes to standard output as JSON (CSV is
available for ``geography``); errors go to standard error as JSON.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from . import constructions as cons
from . import geography as geo
from . import plane_oracle as po
from .covers import census_of
from .errors import MaxPicardError
from .singularities import Germ, classify_germ

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

CONFIG_KEYS = {"milnor_degree_bound": int, "sweep_workers": int}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_error(kind: str, message: str, stream=None) -> None:
    stream = stream or sys.stderr
    print(json.dumps({"error": kind, "message": message}), file=stream)


def load_config(path: Optional[str]) -> Dict[str, int]:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    config: Dict[str, int] = {}
    if path is None:
        return config
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}; known: {sorted(CONFIG_KEYS)}")
        try:
            parsed = CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
        if parsed < 1:
            raise UsageError(f"{path}:{lineno}: {key} must be positive")
        config[key] = parsed
    return config


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maxpicard", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key = value file (milnor_degree_bound, sweep_workers)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_args(sp, fixed=True):
        choices = ["a", "b", "m13", "m76"] if fixed else ["a", "b"]
        sp.add_argument("--family", required=True, type=str.lower, choices=choices)
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--k", type=int)

    family_args(sub.add_parser("construct", help="build a construction record"))
    family_args(sub.add_parser("certify", help="Picard-maximality certificate of a construction"))

    s = sub.add_parser("solve", help="parameters realizing (K^2, chi)")
    s.add_argument("--k2", type=int, required=True)
    s.add_argument("--chi", type=int, required=True)
    s.add_argument("--family", type=str.lower, choices=["a", "b"])

    c = sub.add_parser("census", help="singularity census from coordinates")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", type=str.lower, choices=["a", "b"])
    src.add_argument("--fixture", choices=sorted(po.FIXTURES))
    src.add_argument("--arrangement", help="arrangement JSON file")
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)

    g = sub.add_parser("classify-germ", help="ADE type of a plane curve germ at the origin")
    g.add_argument("germ", help='polynomial in x, y such as "y*(x^2 - 2*y^3)"')

    geo_p = sub.add_parser("geography", help="admissible pairs and the region reached by the first family")
    geo_p.add_argument("--max-chi", type=int, required=True)
    geo_p.add_argument("--format", choices=["json", "csv"], default="json")

    d = sub.add_parser("density", help="region pair with a given slope K^2/chi")
    d.add_argument("--q", type=_rational, required=True)

    cov = sub.add_parser("coverage", help="Horikawa line coverage")
    cov.add_argument("--chi", type=int, required=True)
    cov.add_argument("--line", type=str.lower, choices=["even", "odd"], required=True)

    v = sub.add_parser("verify-paper", help="run every reproduction check")
    v.add_argument("--only", nargs="+", help="check names or groups")
    return p


def _params(args) -> cons.FamilyParams:
    missing = [f"--{x}" for x in ("n", "m", "k") if getattr(args, x) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {' '.join(missing)}")
    return cons.FamilyParams(args.family.upper(), args.n, args.m, args.k)


def _record(args) -> cons.ConstructionRecord:
    if args.family == "m13":
        return cons.construct_m13()
    if args.family == "m76":
        return cons.construct_m76()
    p = _params(args)
    return cons.construct(p.family, p.n, p.m, p.k)


def _solve(args) -> dict:
    families = [args.family] if args.family else ["a", "b"]
    errors = []
    for fam in families:
        try:
            solver = geo.solve_family_a if fam == "a" else geo.solve_family_b
            n, m, k = solver(args.k2, args.chi)
            return {"family": fam, "n": n, "m": m, "k": k, "k2": args.k2, "chi": args.chi}
        except MaxPicardError as exc:
            errors.append(exc)
    raise errors[-1] if len(errors) == 1 else type(errors[0])("; ".join(map(str, errors)))


def _census(args) -> dict:
    if args.family:
        p = _params(args).validate()
        events = cons.census_pipeline(p)
        source = {"family": p.family, "params": p.to_json()}
    else:
        if args.fixture:
            a = po.FIXTURES[args.fixture]()
            doc = {}
        else:
            try:
                doc = json.loads(Path(args.arrangement).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read arrangement {args.arrangement}: {exc}") from exc
            a = po.Arrangement.from_json(doc.get("arrangement", doc))
        if args.fixture == "m13":
            partition = po.M13_PARTITION
        else:
            partition = doc.get("partition") or {
                "curves": [l for l in a.curve_labels if l not in a.fibers]
            }
        events = po.derive_census(a, partition)
        if set(partition) <= {"B1", "B2", "B3"}:
            events = po.assign_bidouble_rules(events)
        source = {"arrangement": a.name, "partition": {k: list(v) for k, v in partition.items()}}
    return {
        "source": source,
        "events": [ev.to_json() for ev in events],
        "census": census_of(events).to_json(),
    }


def _classify(args, config) -> dict:
    g = Germ.parse(args.germ)
    cls = classify_germ(g, config.get("milnor_degree_bound"))
    return {"germ": str(g), **cls.to_json()}


def _verify(args) -> (dict, int):
    from .verify import verify_paper

    try:
        results = verify_paper(args.only)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r.passed for r in results)
    for r in results:
        if not r.passed:
            _emit_error("CheckFailed", f"{r.name}: {r.detail}")
    return {"passed": ok, "checks": [r.to_json() for r in results]}, (EXIT_OK if ok else EXIT_DOMAIN)


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        config = load_config(args.config)
        code = EXIT_OK
        if args.command == "construct":
            out = _record(args).to_json()
        elif args.command == "certify":
            rec = _record(args)
            out = {
                "family": rec.family,
                "params": rec.params.to_json() if rec.params else None,
                "certificate": rec.certificate.to_json(),
            }
        elif args.command == "solve":
            out = _solve(args)
        elif args.command == "census":
            out = _census(args)
        elif args.command == "classify-germ":
            out = _classify(args, config)
        elif args.command == "geography":
            rows = geo.sweep(args.max_chi, workers=config.get("sweep_workers", 1))
            if args.format == "csv":
                stdout.write(geo.sweep_csv(rows))
                return EXIT_OK
            out = {"columns": list(geo.SWEEP_COLUMNS), "rows": rows}
        elif args.command == "density":
            k2, chi, lam = geo.density_witness(args.q)
            out = {"q": str(args.q), "k2": k2, "chi": chi, "lambda": lam}
        elif args.command == "coverage":
            out = geo.horikawa_coverage(args.chi, args.line).to_json()
        else:
            out, code = _verify(args)
    except UsageError as exc:
        _emit_error("UsageError", str(exc))
        return EXIT_USAGE
    except MaxPicardError as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_DOMAIN
    print(json.dumps(out, indent=2), file=stdout)
    return code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
