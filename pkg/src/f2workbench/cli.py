"""Command line: ``f2wb list``, ``f2wb run NAME|fast|all``, ``f2wb discover``."""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .groups import FixtureMissing, SearchExhausted
from .scenarios import REGISTRY, Context, Report, UnknownScenario, discover_and_write, list_scenarios, parse_key_values, run_scenario, tier

FORMATS = ("text", "csv", "json")
EXT = {"text": "txt", "csv": "csv", "json": "json"}
CONFIG_KEYS = {"max_degree": int, "seed": int, "format": str, "out": str, "slow": bool, "jobs": int, "timing": bool, "fixture_dir": str}


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    raw = parse_key_values(Path(path).read_text())
    out = {}
    for key, value in raw.items():
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ValueError(f"unknown configuration key {key!r} (known: {', '.join(CONFIG_KEYS)})")
        kind = CONFIG_KEYS[key]
        out[key] = _bool(value) if kind is bool else kind(value)
    if "format" in out and out["format"] not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f2wb", description="Mod-2 invariant theory and spectral sequence verification scenarios.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list scenarios with their runtime tier")

    run = sub.add_parser("run", help="run one scenario, the fast tier ('fast') or everything ('all')")
    run.add_argument("name")
    run.add_argument("--max-degree", type=int, default=None)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--format", choices=FORMATS, default=None)
    run.add_argument("--out", default=None, help="file for one scenario, directory for several")
    run.add_argument("--slow", action="store_true", default=None, help="include slow scenarios in 'all'")
    run.add_argument("--jobs", type=int, default=None, help="run scenarios in parallel processes")
    run.add_argument("--timing", action="store_true", default=None, help="record wall time in reports")
    run.add_argument("--config", default=None, help="'key = value' file; flags override it")
    run.add_argument("--fixture-dir", default=None)

    disc = sub.add_parser("discover", help="search for A7 > A6 in GL4(2) and write the fixtures")
    disc.add_argument("--seed", type=int, default=0)
    disc.add_argument("--fixture-dir", default=None)
    return parser


def _settings(args: argparse.Namespace) -> dict:
    cfg = {"max_degree": None, "seed": 0, "format": "text", "out": None, "slow": False, "jobs": 1, "timing": False, "fixture_dir": None}
    cfg.update(load_config(args.config))
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _select(name: str, slow: bool) -> list[str]:
    if name == "fast":
        return tier("fast")
    if name == "all":
        return list(REGISTRY) if slow else tier("fast")
    if name not in REGISTRY:
        raise UnknownScenario(name)
    return [name]


def _run_one(job: tuple) -> Report:
    name, max_degree, seed, directory = job
    return run_scenario(name, max_degree, seed, Context(directory))


def run_many(names: Sequence[str], max_degree: int | None, seed: int, directory: str | None, jobs: int = 1) -> list[Report]:
    if jobs > 1 and len(names) > 1:
        work = [(n, max_degree, seed, directory) for n in names]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))  # map keeps registry order
    ctx = Context(directory)
    return [run_scenario(n, max_degree, seed, ctx) for n in names]


def _emit(reports: list[Report], cfg: dict) -> None:
    fmt, timing, out = cfg["format"], cfg["timing"], cfg["out"]
    for rep in reports:
        sys.stdout.write(rep.render(fmt, timing))
        if fmt == "text" and len(reports) > 1:
            sys.stdout.write("\n")
    if out:
        path = Path(out)
        if len(reports) == 1 and not path.is_dir():
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(reports[0].render(fmt, timing))
        else:
            path.mkdir(parents=True, exist_ok=True)
            for rep in reports:
                (path / f"{rep.scenario}.{EXT[fmt]}").write_text(rep.render(fmt, timing))
    if len(reports) > 1:
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} scenarios passed", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        if args.command == "list":
            for name, anchor, speed in list_scenarios():
                print(f"{name:20s} {speed:5s} {anchor}")
            return 0
        if args.command == "discover":
            directory = Path(args.fixture_dir) if args.fixture_dir else None
            for path in discover_and_write(args.seed, directory):
                print(f"wrote {path}")
            return 0
        cfg = _settings(args)
        names = _select(args.name, cfg["slow"])
        reports = run_many(names, cfg["max_degree"], cfg["seed"], cfg["fixture_dir"], cfg["jobs"])
        _emit(reports, cfg)
        return 0 if all(r.passed for r in reports) else 1
    except UnknownScenario as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    except FixtureMissing as exc:
        print(f"{exc}\nrun `f2wb discover --seed 0` to create the group fixtures", file=sys.stderr)
        return 2
    except (SearchExhausted, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
