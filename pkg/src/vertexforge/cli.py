"""Command-line interface: compute, check, calibrate, report.

Exit codes: 0 all equalities hold, 1 violation, 2 invalid input,
3 informative-only.  Configuration comes from an optional key=value file
plus flags; flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .harness import (
    EXIT_INFORMATIVE,
    EXIT_INVALID,
    CHECKS,
    InvalidCheckSpec,
    calibrate,
    compute,
    default_cache_dir,
    load_default_convention,
    run_check,
)
from .characters import Convention


def _load_config(path: str | None) -> dict:
    cfg = {}
    if path is None and os.path.exists("vertexforge.cfg"):
        path = "vertexforge.cfg"
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#") or "=" not in line:
                    continue
                key, val = line.split("=", 1)
                cfg[key.strip()] = val.strip()
    return cfg


def _emit(doc: dict, fmt: str, out=None) -> None:
    out = out if out is not None else sys.stdout
    if fmt == "json":
        json.dump(doc, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        rows = doc.get("cases") or doc.get("coeffs") or [doc]
        if rows and isinstance(rows[0], dict):
            keys = sorted({k for r in rows for k in r})
            writer.writerow(keys)
            for r in rows:
                writer.writerow([json.dumps(r.get(k)) for k in keys])
        else:
            for i, r in enumerate(rows):
                writer.writerow([i, json.dumps(r)])
        out.write(buf.getvalue())
        return
    raise ValueError(f"unknown format {fmt!r}")


def _convention_from_args(args) -> Convention | None:
    if getattr(args, "convention", None):
        with open(args.convention) as fh:
            doc = json.load(fh)
        return Convention.from_json(doc.get("winner") or doc)
    return None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="vertexforge",
        description="Exact DT/PT one-leg vertex series and identity certification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="key=value config file (flags override)")
    parser.add_argument("--cache-dir", help="result cache directory")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--convention", help="convention document written by `calibrate`")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_check = sub.add_parser("check", help="run a named identity suite")
    p_check.add_argument("name", choices=sorted(CHECKS))
    p_check.add_argument("--params", help="JSON object of check parameters")
    p_check.add_argument("--out", help="write the report to this path")

    p_compute = sub.add_parser("compute", help="compute a series request (cached)")
    p_compute.add_argument("request", help="JSON request or @file")
    p_compute.add_argument("--out", help="write the result to this path")

    p_cal = sub.add_parser("calibrate", help="run the convention calibration suite")
    p_cal.add_argument("--seed", type=int, default=43)
    p_cal.add_argument("--out", default="convention.json")

    p_rep = sub.add_parser("report", help="render a stored report")
    p_rep.add_argument("path")

    args = parser.parse_args(argv)
    cfg = _load_config(args.config)
    if args.cache_dir:
        cache_dir = args.cache_dir
    elif "cache_dir" in cfg:
        cache_dir = cfg["cache_dir"]
    else:
        cache_dir = default_cache_dir()
    fmt = args.format or cfg.get("format", "json")

    if args.verb == "check":
        params = {}
        if cfg.get(f"check.{args.name}"):
            params.update(json.loads(cfg[f"check.{args.name}"]))
        if args.params:
            try:
                params.update(json.loads(args.params))
            except json.JSONDecodeError as exc:
                print(f"invalid --params JSON: {exc}", file=sys.stderr)
                return EXIT_INVALID
        try:
            report = run_check(args.name, params, _convention_from_args(args))
        except InvalidCheckSpec as exc:
            print(f"invalid check spec: {exc}", file=sys.stderr)
            return EXIT_INVALID
        doc = report.to_json()
        if getattr(report, "full_report", None):
            doc["full_report"] = report.full_report
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(doc, fh, indent=2, sort_keys=True)
        _emit(doc, fmt)
        return report.exit_code

    if args.verb == "compute":
        raw = args.request
        if raw.startswith("@"):
            with open(raw[1:]) as fh:
                raw = fh.read()
        try:
            request = json.loads(raw)
        except json.JSONDecodeError as exc:
            print(f"malformed request JSON: {exc}", file=sys.stderr)
            return EXIT_INVALID
        try:
            blob, hit = compute(request, _convention_from_args(args), cache_dir)
        except (InvalidCheckSpec, KeyError, ValueError) as exc:
            print(f"invalid request: {exc}", file=sys.stderr)
            return EXIT_INVALID
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(blob)
        sys.stdout.write(blob.decode())
        sys.stdout.write("\n")
        sys.stderr.write("cache hit\n" if hit else "computed\n")
        return 0

    if args.verb == "calibrate":
        doc = calibrate(args.seed)
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
        _emit(doc, fmt)
        if doc["winner_count"] == 1:
            print(f"calibrated convention written to {args.out}", file=sys.stderr)
            return 0
        print(
            f"calibration did not isolate a unique convention "
            f"({doc['winner_count']} candidates pass); see the log",
            file=sys.stderr,
        )
        return 1

    if args.verb == "report":
        if not os.path.exists(args.path):
            print(f"no such report: {args.path}", file=sys.stderr)
            return EXIT_INVALID
        with open(args.path) as fh:
            doc = json.load(fh)
        _emit(doc, fmt)
        verdict = doc.get("verdict")
        if verdict == "pass":
            return 0
        if verdict == "informative":
            return EXIT_INFORMATIVE
        return 1 if verdict == "fail" else 0

    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
