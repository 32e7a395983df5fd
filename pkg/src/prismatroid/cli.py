"""Command-line harness: run verification checks, browse the catalog, and
answer ad-hoc minor/isomorphism queries.

Exit codes: 0 all requested checks pass, 1 any check fails, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .catalog import Catalog, default_catalog
from .enumeration import has_minor
from .iso import is_isomorphic
from .matroid import BinaryMatroid, dumps, loads


def _load_operand(cat: Catalog, token: str) -> BinaryMatroid:
    """A catalog name, or a path to a matroid file."""
    try:
        return cat.matroid(token)
    except KeyError:
        path = Path(token)
        if path.exists():
            return loads(path.read_text())
        raise SystemExit(f"error: {token!r} is neither a catalog name nor a file")


def _write_report(results, path: str | None, to_stdout: bool) -> None:
    payload = json.dumps(checks.report_json(results), indent=1, sort_keys=True)
    if path:
        Path(path).write_text(payload + "\n")
    if to_stdout:
        print(payload)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="prismatroid",
        description="binary matroid catalog and verification harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification checks")
    vsub = p_verify.add_subparsers(dest="verify_cmd", required=True)
    p_run = vsub.add_parser("run", help="run a single check")
    p_run.add_argument("check_id")
    p_run.add_argument("--json", metavar="PATH", help="write a JSON report")
    p_all = vsub.add_parser("all", help="run every registered check")
    p_all.add_argument("--jobs", type=int, default=1)
    p_all.add_argument("--json", metavar="PATH", help="write a JSON report")
    p_all.add_argument(
        "--output", choices=("text", "json"), default="text",
        help="console format (default text)",
    )

    p_cat = sub.add_parser("catalog", help="browse the named matroids")
    csub = p_cat.add_subparsers(dest="catalog_cmd", required=True)
    csub.add_parser("list", help="list catalog names")
    p_show = csub.add_parser("show", help="print one catalog entry")
    p_show.add_argument("name")

    p_minor = sub.add_parser("minor", help="search for a minor of M isomorphic to N")
    p_minor.add_argument("host")
    p_minor.add_argument("target")

    p_iso = sub.add_parser("iso", help="test two matroids for isomorphism")
    p_iso.add_argument("left")
    p_iso.add_argument("right")

    args = parser.parse_args(argv)
    cat = default_catalog()

    if args.command == "verify":
        if args.verify_cmd == "run":
            try:
                result = checks.run_check(args.check_id, cat)
            except KeyError as exc:
                print(f"error: {exc.args[0]}", file=sys.stderr)
                return 2
            _write_report([result], args.json, to_stdout=False)
            print(checks.render_text([result]))
            return 0 if result.passed else 1
        results = checks.run_all(jobs=args.jobs, catalog=cat)
        if args.output == "json":
            _write_report(results, args.json, to_stdout=True)
        else:
            _write_report(results, args.json, to_stdout=False)
            print(checks.render_text(results))
        return 0 if all(r.passed for r in results) else 1

    if args.command == "catalog":
        if args.catalog_cmd == "list":
            for name in cat.names():
                entry = cat.get(name)
                m = entry.matroid
                print(f"{name:28s} rank {m.rank}  size {m.size:2d}  {entry.provenance}")
            return 0
        try:
            entry = cat.get(args.name)
        except KeyError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
        print(f"name: {entry.name}")
        print(f"provenance: {entry.provenance}")
        print(f"expected: {json.dumps(entry.expected, sort_keys=True)}")
        print(dumps(entry.matroid), end="")
        return 0

    if args.command == "minor":
        host = _load_operand(cat, args.host)
        target = _load_operand(cat, args.target)
        witness = has_minor(host, target)
        if witness is None:
            print("no minor found")
            return 1
        print("minor found:")
        print(f"  contract: {sorted(map(str, witness.contract_set))}")
        print(f"  delete:   {sorted(map(str, witness.delete_set))}")
        print(f"  map:      {dict(sorted(((str(k), str(v)) for k, v in witness.iso.items())))}")
        print(f"  verified: {witness.verify(host, target)}")
        return 0

    if args.command == "iso":
        left = _load_operand(cat, args.left)
        right = _load_operand(cat, args.right)
        witness = is_isomorphic(left, right)
        if witness is None:
            print("not isomorphic")
            return 1
        print("isomorphic:")
        print(f"  map: {dict(sorted(((str(k), str(v)) for k, v in witness.items())))}")
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
