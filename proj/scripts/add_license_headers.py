#!/usr/bin/env python3
"""Prepend cmake/license_header.txt to every first-party .hpp/.cpp file.

Files that already start with the header are left alone, so the script can
be rerun safely.
"""
import argparse
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
SKIP = {"vendor", "build", ".git"}
DIRS = ["core", "tools", "tests", "benchmarks"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="report missing headers without writing")
    args = ap.parse_args()
    header = (ROOT / "cmake" / "license_header.txt").read_text().rstrip("\n") + "\n\n"
    missing = []
    for d in DIRS:
        for path in sorted((ROOT / d).rglob("*")):
            if path.suffix not in {".hpp", ".cpp"} or SKIP & set(path.relative_to(ROOT).parts):
                continue
            text = path.read_text()
            if text.startswith(header):
                continue
            missing.append(path.relative_to(ROOT))
            if not args.check:
                path.write_text(header + text)
    verb = "missing" if args.check else "updated"
    for m in missing:
        print(f"{verb}: {m}")
    return 1 if args.check and missing else 0


if __name__ == "__main__":
    raise SystemExit(main())
