#!/usr/bin/env python3
"""Download the SNAP benchmark edge lists used by the acceptance tests.

Fetches wiki-Vote and p2p-Gnutella08 from snap.stanford.edu, decompresses
them, and drops the plain-text edge lists into the data directory (default:
<repo root>/data, override with --dest or the CYCLOSPECT_DATA environment
variable).  Files already present are left untouched unless --force is given.
"""

import argparse
import gzip
import io
import os
import shutil
import sys
import urllib.request
from pathlib import Path

DATASETS = {
    "wiki-Vote.txt": "https://snap.stanford.edu/data/wiki-Vote.txt.gz",
    "p2p-Gnutella08.txt": "https://snap.stanford.edu/data/p2p-Gnutella08.txt.gz",
}


def default_dest() -> Path:
    env = os.environ.get("CYCLOSPECT_DATA")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"


def fetch(name: str, url: str, dest: Path, force: bool) -> bool:
    target = dest / name
    if target.exists() and not force:
        print(f"{name}: already present, skipping")
        return True
    print(f"{name}: downloading {url}")
    try:
        with urllib.request.urlopen(url, timeout=60) as resp:
            payload = resp.read()
    except OSError as exc:
        print(f"{name}: download failed: {exc}", file=sys.stderr)
        return False
    tmp = target.with_suffix(".part")
    with gzip.open(io.BytesIO(payload)) as zf, open(tmp, "wb") as out:
        shutil.copyfileobj(zf, out)
    tmp.replace(target)
    print(f"{name}: wrote {target} ({target.stat().st_size} bytes)")
    return True


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", type=Path, default=default_dest(), help="output directory")
    parser.add_argument("--force", action="store_true", help="re-download even if present")
    args = parser.parse_args(argv)
    args.dest.mkdir(parents=True, exist_ok=True)
    ok = all([fetch(name, url, args.dest, args.force) for name, url in DATASETS.items()])
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
