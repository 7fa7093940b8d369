#!/usr/bin/env python3
"""Fetch the UD English GUM treebank for use with thatsort (needs network).

Clones the UD_English-GUM repository into DEST (default: ./data/UD_English-GUM),
optionally pins a commit, and prints the sha256 of each split so the checkout
can be recorded and compared against run manifests. Point THATSORT_DATA_DIR at
DEST's parent afterwards; the acceptance suite and the CLI pick the files up
from there.

Usage:
  python scripts/fetch_gum.py [DEST] [--commit SHA]

The published frequency table is commit-dependent: on the release the counts
were reported from, `thatsort freq` matches them exactly; on newer releases
expect counts within about 10% and rely on the relcl/that ratio property.
"""

import argparse
import hashlib
import subprocess
import sys
from pathlib import Path

REPO = "https://github.com/UniversalDependencies/UD_English-GUM"


def sha256(path):
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("dest", nargs="?", default="data/UD_English-GUM")
    parser.add_argument("--commit", help="pin a specific commit")
    args = parser.parse_args()

    dest = Path(args.dest)
    if not dest.exists():
        subprocess.run(["git", "clone", "--depth", "50", REPO, str(dest)], check=True)
    if args.commit:
        subprocess.run(["git", "-C", str(dest), "fetch", "origin", args.commit],
                       check=True)
        subprocess.run(["git", "-C", str(dest), "checkout", args.commit], check=True)

    head = subprocess.run(["git", "-C", str(dest), "rev-parse", "HEAD"],
                          check=True, capture_output=True, text=True).stdout.strip()
    print("checkout: %s @ %s" % (dest, head))
    for split in ("train", "dev", "test"):
        path = dest / ("en_gum-ud-%s.conllu" % split)
        if path.is_file():
            print("%s  %s" % (sha256(path), path.name))
        else:
            print("missing: %s" % path, file=sys.stderr)
    print("export THATSORT_DATA_DIR=%s" % dest.parent.resolve())


if __name__ == "__main__":
    main()
