#!/usr/bin/env python3
"""Write the whole fixture corpus as SRF files.

Usage: python scripts/make_fixtures.py [outdir] [--seed N]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from reebsym import compute_stabilizer_group, emit_srf, make_fixture, surface_stats

NAMES = ["sphere_height", "torus_height",
         "beachball(2)", "beachball(3)", "beachball(4)", "beachball(5)",
         "beachball(6)", "flower(2)", "flower(3)", "flower(4)"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="fixtures")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        c, f = make_fixture(name, seed=args.seed)
        stem = name.replace("(", "_").replace(")", "")
        path = out / f"{stem}.srf"
        path.write_text(emit_srf(c, f), encoding="utf-8")
        stats = surface_stats(c)
        order = compute_stabilizer_group(c, f).order
        print(f"{path}  genus={stats.genus}  vertices={stats.vertex_count}  "
              f"symmetries={order}")


if __name__ == "__main__":
    main()
