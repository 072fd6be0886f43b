"""Exhaustive recursion/oracle, nonemptiness and sum-rule sweeps for rank-2 types."""

import argparse
import sys
import time

from chimneys.sweeps import SweepConfig, run_all
from chimneys.weyl import weyl_group


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A2,C2,G2")
    ap.add_argument("--max-x-len", type=int, default=5)
    ap.add_argument("--max-y-len", type=int, default=2)
    ap.add_argument("--faces", choices=("alcove", "vertex", "both"), default="both")
    args = ap.parse_args()
    cfg = SweepConfig(args.max_x_len, args.max_y_len, args.faces)
    ok = True
    for name in args.types.split(","):
        start = time.perf_counter()
        for r in run_all(weyl_group(name), cfg):
            print(r.line())
            for f in r.failures[:5]:
                print("  " + f)
            ok &= r.ok
        print(f"  {name}: {time.perf_counter() - start:.1f} s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
