#!/usr/bin/env python3
"""Run the (long) PS# sweep for a published fixture or any tt:/ANF input.

The sweep checkpoints through --resume (or BENTFORGE_CACHE_DIR), so an
interrupted run picks up where it left off.
"""

import argparse
import sys
import time

from bentforge import fixtures as fx
from bentforge.cli import load_boolean_source
from bentforge.psclass import is_in_ps_sharp


def main() -> int:
    ap = argparse.ArgumentParser()
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", choices=["delta0_mix", "transposed", "apn_family"])
    src.add_argument("--input", help="tt:/ANF literal or file")
    ap.add_argument("--n", type=int)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--resume", help="checkpoint file")
    args = ap.parse_args()

    f = fx.published_bent8(args.fixture) if args.fixture else load_boolean_source(args.input, args.n)
    total = 1 << f.n
    t0 = time.time()

    def progress(b: int) -> None:
        if (b + 1) % 32 == 0:
            rate = (b + 1) / (time.time() - t0)
            print(f"  shift {b + 1}/{total}  ({rate:.1f} shifts/s)", file=sys.stderr)

    witness = is_in_ps_sharp(f, jobs=args.jobs, resume=args.resume, progress=progress)
    took = time.time() - t0
    if witness is None:
        print(f"not in PS# (exhaustive sweep, {took:.0f}s)")
        return 1
    print(
        f"PS# witness: shift={witness.shift} affine={witness.affine} "
        f"constant={witness.constant} subclass={witness.inner.subclass} ({took:.0f}s)"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
