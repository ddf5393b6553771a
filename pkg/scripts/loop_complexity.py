#!/usr/bin/env python3
"""Walk the 30-step mutation loop and chart how big the seeds get.

The y-entries leave the initial seed, swell to rational functions with
hundreds of terms near the middle of the loop, and collapse back to the
six squares at step 30.  Useful as a quick eyeball check on the exact
arithmetic and on mutation cost.
"""

import sys
import time

from skeindaha.cluster import PRINTED_LOOP, Seed, mutate


def seed_size(seed) -> int:
    return sum(len(f.num) + len(f.den) for f in seed.y)


def main() -> int:
    seed = Seed.initial()
    initial = Seed.initial()
    print(f"step  0: mutate -   size {seed_size(seed):5d}")
    t0 = time.perf_counter()
    for step, k in enumerate(reversed(PRINTED_LOOP), start=1):
        seed = mutate(seed, k)
        marker = "  <- back to start" if seed == initial else ""
        print(f"step {step:2d}: mutate {k}   size {seed_size(seed):5d}{marker}")
    print(f"total {time.perf_counter() - t0:.2f}s")
    return 0 if seed == initial else 1


if __name__ == "__main__":
    sys.exit(main())
