#!/usr/bin/env python3
"""Run every verification suite and print a timing summary.

Equivalent to `skeindaha verify --suite all`, kept as a standalone script
so a full reproduction run is one command with no installed entry point.
"""

import sys
import time

from skeindaha.suites import SUITE_NAMES, run_suites


def main() -> int:
    t0 = time.perf_counter()
    reports = run_suites(SUITE_NAMES)
    for rep in reports:
        print(rep.render_table())
        print()
    total = sum(r.total for r in reports)
    passed = sum(r.passed for r in reports)
    print(f"total: {passed}/{total} checks passed "
          f"in {time.perf_counter() - t0:.1f}s")
    return 0 if passed == total else 1


if __name__ == "__main__":
    sys.exit(main())
