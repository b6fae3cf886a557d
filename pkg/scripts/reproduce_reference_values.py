#!/usr/bin/env python3
"""Print the reference-value reproduction table in a human-readable layout.

Exits nonzero when any line misses its pinned tolerance (the machine-readable
variant is `patstats reproduce`).
"""

import sys

from patstats.reproduce import reproduce_report


def main() -> int:
    rows = reproduce_report()
    name_w = max(len(r["name"]) for r in rows)
    print(f"{'line':<{name_w}}  {'reference':>12}  {'computed':>18}  "
          f"{'rel diff':>9}  {'tol':>7}  ok")
    for r in rows:
        computed = r["computed"]
        if isinstance(computed, float):
            computed = f"{computed:.10g}"
        print(f"{r['name']:<{name_w}}  {r['reference']:>12}  {computed:>18}  "
              f"{r['relative_difference']:>9.3g}  {r['tolerance']:>7.2g}  "
              f"{'yes' if r['ok'] else 'NO'}")
    return 0 if all(r["ok"] for r in rows) else 2


if __name__ == "__main__":
    sys.exit(main())
