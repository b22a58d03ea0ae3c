"""Print the per-family negation conditions with counts of stable data.

    python3 scripts/print_table.py [--max-dim N]
"""

import argparse

from nilorbits.table1 import render_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=None)
    args = ap.parse_args()
    for row in render_rows(True, args.max_dim):
        print(f"{row['algebra']}: stable iff {row['gloss']}")
        for s in row["spot"]:
            flag = "" if s["discrepancies"] == 0 else f"  <-- {s['discrepancies']} discrepancies"
            print(f"    {s['algebra']:<10} {s['stable']:>3}/{s['data']:<3} stable{flag}")


if __name__ == "__main__":
    main()
