"""Write the CSV surfaces behind every figure into one directory."""

import argparse
import time

from hawking_battery.sweep import FIGURE_GRID, FIGURE_IDS, figure_files


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--grid", type=int, default=FIGURE_GRID)
    args = parser.parse_args()
    for fig in FIGURE_IDS:
        start = time.perf_counter()
        paths = figure_files(fig, args.out_dir, n=args.grid)
        print(f"{fig}: {len(paths)} file(s) in {time.perf_counter() - start:.2f}s")
        for path in paths:
            print(f"  {path}")


if __name__ == "__main__":
    main()
