"""Half-mass interval widths and exponents k1, k2 over a range of n.

    python scripts/exponent_trend.py --n-max 210 --step 10 > exponents.csv
"""

import argparse
import csv
import sys

from arithtri.distributions import estimate_exponent
from arithtri.triangles import TriangleKind


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=10)
    parser.add_argument("--n-max", type=int, default=210)
    parser.add_argument("--step", type=int, default=10)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "linear_width", "k1", "a", "nonlinear_width", "k2", "b"])
    for n in range(max(args.n_min, 4), args.n_max + 1, args.step):
        lin = estimate_exponent(TriangleKind.LINEAR, n)
        non = estimate_exponent(TriangleKind.NONLINEAR, n)
        writer.writerow([n, lin.interval_width, f"{lin.k:.4f}", f"{lin.scale_coefficient:.4f}",
                         non.interval_width, f"{non.k:.4f}", f"{non.scale_coefficient:.4f}"])


if __name__ == "__main__":
    main()
