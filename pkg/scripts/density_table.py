"""Write the k = 2, theta = 1 limiting density and CDF on a grid as CSV."""

import argparse
import csv
import sys

from eigenperm.density import density_table, inversion_check


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--points", type=int, default=401)
    p.add_argument("--epsilon", type=float, default=1e-6, help="offset for the Stieltjes inversion column")
    p.add_argument("--out", default=None)
    args = p.parse_args(argv)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t", "density", "cdf", "stieltjes_inversion"])
    for t, dens, F in density_table(args.points):
        inv = inversion_check(t, args.epsilon) if abs(t) < 1 else 0.0
        w.writerow([f"{t:.6f}", f"{dens:.12g}", f"{F:.12g}", f"{inv:.12g}"])
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
