"""Exact limiting moments E[Y^m] (and Poissonized ones) for several k and theta, as CSV."""

import argparse
import csv
import sys

from eigenperm.asymptotics import limiting_moments, poissonized_moments


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--ks", default="2,3,4")
    p.add_argument("--thetas", default="1/2,1,2")
    p.add_argument("--max-moment", type=int, default=8)
    p.add_argument("--out", default=None)
    args = p.parse_args(argv)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k", "theta", "m", "limit_exact", "limit_float", "poissonized_exact", "poissonized_float"])
    for k in (int(x) for x in args.ks.split(",")):
        for theta in args.thetas.split(","):
            lim = limiting_moments(k, theta, args.max_moment)
            poi = poissonized_moments(k, theta, args.max_moment)
            for m in range(2, args.max_moment + 1, 2):
                w.writerow([k, theta, m, lim[m], f"{float(lim[m]):.12g}", poi[m], f"{float(poi[m]):.12g}"])
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
