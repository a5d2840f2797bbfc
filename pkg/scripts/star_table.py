#!/usr/bin/env python3
"""Tabulate phi over the star and double-star families."""

import argparse

from signedcsf.csf import csf, double_star, star, star_csf
from signedcsf.functionals import phi


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6, help="largest star S_k")
    ap.add_argument("--max-nm", type=int, default=3, help="largest double-star side")
    args = ap.parse_args()

    print("k  phi(X_{S_k})")
    for k in range(args.max_k + 1):
        print(f"{k:<2} {phi(csf(star(k)))}")
    print()
    print("n m  phi(X_{S_n,m} - X_{S_n} X_{S_m})")
    for n in range(args.max_nm + 1):
        for m in range(args.max_nm + 1):
            diff = csf(double_star(n, m)) - star_csf(n) * star_csf(m)
            print(f"{n} {m}  {phi(diff)}")


if __name__ == "__main__":
    main()
