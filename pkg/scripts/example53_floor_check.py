"""Compare the Example 5.3 counts with 2^(rho n) and 2^(rho n + 1).

For the integer dust [0, rho n] n Z the count is 2^floor(rho n), so the lower
bound fails whenever rho n is not an integer.
"""

import math
from fractions import Fraction

from patchentropy.entropy import bound_audit


def main():
    for rho in ("1/2", "1", "3/2"):
        audit = bound_audit("5.3", rho, range(4, 15))
        for r in audit.rows:
            e = Fraction(rho) * r.n
            print(f"rho={rho:>3} n={r.n:2d} count={r.count:6d} floor-form={2 ** math.floor(e):6d} "
                  f"2^(rho n)={2 ** float(e):10.2f} {'pass' if r.ok else 'FAIL'}")


if __name__ == "__main__":
    main()
