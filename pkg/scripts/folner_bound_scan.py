"""Scan the comb Folner ratio against 8(2k+n)/(n(n+2)) over rho, k and n.

Prints the number of violations per rho together with the exact ratio of the
bare comb (rho = 0), which is (2k(n+3) + 4n - 2) / (n(n-1)).
"""

from fractions import Fraction

from patchentropy.geometry import interval
from patchentropy.windows import folner_ratio, make_sequence


def main():
    for rho in ("0", "1/50", "1/20", "1/10", "1/8", "1/5", "1/4", "1/2", "1"):
        seq = make_sequence("folner_comb", {"rho": rho})
        bad = [(k, n) for k in (1, 2) for n in range(5, 51)
               if folner_ratio(seq, interval(-k, k), n) > Fraction(8 * (2 * k + n), n * (n + 2))]
        print(f"rho={rho:>5}  violations={len(bad):3d}  first={bad[:3]}")
    seq = make_sequence("folner_comb", {"rho": "0"})
    for k in (1, 2):
        for n in (5, 10, 50):
            r = folner_ratio(seq, interval(-k, k), n)
            print(f"k={k} n={n:2d} ratio={r} bound={Fraction(8 * (2 * k + n), n * (n + 2))}")


if __name__ == "__main__":
    main()
