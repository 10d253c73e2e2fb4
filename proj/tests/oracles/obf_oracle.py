"""Independent recomputation of the recursive LP bound with Fraction arithmetic.

Writes "n<TAB>p/q<TAB>argmax" for 2 <= n <= N; the C++ tests compare against
the frozen output in tests/data/obf_oracle.tsv.

    python3 obf_oracle.py 400 > ../data/obf_oracle.tsv
"""
import sys
from fractions import Fraction


def c2(k):
    return k * (k - 1) // 2


def feasible_vertices(halfspaces):
    """Brute-force vertex enumeration of {a x + b y >= c} over all pairs."""
    out = []
    for i in range(len(halfspaces)):
        for j in range(i + 1, len(halfspaces)):
            a1, b1, c1 = halfspaces[i]
            a2, b2, c2_ = halfspaces[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(c1 * b2 - c2_ * b1, det)
            y = Fraction(a1 * c2_ - a2 * c1, det)
            if all(a * x + b * y >= c for a, b, c in halfspaces):
                out.append((x, y))
    return out


def main():
    N = int(sys.argv[1])
    obf = {2: Fraction(1), 3: Fraction(4)}
    argmax = {2: 0, 3: 0}
    # halfspaces for indices 1..k: x >= 0 and C(k-1,2) x + C(k,2) y >= obf(k)
    hs = [(1, 0, Fraction(0)), (0, 1, Fraction(1)), (1, 3, Fraction(4))]
    # vertices of theta_m, kept for every m
    verts = {2: feasible_vertices(hs[:2]), 3: feasible_vertices(hs)}
    for n in range(4, N + 1):
        best, best_m = None, None
        for m in range(2, n):
            v = obf[m] + min(c2(n - m) * x + (c2(n) - c2(m)) * y for x, y in verts[m])
            if best is None or v > best:
                best, best_m = v, m
        obf[n] = 1 + best
        argmax[n] = best_m
        hs.append((c2(n - 1), c2(n), obf[n]))
        # only vertices of the previous region can be cut; reuse when none is
        prev = verts[n - 1]
        a, b, c = hs[-1]
        if all(a * x + b * y >= c for x, y in prev):
            verts[n] = prev
        else:
            verts[n] = feasible_vertices(hs)
    for n in range(2, N + 1):
        print(f"{n}\t{obf[n].numerator}/{obf[n].denominator}\t{argmax[n]}")


if __name__ == "__main__":
    main()
