#!/usr/bin/env python3
"""Brute-force census of gabi-monoid structures on tiny monoids.

Independent oracle used to freeze expected values in the C++ test suite.
A candidate is a function delta: M -> M x M, m -> (m+, m-).

HomLift level (delta is a monoid map M -> M x M^op):
  (mn)+ = m+ n+,  (mn)- = n- m-,  delta(1) = (1, 1)

FullLift level additionally, elementwise:
  m+ = m,   m+ m- = 1,   (m++, m-+, m-- m+-) = (m+, m-, 1)

Enumeration is lexicographic on the flattened delta table with pairs
encoded as m+ * size + m-.

Usage: monoid_census.py <name> <hom|full>
"""
import itertools
import sys

MONOIDS = {
    # name: (table rows, identity)
    "trivial": ([[0]], 0),
    "c2": ([[0, 1], [1, 0]], 0),
    "idem2": ([[0, 1], [1, 1]], 0),
    "c3": ([[0, 1, 2], [1, 2, 0], [2, 0, 1]], 0),
    # right-zero semigroup {a,b} with identity adjoined: x*y = y for x,y != 1
    "nongroup3": ([[0, 1, 2], [1, 1, 2], [2, 1, 2]], 0),
    "c4": ([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]], 0),
    "klein": ([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], 0),
}

# S_3 as permutations of {0,1,2}: elements in lex order of one-line notation
PERMS = list(itertools.permutations(range(3)))
S3 = [[PERMS.index(tuple(p[q[i]] for i in range(3))) for q in PERMS] for p in PERMS]
MONOIDS["s3"] = (S3, PERMS.index((0, 1, 2)))


def check(table, e, delta, level):
    size = len(table)
    if delta[e] != (e, e):
        return False
    for m in range(size):
        for n in range(size):
            mn = table[m][n]
            want = (table[delta[m][0]][delta[n][0]], table[delta[n][1]][delta[m][1]])
            if delta[mn] != want:
                return False
    if level == "hom":
        return True
    for m in range(size):
        mp, mm = delta[m]
        if mp != m:
            return False
        if table[mp][mm] != e:
            return False
        mpp, mpm = delta[mp]
        mmp, mmm = delta[mm]
        if (mpp, mmp, table[mmm][mpm]) != (mp, mm, e):
            return False
    return True


def main():
    table, e = MONOIDS[sys.argv[1]]
    level = sys.argv[2]
    size = len(table)
    pairs = [(i, j) for i in range(size) for j in range(size)]  # lex by i*size+j
    hits = []
    for combo in itertools.product(pairs, repeat=size):
        if check(table, e, list(combo), level):
            hits.append(combo)
    print(f"{sys.argv[1]} {level}: census size {len(hits)}")
    for h in hits:
        print("  " + " ".join(f"{m}->({p},{q})" for m, (p, q) in enumerate(h)))


if __name__ == "__main__":
    main()
