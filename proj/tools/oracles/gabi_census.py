#!/usr/bin/env python3
"""Brute-force census of gabi structures on tiny algebras over F_p.

Independent oracle used to freeze expected values in the C++ test suite.
Everything here is written directly from the axioms, with no code shared
with the library: a gabi structure on an augmented algebra (A, eps) is an
algebra map delta: A -> A (x) A^op, delta(a) = a+ (x) a-, such that

  GA1:  a+ eps(a-) = a
  GA2:  a+ a-      = eps(a) 1
  GA3:  a++ (x) a-+ (x) a-- a+-  =  a+ (x) a- (x) 1

Tensor indices are left-factor-major: e_i (x) e_j -> i*n + j.

Usage: gabi_census.py <p> <algebra>   where <algebra> is one of
  idem2   the monoid algebra of {1,e}, e^2 = e  (basis 1, e)
  c2      the group algebra of C_2              (basis 1, g)
  dim1    the one-dimensional algebra
"""
import itertools
import sys


def algebra(name):
    if name == "idem2":
        # e0 = 1, e1 = e with e*e = e
        mul = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]
        return 2, mul, [1, 0]
    if name == "c2":
        mul = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
        return 2, mul, [1, 0]
    if name == "dim1":
        return 1, [[[1]]], [1]
    raise SystemExit(f"unknown algebra {name}")


def main():
    p = int(sys.argv[1])
    n, mul, unit = algebra(sys.argv[2])

    def vmul(u, v):
        out = [0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                for k in range(n):
                    out[k] = (out[k] + u[i] * v[j] * mul[i][j][k]) % p
        return out

    def tmul(x, y):
        # product in A (x) A^op on left-factor-major coordinates
        out = [0] * (n * n)
        for a in range(n * n):
            if not x[a]:
                continue
            for b in range(n * n):
                if not y[b]:
                    continue
                i1, j1 = divmod(a, n)
                i2, j2 = divmod(b, n)
                left = vmul(basis(i1), basis(i2))
                right = vmul(basis(j2), basis(j1))  # opposite order in leg 2
                for u in range(n):
                    for v in range(n):
                        out[u * n + v] = (out[u * n + v] + x[a] * y[b] * left[u] * right[v]) % p
        return out

    def basis(i, d=None):
        d = d or n
        v = [0] * d
        v[i] = 1
        return v

    def eps_of(eps, v):
        return sum(e * x for e, x in zip(eps, v)) % p

    unit_tensor = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            unit_tensor[i * n + j] = (unit[i] * unit[j]) % p

    def is_augmentation(eps):
        if eps_of(eps, unit) != 1:
            return False
        for i in range(n):
            for j in range(n):
                if eps_of(eps, mul[i][j]) != (eps[i] * eps[j]) % p:
                    return False
        return True

    def passes(eps, delta):
        # delta stored as columns: delta[j] = image of e_j in A (x) A
        # algebra map into A (x) A^op
        du = [0] * (n * n)
        for j in range(n):
            if unit[j]:
                for t in range(n * n):
                    du[t] = (du[t] + unit[j] * delta[j][t]) % p
        if du != unit_tensor:
            return False
        for i in range(n):
            for j in range(n):
                lhs = [0] * (n * n)
                for k in range(n):
                    if mul[i][j][k]:
                        for t in range(n * n):
                            lhs[t] = (lhs[t] + mul[i][j][k] * delta[k][t]) % p
                if lhs != tmul(delta[i], delta[j]):
                    return False
        # GA1 and GA2 on basis elements
        for j in range(n):
            ga1 = [0] * n
            ga2 = [0] * n
            for t in range(n * n):
                if not delta[j][t]:
                    continue
                a_plus, a_minus = divmod(t, n)
                c = delta[j][t]
                ga1[a_plus] = (ga1[a_plus] + c * eps[a_minus]) % p
                prod = vmul(basis(a_plus), basis(a_minus))
                for k in range(n):
                    ga2[k] = (ga2[k] + c * prod[k]) % p
            if ga1 != basis(j):
                return False
            if ga2 != [(eps[j] * u) % p for u in unit]:
                return False
        # GA3 on basis elements, in A (x) A (x) A
        for j in range(n):
            lhs = [0] * (n ** 3)
            rhs = [0] * (n ** 3)
            for t in range(n * n):
                if not delta[j][t]:
                    continue
                ap, am = divmod(t, n)
                c = delta[j][t]
                for s in range(n * n):
                    if not delta[ap][s]:
                        continue
                    app, apm = divmod(s, n)
                    for r in range(n * n):
                        if not delta[am][r]:
                            continue
                        amp, amm = divmod(r, n)
                        cc = (c * delta[ap][s] * delta[am][r]) % p
                        prod = vmul(basis(amm), basis(apm))
                        for k in range(n):
                            if prod[k]:
                                idx = (app * n + amp) * n + k
                                lhs[idx] = (lhs[idx] + cc * prod[k]) % p
                for k in range(n):
                    if unit[k]:
                        idx = t * n + k
                        rhs[idx] = (rhs[idx] + c * unit[k]) % p
            if lhs != rhs:
                return False
        return True

    hits = []
    for eps in itertools.product(range(p), repeat=n):
        if not is_augmentation(list(eps)):
            continue
        # delta entries in row-major lex order; delta is an (n^2 x n) matrix
        for bits in itertools.product(range(p), repeat=n * n * n):
            rows = [bits[r * n:(r + 1) * n] for r in range(n * n)]
            delta = [[rows[r][j] for r in range(n * n)] for j in range(n)]
            if passes(list(eps), delta):
                hits.append((eps, bits))
    print(f"census size {len(hits)}")
    for eps, bits in hits:
        rows = [bits[r * n:(r + 1) * n] for r in range(n * n)]
        print(f"  eps={list(eps)} delta_rows={[list(r) for r in rows]}")


if __name__ == "__main__":
    main()
