#!/usr/bin/env python3
"""Independent brute-force evaluation of the reference values frozen in the
C++ tests. Uses only fractions and plain loops; shares no code with the
library. Run with --check to compare against frozen.json."""

import argparse
import itertools
import json
import sys
from fractions import Fraction as F
from pathlib import Path


def algebra(n, bracket=(), product=()):
    """Entries are 1-based (i, j, k, coef): [e_i, e_j] or e_i o e_j gets coef*e_k."""
    c = {}
    s = {}
    for i, j, k, v in bracket:
        c[(i - 1, j - 1, k - 1)] = F(v)
        c[(j - 1, i - 1, k - 1)] = -F(v)
    for i, j, k, v in product:
        s[(i - 1, j - 1, k - 1)] = F(v)
        s[(j - 1, i - 1, k - 1)] = F(v)
    return n, c, s


def bil(n, table, u, v):
    return [sum(table.get((i, j, k), 0) * u[i] * v[j] for i in range(n) for j in range(n)) for k in range(n)]


def e(n, i):
    return [F(1) if t == i else F(0) for t in range(n)]


def add(*vs):
    return [sum(x) for x in zip(*vs)]


def neg(v):
    return [-x for x in v]


def br(a, u, v):
    return bil(a[0], a[1], u, v)


def pr(a, u, v):
    return bil(a[0], a[2], u, v)


def L(a, u, v, w):
    return add(br(a, u, pr(a, v, w)), neg(pr(a, br(a, u, v), w)), neg(pr(a, v, br(a, u, w))))


def fmt(v):
    return [str(x) for x in v]


def jacobi_failure(a):
    n = a[0]
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e(n, i), e(n, j), e(n, k)
        r = add(br(a, br(a, x, y), z), br(a, br(a, y, z), x), br(a, br(a, z, x), y))
        if any(r):
            return [[i + 1, j + 1, k + 1], fmt(r)]
    return None


def assoc_failure(a):
    n = a[0]
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e(n, i), e(n, j), e(n, k)
        r = add(pr(a, pr(a, x, y), z), neg(pr(a, x, pr(a, y, z))))
        if any(r):
            return [[i + 1, j + 1, k + 1], fmt(r)]
    return None


def hm_failure(a):
    n = a[0]
    for q in itertools.product(range(n), repeat=4):
        x, y, z, w = (e(n, t) for t in q)
        r = add(L(a, pr(a, x, y), z, w), neg(pr(a, L(a, x, z, w), y)), neg(pr(a, x, L(a, y, z, w))))
        if any(r):
            return [[t + 1 for t in q], fmt(r)]
    return None


def leibnizator_nonzero(a):
    n = a[0]
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        v = L(a, e(n, i), e(n, j), e(n, k))
        if any(v):
            out.append([[i + 1, j + 1, k + 1], fmt(v)])
    return out


def endo(n, f):
    """Matrix (rows) of a linear map given on basis vectors; column j = f(e_j)."""
    cols = [f(e(n, j)) for j in range(n)]
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def mat_mul(x, y):
    n = len(x)
    return [[sum(x[r][t] * y[t][c] for t in range(n)) for c in range(n)] for r in range(n)]


def mat_sub(x, y):
    return [[a - b for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def A(a, u):
    return endo(a[0], lambda w: add(mat_scale_v(F(1, 2), br(a, u, w)), pr(a, u, w)))


def mat_scale_v(s, v):
    return [s * x for x in v]


def comm(x, y):
    return mat_sub(mat_mul(x, y), mat_mul(y, x))


def curvature_commutator(a, i, j):
    n = a[0]
    bij = br(a, e(n, i), e(n, j))
    return mat_sub(comm(A(a, e(n, i)), A(a, e(n, j))), A(a, bij))


def curvature_split(a, i, j):
    n = a[0]
    x, y = e(n, i), e(n, j)
    return endo(n, lambda w: add(mat_scale_v(F(-1, 4), br(a, br(a, x, y), w)),
                                 mat_scale_v(F(1, 2), add(L(a, x, y, w), neg(L(a, y, x, w))))))


def rref(rows):
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    piv_row = 0
    for c in range(ncols):
        p = next((r for r in range(piv_row, len(m)) if m[r][c] != 0), None)
        if p is None:
            continue
        m[piv_row], m[p] = m[p], m[piv_row]
        pv = m[piv_row][c]
        m[piv_row] = [x / pv for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_row])]
        piv_row += 1
    return [r for r in m if any(r)]


def kernel(rows, ncols):
    red = rref(rows)
    pivots = [next(c for c in range(ncols) if r[c] != 0) for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [F(0)] * ncols
        v[f] = F(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return rref(basis)


def dpois(a):
    n = a[0]
    rows = []
    for j, k, m in itertools.product(range(n), repeat=3):
        rows.append([L(a, e(n, i), e(n, j), e(n, k))[m] for i in range(n)])
    return kernel(rows, n)


def flat(x):
    return [v for r in x for v in r]


def holonomy(a):
    n = a[0]
    seeds = [flat(curvature_commutator(a, i, j)) for i in range(n) for j in range(i + 1, n)]
    basis = rref(seeds)
    As = [A(a, e(n, k)) for k in range(n)]
    while True:
        mats = [[r[t * n:(t + 1) * n] for t in range(n)] for r in basis]
        cand = list(basis)
        for x in mats:
            for ak in As:
                cand.append(flat(comm(ak, x)))
        for x, y in itertools.combinations(mats, 2):
            cand.append(flat(comm(x, y)))
        new = rref(cand)
        if len(new) == len(basis):
            return new
        basis = new


def mat_fmt(x):
    return [[str(v) for v in r] for r in x]


A3 = algebra(3, [(2, 3, 1, 1)], [(2, 2, 1, 1), (3, 3, 1, 1)])
A3_PRINTED = algebra(3, [(2, 3, 1, 1)], [(1, 2, 1, 1), (3, 3, 1, 1)])
A4 = algebra(3, [(2, 3, 1, 1)], [(2, 3, 1, 1), (3, 3, 2, 1)])
D1 = algebra(3, [(1, 3, 2, 1)], [(1, 1, 2, 1), (3, 3, 3, 1)])
D2 = algebra(3, [(1, 3, 2, 1)], [(1, 1, 2, 1), (1, 3, 1, 1)])
HM_CONTROL = algebra(3, [(2, 3, 1, 1)], [(1, 1, 1, 1)])
JACOBI_CONTROL = algebra(3, [(1, 2, 3, 1), (1, 3, 1, 1)])
R2 = algebra(2, [(1, 2, 2, 1)])
ASSOC_N2 = algebra(2, [], [(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 1, 1)])
ASSOC_N2_MUTATED = algebra(2, [], [(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 2, 1)])
ASSOC_N2_BROKEN = algebra(2, [], [(1, 1, 1, 1), (2, 2, 1, 1)])


def lie_derivative_1d():
    """n = 1, S = x, X = x d/dx: polynomial coefficients as {degree: coef}."""
    S = {1: F(1)}
    X = {1: F(1)}

    def d(p):
        return {k - 1: v * k for k, v in p.items() if k > 0}

    def mul(p, q):
        out = {}
        for a, x in p.items():
            for b, y in q.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return out

    def plus(*ps):
        out = {}
        for p in ps:
            for k, v in p.items():
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v != 0}

    neg_p = lambda p: {k: -v for k, v in p.items()}
    res = plus(mul(X, d(S)), neg_p(mul(S, d(X))), mul(S, d(X)), mul(S, d(X)))
    return {str(k): str(v) for k, v in sorted(res.items())}


def ansatz_1d(degree):
    """Unknowns X = sum_m a_m x^m; L_X S = X + x X' for S = x. Returns kernel rank."""
    rows = []
    for target in range(degree + 1):
        rows.append([F(1 + m) if m == target else F(0) for m in range(degree + 1)])
    return len(kernel(rows, degree + 1))


def compute():
    out = {}
    out["rref_3x3"] = mat_fmt(rref([[F(1), F(2), F(3)], [F(4), F(5), F(6)], [F(7), F(8), F(9)]]))
    out["kernel_110"] = mat_fmt(kernel([[F(1), F(1), F(0)]], 3))
    out["jacobi_control"] = jacobi_failure(JACOBI_CONTROL)
    out["assoc_n2"] = assoc_failure(ASSOC_N2)
    out["assoc_n2_mutated"] = assoc_failure(ASSOC_N2_MUTATED)
    out["assoc_n2_broken"] = assoc_failure(ASSOC_N2_BROKEN)
    out["assoc_A3_printed"] = assoc_failure(A3_PRINTED)
    out["assoc_D2"] = assoc_failure(D2)
    out["hm_control"] = hm_failure(HM_CONTROL)
    out["hm_D2"] = hm_failure(D2)
    for name, a in [("A3", A3), ("A4", A4), ("D1", D1), ("D2", D2), ("A3_printed", A3_PRINTED)]:
        out["leibnizator_" + name] = leibnizator_nonzero(a)
    out["A_e1_D1"] = mat_fmt(A(D1, e(3, 0)))
    out["A_e3_A3"] = mat_fmt(A(A3, e(3, 2)))
    for name, a in [("A3", A3), ("A4", A4), ("D1", D1)]:
        out["dpois_" + name] = mat_fmt(dpois(a))
        out["curvature_" + name] = [mat_fmt(curvature_commutator(a, i, j)) for i in range(3) for j in range(i + 1, 3)]
        out["holonomy_" + name] = mat_fmt(holonomy(a))
    out["curvature_D2_commutator"] = [mat_fmt(curvature_commutator(D2, i, j)) for i in range(3) for j in range(i + 1, 3)]
    out["curvature_D2_split"] = [mat_fmt(curvature_split(D2, i, j)) for i in range(3) for j in range(i + 1, 3)]
    out["ad_e2_r2"] = mat_fmt(endo(2, lambda w: br(R2, e(2, 1), w)))
    out["lie_derivative_1d"] = lie_derivative_1d()
    out["ansatz_1d_degree1_rank"] = ansatz_1d(1)
    out["ansatz_1d_degree2_rank"] = ansatz_1d(2)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="compare with frozen.json")
    args = ap.parse_args()
    values = compute()
    if not args.check:
        print(json.dumps(values, indent=1, sort_keys=True))
        return 0
    frozen = json.loads((Path(__file__).parent / "frozen.json").read_text())
    bad = [k for k in sorted(set(frozen) | set(values)) if frozen.get(k) != values.get(k)]
    for k in bad:
        print(f"mismatch: {k}\n  frozen:   {frozen.get(k)}\n  computed: {values.get(k)}")
    print(f"{len(values) - len(bad)}/{len(values)} oracle values match")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
