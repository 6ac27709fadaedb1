"""Independent reference values for the unit tests.

Plain Fractions and mpmath, no code shared with the library. Run with
python3; every number printed here is copied into a test as a literal.
"""
from fractions import Fraction as Fr
import itertools
import random

from mpmath import mp, mpf, quad, inf, sinh, coth, sqrt, matrix

mp.dps = 30


# ---- lattice: build Q and the test classes from scratch ----
def qform(k, m):
    n = m + 2
    q = [[Fr(0)] * n for _ in range(n)]
    q[0][0], q[0][1], q[1][0] = Fr(-k), Fr(1), Fr(1)
    for j in range(m):
        q[2 + j][2 + j] = Fr(-1)
    return q


def pair(u, v, k, m):
    q = qform(k, m)
    return sum(u[i] * q[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def pd(a, b, k, w):
    return [a, a * (b + k)] + [-a * x for x in w]


def c1(g, k, m):
    # adjunction: c1.C = C.C + 2 - 2g(C) on C_inf (genus g), F, E_j (rational)
    # solve for the row r with r.x = c1.[x] using Q, i.e. c1 = -K in coordinates
    return [Fr(2 * (1 - g) - k), Fr(2)] + [Fr(1)] * m


def curves(k, m):
    e = lambda i: [Fr(int(i == j)) for j in range(m + 2)]
    out = {"Cinf": e(0), "F": e(1)}
    out["C0"] = [Fr(1), Fr(k)] + [Fr(-1)] * m
    for j in range(m):
        out["E%d" % (j + 1)] = e(2 + j)
        out["F-E%d" % (j + 1)] = [a - b for a, b in zip(e(1), e(2 + j))]
    return out


def admissible(g, k, a, b, w):
    m = len(w)
    om = pd(a, b, k, w)
    if sum(x * y for x, y in zip(c1(g, k, m), om)) != 0 or a <= 0 or pair(om, om, k, m) <= 0:
        return False
    return all(pair(om, c, k, m) > 0 for c in curves(k, m).values())


def b_solve(g, k, a, w):
    # c1.PD = 0 is linear in B; solve it directly
    m = len(w)
    f = lambda b: sum(x * y for x, y in zip(c1(g, k, m), pd(a, b, k, w)))
    return -f(Fr(0)) / (f(Fr(1)) - f(Fr(0)))


print("pairing (1,2,-1/2,-1/2)^2 on g=2,k=1,m=2:", pair([1, 2, Fr(-1, 2), Fr(-1, 2)], [1, 2, Fr(-1, 2), Fr(-1, 2)], 1, 2))
print("c1 row g=2,k=1,m=2:", c1(2, 1, 2))
print("B g=2,k=1,w=(1/2,1/2):", b_solve(2, 1, Fr(1), [Fr(1, 2)] * 2))
print("B g=2,k=0:", b_solve(2, 0, Fr(1), []))
print("B g=3,k=2,w=(1/2)^4:", b_solve(3, 2, Fr(1), [Fr(1, 2)] * 4))
om = pd(Fr(1), Fr(1), 1, [Fr(1, 2)] * 2)
print("areas:", {n: pair(om, c, 1, 2) for n, c in curves(1, 2).items()}, "omega^2", pair(om, om, 1, 2))
print("total scalar curvature g=2,k=0,A=1,B=2 (units of pi):", 4 * sum(x * y for x, y in zip(c1(2, 0, 0), pd(Fr(1), Fr(2), 0, []))))
for g, m in [(2, 2), (2, 0)]:
    chi, tau = 4 - 4 * g + m, -m
    print("bounds g=%d m=%d: chi=%d tau=%d riemann=%d weyl=%d (pi^2)" % (g, m, chi, tau, -8 * (3 * tau + chi), -12 * tau))


# ---- Futaki from the moment-map integral: F = int t dmu over the t range ----
def futaki_boundary(g, k, a, w):
    b = b_solve(g, k, a, w)
    om = pd(a, b, k, w)
    cinf = pair(om, curves(k, len(w))["Cinf"], k, len(w))
    c0 = pair(om, curves(k, len(w))["C0"], k, len(w))
    return (cinf - c0) * a / 2


print("futaki g=2,k=1,A=1,w=(1/2,1/2):", futaki_boundary(2, 1, Fr(1), [Fr(1, 2)] * 2))
print("futaki g=2,k=1,A=1,w=(1/4,1/4):", futaki_boundary(2, 1, Fr(1), [Fr(1, 4)] * 2))
om = pd(Fr(1), b_solve(2, 1, Fr(1), [Fr(1, 4)] * 2), 1, [Fr(1, 4)] * 2)
print("section areas w=(1/4,1/4):", pair(om, curves(1, 2)["Cinf"], 1, 2), pair(om, curves(1, 2)["C0"], 1, 2))


def grad(g, k, a, w, h=Fr(1, 10**6)):
    # exact central difference of a polynomial of degree 2 is exact
    f = lambda a_, w_: futaki_boundary(g, k, a_, w_)
    out = [(f(a + h, w) - f(a - h, w)) / (2 * h)]
    for j in range(len(w)):
        wp = list(w); wm = list(w)
        wp[j] += h; wm[j] -= h
        out.append((f(a, wp) - f(a, wm)) / (2 * h))
    return out


print("restricted gradient g=2,k=1,A=1,w=(1/2,1/2):", grad(2, 1, Fr(1), [Fr(1, 2)] * 2))


# ---- truth table of admissible Futaki-zero classes by witness search ----
def exists(k, m, g=2):
    grid = [Fr(i, 12) for i in range(1, 12)]
    if m == 0:
        return k == 0 and admissible(g, k, Fr(1), b_solve(g, k, Fr(1), []), [])
    for w in itertools.combinations_with_replacement(grid, m):
        if sum(w) == k and admissible(g, k, Fr(1), b_solve(g, k, Fr(1), list(w)), list(w)):
            return True
    return False


rows = []
for k in range(-3, 7):
    rows.append("".join("1" if exists(k, m) else "0" for m in range(0, 9)))
print("existence table, rows k=-3..6, columns m=0..8:")
for k, r in zip(range(-3, 7), rows):
    print("  k=%2d %s" % (k, r))


# ---- parabolic degrees by enumerating every subset ----
def pardeg_line(k, alpha, beta, kind, subset=()):
    m = len(alpha)
    if kind == "L":
        return k + sum(alpha)
    if kind == "O":
        return sum(beta)
    d = -len(subset)
    return d + sum(beta[j] for j in subset) + sum(alpha[j] for j in range(m) if j not in subset)


al, be = [Fr(0)] * 2, [Fr(1, 2)] * 2
print("pardeg L, O, O(-p1):", pardeg_line(1, al, be, "L"), pardeg_line(1, al, be, "O"), pardeg_line(1, al, be, "T", (0,)))
print("pardeg total:", 1 + sum(al) + sum(be))
be = [Fr(1, 4)] * 2
print("w=(1/4,1/4): pardeg L", pardeg_line(1, al, be, "L"), "half total", (1 + sum(al) + sum(be)) / 2)


# ---- hyperbolic pieces ----
def chart(x, y, t):
    return (x, y * t, y * sqrt(1 - t * t))


print("chart (0,1,3/5):", [mp.nstr(c, 15) for c in chart(mpf(0), mpf(1), mpf(3) / 5)])


def pullback(x, y, t, h=mpf("1e-10")):
    p = [mpf(x), mpf(y), mpf(t)]
    J = matrix(3, 3)
    for j in range(3):
        a = list(p); b = list(p)
        a[j] += h; b[j] -= h
        fa, fb = chart(*a), chart(*b)
        for i in range(3):
            J[i, j] = (fa[i] - fb[i]) / (2 * h)
    z = chart(*p)[2]
    return (J.T * J) / z**2


g = pullback(0, 1, mpf(3) / 5)
t = mpf(3) / 5
expect = [1 / (1 - t * t), 1 / (1 - t * t), 1 / (1 - t * t) ** 2]
print("pullback metric diag error:", max(abs(g[i, i] - expect[i]) for i in range(3)),
      "offdiag:", max(abs(g[i, j]) for i in range(3) for j in range(3) if i != j))

# G solves (sinh^2 r G')' = 0, G -> 0 at infinity, G ~ 1/(4 pi) * (4 pi) / (2 r) normalised so the flux is -1
G1 = quad(lambda s: 1 / (2 * sinh(s) ** 2), [1, inf])
print("G(1) by radial quadrature:", mp.nstr(G1, 15), " closed form:", mp.nstr((coth(1) - 1) / 2, 15))
