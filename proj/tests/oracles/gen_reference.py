#!/usr/bin/env python3
"""Independent exact-arithmetic reference values for the C++ test suite.

Everything here is computed with sympy rationals from first principles
(power-basis expansion of the shifted Jacobi polynomials, Bernstein basis
conversion by solving a linear system, integrals by exact integration), so it
shares no code path with the library. Output is pasted into
tests/support/reference_values.hpp.
"""
import sympy as sp

x = sp.symbols("x")


def poch(a, i):
    r = sp.Integer(1)
    for j in range(i):
        r *= a + j
    return r


def shifted_jacobi(i, a, b):
    s = 0
    for j in range(i + 1):
        s += poch(-i, j) * poch(i + a + b + 1, j) / (sp.factorial(j) * poch(a + 1, j)) * (1 - x) ** j
    return sp.expand(poch(a + 1, i) / sp.factorial(i) * s)


def mod_jacobi(i, k, l, a, b):
    return sp.expand((1 - x) ** l * x ** k * shifted_jacobi(i - k - l, a + 2 * l, b + 2 * k))


def bern(n, h):
    return sp.binomial(n, h) * x ** h * (1 - x) ** (n - h)


def to_bernstein(poly, n, k, l):
    hs = list(range(k, n - l + 1))
    cs = sp.symbols("c0:%d" % len(hs))
    expr = sp.expand(poly - sum(c * bern(n, h) for c, h in zip(cs, hs)))
    sol = sp.solve(sp.Poly(expr, x).all_coeffs(), cs, dict=True)[0]
    return [sol[c] for c in cs]


def c_matrix(n, k, l, a, b):
    return [to_bernstein(mod_jacobi(i, k, l, a, b), n, k, l) for i in range(k + l, n + 1)]


def show(name, rows):
    print(name)
    for r in rows:
        print("  {" + ", ".join(sp.N(v, 20).__str__() for v in r) + "},")


a, b = sp.Rational(1, 2), sp.Rational(-1, 2)
C = sp.Matrix(c_matrix(4, 1, 1, a, b))
show("c(n=4,k=1,l=1,a=1/2,b=-1/2) rows i=2..4, cols h=1..3", C.tolist())
D = C.inv()  # B_h = sum_i d[h][i] J_i  <=>  D = C^{-1}
show("d(n=4,k=1,l=1,a=1/2,b=-1/2) rows h=1..3, cols i=2..4", D.tolist())
show("c(n=2,k=0,l=0,a=0,b=0)", c_matrix(2, 0, 0, 0, 0))
show("c(n=4,k=1,l=1,a=0,b=0)", c_matrix(4, 1, 1, 0, 0))

# R_1^(2,2)(0.25) scaled by x(1-x): J_{3,1,1}^(0,0)(0.25)
print("J_{3,1,1}(0.25) =", sp.N(mod_jacobi(3, 1, 1, 0, 0).subs(x, sp.Rational(1, 4)), 20))

# Degree reduction n=3 (0,1,-1,0) -> m=2, k=l=1, weight 1: r = r1 * B_1^2
r1 = sp.symbols("r1")
p = sum(v * bern(3, h) for h, v in enumerate([0, 1, -1, 0]))
r = r1 * bern(2, 1)
err = sp.integrate((p - r) ** 2, (x, 0, 1))
sol = sp.solve(sp.diff(err, r1), r1)[0]
print("reduce n=3 (0,1,-1,0) m=2 k=l=1: r1 =", sol, "l2 =", sp.N(sp.sqrt(err.subs(r1, sol)), 20))

# High-precision scalar references (mpmath, 30 digits).
import mpmath as mp

mp.mp.dps = 30
for v in ["0.5", "1.5", "3.25", "10.7", "123.456", "9999.5"]:
    print("lgamma(%s) =" % v, mp.loggamma(mp.mpf(v)))
y, t = mp.mpf("2.5"), mp.mpf("1.25")
print("gen_binomial(2.5, 1.25) =", mp.gamma(y + 1) / (mp.gamma(t + 1) * mp.gamma(y - t + 1)))
print("beta(1.5, 2.5) =", mp.beta(mp.mpf("1.5"), mp.mpf("2.5")))

# Q_2(1; 0, 0, 2) from the hypergeometric series.
q = sum(poch(-2, j) * poch(3, j) * poch(-1, j) / (poch(1, j) * poch(-2, j) * sp.factorial(j)) for j in range(3))
print("Q_2(1;0,0,2) =", q)
