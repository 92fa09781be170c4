"""
The polynomial ring F_q[t] and its multiplicative functions
===========================================================

Polynomials play the role that integers play over Q: they factor
uniquely into monic irreducibles, carry an absolute value |f| = q**deg f,
and support exact analogues of Euler phi, the Moebius function, and the
Jacobi symbol.
"""

from quadricpoints import (
    FieldCtx,
    Poly,
    euler_phi,
    factorize,
    irreducibles,
    jacobi_symbol,
    moebius,
    poly_square_root,
)

F3 = FieldCtx(3)
t = Poly.gen(F3)
one = Poly.one(F3)

# build and factor a polynomial
f = (t + one) ** 2 * (t * t + one) * Poly.constant(F3, 2)
print("f =", f)
fac = factorize(f)
print("unit:", fac.unit)
for pi, k in fac.factors:
    print(f"  ({pi})^{k}")
print("re-expanded:", fac.expand(F3))

# factorization is deterministic: the randomized splitting is seeded
# from the input, so repeated calls give the same ordered answer
assert factorize(f).factors == fac.factors

# the monic irreducibles of low degree
print("\nmonic irreducible quadratics over F_3:")
for pi in irreducibles(F3, 2):
    print("  ", pi)

# phi(r) counts residues coprime to r; mu detects square factors
r = t * t
print("\nphi(t^2) =", euler_phi(r))
print("mu(t) =", moebius(t), " mu(t(t+1)) =", moebius(t * (t + one)), " mu(t^2) =", moebius(r))

# the Jacobi symbol (a/r) extends the quadratic residue character
pi = t * t + one  # irreducible
print("\nJacobi symbols modulo t^2 + 1:")
for enc in (1, 2, 3, 5):
    from quadricpoints import poly_from_encoding

    a = poly_from_encoding(F3, enc)
    print(f"  ({a} / {pi}) =", jacobi_symbol(a, pi))

# perfect squares are recognized and their roots extracted exactly
square = (t * t + t + one) ** 2
root = poly_square_root(square)
print("\nsquare root of", square, "is", root)
print("square root of t *", square, "is", poly_square_root(t * square))
