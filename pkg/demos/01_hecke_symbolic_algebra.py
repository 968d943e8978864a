"""Eigenvalues at prime powers and two-index coefficients, exactly.

The whole symbolic layer lives in two generators per prime: A_p (the
eigenvalue at p) and B_p (its dual).  Everything else -- eigenvalues at
prime powers, the two-index Fourier coefficients, dualization -- is
polynomial algebra over Q in these generators.
"""

from twistedmoments import (
    EisensteinProvider,
    SymbolicProvider,
    dual,
    fourier_coefficient,
    lambda_of,
    lambda_power,
)

sym = SymbolicProvider()

print("Eigenvalues at powers of p = 2, from the local-factor recurrence")
print("  lam(p^k) = A lam(p^{k-1}) - B lam(p^{k-2}) + lam(p^{k-3}):")
for k in range(6):
    print(f"  lam(2^{k}) = {lambda_power(2, k)}")

print()
print("Multiplicativity assembles composite indices from prime powers:")
for n in (6, 12, 360):
    print(f"  lam({n}) = {lambda_of(sym, n)}")

print()
print("Two-index coefficients via the Moebius convolution")
print("  B(m1, m2) = sum_{r | gcd} mu(r) lam_bar(m1/r) lam(m2/r):")
for m1, m2 in ((1, 7), (2, 2), (4, 2), (6, 6)):
    print(f"  B({m1},{m2}) = {fourier_coefficient(sym, m1, m2)}")

print()
print("Swapping the two indices is the dual involution A_p <-> B_p:")
b42 = fourier_coefficient(sym, 4, 2)
print(f"  dual(B(4,2)) = {dual(b42)}")
print(f"       B(2,4)  = {fourier_coefficient(sym, 2, 4)}")

print()
print("The Eisenstein specialization turns the algebra into numbers:")
eis = EisensteinProvider((0.3j, -0.1j, -0.2j))
for n in (2, 4, 12):
    print(f"  tau_alpha({n}) = {eis.lam(n):.12f}")
print("and substituting A_p -> tau(p), B_p -> tau_bar(p) into the polynomials")
print("reproduces them -- the cross-layer consistency the test suite pins down.")
