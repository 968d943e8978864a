"""Hurwitz zeta, Dirichlet characters, and Gauss sums -- the numeric toolbox.

The Hurwitz zeta is continued by Euler-Maclaurin and is the single
primitive behind everything else: Dirichlet L-functions are finite
character combinations of it, and the residue-class decompositions of
twisted series reduce to it as well.
"""

import math

from twistedmoments import (
    characters_mod,
    dirichlet_L,
    gamma_R,
    gauss_sum,
    hurwitz_zeta,
    riemann_zeta,
)

print("Hurwitz zeta with continuation:")
print(f"  zeta(2, 1)    = {hurwitz_zeta(2, 1.0).real:.15f}   (pi^2/6 = {math.pi**2/6:.15f})")
print(f"  zeta(2, 1/2)  = {hurwitz_zeta(2, 0.5).real:.15f}   (pi^2/2 = {math.pi**2/2:.15f})")
print(f"  zeta(-1/2+4i, 0.9) = {hurwitz_zeta(-0.5+4j, 0.9):.12f}  (left of the critical strip)")

print()
print("gamma_R(s) = pi^(-s/2) Gamma(s/2):")
for s in (1, 2, 4):
    print(f"  gamma_R({s}) = {gamma_R(s).real:.15f}")

p = 7
chars = characters_mod(p)
print()
print(f"All {len(chars)} characters mod {p} (index j: chi(g^k) = e(jk/(p-1))):")
for chi in chars:
    tau = gauss_sum(chi)
    if chi.is_principal:
        print(f"  chi_{chi.index} (principal):  tau(chi_0) = {tau.real:+.12f}")
    else:
        kind = "even" if chi.parity == 0 else "odd "
        print(f"  chi_{chi.index} ({kind}):  |tau(chi)| = {abs(tau):.12f}"
              f"   [sqrt({p}) = {math.sqrt(p):.12f}]")

print()
print("Orthogonality knits Hurwitz values into L-functions: for prime d,")
print("  zeta(z, l/d) = (d^z/phi(d)) sum_chi conj(chi)(l) L(z, chi).")
z, l = 2.5 + 1j, 3
lhs = hurwitz_zeta(z, l / p)
rhs = sum(chi(l).conjugate() * dirichlet_L(z, chi) for chi in chars) * p**z / (p - 1)
print(f"  l = {l}, d = {p}, z = {z}:  |difference| = {abs(lhs - rhs):.2e}")

print()
print("Principal character strips one Euler factor off the Riemann zeta:")
print(f"  L(2, chi_0 mod 7) = {dirichlet_L(2, chars[0]).real:.15f}")
print(f"  zeta(2)(1 - 1/49) = {(riemann_zeta(2) * (1 - 7**-2)).real:.15f}")
