"""Functional-equation bookkeeping and the predicted arithmetic factor.

Two final consistency layers:

* the primitive Dirichlet functional equation
      L(s0, chi-bar) = i^{-a} (tau(chi-bar)/sqrt p) p^{1/2-s0}
                        gamma_R(1-s0+a)/gamma_R(s0+a) L(1-s0, chi),
  and its parity aggregates, where one application inside
  tau(chi) L(1-s0, chi) L(s0, chi-bar)^3 balances the moment combination
  (the odd-class constant is +i = chi(-1) i^{-1});

* the arithmetic factor of the shifted cubic-moment prediction,
      a^{-1/2} prod_{p|a} { tau_b(p^{o_p}) - tau_b(p^{o_p-1})/p },
  which is nothing but the off-diagonal residue factor at s = 1/2 with
  eigenvalues tau_b for the eps-flipped parameter triple b.
"""

from twistedmoments import check_conjecture_factor, check_dirichlet_functional_eq

print("Functional equation per character and parity aggregates:")
for p in (5, 7):
    for s0 in (0.5 + 1j, 0.5 + 2j):
        rep = check_dirichlet_functional_eq(p, s0)
        errs = {item.key: item.error for item in rep.items}
        print(
            f"  p = {p}, s0 = {s0}:  worst per-character {max(v for k, v in errs.items() if k.startswith('chi')):.1e}"
            f"   even aggregate {errs['even-aggregate']:.1e}"
            f"   odd aggregate {errs['odd-aggregate']:.1e}"
        )

print()
print("Predicted arithmetic factor vs residue factor at s = 1/2:")
alpha = (0.3j, -0.1j, -0.2j)
for eps in ((1, 1, 1), (1, -1, 1)):
    sig = "".join("+" if e == 1 else "-" for e in eps)
    worst = max(
        check_conjecture_factor(a, alpha, eps).max_error for a in range(1, 31)
    )
    print(f"  eps = ({sig}), a up to 30:  worst relative gap = {worst:.2e}")

print()
print("For mixed eps the flipped triple no longer sums to zero, so the tau")
print("values are taken directly as divisor power sums; the two sides still")
print("arrive by different routes (multiplicative assembly vs brute triples).")
