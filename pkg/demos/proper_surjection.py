"""Why evaluation from Cantor space onto [-1, 1] is a proper surjection.

The inverse image c* of a half-open interval is a directed join of hooks.
Its right adjoint ∀_c is computed on pairs (s, t) by theta, and the unit,
counit and Frobenius inequalities are checked stage by stage.  Finally the
opens identifying s+-^ω with s-+^ω factor back through intervals.
"""
import numpy as np

from interval_object.coeq import cstar_oracle, omega_C_clopens, verify_factorization
from interval_object.cstar import cstar_above, tstar_iterate
from interval_object.dyadic import cprime, parse_interval_open
from interval_object.forall import check_adjunction, check_frobenius, theta

# c*((0,1]) grows with the depth; the recurrence T* produces the same terms.
upper = cstar_above(0)
for k in range(4):
    print(f"depth {k}:", upper.at_depth(k), "==", tstar_iterate(0, k + 2))

# ∀_c applied to the depth-k term climbs back up to (0,1]; the left endpoints
# are c'(+-^k) = 2**(-k-1).
ends = np.array([float(cprime("+" + "-" * k)) for k in range(1, 9)])
print("endpoints:", ends)
print("ratios:", ends[1:] / ends[:-1])
print("theta on depth 4:", theta(None, "+" + "-" * 4 + "+"))

print(check_adjunction(3, 3).summary())
print(check_frobenius(3, 3).summary())

# Only the trivial clopens are compatible with the identification, but the
# inverse image of any interval open is, and it factors through intervals.
print("passing clopens of depth 4:", [str(U) for U in omega_C_clopens(4)])
V = parse_interval_open("[-1,-1/4) u (1/8,1]")
rep = verify_factorization(cstar_oracle(V), 4)
print(rep.summary())
print("maximal intervals:", ", ".join(rep.notes))
assert all(parse_interval_open(n) <= V for n in rep.notes)
