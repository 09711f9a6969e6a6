"""Weight spaces, marginal vectors, and the spectral ladder of a cyclic module.

Run:  python demos/02_weights_and_ladders.py
"""

from uawq import (
    L_closed,
    L_recurrence,
    Params5,
    build_W,
    ctx_new,
    e_vector,
    is_marginal_weight,
    marginal_vectors,
    nu_of,
    weight_spaces,
)
from uawq.errors import CaseNotApplicable

ctx = ctx_new(13, 3)
p5 = Params5(ctx.el(2), ctx.el(5), ctx.el(6), ctx.el(4), ctx.el(7))
rep = build_W(p5)

# Every eigenvalue theta of B factors as mu + 1/mu; the pair {mu, 1/mu} names
# one weight space (the canonical representative is the lex-smaller one), but
# the marginal condition is one-sided: it can hold at mu and fail at 1/mu.
print("weight spaces of B:")
for mu, basis in weight_spaces(rep):
    marg = is_marginal_weight(rep, mu)
    marg_inv = is_marginal_weight(rep, mu.inv())
    vecs = marginal_vectors(rep, mu) or marginal_vectors(rep, mu.inv())
    print(f"  mu={mu}: dim={basis.ncols}, marginal at mu={marg}, "
          f"at 1/mu={marg_inv}, fixed lines={len(vecs)}")
base = p5.b / p5.lam
print(f"the generator's weight {base} is always marginal:",
      is_marginal_weight(rep, base))
print()

# The twisted module has its own ladder of eigenvectors e_i for A, indexed by
# the spectral scalar nu.  Their expansion coefficients satisfy a two-term
# recurrence with closed forms in four special position classes.
nd = nu_of(p5)
print(f"spectral scalar nu = {nd.nu}")
for i in range(ctx.dbar):
    ei = e_vector(p5, i, nd)
    print(f"  e_{i} = {[str(ei.entry(r, 0)) for r in range(ctx.dbar)]}, "
          f"A e_{i} = vartheta_{i} e_{i} with vartheta={nd.vartheta(i)}")

print()
print("coefficient array L[j][k] for i=0 (recurrence):")
L = L_recurrence(p5, 0, nd)
for row in L:
    print("  ", [str(x) for x in row])
try:
    L_closed(p5, 0, 0, 0, nd)
    print("closed form applies at i=0")
except CaseNotApplicable:
    print("nu q^0 matches no closed-form case at i=0 (generic position)")
