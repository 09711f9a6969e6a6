"""Build the exact field, construct both module families, verify the relations.

Run:  python demos/01_field_and_modules.py
"""

import json

from uawq import (
    Params5,
    build_Vn,
    build_W,
    ctx_new,
    dump_module,
    sqrt,
    verify_rep,
)

# F_169 = F_13(sqrt(t)) with a root of unity q of order 3.  The context picks
# q and the non-residue t canonically, so everything downstream is
# reproducible.
ctx = ctx_new(13, 3)
print(f"field: p={ctx.p}, t={ctx.t}, q={ctx.q}, d={ctx.d}, dbar={ctx.dbar}")
print(f"sqrt(3) = {sqrt(ctx.el(3))},  sqrt(t) = {sqrt(ctx.el(ctx.t))}")
print()

# The truncated family: (n+1)-dimensional, defined for 0 <= n <= dbar-2.
a, b, c = ctx.el(2), ctx.el(5), ctx.el(6)
vn = build_Vn(a, b, c, n=1)
print("V_1(2,5,6):")
print("  A =", vn.A)
print("  B =", vn.B)
print("  central scalars:", vn.omega, vn.omega_star, vn.omega_eps)
print("  relations hold:", verify_rep(vn).ok)
print()

# The cyclic family: dbar-dimensional with a corner parameter delta.  The
# lowering matrix A carries ones on the subdiagonal and delta in the corner;
# the raising matrix B carries the varphi sequence on the superdiagonal.
w = build_W(Params5(a, b, c, ctx.el(4), ctx.el(7)))
print("W_4^7(2,5,6):")
print("  A =", w.A)
print("  B =", w.B)
report = verify_rep(w)
print("  relations hold:", report.ok)
print()

# Machine-readable dump (the same payload the CLI emits).
print(json.dumps(dump_module(w, Params5(a, b, c, ctx.el(4), ctx.el(7))), sort_keys=True))
