"""Irreducibility two ways, and a small end-to-end classification run.

Run:  python demos/04_irreducibility_and_classification.py
"""

import random

from uawq import (
    Params5,
    build_W,
    burnside_irreducible,
    classify_sample,
    ctx_new,
    intertwiner,
    irr_W_criterion,
)
from uawq.classify import sample_quintuple
from uawq.linalg import rank

ctx = ctx_new(13, 3)

# A reducible corner case: delta = 0 with lam = 1 always splits.
p5 = Params5(ctx.el(2), ctx.el(5), ctx.el(6), ctx.one, ctx.zero)
print("delta=0, lam=1:",
      "criterion:", irr_W_criterion(p5),
      "| spanning oracle:", burnside_irreducible(build_W(p5)))

# Generic quintuples are almost always irreducible; the parameter criterion
# and the Burnside spanning test agree case by case.
rng = random.Random(7)
agree = 0
for _ in range(200):
    p5 = sample_quintuple(ctx, rng)
    agree += irr_W_criterion(p5) == burnside_irreducible(build_W(p5))
print(f"criterion vs oracle on 200 random quintuples: {agree}/200 agree")
print()

# Classification: sample, filter irreducibles, group by equivalence closure,
# then cross-validate the grouping with intertwiner solves.
report = classify_sample(ctx, seed=42, count=25)
print(f"classified {report['count']} samples at p={report['field']['p']}:")
print(f"  {len(report['classes'])} classes, {len(report['rejected'])} rejected, "
      f"{len(report['errors'])} validation errors")
first = report["classes"][0]
print(f"  first class: size={first['size']}, representative={first['representative']}")

# Within one class the modules are literally isomorphic.
cls = report["classes"][0]
rep0 = build_W(Params5(*[ctx.from_json(e) for e in cls["members"][0]]))
s = intertwiner(rep0, rep0)
print("  self-intertwiner is invertible:", s is not None and rank(s) == rep0.n)
