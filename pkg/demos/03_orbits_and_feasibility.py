"""Parameter orbits, the feasibility solver, and equivalence closures.

Run:  python demos/03_orbits_and_feasibility.py
"""

import random

from uawq import (
    Params4,
    ctx_new,
    feasible,
    feasible_target,
    s4_orbit,
    simeq_closure,
    solve_feasible,
)
from uawq.classify import sample_quintuple

ctx = ctx_new(13, 3)

# The 24-row action needs sqrt(a b c lam q); at (1,1,1,1) the argument is
# q = 3 = 4^2, so the orbit is computable.
p4 = Params4(*[ctx.one] * 4)
orbit = s4_orbit(p4)
print(f"orbit of (1,1,1,1): {orbit.size} sign-classes")
for member in orbit.members:
    print("  (" + ", ".join(str(x) for x in member) + ")")
print()

# Feasibility: the target read off a quadruple is solved back to the full
# set of quadruples sharing it, which is exactly the orbit restricted to the
# base field's reach.
target = feasible_target(p4)
solutions = solve_feasible(target)
print(f"feasible quadruples for the target of (1,1,1,1): {len(solutions)}")
for sol in solutions:
    assert feasible(sol, target)
    print("  (" + ", ".join(str(x) for x in sol.astuple()) + ")")
print()

# Quintuple equivalence closure: the orbit moves keep the corner invariant
# and two inversion moves act when their side conditions hold.
rng = random.Random(3)
p5 = sample_quintuple(ctx, rng)
closure = simeq_closure(p5)
print(f"closure of {tuple(str(x) for x in p5.astuple())}: {closure.size} classes")
labels = sorted({lab for _, lab, _ in closure.edges})
print("moves used:", ", ".join(labels))
