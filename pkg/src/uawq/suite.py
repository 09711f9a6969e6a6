"""The named property suite behind ``uawq suite``.

Every check validates one family of identities or one criterion/oracle
agreement, at a sample count set by the level: smoke (seconds), standard
(tens of seconds), exhaustive (adds the full small-field sweeps, gated to
p <= 17).  All arithmetic is exact; a check fails on the first
counterexample and reports the offending parameters verbatim.
"""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from . import table1
from .algebra import central_elements_check, vee, verify_rep
from .classify import (
    approx_equiv,
    burnside_irreducible,
    canon_sign4,
    classify_sample,
    delta_shift,
    feasible,
    feasible_target,
    intertwiner,
    irr_Vn_criterion,
    irr_W_criterion,
    quad_key,
    rand_nonzero,
    s4_orbit,
    sample_quadruple,
    sample_quintuple,
    sample_triple,
    simeq_closure,
    solve_feasible,
)
from .errors import CaseNotApplicable, NeedsExtension, NuOutsideField
from .field import FieldCtx, chebyshev_T, ctx_new, poly_eval, poly_from_roots, poly_roots
from .linalg import FMat, hstack, kernel, krylov_span_dim, rank
from .modules import (
    L_closed,
    L_recurrence,
    Params4,
    Params5,
    SeqData,
    build_Vn,
    build_W,
    char_poly_fast,
    check_verma_universal,
    check_W_universal,
    e_vector,
    is_marginal_weight,
    marginal_test_e,
    marginal_vectors,
    nu_of,
    w_ij,
    weight_spaces,
)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None


LEVEL_COUNTS = {"smoke": 8, "standard": 80, "exhaustive": 200}
EXHAUSTIVE_P_CAP = 17


def _fail(name: str, witness: object, what: str) -> CheckResult:
    return CheckResult(name, False, what, repr(witness))


def _sample_w(ctx: FieldCtx, rng: random.Random) -> tuple[Params5, object]:
    p5 = sample_quintuple(ctx, rng)
    return p5, build_W(p5)


# --- individual checks ------------------------------------------------------


def check_field_arithmetic(ctx, rng, n):
    from .field import sqrt

    if any((ctx.q ** k) == ctx.one for k in range(1, ctx.d)):
        return _fail("field-arithmetic", ctx.q, "q has premature order")
    if (ctx.q ** ctx.d) != ctx.one:
        return _fail("field-arithmetic", ctx.q, "q^d != 1")
    for _ in range(n):
        x = rand_nonzero(ctx, rng)
        if x.inv().inv() != x or x * x.inv() != ctx.one:
            return _fail("field-arithmetic", x, "inverse identities fail")
        sq = x * x
        r = sqrt(sq)
        if r * r != sq or r != sqrt(sq):
            return _fail("field-arithmetic", x, "sqrt not a stable root")
    # T_n(x + 1/x) = x^n + x^-n on 64 sampled points, n up to 2*dbar
    pts = [rand_nonzero(ctx, rng) for _ in range(64)]
    for deg in range(2 * ctx.dbar + 1):
        coeffs = chebyshev_T(ctx, deg)
        for x in pts:
            if poly_eval(coeffs, x + x.inv()) != x ** deg + x ** (-deg):
                return _fail("field-arithmetic", (deg, x), "chebyshev identity fails")
    return CheckResult("field-arithmetic", True, f"{n} inverses, 64-point chebyshev")


def check_poly_roots(ctx, rng, n):
    for _ in range(max(n // 2, 4)):
        k = rng.randrange(1, 5)
        roots = [rand_nonzero(ctx, rng) for _ in range(k)]
        f = poly_from_roots(ctx, roots)
        got = poly_roots(ctx, f)
        if sorted(x.key for x in got) != sorted(x.key for x in roots):
            return _fail("poly-roots", roots, "scan missed or invented roots")
        for r in got:
            if not poly_eval(f, r).is_zero():
                return _fail("poly-roots", r, "non-root returned")
    return CheckResult("poly-roots", True, "product polynomials round-trip")


def check_relation_verify(ctx, rng, n):
    for _ in range(n):
        p5 = sample_quintuple(ctx, rng)
        if not verify_rep(build_W(p5)).ok:
            return _fail("relation-verify", p5.astuple(), "cyclic quotient fails relations")
        a, b, c = sample_triple(ctx, rng)
        nn = rng.randrange(0, ctx.dbar - 1)
        if not verify_rep(build_Vn(a, b, c, nn)).ok:
            return _fail("relation-verify", (a, b, c, nn), "truncated quotient fails relations")
    return CheckResult("relation-verify", True, f"{n} cyclic + {n} truncated builds")


def check_vee_involution(ctx, rng, n):
    for _ in range(n):
        p5, rep = _sample_w(ctx, rng)
        if vee(vee(rep)) != rep:
            return _fail("vee-involution", p5.astuple(), "double twist is not identity")
        if verify_rep(vee(rep)).ok != verify_rep(rep).ok:
            return _fail("vee-involution", p5.astuple(), "twist changes verification")
    return CheckResult("vee-involution", True, f"{n} reps")


def check_weight_ladder(ctx, rng, n):
    q2 = ctx.q * ctx.q
    for _ in range(max(n // 4, 2)):
        p5, rep = _sample_w(ctx, rng)
        for mu, basis in weight_spaces(rep):
            up = mu * q2 + mu.inv() / q2
            dn = mu / q2 + mu.inv() * q2
            th = mu + mu.inv()
            m = (rep.B - FMat.scalar(ctx, rep.n, up)) @ (
                rep.B - FMat.scalar(ctx, rep.n, dn)) @ rep.A @ basis
            # image must stay inside V(mu)
            joint = hstack([basis, m])
            if rank(joint) != basis.ncols:
                return _fail("weight-ladder", p5.astuple(), f"escape from V({mu!r})")
    return CheckResult("weight-ladder", True, "two-sided shift keeps weight spaces")


def check_periodicity(ctx, rng, n):
    for _ in range(max(n // 4, 2)):
        s = SeqData(sample_quadruple(ctx, rng))
        for i in range(3 * ctx.dbar + 1):
            if (
                s.theta(i) != s.theta(i + ctx.dbar)
                or s.theta_star(i) != s.theta_star(i + ctx.dbar)
                or s.varphi(i) != s.varphi(i + ctx.dbar)
            ):
                return _fail("sequence-periodicity", (s.params.astuple(), i), "period break")
        if not s.varphi(0).is_zero():
            return _fail("sequence-periodicity", s.params.astuple(), "varphi(0) != 0")
    return CheckResult("sequence-periodicity", True, "theta/theta*/varphi dbar-periodic")


def check_charpoly(ctx, rng, n):
    for _ in range(max(n // 2, 2)):
        p5, rep = _sample_w(ctx, rng)
        s = SeqData(p5.quadruple)
        want_a = poly_from_roots(ctx, [s.theta(i) for i in range(ctx.dbar)])
        want_a[0] = want_a[0] - p5.delta
        if char_poly_fast(rep.A) != want_a:
            return _fail("charpoly-corner", p5.astuple(), "lowering charpoly mismatch")
        want_b = poly_from_roots(ctx, [s.theta_star(i) for i in range(ctx.dbar)])
        if char_poly_fast(rep.B) != want_b:
            return _fail("charpoly-corner", p5.astuple(), "raising charpoly mismatch")
    return CheckResult("charpoly-corner", True, "both characteristic polynomials")


def check_center(ctx, rng, n):
    from .linalg import is_scalar_matrix, product_shifted

    for _ in range(max(n // 4, 2)):
        p5, rep = _sample_w(ctx, rng)
        mu = rand_nonzero(ctx, rng)
        if not central_elements_check(rep, mu).ok:
            return _fail("center-chebyshev", p5.astuple(), "central element fails to commute")
        s = SeqData(p5.quadruple)
        prod = product_shifted(rep.A, [s.theta(i) for i in range(ctx.dbar)])
        if is_scalar_matrix(prod) != p5.delta:
            return _fail("center-chebyshev", p5.astuple(), "corner product is not delta*I")
    return CheckResult("center-chebyshev", True, "centrality and corner product")


def check_ladder_eigvec(ctx, rng, n):
    from .linalg import product_shifted

    done = 0
    attempts = 0
    while done < max(n // 4, 2) and attempts < 20 * n + 40:
        attempts += 1
        p5 = sample_quintuple(ctx, rng)
        try:
            nd = nu_of(p5)
        except NuOutsideField:
            continue
        rep = build_W(p5)
        s = SeqData(p5.quadruple)
        for i in range(ctx.dbar):
            ei = e_vector(p5, i, nd)
            if rep.A @ ei != ei * nd.vartheta(i):
                return _fail("ladder-eigvec", (p5.astuple(), i), "not an eigenvector")
            if ei.entry(ctx.dbar - 1, 0) != ctx.one:
                return _fail("ladder-eigvec", (p5.astuple(), i), "last coefficient not 1")
            L = L_recurrence(p5, i, nd)
            for k in range(ctx.dbar):
                vec = product_shifted(
                    rep.B, [s.theta_star(ctx.dbar - h) for h in range(1, k + 1)]) @ ei
                for j in range(ctx.dbar):
                    if vec.entry(ctx.dbar - j - 1, 0) != L[j][k]:
                        return _fail("ladder-eigvec", (p5.astuple(), i, j, k),
                                     "recurrence disagrees with matrix application")
            for j in range(ctx.dbar):
                for k in range(ctx.dbar):
                    try:
                        v = L_closed(p5, i, j, k, nd)
                    except CaseNotApplicable:
                        break
                    if v != L[j][k]:
                        return _fail("ladder-eigvec", (p5.astuple(), i, j, k),
                                     "closed form disagrees with recurrence")
        done += 1
    return CheckResult("ladder-eigvec", True, f"{done} parameter sets, all indices")


def check_marginal_membership(ctx, rng, n):
    done = 0
    attempts = 0
    while done < max(n // 4, 2) and attempts < 20 * n + 40:
        attempts += 1
        p5 = sample_quintuple(ctx, rng)
        try:
            nd = nu_of(p5)
        except NuOutsideField:
            continue
        for i in range(ctx.dbar):
            marginal_test_e(p5, i, nd)  # raises on membership/matrix mismatch
        rep = build_W(p5)
        mu0 = p5.b / p5.lam
        if not is_marginal_weight(rep, mu0):
            return _fail("marginal-membership", p5.astuple(), "base weight not marginal")
        if not marginal_vectors(rep, mu0):
            return _fail("marginal-membership", p5.astuple(), "no marginal vector found")
        done += 1
    return CheckResult("marginal-membership", True, f"{done} sets, both directions")


def check_bridge_vectors(ctx, rng, n):
    q, qi = ctx.q, ctx.q.inv()
    dbar = ctx.dbar

    def S(rep, x):
        return FMat.scalar(ctx, rep.n, x)

    for _ in range(max(n // 4, 2)):
        p5, rep = _sample_w(ctx, rng)
        a, b, c, lam, delta = p5.astuple()
        s = SeqData(p5.quadruple)
        for i in range(dbar):
            if s.varphi(i).is_zero():
                for j in range(i, dbar):
                    if not ((rep.B - S(rep, s.theta_star(j))) @ w_ij(p5, i, j)).is_zero():
                        return _fail("bridge-vectors", (p5.astuple(), i, j), "eigcondition fails")
        for i in range(1, dbar):
            w0i = w_ij(p5, 0, i)
            lhs = (rep.B - S(rep, s.theta_star(i + 1))) @ (
                rep.B - S(rep, s.theta_star(i))) @ (rep.A @ w0i)
            scal = (a / b * lam * q * (q - qi) * (q * q - qi * qi)
                    * (ctx.qpow(i) - ctx.qpow(-i)) * s.varphi(i)
                    * (b * ctx.qpow(i) - b.inv() * ctx.qpow(-i))
                    * (ctx.qpow(-i) - b * lam.inv() / (a * c) * ctx.qpow(i - 1))
                    * (ctx.qpow(-i) - b * c * lam.inv() / a * ctx.qpow(i - 1)))
            if lhs != w_ij(p5, 0, i - 1) * scal:
                return _fail("bridge-vectors", (p5.astuple(), i), "descent scalar mismatch")
        # dim-1 eigenspace spanning when varphi_i = 0 and a hypothesis holds
        for i in range(dbar):
            if not s.varphi(i).is_zero():
                continue
            for j in range(i, dbar):
                phis_ok = all(not s.varphi(h).is_zero() for h in range(i + 1, j + 1))
                tj_ok = all(s.theta_star(j) != s.theta_star(h) for h in range(i, j))
                if not (phis_ok or tj_ok):
                    continue
                sub = rep.B.arr[i:j + 1, i:j + 1, :]
                subm = FMat(ctx, sub) - FMat.scalar(ctx, j - i + 1, s.theta_star(j))
                eig = kernel(subm)
                wij_trunc = FMat(ctx, w_ij(p5, i, j).arr[i:j + 1, :, :])
                if eig.ncols != 1 or rank(hstack([eig, wij_trunc])) != 1:
                    return _fail("bridge-vectors", (p5.astuple(), i, j), "span mismatch")
    return CheckResult("bridge-vectors", True, "descent, eigconditions, spans")


def check_krylov_span(ctx, rng, n):
    found = 0
    attempts = 0
    while found < max(n // 8, 1) and attempts < 20 * n + 40:
        attempts += 1
        p5 = sample_quintuple(ctx, rng)
        if not irr_W_criterion(p5):
            continue
        rep = build_W(p5)
        mu0 = p5.b / p5.lam
        vs = marginal_vectors(rep, mu0)
        if not vs:
            return _fail("krylov-span", p5.astuple(), "irreducible rep lost its marginal vector")
        v = vs[0]
        if krylov_span_dim(rep.A, v) != rep.n:
            return _fail("krylov-span", p5.astuple(), "A-orbit of marginal vector not spanning")
        mu = mu0
        mui = mu.inv()
        span = [v]
        cur = v
        for i in range(1, rep.n + 1):
            cur = rep.A @ cur
            shift = mu * ctx.qpow(2 * i) + mui * ctx.qpow(-2 * i)
            img = (rep.B - FMat.scalar(ctx, rep.n, shift)) @ cur
            if rank(hstack(span + [img])) != rank(hstack(span)):
                return _fail("krylov-span", (p5.astuple(), i), "ladder step leaves span")
            span.append(cur)
        found += 1
    return CheckResult("krylov-span", True, f"{found} irreducible reps")


def check_feasible_roundtrip(ctx, rng, n):
    skipped = 0
    for _ in range(max(n // 2, 4)):
        p4 = sample_quadruple(ctx, rng)
        tgt = feasible_target(p4)
        if not feasible(p4, tgt):
            return _fail("feasible-roundtrip", p4.astuple(), "read-off target not feasible")
        sols = solve_feasible(tgt)
        keys = {quad_key(canon_sign4(s.astuple())) for s in sols}
        if quad_key(canon_sign4(p4.astuple())) not in keys:
            return _fail("feasible-roundtrip", p4.astuple(), "input lost by solver")
        try:
            orbit_keys = s4_orbit(p4).member_keys()
        except NeedsExtension:
            skipped += 1
            continue
        if not keys <= orbit_keys:
            return _fail("feasible-roundtrip", p4.astuple(), "solver output leaves the orbit")
    return CheckResult("feasible-roundtrip", True, f"solver round-trips ({skipped} orbit skips)")


def check_orbit_closure(ctx, rng, n):
    gens = [table1.ROW_BY_LABEL[g] for g in table1.GENERATOR_LABELS]
    for _ in range(max(n // 8, 2)):
        p4 = sample_quadruple(ctx, rng)
        orb = s4_orbit(p4)
        if orb.size > 24:
            return _fail("orbit-closure", p4.astuple(), "more than 24 sign-classes")
        keys = orb.member_keys()
        for member in orb.members:
            for g in gens:
                img = canon_sign4(table1.apply_row(g, member))
                if quad_key(img) not in keys:
                    return _fail("orbit-closure", (p4.astuple(), g[0]), "generator escapes orbit")
    return CheckResult("orbit-closure", True, "generator-stable, size <= 24")


def check_equiv_intertwiner(ctx, rng, n):
    from .modules import Params5 as P5

    for _ in range(max(n // 8, 2)):
        p5 = sample_quintuple(ctx, rng)
        rep = build_W(p5)
        shift = delta_shift(p5)
        quad = p5.quadruple.astuple()
        for row in table1.ROWS[:8]:
            img = table1.apply_row(row, quad)
            al = img[0] / img[3]
            nd = shift - al ** ctx.dbar - al ** (-ctx.dbar)
            other = P5(*img, nd)
            s = intertwiner(rep, build_W(other))
            if s is None or rank(s) != rep.n:
                return _fail("equiv-intertwiner", (p5.astuple(), row[0]), "no invertible map")
        # universal property: w_0 of the neighbor maps forward
        w0 = FMat.column(ctx, [ctx.one] + [ctx.zero] * (ctx.dbar - 1))
        if not check_W_universal(rep, w0, p5):
            return _fail("equiv-intertwiner", p5.astuple(), "w_0 fails universal property")
    return CheckResult("equiv-intertwiner", True, "orbit neighbors are isomorphic")


def check_irr_vn(ctx, rng, n, exhaustive=False):
    for _ in range(n):
        a, b, c = sample_triple(ctx, rng)
        nn = rng.randrange(0, ctx.dbar - 1)
        crit = irr_Vn_criterion(a, b, c, nn)
        orac = burnside_irreducible(build_Vn(a, b, c, nn))
        if crit != orac:
            return _fail("irr-vn-agreement", (a, b, c, nn), f"criterion={crit} oracle={orac}")
    grid = exhaustive and ctx.p <= EXHAUSTIVE_P_CAP
    if grid:
        mism = vn_grid_sweep(ctx.p, ctx.d)
        if mism:
            return _fail("irr-vn-agreement", mism[0], "exhaustive grid mismatch")
    suffix = " + full grid" if grid else (" (grid gated: p > 17)" if exhaustive else "")
    return CheckResult("irr-vn-agreement", True, f"{n} samples{suffix}")


def check_irr_w(ctx, rng, n, exhaustive=False):
    for _ in range(n):
        p5 = sample_quintuple(ctx, rng)
        crit = irr_W_criterion(p5)
        orac = burnside_irreducible(build_W(p5))
        if crit != orac:
            return _fail("irr-w-agreement", p5.astuple(), f"criterion={crit} oracle={orac}")
    grid = exhaustive and ctx.p <= EXHAUSTIVE_P_CAP
    if grid:
        mism = w_grid_sweep(ctx.p, ctx.d)
        if mism:
            return _fail("irr-w-agreement", mism[0], "exhaustive grid mismatch")
    suffix = " + full grid" if grid else (" (grid gated: p > 17)" if exhaustive else "")
    return CheckResult("irr-w-agreement", True, f"{n} samples{suffix}")


def check_closure_pm(ctx, rng, n):
    done = 0
    attempts = 0
    while done < max(n // 8, 2) and attempts < 20 * n + 40:
        attempts += 1
        p5 = sample_quintuple(ctx, rng)
        if not irr_W_criterion(p5):
            continue
        orb = simeq_closure(p5)
        for member in orb.members:
            if not irr_W_criterion(Params5(*member)):
                return _fail("closure-pm-closed", (p5.astuple(), member), "class leaves PM")
        done += 1
    return CheckResult("closure-pm-closed", True, f"{done} closures stay irreducible")


def check_closure_iso(ctx, rng, n):
    done = 0
    attempts = 0
    while done < max(n // 16, 1) and attempts < 20 * n + 40:
        attempts += 1
        p5 = sample_quintuple(ctx, rng)
        if not irr_W_criterion(p5):
            continue
        rep = build_W(p5)
        orb = simeq_closure(p5)
        probe = list(orb.members)[:: max(1, len(orb.members) // 6)]
        for member in probe:
            s = intertwiner(rep, build_W(Params5(*member)))
            if s is None or rank(s) != rep.n:
                return _fail("closure-iso", (p5.astuple(), member), "class member not isomorphic")
        done += 1
    return CheckResult("closure-iso", True, f"{done} closures, sampled members isomorphic")


def check_classify_determinism(ctx, rng, n):
    import json

    seed = rng.randrange(2 ** 63)
    count = max(n // 8, 4)
    r1 = classify_sample(ctx, seed, count)
    r2 = classify_sample(ctx, seed, count)
    b1 = json.dumps(r1, sort_keys=True)
    b2 = json.dumps(r2, sort_keys=True)
    if b1 != b2:
        return _fail("classify-determinism", seed, "same seed, different report")
    if r1["errors"]:
        return _fail("classify-determinism", r1["errors"][0], "classification errors")
    return CheckResult("classify-determinism", True,
                       f"count={count}, {len(r1['classes'])} classes, byte-identical rerun")


# --- exhaustive grids (shared with the acceptance tests) --------------------


def w_grid_chunk(args: tuple[int, int, int]) -> list[tuple]:
    """All (a, b, c, lam, delta) mismatches for one a-value; entries in F_p."""
    p, d, a_val = args
    ctx = ctx_new(p, d)
    mism = []
    units = range(1, p)
    for b in units:
        for c in units:
            for lam in units:
                for delta in range(p):
                    p5 = Params5(ctx.el(a_val), ctx.el(b), ctx.el(c), ctx.el(lam), ctx.el(delta))
                    if irr_W_criterion(p5) != burnside_irreducible(build_W(p5)):
                        mism.append((a_val, b, c, lam, delta))
    return mism


def w_grid_sweep(p: int, d: int, workers: int | None = None) -> list[tuple]:
    """Exhaustive criterion-vs-oracle sweep over (F_p^x)^4 x F_p."""
    from .parallel import pmap

    chunks = pmap(w_grid_chunk, [(p, d, a) for a in range(1, p)], workers)
    return [m for chunk in chunks for m in chunk]


def vn_grid_chunk(args: tuple[int, int, int]) -> list[tuple]:
    p, d, a_val = args
    ctx = ctx_new(p, d)
    mism = []
    units = range(1, p)
    for b in units:
        for c in units:
            for n in range(min(2, ctx.dbar - 1)):
                ta, tb, tc = ctx.el(a_val), ctx.el(b), ctx.el(c)
                if irr_Vn_criterion(ta, tb, tc, n) != burnside_irreducible(
                        build_Vn(ta, tb, tc, n)):
                    mism.append((a_val, b, c, n))
    return mism


def vn_grid_sweep(p: int, d: int, workers: int | None = None) -> list[tuple]:
    """Exhaustive sweep over (F_p^x)^3 and n in {0, 1}."""
    from .parallel import pmap

    chunks = pmap(vn_grid_chunk, [(p, d, a) for a in range(1, p)], workers)
    return [m for chunk in chunks for m in chunk]


# --- the registry and runner ------------------------------------------------


CHECKS: list[tuple[str, Callable]] = [
    ("field-arithmetic", check_field_arithmetic),
    ("poly-roots", check_poly_roots),
    ("relation-verify", check_relation_verify),
    ("vee-involution", check_vee_involution),
    ("weight-ladder", check_weight_ladder),
    ("sequence-periodicity", check_periodicity),
    ("charpoly-corner", check_charpoly),
    ("center-chebyshev", check_center),
    ("ladder-eigvec", check_ladder_eigvec),
    ("marginal-membership", check_marginal_membership),
    ("bridge-vectors", check_bridge_vectors),
    ("krylov-span", check_krylov_span),
    ("feasible-roundtrip", check_feasible_roundtrip),
    ("orbit-closure", check_orbit_closure),
    ("equiv-intertwiner", check_equiv_intertwiner),
    ("closure-pm-closed", check_closure_pm),
    ("closure-iso", check_closure_iso),
    ("classify-determinism", check_classify_determinism),
]


def run_suite(p: int, d: int, seed: int = 0, level: str = "standard",
              emit: Callable[[str], None] = print) -> list[CheckResult]:
    """Run every named check; returns the results (all passed iff suite passed)."""
    if level not in LEVEL_COUNTS:
        raise ValueError(f"unknown level {level!r}")
    ctx = ctx_new(p, d)
    n = LEVEL_COUNTS[level]
    exhaustive = level == "exhaustive"
    results: list[CheckResult] = []
    for name, fn in CHECKS:
        rng = random.Random((seed, name).__repr__())
        res = fn(ctx, rng, n)
        results.append(res)
        _emit_result(res, emit)
    for name, fn in (("irr-vn-agreement", check_irr_vn), ("irr-w-agreement", check_irr_w)):
        rng = random.Random((seed, name).__repr__())
        res = fn(ctx, rng, n, exhaustive=exhaustive)
        results.append(res)
        _emit_result(res, emit)
    return results


def _emit_result(res: CheckResult, emit: Callable[[str], None]) -> None:
    if res.passed:
        emit(f"PASS {res.name}: {res.detail}")
    else:
        emit(f"FAIL {res.name}: {res.detail}; first failing instance: {res.counterexample}")
