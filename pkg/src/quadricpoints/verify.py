"""Bundled identity checks, runnable from the command line.

Each suite returns a list of instance records ``{"id": ..., "ok": ...}``
in a deterministic order; a suite passes when every instance does.  The
suites deliberately re-derive everything through the slow direct
evaluators, so they are small grids, not benchmarks.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import LaurentTail
from .cyclotomic import CycInt
from .expsums import (
    QuadForm,
    arc_integral_closed,
    arc_integral_direct,
    form_exp_sum,
    gauss_sum,
    gauss_sum_prime_power,
    local_factor_closed,
    local_factor_direct,
    twisted_gauss_sum,
    twisted_gauss_sum_prime_power,
    weyl_sum,
)
from .field import FieldCtx
from .formulas import (
    count_circle,
    count_exact,
    morphism_count,
    morphism_count_from_counts,
    phi_degree_sum,
    phi_power_sum,
)
from .oracle import brute_count, brute_morphism_count
from .polyring import (
    Poly,
    enumerate_below,
    enumerate_monic,
    euler_phi,
    irreducibles,
    moebius,
    poly_gcd,
)


def _first_nonsquare(ctx: FieldCtx) -> int:
    return next(u for u in ctx.units() if not ctx.is_square_unit(u))


def _form_family(ctx: FieldCtx, nmax: int):
    """Small deterministic family covering every case tag per n."""
    c = _first_nonsquare(ctx)
    for n in range(1, nmax + 1):
        yield QuadForm(ctx, (1,) * n)
        if n > 1:
            yield QuadForm(ctx, (1,) * (n - 1) + (c,))


def suite_gauss(ctx: FieldCtx, maxdeg: int = 2, maxk: int = 3) -> list[dict]:
    out = []
    for d in range(1, maxdeg + 1):
        for pi in irreducibles(ctx, d):
            for k in range(1, maxk + 1):
                ok = gauss_sum(pi**k) == gauss_sum_prime_power(pi, k)
                out.append({"id": f"tau[{pi},k={k}]", "ok": ok})
    # twisted variants at a degree-one base
    t = Poly.gen(ctx)
    for k in (1, 2):
        r = t**k
        for a in enumerate_below(ctx, k):
            if not poly_gcd(a, r).is_one() or a.is_zero():
                continue
            ok = twisted_gauss_sum(a, r) == twisted_gauss_sum_prime_power(a, t, k)
            out.append({"id": f"twisted[a={a},r={r}]", "ok": ok})
    return out


def suite_local(ctx: FieldCtx, nmax: int = 4, maxdeg: int = 2) -> list[dict]:
    out = []
    forms = list(_form_family(ctx, nmax))
    for f in forms:
        for d in range(0, maxdeg + 1):
            for r in enumerate_monic(ctx, d):
                ok = local_factor_direct(f, r) == local_factor_closed(f, r)
                out.append({"id": f"S_r[{f.coeffs},r={r}]", "ok": ok})
    # multiplicativity over a coprime pair
    t = Poly.gen(ctx)
    r1, r2 = t, t + Poly.one(ctx)
    for f in forms:
        lhs = local_factor_closed(f, r1 * r2)
        rhs = local_factor_closed(f, r1) * local_factor_closed(f, r2)
        out.append({"id": f"S_mult[{f.coeffs}]", "ok": lhs == rhs})
    # product structure of the complete sum
    one = Poly.one(ctx)
    for f in forms:
        if f.n > 3:
            continue
        lhs = form_exp_sum(f, one, r2)
        rhs = CycInt.from_int(ctx.p, 1)
        for ai in f.coeffs:
            rhs = rhs * twisted_gauss_sum(one.scale(ai), r2)
        out.append({"id": f"S_prod[{f.coeffs}]", "ok": lhs == rhs})
    return out


def suite_weyl(ctx: FieldCtx, n: int = 3, pmax: int = 2) -> list[dict]:
    """S(a/r + theta) |r|^n == S_{a,r}(f) S(theta) on admissible points."""
    out = []
    f = QuadForm(ctx, (1,) * n)
    zero = Poly.zero(ctx)
    one = Poly.one(ctx)
    for P in range(1, pmax + 1):
        s_theta_cache: dict[LaurentTail, CycInt] = {}
        for rho in range(1, P + 1):
            for r in enumerate_monic(ctx, rho):
                complete = {
                    a: form_exp_sum(f, a, r)
                    for a in enumerate_below(ctx, rho)
                    if poly_gcd(a, r).is_one()
                }
                tails = [LaurentTail.zero(ctx)]
                if rho + P + 1 <= 2 * P - 1:
                    tails.append(LaurentTail.single(ctx, rho + P + 1, 1))
                tails.append(LaurentTail.single(ctx, 2 * P, 2))  # beyond S's depth
                for tail in tails:
                    if tail not in s_theta_cache:
                        s_theta_cache[tail] = weyl_sum(f, zero, one, tail, P)
                    s_theta = s_theta_cache[tail]
                    for a, s_ar in complete.items():
                        lhs = weyl_sum(f, a, r, tail, P) * (ctx.q ** (n * rho))
                        rhs = s_ar * s_theta
                        out.append(
                            {
                                "id": f"weyl[a={a},r={r},P={P},tail@{tail.min_index()}]",
                                "ok": lhs == rhs,
                            }
                        )
    return out


def suite_arcs(ctx: FieldCtx, nmax: int = 3, pmax: int = 2) -> list[dict]:
    out = []
    for n in range(2, nmax + 1):
        f = QuadForm(ctx, (1,) * n)
        for P in range(1, pmax + 1):
            for rho in range(0, P + 1):
                for r in enumerate_monic(ctx, rho):
                    direct = arc_integral_direct(f, r, P).to_fraction(ctx.q)
                    ok = direct == arc_integral_closed(f, r, P)
                    out.append({"id": f"arc[n={n},r={r},P={P}]", "ok": ok})
    return out


def suite_counts(ctx: FieldCtx, nmax: int = 4, pmax: int = 2, budget: int = 10**8) -> list[dict]:
    out = []
    for f in _form_family(ctx, nmax):
        if f.n < 3:
            continue
        for P in range(1, pmax + 1):
            b = brute_count(f, P, budget)
            ok = b == count_exact(f, P) == count_circle(f, P)
            out.append({"id": f"N[{f.coeffs},P={P}]", "ok": ok})
    return out


def suite_mor(ctx: FieldCtx, nmax: int = 4, pmax: int = 2, budget: int = 10**8) -> list[dict]:
    out = []
    for f in _form_family(ctx, nmax):
        if f.n < 3:
            continue
        for P in range(1, pmax + 1):
            closed = morphism_count(f, P)
            ok = closed == brute_morphism_count(f, P, budget)
            derived = morphism_count_from_counts(
                count_exact(f, P + 1),
                count_exact(f, P),
                count_exact(f, P - 1) if P > 1 else 1,
                ctx.q,
            )
            ok = ok and closed == derived
            out.append({"id": f"mor[{f.coeffs},P={P}]", "ok": ok})
    return out


def suite_phis(ctx: FieldCtx, maxdeg: int = 3, mmax: int = 4) -> list[dict]:
    out = []
    q = ctx.q
    for rho in range(0, maxdeg + 1):
        total = sum(euler_phi(r) for r in enumerate_monic(ctx, rho))
        out.append({"id": f"phi_deg[{rho}]", "ok": total == phi_degree_sum(q, rho)})
    for rho in range(0, maxdeg + 1):
        mu_total = sum(moebius(r) for r in enumerate_monic(ctx, rho))
        expected = 1 if rho == 0 else (-q if rho == 1 else 0)
        out.append({"id": f"mu_deg[{rho}]", "ok": mu_total == expected})
    for signed in (False, True):
        for c in range(0, 4):
            for M in range(0, mmax + 1):
                stratum = Fraction(0)
                for rho in range(M + 1):
                    term = Fraction(phi_degree_sum(q, rho), q ** (rho * c))
                    stratum += -term if (signed and rho % 2) else term
                ok = stratum == phi_power_sum(q, M, c, signed)
                out.append(
                    {"id": f"phi_pow[c={c},M={M},{'signed' if signed else 'plain'}]", "ok": ok}
                )
    return out


SUITES = {
    "gauss": suite_gauss,
    "local": suite_local,
    "weyl": suite_weyl,
    "arcs": suite_arcs,
    "counts": suite_counts,
    "mor": suite_mor,
    "phis": suite_phis,
}
