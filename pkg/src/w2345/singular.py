"""Singular vectors at levels 2..6 and their polynomial shadows.

The basic vector is u0 = f(0)^(k+1) e(-1)^(k+1) |0>, a Heisenberg-commutant
state of weight k+1; u^r = (W3_1)^r u0 for r = 1..3.  At levels 2, 3, 4 the
vector degenerates to a multiple of the weight k+1 generator; at levels 5
and 6 the normal forms and their quotient polynomials feed the ideal
analysis.
"""

from __future__ import annotations


from . import pbw
from .modes import mode_apply, mode_power_apply
from .zhu import ZhuC2


class SingularCheckError(AssertionError):
    pass


def u0_state(ses):
    """f(0)^(k+1) e(-1)^(k+1) |0> at the session level, with the
    annihilation checks h(n) u0 = 0, 0 <= n <= weight."""
    k = ses.level
    if k is None or not 2 <= k <= 6:
        raise ValueError("u0 needs a specialized level 2..6")
    st = {tuple((pbw.E, -1) for _ in range(k + 1)): 1}
    for _ in range(k + 1):
        out = {}
        for mono, c in st.items():
            for m2, c2 in ses.pbw.apply_gen(pbw.F, 0, mono).items():
                s = out.get(m2, 0) + c * c2
                if s:
                    out[m2] = s
                else:
                    del out[m2]
        st = out
    st = pbw.canonical(ses.domain, st)
    wt = pbw.weight(st)
    if wt != k + 1:
        raise SingularCheckError(f"u0 has weight {wt}, expected {k + 1}")
    for n in range(0, wt + 1):
        img = {}
        for mono, c in st.items():
            for m2, c2 in ses.pbw.apply_gen(pbw.H, n, mono).items():
                s = img.get(m2, 0) + c * c2
                if s:
                    img[m2] = s
                else:
                    del img[m2]
        if pbw.canonical(ses.domain, img):
            raise SingularCheckError(f"h({n}) u0 != 0")
    return st


def ur_state(ses, r):
    """(W3_1)^r u0."""
    w3 = ses.primaries()[0]
    return pbw.canonical(
        ses.domain, mode_power_apply(ses.pbw, w3, 1, r, u0_state(ses))
    )


def ur_normal_form(ses, r):
    """Normal form of u^r at weight k+1+r."""
    k = ses.level
    return ses.express(ur_state(ses, r), k + 1 + r)


def theta_parity_u0(ses):
    """Theta eigenvalue of u0; errors when u0 is not an eigenvector."""
    st = u0_state(ses)
    flipped = pbw.canonical(ses.domain, pbw.theta(ses.pbw, st))
    if flipped == st:
        return 1
    if flipped == pbw.canonical(ses.domain, pbw.scale(st, -1)):
        return -1
    raise SingularCheckError("u0 is not a theta eigenvector")


def _integer_primitive(poly):
    """Integer-primitive rescaling; returns (poly, multiplier applied)."""
    norm, content = poly.primitive_integer()
    return norm, 1 / content


def p_polynomials(ses):
    """Zhu-quotient polynomials of u^0..u^3, integer-rescaled.

    Returns (polys, multipliers)."""
    red = ZhuC2(ses)
    polys, muls = [], []
    for r in range(4):
        raw = red.zhu_reduce(ur_normal_form(ses, r))
        norm, mul = _integer_primitive(raw)
        polys.append(norm)
        muls.append(mul)
    return polys, muls


def a_polynomials(ses):
    """C2-quotient polynomials of u^0..u^3, integer-rescaled."""
    red = ZhuC2(ses)
    polys, muls = [], []
    for r in range(4):
        raw = red.c2_reduce(ur_normal_form(ses, r))
        norm, mul = _integer_primitive(raw)
        polys.append(norm)
        muls.append(mul)
    return polys, muls


def degenerate_identity(ses):
    """At levels 2..4 u0 is a multiple of the weight-(k+1) generator;
    returns the scalar."""
    k = ses.level
    if k not in (2, 3, 4):
        raise ValueError("degenerate case is level 2..4")
    st = u0_state(ses)
    gen = ses.generator_state(k - 1)
    mono = next(iter(gen))
    lam = st[mono] / gen[mono]
    if pbw.canonical(ses.domain, pbw.scale(gen, lam)) != st:
        raise SingularCheckError("u0 is not a multiple of the generator")
    return lam


def ideal_span_membership(ses, targets, max_weight=5):
    """Close the span of u0 under generator modes up to max_weight and test
    membership of the target states.

    Mode application is linear, so only independent representatives need
    their images explored."""
    from .linalg import SpanSolver

    dom = ses.domain
    gens = [ses.conformal()[2], *ses.primaries()]
    solvers = {d: SpanSolver(dom) for d in range(1, max_weight + 1)}
    u0 = u0_state(ses)
    solvers[pbw.weight(u0)].insert(u0)
    frontier = [u0]
    while frontier:
        nxt = []
        for st in frontier:
            d = pbw.weight(st)
            for g_state, gw in zip(gens, (2, 3, 4, 5)):
                for n in range(gw + d - 1 - max_weight, gw + d - 1):
                    img = pbw.canonical(dom, mode_apply(ses.pbw, g_state, n, st))
                    d2 = gw + d - n - 1
                    if img and d2 >= 1 and solvers[d2].insert(img) is None:
                        nxt.append(img)
        frontier = nxt
    out = []
    for t in targets:
        d = pbw.weight(t)
        nz, _, _ = solvers[d].probe(t)
        out.append(not nz)
    return out
