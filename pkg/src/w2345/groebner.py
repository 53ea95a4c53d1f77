"""Buchberger Groebner bases over exact rationals in few variables.

Plain Buchberger with the coprime-leading-term and chain criteria, full
reduction, and a final inter-reduction; no modular shortcuts.  Coefficients
are Fractions throughout (the ideals of interest live at a fixed level).
"""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly


class MonomialOrder:
    """Total order on exponent tuples: lex / grlex / grevlex with an
    explicit variable precedence (most significant first)."""

    def __init__(self, kind, precedence):
        if kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.precedence = tuple(precedence)

    def for_vars(self, vars):
        idx = tuple(vars.index(name) for name in self.precedence)
        if self.kind == "lex":
            return lambda e: tuple(e[i] for i in idx)
        if self.kind == "grlex":
            return lambda e: (sum(e),) + tuple(e[i] for i in idx)
        return lambda e: (sum(e),) + tuple(-e[i] for i in reversed(idx))

    def __repr__(self):
        return f"MonomialOrder({self.kind}, {self.precedence})"


def lex_order(vars):
    return MonomialOrder("lex", vars)


def _lead(terms, key):
    return max(terms, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce_full(terms, basis, key):
    """Fully reduce a term dict against a list of (lt, lc, terms) entries."""
    out = {}
    work = dict(terms)
    while work:
        m = _lead(work, key)
        c = work[m]
        for lt, lc, g in basis:
            if _divides(lt, m):
                q = _quot(m, lt)
                f = c / lc
                for m2, c2 in g.items():
                    mm = tuple(x + y for x, y in zip(m2, q))
                    s = work.get(mm, Fraction(0)) - f * c2
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            out[m] = c
            del work[m]
    return out


class GroebnerBasis:
    """Reduced basis; elements are integer-primitive with positive leading
    coefficient, sorted by increasing leading term."""

    def __init__(self, vars, order, elements):
        self.vars = vars
        self.order = order
        self.elements = elements

    def key(self):
        return self.order.for_vars(self.vars)

    def leading_terms(self):
        key = self.key()
        return [_lead(g.terms, key) for g in self.elements]

    def normal_form(self, poly):
        key = self.key()
        basis = [
            (_lead(g.terms, key), g.terms[_lead(g.terms, key)], g.terms)
            for g in self.elements
        ]
        return MultiPoly(self.vars, _reduce_full(poly.terms, basis, key))


def buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("empty generator list")
    vars = gens[0].vars
    key = order.for_vars(vars)

    basis = []  # list of term dicts, monic

    def lt(g):
        return _lead(g, key)

    def add(terms):
        m = lt(terms)
        lc = terms[m]
        basis.append({e: c / lc for e, c in terms.items()})

    for g in gens:
        red = _reduce_full(
            {e: Fraction(c) for e, c in g.terms.items()},
            [(lt(b), Fraction(1), b) for b in basis],
            key,
        )
        if red:
            add(red)

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # normal selection: smallest lcm in the order
        pairs.sort(key=lambda p: key(_lcm(lt(basis[p[0]]), lt(basis[p[1]]))))
        i, j = pairs.pop(0)
        lti, ltj = lt(basis[i]), lt(basis[j])
        lcm = _lcm(lti, ltj)
        if all(a + b == c for a, b, c in zip(lti, ltj, lcm)):
            continue  # coprime leading terms
        # chain criterion
        skip = False
        for l, bl in enumerate(basis):
            if l in (i, j):
                continue
            if _divides(lt(bl), lcm):
                pi = (min(i, l), max(i, l))
                pj = (min(j, l), max(j, l))
                if pi not in pairs and pj not in pairs:
                    skip = True
                    break
        if skip:
            continue
        qi, qj = _quot(lcm, lti), _quot(lcm, ltj)
        s = {}
        for m, c in basis[i].items():
            mm = tuple(x + y for x, y in zip(m, qi))
            s[mm] = s.get(mm, Fraction(0)) + c
        for m, c in basis[j].items():
            mm = tuple(x + y for x, y in zip(m, qj))
            v = s.get(mm, Fraction(0)) - c
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        red = _reduce_full(s, [(lt(b), Fraction(1), b) for b in basis], key)
        if red:
            add(red)
            new = len(basis) - 1
            pairs.extend((i2, new) for i2 in range(new))

    # inter-reduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = [
                (lt(b), Fraction(1), b) for j2, b in enumerate(basis) if j2 != i
            ]
            red = _reduce_full(basis[i], others, key)
            if not red:
                basis.pop(i)
                changed = True
                break
            m = lt(red)
            red = {e: c / red[m] for e, c in red.items()}
            if red != basis[i]:
                basis[i] = red
                changed = True

    out = []
    for b in sorted(basis, key=lambda b: key(lt(b))):
        poly, _ = MultiPoly(vars, dict(b)).primitive_integer()
        m = lt(poly.terms)
        if poly.terms[m] < 0:
            poly = -poly
        out.append(poly)
    return GroebnerBasis(vars, order, out)


def quotient_dimension(gb):
    """Number of standard monomials, or None when infinite."""
    lts = gb.leading_terms()
    nv = len(gb.vars)
    maxdeg = []
    for v in range(nv):
        pures = [e[v] for e in lts if sum(e) == e[v]]
        if not pures:
            return None
        maxdeg.append(min(pures))
    count = 0

    def rec(v, exp):
        nonlocal count
        if v == nv:
            if not any(_divides(l, tuple(exp)) for l in lts):
                count += 1
            return
        for d in range(maxdeg[v]):
            exp.append(d)
            rec(v + 1, exp)
            exp.pop()

    rec(0, [])
    return count


def standard_monomials(gb):
    lts = gb.leading_terms()
    nv = len(gb.vars)
    maxdeg = []
    for v in range(nv):
        pures = [e[v] for e in lts if sum(e) == e[v]]
        if not pures:
            raise ValueError("quotient is infinite dimensional")
        maxdeg.append(min(pures))
    out = []

    def rec(v, exp):
        if v == nv:
            e = tuple(exp)
            if not any(_divides(l, e) for l in lts):
                out.append(e)
            return
        for d in range(maxdeg[v]):
            exp.append(d)
            rec(v + 1, exp)
            exp.pop()

    rec(0, [])
    return sorted(out)


def point_membership(polys, point):
    """True when every polynomial vanishes at the point (a tuple matching
    the polynomial variables)."""
    for p in polys:
        if p.evaluate(point) != 0:
            return False
    return True


def radical_multiplicity_check(gb, points):
    """True when the given points are pairwise distinct, all lie in the
    variety, and are as many as the quotient dimension (which forces the
    quotient to be semisimple)."""
    dim = quotient_dimension(gb)
    if dim is None or dim != len(points):
        return False
    if len(set(points)) != len(points):
        return False
    return all(point_membership(gb.elements, pt) for pt in points)


def spoly_reductions_vanish(gb):
    """Buchberger criterion on the finished basis."""
    key = gb.key()
    els = gb.elements
    for j in range(len(els)):
        for i in range(j):
            ti = _lead(els[i].terms, key)
            tj = _lead(els[j].terms, key)
            lcm = _lcm(ti, tj)
            qi, qj = _quot(lcm, ti), _quot(lcm, tj)
            ci = els[i].terms[ti]
            cj = els[j].terms[tj]
            s = {}
            for m, c in els[i].terms.items():
                mm = tuple(x + y for x, y in zip(m, qi))
                s[mm] = s.get(mm, Fraction(0)) + Fraction(c) / ci
            for m, c in els[j].terms.items():
                mm = tuple(x + y for x, y in zip(m, qj))
                v = s.get(mm, Fraction(0)) - Fraction(c) / cj
                if v:
                    s[mm] = v
                else:
                    s.pop(mm, None)
            if gb.normal_form(MultiPoly(gb.vars, s)):
                return False
    return True
