"""Exact linear algebra over the session scalars.

All elimination is fraction-free: incoming rows are cleared to integer
carriers (plain ints at a fixed level, integer polynomial tuples in the
generic mode), combined by cross-multiplication, and re-divided by their
content after every step.  No fractions are ever stored inside a row, which
is what keeps the large generic-k systems tractable.

``SpanSolver`` is the incremental engine used on sparse states; ``solve_linear``
is the dense matrix entry point (vectors are columns).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import scalars as sc
from .scalars import RatFunc


class NotInSpanError(ValueError):
    pass


# ---------------------------------------------------------------------------
# carriers: raw integer-like values per scalar domain
# ---------------------------------------------------------------------------


class _IntCarrier:
    """Rows of plain ints (specialized-level sessions)."""

    one = 1

    @staticmethod
    def clear(vals):
        """Integerize to a primitive row; returns (raws, factor) with
        original = factor * raws."""
        den = 1
        for v in vals:
            v = Fraction(v)
            den = den * v.denominator // gcd(den, v.denominator)
        out = [int(Fraction(v) * den) for v in vals]
        g = 0
        for v in out:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            out = [v // g for v in out]
        if g == 0:
            g = 1
        return out, Fraction(g, den)

    mul = staticmethod(lambda a, b: a * b)
    add = staticmethod(lambda a, b: a + b)
    neg = staticmethod(lambda a: -a)

    @staticmethod
    def content_reduce(vals):
        g = 0
        for v in vals:
            g = gcd(g, v)
            if g == 1:
                return vals
        if g > 1:
            return [v // g for v in vals]
        return vals

    @staticmethod
    def gcd2(a, b):
        return gcd(a, b)

    @staticmethod
    def divexact(a, g):
        return a // g

    to_scalar = staticmethod(lambda a: Fraction(a))

    @staticmethod
    def ratio(a, b):
        return Fraction(a, b)


class _PolyCarrier:
    """Rows of integer polynomial tuples (generic sessions)."""

    one = sc.IP_ONE

    @staticmethod
    def clear(vals):
        """Integerize to a primitive row; returns (raws, factor) with
        original = factor * raws."""
        rfs = [
            v
            if isinstance(v, RatFunc)
            else RatFunc.from_int(v)
            if isinstance(v, int)
            else RatFunc.from_fraction(v)
            for v in vals
        ]
        den = sc.IP_ONE
        for v in rfs:
            if v.d != sc.IP_ONE:
                g = sc.ip_gcd(den, v.d)
                den = sc.ip_mul(den, sc.ip_divexact(v.d, g))
        out = []
        for v in rfs:
            if v.d == sc.IP_ONE:
                out.append(sc.ip_mul(v.n, den) if den != sc.IP_ONE else v.n)
            else:
                out.append(sc.ip_mul(v.n, sc.ip_divexact(den, v.d)))
        g = sc.IP_ZERO
        for v in out:
            g = sc.ip_gcd(g, v)
            if g == sc.IP_ONE:
                break
        if g and g != sc.IP_ONE:
            out = [sc.ip_divexact(v, g) if v else v for v in out]
        if not g:
            g = sc.IP_ONE
        return out, RatFunc(g, den)

    mul = staticmethod(sc.ip_mul)
    add = staticmethod(sc.ip_add)
    neg = staticmethod(sc.ip_neg)

    @staticmethod
    def content_reduce(vals):
        g = sc.IP_ZERO
        for v in vals:
            g = sc.ip_gcd(g, v)
            if g == sc.IP_ONE:
                return vals
        if g and g != sc.IP_ONE:
            return [sc.ip_divexact(v, g) if v else v for v in vals]
        return vals

    gcd2 = staticmethod(sc.ip_gcd)
    divexact = staticmethod(sc.ip_divexact)

    @staticmethod
    def to_scalar(a):
        return RatFunc(a, sc.IP_ONE, _raw=True)

    @staticmethod
    def ratio(a, b):
        return RatFunc(a, b)


def carrier_for(domain):
    return _PolyCarrier if domain.is_generic else _IntCarrier


# ---------------------------------------------------------------------------
# sparse rows: sorted lists of (key, raw) pairs
# ---------------------------------------------------------------------------


def _combine(car, rowa, ca, rowb, cb):
    """ca * rowa + cb * rowb over sorted (key, raw) lists."""
    out = []
    ia = ib = 0
    mul = car.mul
    na, nb = len(rowa), len(rowb)
    while ia < na and ib < nb:
        ka, va = rowa[ia]
        kb, vb = rowb[ib]
        if ka < kb:
            out.append((ka, mul(ca, va)))
            ia += 1
        elif kb < ka:
            out.append((kb, mul(cb, vb)))
            ib += 1
        else:
            s = car.add(mul(ca, va), mul(cb, vb))
            if s:
                out.append((ka, s))
            ia += 1
            ib += 1
    while ia < na:
        ka, va = rowa[ia]
        out.append((ka, mul(ca, va)))
        ia += 1
    while ib < nb:
        kb, vb = rowb[ib]
        out.append((kb, mul(cb, vb)))
        ib += 1
    return out


class SpanSolver:
    """Incremental triangular span with relation tags.

    Vectors are sparse mappings key -> scalar with totally ordered keys.
    Inserting a vector either creates a new pivot or yields the exact linear
    relation with the previously inserted vectors.  All stored rows carry
    integer raws reduced by their content.
    """

    def __init__(self, domain):
        self.domain = domain
        self.car = carrier_for(domain)
        self.pivots = {}  # lead key -> (row, tags) with tags: dict index -> raw
        self.count = 0
        self.factors = {}  # insert index -> clearing factor (original = f * raw)

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, row, tags):
        car = self.car
        while row:
            lead, lv = row[0]
            hit = self.pivots.get(lead)
            if hit is None:
                return row, tags
            prow, ptags = hit
            pv = prow[0][1]
            g = car.gcd2(lv, pv)
            ca = car.divexact(pv, g)
            cb = car.neg(car.divexact(lv, g))
            row = _combine(car, row, ca, prow, cb)
            newtags = dict((i, car.mul(ca, t)) for i, t in tags.items())
            for i, t in ptags.items():
                s = newtags.get(i)
                v = car.mul(cb, t)
                s = v if s is None else car.add(s, v)
                if s:
                    newtags[i] = s
                else:
                    newtags.pop(i, None)
            tags = newtags
            vals = [v for _, v in row] + list(tags.values())
            red = car.content_reduce(vals)
            if red is not vals:
                n = len(row)
                row = [(k, red[j]) for j, (k, _) in enumerate(row)]
                tags = dict(zip(tags.keys(), red[n:]))
        return row, tags

    def _to_row(self, vec):
        items = sorted(vec.items())
        raws, factor = self.car.clear([v for _, v in items])
        return [(k, r) for (k, _), r in zip(items, raws) if r], factor

    def insert(self, vec):
        """Insert a vector; returns None when independent, else the relation
        as a dict index -> scalar over previously inserted vectors together
        with this one (index == current count).  The relation annihilates the
        original (uncleared) vectors."""
        idx = self.count
        self.count += 1
        row, factor = self._to_row(vec)
        self.factors[idx] = factor
        tags = {idx: self.car.one}
        row, tags = self._reduce(row, tags)
        if row:
            self.pivots[row[0][0]] = (row, tags)
            return None
        return self._tags_to_relation(tags)

    def probe(self, vec):
        """Reduce without inserting; returns (residual_nonzero, tags, factor).

        When the residual is zero the tags express the cleared vector in the
        stored cleared rows."""
        row, factor = self._to_row(vec)
        tags = {self.count: self.car.one}
        row, tags = self._reduce(row, tags)
        return bool(row), tags, factor

    def express(self, vec):
        """Coordinates of vec over the inserted vectors, or NotInSpanError."""
        nonzero, tags, factor = self.probe(vec)
        if nonzero:
            raise NotInSpanError("vector is not in the span")
        car = self.car
        tself = tags.pop(self.count)
        coords = {}
        for i, t in tags.items():
            c = -car.ratio(t, tself) * factor / self.factors[i]
            if c:
                coords[i] = c
        return coords

    def _tags_to_relation(self, tags):
        car = self.car
        return {
            i: car.to_scalar(t) / self.factors[i] for i, t in tags.items() if t
        }


# ---------------------------------------------------------------------------
# dense entry point (vectors are columns)
# ---------------------------------------------------------------------------


def solve_linear(matrix, mode, domain):
    """Exact kernel or target expression for a dense matrix of scalars.

    ``nullspace``: basis of {x : matrix @ x = 0}, each vector normalized to
    primitive integer entries with the first nonzero entry positive.

    ``express-target``: writes the last column in the span of the others and
    returns the coordinate list; raises NotInSpanError otherwise.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    cols = [
        {i: matrix[i][j] for i in range(nrows) if matrix[i][j]} for j in range(ncols)
    ]
    solver = SpanSolver(domain)
    if mode == "nullspace":
        basis = []
        for j, col in enumerate(cols):
            rel = solver.insert(col)
            if rel is not None:
                vec = [rel.get(i, domain.zero) for i in range(j + 1)]
                vec += [domain.zero] * (ncols - j - 1)
                basis.append(_normalize_vector(vec, domain))
        return basis
    if mode == "express-target":
        if ncols == 0:
            raise ValueError("express-target needs at least one column")
        for col in cols[:-1]:
            solver.insert(col)
        coords = solver.express(cols[-1])
        return [coords.get(i, domain.zero) for i in range(ncols - 1)]
    raise ValueError(f"unknown mode {mode!r}")


def rank(matrix, domain):
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    solver = SpanSolver(domain)
    for j in range(ncols):
        solver.insert({i: matrix[i][j] for i in range(nrows) if matrix[i][j]})
    return solver.rank


def _normalize_vector(vec, domain):
    car = carrier_for(domain)
    raws, _ = car.clear(vec)
    lead = next((r for r in raws if r), None)
    if lead is not None:
        negative = (lead < 0) if not domain.is_generic else (lead[-1] < 0)
        if negative:
            raws = [car.neg(r) for r in raws]
    return [car.to_scalar(r) for r in raws]
