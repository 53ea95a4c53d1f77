"""The commutant W(2,3,4,5) machinery.

Builds the conformal vectors and the weight-3/4/5 primaries inside the
commutant of the Heisenberg modes, enumerates and expands normal-form words
in the four generators, expresses states against the normal-form basis with
the canonical eliminations, computes the full generator product (OPE) table,
and extracts the null fields.
"""

from __future__ import annotations

from . import pbw
from .linalg import NotInSpanError, SpanSolver
from .modes import element_mode, mode_apply
from .scalars import comb_z, domain as make_domain

GW, G3, G4, G5 = 0, 1, 2, 3
NF_GEN_WEIGHTS = (2, 3, 4, 5)
NF_NAMES = ("w", "W3", "W4", "W5")

# Monomials removed from the normal-form spanning set so that the remainder
# is a basis; weight 10 lists the even-sector choices, the odd sector at
# weight 10 is resolved greedily in canonical order.
ELIMINATED = {
    8: (
        ((G3, -2), (G3, -2)),
        ((G3, -1), (G4, -2)),
    ),
    9: (
        ((G3, -3), (G3, -2)),
        ((G3, -2), (G4, -2)),
        ((G3, -1), (G4, -3)),
        ((G3, -1), (G5, -2)),
    ),
    10: (
        ((GW, -1), (G3, -2), (G3, -2)),
        ((G3, -3), (G3, -3)),
        ((G4, -2), (G4, -2)),
        ((G3, -2), (G5, -2)),
        ((G3, -1), (G5, -3)),
    ),
}


def nf_weight(mono):
    return sum(NF_GEN_WEIGHTS[g] - t - 1 for g, t in mono)


def nf_parity(mono):
    """Theta eigenvalue (-1)^(q+s) of a normal-form monomial."""
    odd = sum(1 for g, _ in mono if g in (G3, G5))
    return -1 if odd % 2 else 1


def nf_element_weight(elem):
    ws = {nf_weight(m) for m in elem}
    if len(ws) > 1:
        return None
    return ws.pop() if ws else None


def _partitions_min(n, minpart, maxpart=None):
    """Weakly decreasing partitions of n with parts >= minpart."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), minpart - 1, -1):
        for rest in _partitions_min(n - first, minpart, first):
            yield (first,) + rest


def enumerate_nf(d):
    """All normal-form monomials of weight d, canonically sorted.

    A factor x_{-j} of the weight-w generator x contributes w + j - 1, so a
    generator block is a partition into parts >= w."""
    out = []

    def rec(gen, remaining, acc):
        if gen == 4:
            if remaining == 0:
                out.append(tuple(acc))
            return
        w0 = NF_GEN_WEIGHTS[gen]
        for dg in range(0, remaining + 1):
            for parts in _partitions_min(dg, w0):
                block = tuple((gen, w0 - 1 - p) for p in parts)
                rec(gen + 1, remaining - dg, acc + list(block))

    rec(0, d, [])
    return sorted(out)


def _table_commutator(alg, g, t, b, s, rest):
    """[g_t, b_s] applied to the monomial rest, modes expanded from the
    product table through the commutator formula
    [u_m, v_n] = sum_i C(m, i) (u_i v)_{m+n-i}."""
    out = {}
    if g <= b:
        x, y, tm, sign = g, b, t, 1
    else:
        x, y, tm, sign = b, g, s, -1
    for i in range(NF_GEN_WEIGHTS[x] + NF_GEN_WEIGHTS[y]):
        prod = alg.table.get((x, y, i))
        if not prod:
            continue
        c = comb_z(tm, i) * sign
        if not c:
            continue
        sub = element_mode(alg, prod, t + s - i, {rest: 1})
        for m2, c2 in sub.items():
            v = out.get(m2, 0) + c * c2
            if v:
                out[m2] = v
            else:
                del out[m2]
    return out


class WAlgebra:
    """Abstract algebra on normal-form words, driven by the product table."""

    n_gens = 4

    def __init__(self, dom, table):
        self.domain = dom
        self.table = table  # (x, y, i) -> element dict for x <= y
        self._gen_memo = {}
        self.word_memo = {}
        self.min_weight = 0

    def gen_weight(self, g):
        return NF_GEN_WEIGHTS[g]

    def mono_weight(self, mono):
        return nf_weight(mono)

    def apply_gen(self, g, t, mono):
        key = (g, t, mono)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {} if t >= 0 else {((g, t),): 1}
            self._gen_memo[key] = out
            return out
        bg, bm = mono[0]
        if t <= -1 and (g < bg or (g == bg and t <= bm)):
            out = {((g, t),) + mono: 1}
            self._gen_memo[key] = out
            return out
        rest = mono[1:]
        out = {}
        for m2, c2 in self.apply_gen(g, t, rest).items():
            for m3, c3 in self.apply_gen(bg, bm, m2).items():
                s = out.get(m3, 0) + c2 * c3
                if s:
                    out[m3] = s
                else:
                    del out[m3]
        for m2, c2 in _table_commutator(self, g, t, bg, bm, rest).items():
            s = out.get(m2, 0) + c2
            if s:
                out[m2] = s
            else:
                del out[m2]
        self._gen_memo[key] = out
        return out


class HWModule:
    """Abstract highest-weight module over the W-algebra words.

    The ground vector is annihilated by every weight-lowering mode, carries
    the given eigenvalues under the zero modes L(0), W3(0), W4(0), W5(0),
    and is extended freely by the creation modes.
    """

    def __init__(self, walg, eigenvalues):
        self.walg = walg
        self.table = walg.table
        self.domain = walg.domain
        self.eigen = tuple(eigenvalues)  # indexed by generator id
        self._gen_memo = {}
        self.word_memo = {}
        self.min_weight = 0

    def gen_weight(self, g):
        return NF_GEN_WEIGHTS[g]

    def mono_weight(self, mono):
        return nf_weight(mono)

    def apply_gen(self, g, t, mono):
        key = (g, t, mono)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        w0 = NF_GEN_WEIGHTS[g]
        if not mono:
            if t >= w0:
                out = {}
            elif t == w0 - 1:
                ev = self.eigen[g]
                out = {(): ev} if ev else {}
            else:
                out = {((g, t),): 1}
            self._gen_memo[key] = out
            return out
        bg, bm = mono[0]
        if t <= w0 - 2 and (g < bg or (g == bg and t <= bm)):
            out = {((g, t),) + mono: 1}
            self._gen_memo[key] = out
            return out
        rest = mono[1:]
        out = {}
        for m2, c2 in self.apply_gen(g, t, rest).items():
            for m3, c3 in self.apply_gen(bg, bm, m2).items():
                s = out.get(m3, 0) + c2 * c3
                if s:
                    out[m3] = s
                else:
                    del out[m3]
        for m2, c2 in _table_commutator(self, g, t, bg, bm, rest).items():
            s = out.get(m2, 0) + c2
            if s:
                out[m2] = s
            else:
                del out[m2]
        self._gen_memo[key] = out
        return out


class _NFBasis:
    __slots__ = ("weight", "monos", "eliminated", "solver", "idx2mono", "rank")

    def __init__(self, weight, monos, eliminated, solver, idx2mono):
        self.weight = weight
        self.monos = monos
        self.eliminated = eliminated
        self.solver = solver
        self.idx2mono = idx2mono
        self.rank = len(idx2mono)


class Session:
    """One computation session: fixed scalar mode plus all caches."""

    def __init__(self, level=None):
        self.domain = make_domain(level)
        self.level = level
        self.pbw = pbw.PBWAlgebra(self.domain)
        self._gen_states = None
        self._conformal = None
        self._nf_bases = {}
        self._ope = None
        self._sc_table = None
        self._walg = None

    # -- generators ----------------------------------------------------------

    def conformal(self):
        """(omega_aff, omega_gamma, omega) as PBW states."""
        if self._conformal is None:
            dom = self.domain
            k = dom.k
            c_aff = dom.one / (2 * (k + 2))
            w_aff = {
                ((pbw.H, -2),): -c_aff,
                ((pbw.H, -1), (pbw.H, -1)): c_aff / 2,
                ((pbw.E, -1), (pbw.F, -1)): 2 * c_aff,
            }
            w_gam = {((pbw.H, -1), (pbw.H, -1)): dom.one / (4 * k)}
            omega = dict(w_aff)
            pbw.add_into(omega, w_gam, -1)
            self._conformal = (w_aff, w_gam, pbw.canonical(dom, omega))
        return self._conformal

    def primaries(self):
        """The weight 3, 4, 5 primary generators as PBW states."""
        if self._gen_states is None:
            from . import reference

            dom = self.domain
            w3 = pbw.parse_state(reference.W3_TEXT, dom)
            w4 = pbw.parse_state(reference.W4_TEXT, dom)
            w5 = pbw.parse_state(reference.W5_TEXT, dom)
            self._gen_states = (self.conformal()[2], w3, w4, w5)
        return self._gen_states[1:]

    def generator_state(self, g):
        """PBW state of generator id (0=omega, 1..3 = W3..W5)."""
        self.primaries()
        return self._gen_states[g]

    # -- commutant -----------------------------------------------------------

    def commutant_weight_space(self, d):
        """Basis of {v of weight d : h(m) v = 0 for m >= 0}."""
        monos = pbw.enumerate_monomials(d, h0=0)
        cols = []
        for mono in monos:
            col = {}
            for m in range(0, d + 1):
                for m2, c in self.pbw.apply_gen(pbw.H, m, mono).items():
                    col[(m, m2)] = col.get((m, m2), 0) + c
            cols.append({key: c for key, c in col.items() if c})
        solver = SpanSolver(self.domain)
        basis = []
        for j, col in enumerate(cols):
            rel = solver.insert(col)
            if rel is not None:
                state = {monos[i]: c for i, c in rel.items() if c}
                basis.append(pbw.canonical(self.domain, state))
        return basis

    def find_primary(self, d):
        """The unique primary state of weight d in the commutant, scaled to
        the canonical generator; returns (state, scalar multiple found)."""
        basis = self.commutant_weight_space(d)
        omega = self.conformal()[2]
        cols = []
        for v in basis:
            col = {}
            for n in range(2, d + 1):
                for m2, c in element_mode(self.pbw, omega, n, v).items():
                    col[(n, m2)] = col.get((n, m2), 0) + c
            cols.append({key: c for key, c in col.items() if c})
        solver = SpanSolver(self.domain)
        sols = []
        for j, col in enumerate(cols):
            rel = solver.insert(col)
            if rel is not None:
                sols.append(rel)
        if len(sols) != 1:
            raise ValueError(
                f"primary space at weight {d} has dimension {len(sols)}, not 1"
            )
        state = {}
        for i, c in sols[0].items():
            pbw.add_into(state, basis[i], c)
        state = pbw.canonical(self.domain, state)
        ref = self.generator_state(d - 2)
        mono = next(iter(ref))
        lam = ref[mono] / state[mono]
        scaled = pbw.canonical(self.domain, pbw.scale(state, lam))
        if scaled != ref:
            raise ValueError(f"weight-{d} primary is not proportional to the generator")
        return scaled, lam

    # -- normal form ---------------------------------------------------------

    def nf_expand(self, mono):
        """PBW expansion of a normal-form monomial."""
        state = {(): 1}
        for g, t in reversed(mono):
            state = element_mode(self.pbw, self.generator_state(g), t, state)
        return state

    def nf_expand_element(self, elem):
        out = {}
        for mono, c in elem.items():
            pbw.add_into(out, self.nf_expand(mono), c)
        return out

    def _nf_basis(self, d):
        nb = self._nf_bases.get(d)
        if nb is not None:
            return nb
        monos = enumerate_nf(d)
        fixed = set(ELIMINATED.get(d, ()))
        solver = SpanSolver(self.domain)
        idx2mono = {}
        eliminated = list(ELIMINATED.get(d, ()))
        for mono in monos:
            if mono in fixed:
                continue
            rel = solver.insert(self.nf_expand(mono))
            if rel is None:
                idx2mono[solver.count - 1] = mono
            else:
                if d <= 9:
                    raise AssertionError(
                        f"unexpected dependency at weight {d}: {mono}"
                    )
                eliminated.append(mono)
        nb = _NFBasis(d, monos, tuple(eliminated), solver, idx2mono)
        self._nf_bases[d] = nb
        return nb

    def express(self, state, d=None):
        """Coordinates of a PBW state over the normal-form basis.

        Raises NotInSpanError when the state is outside the algebra span.
        """
        state = pbw.canonical(self.domain, state)
        if not state:
            return {}
        if d is None:
            d = pbw.weight(state)
            if d is None:
                raise ValueError("state is not weight-homogeneous")
        nb = self._nf_basis(d)
        coords = nb.solver.express(state)
        return {nb.idx2mono[i]: c for i, c in coords.items() if c}

    # -- products ------------------------------------------------------------

    def ope_entry(self, i, j, n):
        """W^i_n W^j expressed over the normal-form basis."""
        vi = self.generator_state(i - 2)
        vj = self.generator_state(j - 2)
        prod = mode_apply(self.pbw, vi, n, vj)
        prod = pbw.canonical(self.domain, prod)
        if not prod:
            return {}
        return self.express(prod, i + j - 1 - n)

    def ope_table(self):
        """All products W^i_n W^j, 3 <= i <= j <= 5, 0 <= n <= i+j-1."""
        if self._ope is None:
            table = {}
            for i in range(3, 6):
                for j in range(i, 6):
                    for n in range(0, i + j):
                        table[(i, j, n)] = self.ope_entry(i, j, n)
            self._ope = table
        return self._ope

    def structure_constants(self):
        """Product table over generator ids, including the omega rows."""
        if self._sc_table is None:
            table = {}
            omega = self.conformal()[2]
            for y in range(4):
                vy = self.generator_state(y)
                for i in range(0, 2 + NF_GEN_WEIGHTS[y]):
                    prod = mode_apply(self.pbw, omega, i, vy)
                    prod = pbw.canonical(self.domain, prod)
                    wt = 2 + NF_GEN_WEIGHTS[y] - 1 - i
                    table[(GW, y, i)] = self.express(prod, wt) if prod else {}
            ope = self.ope_table()
            for (i, j, n), elem in ope.items():
                table[(i - 2, j - 2, n)] = elem
            self._sc_table = table
        return self._sc_table

    def walg(self):
        """The abstract algebra on normal-form words."""
        if self._walg is None:
            self._walg = WAlgebra(self.domain, self.structure_constants())
        return self._walg

    # -- null fields -----------------------------------------------------------

    def nf_dimensions(self, d):
        """(number of normal-form monomials, rank of their span) at weight d."""
        nb = self._nf_basis(d)
        return len(nb.monos), nb.rank

    def null_fields(self, d, parity=None):
        """Null combinations at weight d, one per eliminated monomial.

        Each relation is normalized to coefficient 1 on its eliminated
        monomial; the expansion of every returned element is zero.
        """
        nb = self._nf_basis(d)
        out = []
        for x in nb.eliminated:
            if parity is not None and nf_parity(x) != parity:
                continue
            coords = self.express(self.nf_expand(x), d)
            rel = {x: self.domain.one}
            for m, c in coords.items():
                rel[m] = -c
            out.append(rel)
        return out

    def null_field_for(self, mono):
        """The null relation with coefficient 1 on the given monomial."""
        d = nf_weight(mono)
        for rel in self.null_fields(d):
            if mono in rel and rel[mono] == self.domain.one:
                return rel
        raise KeyError(f"no null field anchored at {mono}")

    # -- text ------------------------------------------------------------------

    def parse_nf(self, text):
        from . import exprs

        return exprs.parse_nf(text, self.domain)

    def format_nf(self, elem):
        from . import exprs

        return exprs.format_nf(elem, self.domain)
