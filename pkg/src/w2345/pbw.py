"""States of the level-k Weyl module in the PBW basis.

A basis monomial is a flat tuple of (generator, mode) pairs with generator
ids H=0, E=1, F=2 and creation modes <= -1, sorted ascending; this realizes
the words h(-i1)..h(-ip) e(-j1)..e(-jq) f(-m1)..f(-mr)|0> with weakly
decreasing indices inside each block.  A state is a dict monomial -> scalar
(ints may appear mixed with domain scalars inside the engines; canonical()
settles them).
"""

from __future__ import annotations


H, E, F = 0, 1, 2
VACUUM = ()

# [a, b] = _BRACKET[a][b] as (integer coefficient, generator), None when zero.
_BRACKET = (
    (None, (2, E), (-2, F)),
    ((-2, E), None, (1, H)),
    ((2, F), (-1, H), None),
)
# normalized invariant form <a, b>
_FORM = ((2, 0, 0), (0, 0, 1), (0, 1, 0))


def mono_weight(mono):
    return -sum(m for _, m in mono)


def mono_h0(mono):
    """h(0) eigenvalue 2(q - r) of a basis monomial."""
    q = sum(1 for g, _ in mono if g == E)
    r = sum(1 for g, _ in mono if g == F)
    return 2 * (q - r)


def _theta_gen(g):
    return g if g == H else (F if g == E else E)


class PBWAlgebra:
    """Generator-mode action on PBW monomials, with session memo tables."""

    n_gens = 3
    gen_weights = (1, 1, 1)

    def __init__(self, domain):
        self.domain = domain
        self.k = domain.k
        self._gen_memo = {}
        self.word_memo = {}
        self.min_weight = 0

    def gen_weight(self, g):
        return 1

    def mono_weight(self, mono):
        return mono_weight(mono)

    def apply_gen(self, g, n, mono):
        """Normal-ordered state a(n) . mono, a in {h, e, f}."""
        key = (g, n, mono)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {} if n >= 0 else {((g, n),): 1}
            self._gen_memo[key] = out
            return out
        bg, bm = mono[0]
        if n <= -1 and (g < bg or (g == bg and n <= bm)):
            out = {((g, n),) + mono: 1}
            self._gen_memo[key] = out
            return out
        rest = mono[1:]
        out = {}
        inner = self.apply_gen(g, n, rest)
        for m2, c2 in inner.items():
            for m3, c3 in self.apply_gen(bg, bm, m2).items():
                s = out.get(m3, 0) + c2 * c3
                if s:
                    out[m3] = s
                else:
                    del out[m3]
        br = _BRACKET[g][bg]
        if br is not None:
            coef, g2 = br
            for m2, c2 in self.apply_gen(g2, n + bm, rest).items():
                s = out.get(m2, 0) + coef * c2
                if s:
                    out[m2] = s
                else:
                    del out[m2]
        if n + bm == 0:
            ip = _FORM[g][bg]
            if ip:
                s = out.get(rest, 0) + (n * ip) * self.k
                if s:
                    out[rest] = s
                else:
                    del out[rest]
        self._gen_memo[key] = out
        return out


# ---------------------------------------------------------------------------
# state helpers
# ---------------------------------------------------------------------------


def canonical(domain, state):
    """Settle mixed int/scalar coefficients into domain scalars, pruned."""
    out = {}
    for m, c in state.items():
        c = domain.scalar(c)
        if c:
            out[m] = c
    return out


def add_into(acc, state, coeff=1):
    if not coeff:
        return acc
    for m, c in state.items():
        s = acc.get(m, 0) + coeff * c
        if s:
            acc[m] = s
        else:
            del acc[m]
    return acc


def scale(state, coeff):
    if not coeff:
        return {}
    return {m: coeff * c for m, c in state.items()}


def states_equal(domain, a, b):
    return canonical(domain, a) == canonical(domain, b)


def weight(state):
    """Common weight of a nonzero state, or None when inhomogeneous."""
    if not state:
        raise ValueError("the zero state has no weight")
    ws = {mono_weight(m) for m in state}
    return ws.pop() if len(ws) == 1 else None


def h0_eigenvalue(state):
    if not state:
        raise ValueError("the zero state has no h(0) eigenvalue")
    vals = {mono_h0(m) for m in state}
    return vals.pop() if len(vals) == 1 else None


def weight_component(state, d):
    return {m: c for m, c in state.items() if mono_weight(m) == d}


def split_by_weight(state):
    out = {}
    for m, c in state.items():
        out.setdefault(mono_weight(m), {})[m] = c
    return out


def theta(alg, state):
    """Order-2 automorphism h -> -h, e <-> f.

    The image word must be re-normal-ordered: swapping e and f factors
    leaves the word out of PBW order whenever both occur."""
    out = {}
    for mono, c in state.items():
        hcount = sum(1 for g, _ in mono if g == H)
        if hcount % 2:
            c = -c
        img = {(): 1}
        for g, t in reversed(mono):
            g2 = _theta_gen(g)
            nxt = {}
            for m2, c2 in img.items():
                for m3, c3 in alg.apply_gen(g2, t, m2).items():
                    s = nxt.get(m3, 0) + c2 * c3
                    if s:
                        nxt[m3] = s
                    else:
                        del nxt[m3]
            img = nxt
        add_into(out, img, c)
    return out


def theta_projection(alg, domain, state, parity):
    """Component of a state in the +1 or -1 eigenspace of theta."""
    half = domain.scalar(1) / 2
    out = {m: half * c for m, c in state.items()}
    for m, c in theta(alg, state).items():
        s = out.get(m, 0) + (half * c if parity > 0 else -(half * c))
        if s:
            out[m] = s
        else:
            del out[m]
    return out


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _partitions(n, maxpart=None):
    """Weakly decreasing positive partitions of n."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_monomials(d, h0=None):
    """All PBW monomials of weight d, canonically sorted; optional h(0) filter."""
    out = []
    for dh in range(d + 1):
        for de in range(d - dh + 1):
            df = d - dh - de
            for ph in _partitions(dh):
                for pe in _partitions(de):
                    for pf in _partitions(df):
                        if h0 is not None and 2 * (len(pe) - len(pf)) != h0:
                            continue
                        mono = (
                            tuple((H, -i) for i in ph)
                            + tuple((E, -j) for j in pe)
                            + tuple((F, -m) for m in pf)
                        )
                        out.append(mono)
    out.sort()
    return out


def dim_weight_space(d):
    """Number of PBW monomials of weight d (3-colored partitions)."""
    if d < 0:
        raise ValueError("weight must be nonnegative")
    ways = [1] + [0] * d
    for n in range(1, d + 1):
        for _ in range(3):
            for j in range(n, d + 1):
                ways[j] += ways[j - n]
    return ways[d]


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------


def parse_state(text, domain):
    from . import exprs

    return exprs.parse_pbw(text, domain)


def format_state(state, domain):
    from . import exprs

    return exprs.format_pbw(canonical(domain, state), domain)
