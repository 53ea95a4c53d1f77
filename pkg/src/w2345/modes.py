"""The mode calculus: compute v_n w for arbitrary states v, w.

The recursion peels the leftmost creation factor of each word of v with the
iterate formula

    (a(-m) u)_n = sum_i (-1)^i C(-m, i) ( a(-m-i) u_{n+i} - (-1)^m u_{-m+n-i} a(i) ),

bottoming out at the vacuum (1_n = delta_{n,-1}).  It is written against a
small algebra protocol (apply_gen / gen_weight / mono_weight / word_memo), so
the same engine drives the affine PBW module, the W-algebra spanned by the
normal-form words, and abstract highest-weight modules.

Both infinite sums truncate by weight; the truncation bound is verified by
evaluating one extra term and checking that it vanishes.
"""

from __future__ import annotations

from .scalars import comb_z


class TruncationError(AssertionError):
    pass


def word_weight(alg, word):
    return sum(alg.gen_weight(g) - t - 1 for g, t in word)


def word_apply(alg, word, n, wmono):
    """State (word . vacuum)_n applied to a single target monomial."""
    key = (word, n, wmono)
    memo = alg.word_memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not word:
        out = {wmono: 1} if n == -1 else {}
        memo[key] = out
        return out
    g, t = word[0]
    rest = word[1:]
    wt_rest = word_weight(alg, rest)
    wt_w = alg.mono_weight(wmono)
    out = {}
    # branch 1: a(-m-i) (u_{n+i} w); u_{n+i} w dies once its weight drops
    # below the module floor.
    imax1 = wt_rest + wt_w - n - 1
    for i in range(imax1 + 1):
        sub = word_apply(alg, rest, n + i, wmono)
        if not sub:
            continue
        coef = comb_z(t, i) if i % 2 == 0 else -comb_z(t, i)
        for m2, c2 in sub.items():
            cc = coef * c2
            for m3, c3 in alg.apply_gen(g, t - i, m2).items():
                s = out.get(m3, 0) + cc * c3
                if s:
                    out[m3] = s
                else:
                    del out[m3]
    if imax1 >= -1 and word_apply(alg, rest, n + imax1 + 1, wmono):
        raise TruncationError("branch-1 truncation bound violated")
    # branch 2: -(-1)^m u_{-m+n-i} (a(i) w)
    sign_m = -1 if t % 2 else 1
    imax2 = alg.gen_weight(g) + wt_w - 1
    for i in range(imax2 + 1):
        gw = alg.apply_gen(g, i, wmono)
        if not gw:
            continue
        coef = comb_z(t, i) if i % 2 == 0 else -comb_z(t, i)
        coef = -sign_m * coef
        for m2, c2 in gw.items():
            cc = coef * c2
            for m3, c3 in word_apply(alg, rest, t + n - i, m2).items():
                s = out.get(m3, 0) + cc * c3
                if s:
                    out[m3] = s
                else:
                    del out[m3]
    if imax2 >= -1 and alg.apply_gen(g, imax2 + 1, wmono):
        raise TruncationError("branch-2 truncation bound violated")
    memo[key] = out
    return out


def element_mode(alg, elem, n, state):
    """v_n w for an element dict v (word -> coeff) and a state dict w."""
    out = {}
    for word, cv in elem.items():
        for wmono, cw in state.items():
            c = cv * cw
            if not c:
                continue
            for m, c2 in word_apply(alg, word, n, wmono).items():
                s = out.get(m, 0) + c * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def mode_apply(alg, v, n, w):
    """The state v_n w; inhomogeneous v is handled word by word."""
    return element_mode(alg, v, n, w)


def mode_power_apply(alg, v, n, r, w):
    """(v_n)^r w by iterated application."""
    if r < 0:
        raise ValueError("power must be nonnegative")
    out = w
    for _ in range(r):
        out = element_mode(alg, v, n, out)
    return out
