import pytest

from w2345 import exprs, pbw, reference, walgebra
from w2345.linalg import NotInSpanError
from w2345.modes import mode_apply
from w2345.walgebra import G3, G4, G5, GW, enumerate_nf, nf_parity, nf_weight


def test_conformal_examples(gses):
    d = gses.domain
    alg = gses.pbw
    waff, wgam, om = gses.conformal()
    assert pbw.canonical(d, mode_apply(alg, om, 1, om)) == pbw.canonical(
        d, pbw.scale(om, 2)
    )
    got = pbw.canonical(d, mode_apply(alg, om, 3, om))
    assert got == pbw.canonical(d, {(): d.parse("(k-1)/(k+2)")})
    assert not pbw.canonical(d, mode_apply(alg, wgam, 0, om))


def test_primary_conditions(gses):
    d = gses.domain
    alg = gses.pbw
    om = gses.conformal()[2]
    for wt, W in zip((3, 4, 5), gses.primaries()):
        assert pbw.canonical(d, mode_apply(alg, om, 1, W)) == pbw.canonical(
            d, pbw.scale(W, wt)
        )
        for n in range(2, wt + 2):
            assert not pbw.canonical(d, mode_apply(alg, om, n, W))
        for m in range(0, wt + 1):
            img = {}
            for mono, c in W.items():
                pbw.add_into(img, alg.apply_gen(pbw.H, m, mono), c)
            assert not pbw.canonical(d, img)


def test_commutant_dimensions(gses):
    assert len(gses.commutant_weight_space(1)) == 0
    assert len(gses.commutant_weight_space(3)) == 2
    assert len(gses.commutant_weight_space(4)) == 4
    assert len(gses.commutant_weight_space(5)) == 6


def test_find_primary(gses):
    for d in (3, 4, 5):
        state, lam = gses.find_primary(d)
        assert pbw.canonical(gses.domain, state) == pbw.canonical(
            gses.domain, gses.generator_state(d - 2)
        )
        assert lam


def test_enumerate_nf_counts():
    expected = {0: 1, 1: 0, 2: 1, 3: 2, 4: 4, 5: 6, 6: 11, 7: 16, 8: 29, 9: 44, 10: 72}
    for d, n in expected.items():
        assert len(enumerate_nf(d)) == n, d


def test_nf_weight_and_parity():
    mono = ((GW, -1), (G3, -2), (G5, -1))
    assert nf_weight(mono) == 2 + 4 + 5
    assert nf_parity(mono) == 1
    assert nf_parity(((G3, -2), (G3, -2))) == 1
    assert nf_parity(((G3, -1), (G4, -2))) == -1


def test_expand_examples(gses):
    d = gses.domain
    om = gses.conformal()[2]
    assert pbw.canonical(d, gses.nf_expand(((GW, -1),))) == om
    assert pbw.canonical(d, gses.nf_expand(((G3, -1),))) == pbw.canonical(
        d, gses.primaries()[0]
    )
    got = pbw.canonical(d, gses.nf_expand(((GW, -1), (GW, -1))))
    want = pbw.canonical(d, mode_apply(gses.pbw, om, -1, om))
    assert got == want


def test_expand_parity_sector(gses):
    d = gses.domain
    alg = gses.pbw
    for mono in enumerate_nf(5):
        st = pbw.canonical(d, gses.nf_expand(mono))
        flipped = pbw.canonical(d, pbw.theta(alg, st))
        want = st if nf_parity(mono) > 0 else pbw.canonical(d, pbw.scale(st, -1))
        assert flipped == want


def test_express_examples(gses):
    d = gses.domain
    w3 = gses.primaries()[0]
    prod = mode_apply(gses.pbw, w3, 3, w3)
    got = gses.express(prod, 2)
    want = exprs.parse_nf(reference.OPE_TEXT[(3, 3, 3)], d)
    assert {m: d.scalar(c) for m, c in got.items()} == want
    with pytest.raises(NotInSpanError):
        gses.express({((pbw.E, -1),): d.one}, 1)


def test_express_expand_identity(gses):
    d = gses.domain
    nb = gses._nf_basis(6)
    for mono in nb.monos:
        coords = gses.express(gses.nf_expand(mono), 6)
        assert coords == {mono: d.one}


def test_ope_spot_entries(gses):
    d = gses.domain
    for key in ((3, 4, 3), (3, 5, 2), (5, 5, 9), (3, 3, 1)):
        got = gses.ope_entry(*key)
        want = exprs.parse_nf(reference.OPE_TEXT[key], d)
        assert {m: d.scalar(c) for m, c in got.items() if d.scalar(c)} == want


def test_generation_by_w3(gses):
    # W3_3 W3 spans the omega direction, W3_1 W3 reaches W4, W3_1 W4
    # reaches W5, all with nonzero generic coefficients
    d = gses.domain
    t = gses.ope_table()
    assert t[(3, 3, 3)].get(((GW, -1),))
    assert t[(3, 3, 1)].get(((G4, -1),)) == d.parse("(36*k*(2*k+3))/(16*k+17)")
    assert t[(3, 4, 1)].get(((G5, -1),))


def test_w3_m1_u0_matches_table(gses):
    # spec example: the displayed expression for W3_1 W3 term by term
    d = gses.domain
    got = gses.ope_entry(3, 3, 1)
    assert got[((GW, -3),)] == d.parse("-(162*k^3*(k-2)*(k+2)*(3*k+4))/(16*k+17)")
    assert got[((GW, -1), (GW, -1))] == d.parse(
        "(288*k^3*(k-2)*(k+2)^2*(3*k+4))/(16*k+17)"
    )
    assert got[((G4, -1),)] == d.parse("(36*k*(2*k+3))/(16*k+17)")


def test_weight8_structure(gses):
    total, rank = gses.nf_dimensions(8)
    assert (total, rank) == (29, 27)
    rels = gses.null_fields(8)
    assert len(rels) == 2
    assert {nf_parity(m) for rel in rels for m in rel} == {1, -1}
    for rel in rels:
        parities = {nf_parity(m) for m in rel}
        assert len(parities) == 1
        exp = pbw.canonical(gses.domain, gses.nf_expand_element(rel))
        assert not exp


def test_weight8_17_even_12_odd():
    monos = enumerate_nf(8)
    even = [m for m in monos if nf_parity(m) > 0]
    assert len(even) == 17 and len(monos) - len(even) == 12
