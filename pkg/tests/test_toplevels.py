from fractions import Fraction

from w2345 import reference, toplevels


def test_closed_form_examples():
    assert toplevels.eigenvalues_closed_form(6, 1, 0) == (
        Fraction(5, 96),
        20,
        780,
        -1560,
    )
    k = 4
    assert toplevels.eigenvalues_closed_form(k, 0, 0) == (0, 0, 0, 0)
    assert toplevels.eigenvalues_closed_form(5, 1, 0)[0] == Fraction(2, 35)


def test_oracle_examples():
    assert toplevels.eigenvalues_oracle(6, 5, 0)[1] == -20
    assert toplevels.eigenvalues_oracle(6, 5, 0)[3] == 1560
    assert toplevels.eigenvalues_oracle(2, 1, 0)[0] == Fraction(1, 16)


def test_oracle_agrees_with_closed_form():
    for k in range(2, 7):
        for i in range(0, k + 1):
            for j in range(0, i + 1):
                assert toplevels.eigenvalues_closed_form(
                    k, i, j
                ) == toplevels.eigenvalues_oracle(k, i, j), (k, i, j)


def test_quartet_tables():
    t5 = toplevels.quartet_table(5)
    assert len(t5) == 15
    assert toplevels.quartets_distinct(t5)
    assert toplevels.pairs_distinct(t5)
    t6 = toplevels.quartet_table(6)
    assert len(t6) == 21
    assert toplevels.quartets_distinct(t6)
    assert toplevels.pairs_distinct(t6)


def test_energy_sets():
    assert toplevels.a2_set(toplevels.quartet_table(5)) == {
        Fraction(x) for x in reference.E_K5
    }
    assert toplevels.a2_set(toplevels.quartet_table(6)) == {
        Fraction(x) for x in reference.E_K6
    }
    assert toplevels.no_integer_differences(
        {Fraction(x) for x in reference.E_K5}
    )
    lam = Fraction(5, 96)
    hits = {
        x for x in (Fraction(t) for t in reference.E_K6) if (x - lam).denominator == 1
    }
    assert hits == {lam, lam + 1}


def test_symmetry():
    for k in range(2, 7):
        assert toplevels.symmetry_check(k)
    a = toplevels.eigenvalues_closed_form(6, 5, 0)
    b = toplevels.eigenvalues_closed_form(6, 5, 5)
    assert a[1] == -20 and b[1] == 20
    # antisymmetry forces the odd eigenvalues to vanish in the middle
    mid = toplevels.eigenvalues_closed_form(6, 4, 2)
    assert mid[1] == 0 and mid[3] == 0


def test_descendant_matrix_consistency(ses6):
    # the commutator matrix agrees with an honest computation inside the
    # level-6 module on the top vector e(-1)|0>
    from w2345 import pbw
    from w2345.modes import mode_apply

    d = ses6.domain
    alg = ses6.pbw
    u = {((pbw.E, -1),): d.one}
    gens = [ses6.conformal()[2], *ses6.primaries()]
    quartet = []
    for wt, g in zip((2, 3, 4, 5), gens):
        res = pbw.canonical(d, mode_apply(alg, g, wt - 1, u))
        quartet.append(res.get(((pbw.E, -1),), Fraction(0)))
    honest = []
    for wtp, gp in zip((2, 3, 4, 5), gens):
        row = []
        for wts, gs in zip((2, 3, 4, 5), gens):
            v = mode_apply(alg, gs, wts - 2, u)
            res = pbw.canonical(d, mode_apply(alg, gp, wtp, v))
            row.append(res.get(((pbw.E, -1),), Fraction(0)))
        honest.append(row)
    assert toplevels.descendant_matrix(6, quartet) == honest


def test_descendant_first_row():
    # the first raising row is a nonzero multiple of the first reference row
    hw1 = tuple(Fraction(x) for x in reference.F_K6_HW_1)
    mat = toplevels.descendant_matrix(6, hw1)
    lam = toplevels.row_proportional(mat[0], reference.F_K6_ROWS[0])
    assert lam == Fraction(5, 48)


def test_descendant_analysis(ses6):
    from w2345 import singular
    from w2345.walgebra import G3, G4

    nulls = [singular.ur_normal_form(ses6, r) for r in range(4)]
    for mono in (
        ((G3, -2), (G3, -2)),
        ((G3, -1), (G4, -3)),
        ((G3, -3), (G3, -3)),
    ):
        nulls.append(ses6.null_field_for(mono))
    for hw, flip in ((reference.F_K6_HW_1, False), (reference.F_K6_HW_5, True)):
        rows = []
        for p in range(4):
            ref = [Fraction(x) for x in reference.F_K6_ROWS[p]]
            if flip:
                ref = [ref[0], -ref[1], ref[2], -ref[3]]
            rows.append(ref)
        res = toplevels.descendant_analysis(
            6, tuple(Fraction(x) for x in hw), nulls, rows
        )
        assert res["relation_rank"] == 3
        assert res["kernel_in_relations"]
        assert res["combined_rank"] == 4
        assert all(a for a in res["alphas"])
