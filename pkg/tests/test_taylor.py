import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monodom import (
    Monomial,
    TaylorTooLarge,
    build_taylor,
    is_scarf,
    is_taylor_minimal,
    mdeg_multiplicity_table,
    minimalize,
    minimize,
    scarf_basis,
    table,
)
from monodom.taylor import members_of, validate_taylor

from conftest import I


def sym_by_members(cx, *gen_texts):
    lookup = {str(g): i for i, g in enumerate(cx.ideal.generators)}
    mask = 0
    for t in gen_texts:
        mask |= 1 << lookup[t]
    return mask


class TestBuildTaylor:
    def test_two_generator_differential(self):
        M = I("a, b")
        cx = build_taylor(M)
        top = 0b11
        col = cx.diff[2][top]
        # removing the first member carries +, the second -
        first, second = members_of(top)
        assert col[top ^ (1 << first)] == 1
        assert col[top ^ (1 << second)] == -1
        for single in cx.strata[1]:
            assert cx.diff[1][single] == {0: 1}
        # quotient monomials: mdeg([a,b]) / mdeg single = the other variable
        assert str(cx.mdeg(top)) == "a*b"

    def test_all_mdegs_distinct_for_dominant_ideal(self):
        cx = build_taylor(I("a*d, b*d, c*d"))
        mdegs = {cx.mdeg_exps[mask] for mask in range(8)}
        assert len(mdegs) == 8

    def test_collision_example(self):
        M = I("a^2, a*b, b^2")
        cx = build_taylor(M)
        pair = sym_by_members(cx, "a^2", "b^2")
        triple = sym_by_members(cx, "a^2", "a*b", "b^2")
        assert cx.mdeg_exps[pair] == cx.mdeg_exps[triple]
        assert str(cx.mdeg(pair)) == "a^2*b^2"

    def test_strata_sizes(self):
        cx = build_taylor(I("a, b, c, d"))
        assert [len(s) for s in cx.strata] == [1, 4, 6, 4, 1]

    def test_guard(self):
        M = I(", ".join(f"x{i}" for i in range(1, 16)))
        with pytest.raises(TaylorTooLarge):
            build_taylor(M)
        build_taylor(M, max_q=15)

    def test_d_squared_zero_and_multihomogeneous(self):
        for text in ("a, b", "a^2, a*b, b^2", "a*d, b*d, c*d, d^2", "a*b, c*d, a*c, b*d"):
            validate_taylor(build_taylor(I(text)))

    def test_mdeg_monotone_under_inclusion(self):
        cx = build_taylor(I("a^2*e, b^3*f, c*e^2"))
        for mask in range(1, 8):
            for sub in range(mask):
                if sub & mask == sub:
                    assert all(
                        x <= y
                        for x, y in zip(cx.mdeg_exps[sub], cx.mdeg_exps[mask])
                    )


class TestScarf:
    def test_collision_example_basis(self):
        M = I("a^2, a*b, b^2")
        basis = scarf_basis(M)
        labels = {sym.label(M) for sym in basis.symbols}
        assert labels == {
            "[0]",
            "[a^2]",
            "[a*b]",
            "[b^2]",
            "[a^2, a*b]",
            "[a*b, b^2]",
        }
        assert basis.ranks == (1, 3, 2)

    def test_single_generator(self):
        M = I("a")
        basis = scarf_basis(M)
        assert {sym.mask for sym in basis.symbols} == {0, 1}
        assert basis.ranks == (1, 1)

    def test_dominant_ideal_keeps_all_symbols(self):
        M = I("a*d, b*d, c*d")
        basis = scarf_basis(M)
        assert len(basis.symbols) == 8
        assert basis.ranks == (1, 3, 3, 1)

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("a^2, a*b, b^2", True),
            ("a^2*b, a*b^3*c, b*c^2", True),  # dominant, hence Scarf
            ("a*b, c*d, a*c, b*d", False),
        ],
    )
    def test_is_scarf(self, text, expected):
        assert is_scarf(I(text)) is expected

    def test_scarf_ranks_bounded_by_betti(self):
        for text in ("a*b, c*d, a*c, b*d", "a^2, a*b, b^2", "a*e, b*e, c*e, d*e, a*b, c*d"):
            M = I(text)
            ranks = scarf_basis(M).ranks
            betti = minimize(M)[1].total
            assert all(
                r <= b for r, b in zip(ranks, betti + (0,) * len(ranks))
            )

    def test_dominant_implies_scarf_equals_everything(self):
        M = I("a^2*e, b^3*f, c*e^2, d^2*f^3")
        assert is_taylor_minimal(M)
        assert len(scarf_basis(M).symbols) == 2**M.q


class TestMdegMultiplicity:
    def test_collision_counts(self):
        M = I("a^2, a*b, b^2")
        tbl = mdeg_multiplicity_table(M)
        key = Monomial(M.table, (2, 2))
        assert tbl[key] == {2: 1, 3: 1}

    def test_unique_everywhere_for_two_gens(self):
        M = I("a, b")
        assert all(
            sum(per.values()) == 1 for per in mdeg_multiplicity_table(M).values()
        )

    def test_m3_all_multidegrees_distinct(self):
        # a dominant generating set owns one strict top exponent per member,
        # so all 2^q subset lcms differ; that is why its resolution needs no
        # cancellation at all
        M = I("a*d, b*d, c*d, d^2", ["a", "b", "c", "d"])
        tbl = mdeg_multiplicity_table(M)
        assert len(tbl) == 2**M.q
        assert all(per == {h: 1} for per in tbl.values() for h in per)
        assert tbl[Monomial(M.table, (1, 1, 1, 1))] == {3: 1}
        assert tbl[Monomial(M.table, (1, 1, 1, 2))] == {4: 1}


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_scarf_ranks_invariant_under_generator_reordering(data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    tbl = table(*(f"x{i}" for i in range(1, n + 1)))
    mons = []
    for _ in range(data.draw(st.integers(min_value=1, max_value=4))):
        exps = tuple(data.draw(st.integers(min_value=0, max_value=2)) for _ in range(n))
        if any(exps):
            mons.append(Monomial(tbl, exps))
    if not mons:
        return
    M = minimalize(mons)
    perm = data.draw(st.permutations(list(M.generators)))
    assert scarf_basis(minimalize(list(perm))).ranks == scarf_basis(M).ranks
