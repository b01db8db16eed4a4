"""C-fraction extraction, freezing, tail solving, collapse, agreement."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invarc.cfrac import (
    CFraction,
    ClosedFormExpr,
    DegenerateHead,
    HeadMismatch,
    IndexOutOfRange,
    InsufficientDepth,
    InsufficientOrder,
    NotInRamanujanShape,
    cfrac_expand,
    cfrac_to_series,
    collapse_to_closed_form,
    convergent_agreement_order,
    freeze_tail,
    solve_periodic_tail,
)
from invarc.derivation import true_inverse_series
from invarc.series import NotCentered, PowerSeries


TRUE_PARTIALS = (F(1, 2), F(3, 4), F(3, 4), F(31, 36), F(911, 1116))


def test_expand_true_inverse_depth_4():
    cf = cfrac_expand(true_inverse_series(6), 4)
    assert cf.leading == 4
    assert cf.head == 1
    assert cf.partials == TRUE_PARTIALS[:4]
    assert not cf.terminated


def test_expand_depth_5_extends_without_changing_prefix():
    cf = cfrac_expand(true_inverse_series(7), 5)
    assert cf.partials == TRUE_PARTIALS


def test_partials_are_depth_independent():
    # regular C-fraction coefficients are unique, so deeper runs only append
    shallow = cfrac_expand(true_inverse_series(5), 3)
    deep = cfrac_expand(true_inverse_series(9), 7)
    assert deep.partials[:3] == shallow.partials


def test_expand_terminating_input():
    s = PowerSeries.polynomial([0, 4, -1], 8)  # 4h - h^2 exactly
    cf = cfrac_expand(s, 4)
    assert cf.terminated
    assert cf.partials == ()
    assert cf.leading == 4 and cf.head == 1


def test_expand_needs_order_depth_plus_two():
    with pytest.raises(InsufficientOrder):
        cfrac_expand(true_inverse_series(5), 4)


def test_expand_rejects_nonzero_constant():
    with pytest.raises(NotCentered):
        cfrac_expand(PowerSeries.polynomial([1, 4, -1], 6), 2)


def test_expand_rejects_degenerate_head():
    with pytest.raises(DegenerateHead):
        cfrac_expand(PowerSeries.polynomial([0, 0, 1], 6), 2)
    with pytest.raises(DegenerateHead):
        cfrac_expand(PowerSeries.polynomial([0, 4, 0, 1], 6), 2)


def test_to_series_round_trips_the_source():
    source = true_inverse_series(8)
    cf = cfrac_expand(source, 6)
    back = cfrac_to_series(cf, 8)
    ok, through = back.agreement(source)
    assert ok and through == 8


def test_to_series_depth_d_certifies_order_d_plus_2():
    source = true_inverse_series(10)
    cf = cfrac_expand(source, 3)
    back = cfrac_to_series(cf, 5)
    assert back.agreement(source.truncate(5)) == (True, 5)
    # order d+2 is also the limit: more needs partials the fraction lacks
    with pytest.raises(InsufficientDepth):
        cfrac_to_series(cf, 6)


def test_to_series_needs_materializable_partials():
    cf = cfrac_expand(true_inverse_series(6), 4)
    with pytest.raises(InsufficientDepth):
        cfrac_to_series(cf, 12)


def test_freeze_tail_from_2():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 2, F(3, 4))
    assert frozen.partials == (F(1, 2),) + (F(3, 4),) * 5
    assert frozen.periodic_from == 2
    assert not frozen.terminated


def test_frozen_expansion_h6_coefficient():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 2, F(3, 4))
    s = cfrac_to_series(frozen, 8)
    assert s[5] == F(-17, 16)  # still exact here
    assert s[6] == F(-269, 128)  # first deviation from -273/128
    assert s[7] == F(-1163, 256)


def test_periodic_fraction_materializes_any_depth():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 2, F(3, 4))
    s = cfrac_to_series(frozen, 20)  # far beyond the stored depth
    assert s.order == 20


def test_freeze_is_idempotent():
    cf = cfrac_expand(true_inverse_series(8), 6)
    once = freeze_tail(cf, 2, F(3, 4))
    twice = freeze_tail(once, 2, F(3, 4))
    assert once == twice


def test_freeze_index_bounds():
    cf = cfrac_expand(true_inverse_series(8), 6)
    with pytest.raises(IndexOutOfRange):
        freeze_tail(cf, 0, F(3, 4))
    with pytest.raises(IndexOutOfRange):
        freeze_tail(cf, 7, F(3, 4))


def test_freeze_from_1_replaces_everything():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 1, F(1, 2))
    assert frozen.partials == (F(1, 2),) * 6
    assert frozen.periodic_from == 1


def test_tail_closed_form_satisfies_quadratic():
    # B = 1 - ch/B with B(0) = 1 means B^2 - B + ch = 0
    for c in (F(3, 4), F(1, 2), F(2, 7)):
        tail = solve_periodic_tail(c)
        b = tail.to_series(10)
        ch = PowerSeries.monomial(c, 1, 10)
        residue = b * b - b + ch
        assert residue.is_zero()
        assert b.constant() == 1


def test_tail_closed_form_string():
    assert str(solve_periodic_tail(F(3, 4))) == "(1 + sqrt(1 - 3h))/2"


def test_collapse_gives_canonical_string():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 2, F(3, 4))
    closed = collapse_to_closed_form(frozen)
    assert closed.canonical_string() == "4h - 3h^2/(2 + sqrt(1 - 3h))"


def test_collapse_expansion_matches_frozen_fraction():
    cf = cfrac_expand(true_inverse_series(10), 8)
    frozen = freeze_tail(cf, 2, F(3, 4))
    closed = collapse_to_closed_form(frozen)
    assert closed.to_series(10) == cfrac_to_series(frozen, 10)


def test_collapse_rejects_wrong_shapes():
    cf = cfrac_expand(true_inverse_series(8), 6)
    with pytest.raises(NotInRamanujanShape):
        collapse_to_closed_form(cf)  # not periodic at all
    with pytest.raises(NotInRamanujanShape):
        collapse_to_closed_form(freeze_tail(cf, 2, F(2, 3)))  # wrong tail value
    with pytest.raises(NotInRamanujanShape):
        collapse_to_closed_form(freeze_tail(cf, 3, F(3, 4)))  # freeze too late


def test_agreement_order_true_vs_frozen():
    cf = cfrac_expand(true_inverse_series(8), 6)
    frozen = freeze_tail(cf, 2, F(3, 4))
    # head convergent counts, then partials 1/2, 3/4, 3/4 match: 1 + 3
    assert convergent_agreement_order(cf, frozen) == 4


def test_agreement_order_self():
    cf = cfrac_expand(true_inverse_series(8), 6)
    assert convergent_agreement_order(cf, cf) == cf.depth + 1


def test_agreement_order_first_partial_differs():
    cf = cfrac_expand(true_inverse_series(8), 6)
    other = freeze_tail(cf, 1, F(1, 2))
    assert convergent_agreement_order(cf, other) == 2


def test_agreement_order_rejects_different_heads():
    a = CFraction(leading=F(4), head=F(1), partials=(F(1, 2),))
    b = CFraction(leading=F(3), head=F(1), partials=(F(1, 2),))
    with pytest.raises(HeadMismatch):
        convergent_agreement_order(a, b)


def test_closed_form_expr_series_prefix():
    s = ClosedFormExpr().to_series(6)
    assert s.coeffs == (
        F(0),
        F(4),
        F(-1),
        F(-1, 2),
        F(-5, 8),
        F(-17, 16),
        F(-269, 128),
    )


def test_serialization_strings():
    cf = cfrac_expand(true_inverse_series(7), 5)
    assert cf.partial_strings() == ["1/2", "3/4", "3/4", "31/36", "911/1116"]


@given(
    st.lists(
        st.fractions(min_value=F(1, 9), max_value=4, max_denominator=9),
        min_size=1,
        max_size=5,
    ),
    st.fractions(min_value=F(1, 9), max_value=4, max_denominator=9),
    st.fractions(min_value=F(1, 9), max_value=4, max_denominator=9),
)
def test_random_cfraction_round_trip(partials, leading, head):
    # expansion of a random regular C-fraction recovers its coefficients
    cf = CFraction(leading=leading, head=head, partials=tuple(partials))
    order = cf.depth + 2
    s = cfrac_to_series(cf, order)
    back = cfrac_expand(s, cf.depth)
    assert back.leading == leading
    assert back.head == head
    assert back.partials == cf.partials
