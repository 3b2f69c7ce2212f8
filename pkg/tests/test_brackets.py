"""Tests for Rankin-Cohen brackets."""

from __future__ import annotations

import pytest

from modforms.brackets import rankin_cohen
from modforms.forms import catalog, cusp_delta, eisenstein, is_modular_member

PREC = 64


def test_order_zero_is_the_product():
    e4, e6 = eisenstein(4, PREC), eisenstein(6, PREC)
    assert rankin_cohen(e4, e6, 0) == e4 * e6


def test_e4_e6_order_one():
    e4, e6 = eisenstein(4, PREC), eisenstein(6, PREC)
    bracket = rankin_cohen(e4, e6, 1)
    assert bracket.weight == 12
    assert bracket[1] == -3456
    assert bracket == cusp_delta(12, PREC) * -3456


def test_weight_tag():
    e4 = eisenstein(4, PREC)
    assert rankin_cohen(e4, e4, 3).weight == 14


def test_self_bracket_vanishes_for_odd_order():
    e4 = eisenstein(4, PREC)
    d12 = cusp_delta(12, PREC)
    for m in (1, 3):
        assert rankin_cohen(e4, e4, m).is_zero()
        assert rankin_cohen(d12, d12, m).is_zero()


def test_sign_symmetry():
    forms = [eisenstein(4, 32), eisenstein(6, 32), cusp_delta(12, 32)]
    for g in forms:
        for h in forms:
            for m in range(5):
                left = rankin_cohen(g, h, m)
                right = rankin_cohen(h, g, m)
                assert left == right * ((-1) ** m), (g.weight, h.weight, m)


def test_constant_term_vanishes_for_positive_order():
    e4, e6 = eisenstein(4, 32), eisenstein(6, 32)
    for m in range(1, 5):
        assert rankin_cohen(e4, e6, m)[0] == 0


def test_brackets_are_modular_members():
    entries = [e for e in catalog(PREC) if e.name != "E2"]
    for i, (g_name, g) in enumerate(entries):
        for h_name, h in entries[i:]:
            for m in range(5):
                weight = g.weight + h.weight + 2 * m
                if weight > 26:
                    continue
                bracket = rankin_cohen(g, h, m)
                coords = is_modular_member(bracket, weight)
                assert coords is not None, (g_name, h_name, m)


def test_weight_14_cusp_brackets_vanish():
    # a nonzero order >= 1 bracket would be a cusp form of weight 14,
    # but that space is zero
    e4, e6, e8, e10 = (eisenstein(k, 32) for k in (4, 6, 8, 10))
    assert rankin_cohen(e4, e6, 2).is_zero()
    assert rankin_cohen(e4, e8, 1).is_zero()


def test_precision_is_min_of_inputs():
    bracket = rankin_cohen(eisenstein(4, 20), eisenstein(6, 32), 2)
    assert bracket.prec == 20


def test_domain_errors():
    e4 = eisenstein(4, 8)
    with pytest.raises(ValueError):
        rankin_cohen(e4, e4, -1)
    from modforms.qseries import GradedSeries, QSeries

    weight_zero = GradedSeries(QSeries.one(8), 0)
    with pytest.raises(ValueError):
        rankin_cohen(e4, weight_zero, 1)
