"""The tame field model and the explicit degree-p symbol.

Pinned values for (p, q) = (3, 7): the model has g = 3, zeta = 2, and

    {pi, [3]} = 2/3,  {[3], pi} = 1/3,  {pi, pi} = 0,

from the tame formula (u_a^v(b) u_b^(-v(a)))^((q-1)/3) with the sign factor
absorbed by the even exponent.  The split-reduction value for alpha_P = [3],
alpha_Q = pi is 1/3.
"""

import pytest

from tatestar.errors import AmbientMismatchError
from tatestar.local_pairing import (
    PairingValue,
    TameFieldModel,
    ZERO,
    ZeroSignal,
    class_representatives,
    hilbert,
    iota,
    is_norm_from,
    one_minus,
    qk_split,
    unramified_scaling,
)


def _model37():
    return TameFieldModel.create(3, 7)


def test_model_defaults():
    m = _model37()
    assert (m.p, m.q, m.g, m.zeta) == (3, 7, 3, 2)
    assert TameFieldModel.create(5).q == 11
    assert TameFieldModel.create(7).q == 29
    assert TameFieldModel.create(13).q == 53


def test_model_validation():
    with pytest.raises(ValueError):
        TameFieldModel.create(3, 8)
    with pytest.raises(ValueError):
        TameFieldModel.create(3, 11)   # 11 = 2 mod 3
    with pytest.raises(ValueError):
        TameFieldModel.create(3, 7, g=2)
    with pytest.raises(ValueError):
        TameFieldModel.create(4, 13)


def test_element_parsing():
    m = _model37()
    a = m.parse("-2:10")
    assert (a.val, a.unit) == (-2, 3)
    with pytest.raises(ValueError):
        m.parse("3")
    with pytest.raises(ValueError):
        m.parse("a:b")
    with pytest.raises(ValueError):
        m.parse("0:7")   # unit part vanishes mod 7


def test_element_arithmetic():
    m = _model37()
    a = m.element(1, 3)
    b = m.element(2, 5)
    assert (a * b).val == 3 and (a * b).unit == 1
    assert (a ** 3).val == 3 and (a ** 3).unit == 27 % 7
    assert (a * a.inverse()) == m.one()
    with pytest.raises(AmbientMismatchError):
        a * TameFieldModel.create(3, 13).element(0, 1)


def test_class_vector():
    m = _model37()
    assert m.uniformizer().class_vector() == (1, 0)
    assert m.element(0, 3).class_vector() == (0, 1)   # 3 = g^1
    assert m.element(0, 2).class_vector() == (0, 2)   # 2 = 3^2 mod 7
    assert m.element(3, 6).class_vector() == (0, 0)   # 6 = 3^3, both parts p-th powers


def test_hilbert_pinned_values():
    m = _model37()
    pi = m.uniformizer()
    u3 = m.element(0, 3)
    assert str(hilbert(pi, u3)) == "2/3"
    assert str(hilbert(u3, pi)) == "1/3"
    assert hilbert(pi, pi).is_zero
    assert hilbert(u3, m.element(0, 5)).is_zero   # two units pair to zero


def test_pairing_value_arithmetic():
    a = PairingValue(5, 2)
    b = PairingValue(5, 4)
    assert a + b == PairingValue(5, 1)
    assert -a == PairingValue(5, 3)
    assert 3 * a == PairingValue(5, 1)
    assert str(PairingValue(5, 0)) == "0"
    assert str(PairingValue(5, 2)) == "2/5"
    with pytest.raises(AmbientMismatchError):
        a + PairingValue(3, 1)


def test_one_minus_branches():
    m = _model37()
    # positive valuation: 1 - a is a 1-unit
    assert one_minus(m.element(2, 4)) == m.one()
    # zero valuation, unit != 1: residue difference
    assert one_minus(m.element(0, 3)) == m.element(0, -2)
    # exactly 1: the zero signal
    assert one_minus(m.element(0, 1)) is ZERO
    assert isinstance(one_minus(m.element(0, 1)), ZeroSignal)
    # negative valuation: leading term is -a
    assert one_minus(m.element(-2, 3)) == m.element(-2, -3)


def test_iota_identifies_roots():
    m = _model37()
    assert iota(m, 1) == PairingValue(3, 0)
    assert iota(m, 2) == PairingValue(3, 1)
    assert iota(m, 4) == PairingValue(3, 2)
    with pytest.raises(ValueError):
        iota(m, 3)   # 3 has order 6, not 3
    with pytest.raises(ValueError):
        iota(m, 0)


def test_qk_split_golden():
    m = _model37()
    assert str(qk_split(m.parse("0:3"), m.parse("1:1"))) == "1/3"


def test_qk_split_zero_signal_branch():
    m = _model37()
    for rep in class_representatives(m):
        assert qk_split(m.element(0, 1), rep).is_zero


def test_bilinearity_exhaustive_3_7():
    m = _model37()
    reps = class_representatives(m)
    for a in reps:
        for b in reps:
            for c in reps:
                assert hilbert(a * b, c) == hilbert(a, c) + hilbert(b, c)
                assert hilbert(a, b * c) == hilbert(a, b) + hilbert(a, c)


def test_antisymmetry_exhaustive():
    for p, q in ((3, 7), (5, 11)):
        m = TameFieldModel.create(p, q)
        reps = class_representatives(m)
        for a in reps:
            for b in reps:
                assert hilbert(a, b) == -hilbert(b, a)


def test_steinberg_relation():
    for p, q in ((3, 7), (5, 11)):
        m = TameFieldModel.create(p, q)
        for val in range(-p, p + 1):
            for unit in range(1, q):
                a = m.element(val, unit)
                rest = one_minus(a)
                if isinstance(rest, ZeroSignal):
                    continue
                assert hilbert(a, rest).is_zero, f"a={a} in (p,q)=({p},{q})"


def test_pth_power_degeneracy():
    for p, q in ((3, 7), (5, 11)):
        m = TameFieldModel.create(p, q)
        reps = class_representatives(m)
        for a in reps:
            for b in reps:
                assert hilbert(a ** p, b).is_zero
                assert hilbert(a, b ** p).is_zero


def test_symbol_vanishing_equals_norm_membership():
    m = _model37()
    reps = class_representatives(m)
    for a in reps:
        for b in reps:
            assert hilbert(a, b).is_zero == is_norm_from(b, a)


def test_norm_membership_edges():
    m = _model37()
    one = m.one()
    pi = m.uniformizer()
    # trivial extension: everything is a norm
    assert is_norm_from(m.element(0, 3), one)
    assert is_norm_from(pi, one)
    # K(pi^{1/3}): pi-powers are norms, the unit class of g is not
    assert is_norm_from(pi ** 2, pi)
    assert not is_norm_from(m.element(0, 3), pi)


def test_unramified_scaling_matches_multiplication():
    for p, q in ((3, 7), (5, 11)):
        m = TameFieldModel.create(p, q)
        reps = class_representatives(m)
        for a in reps:
            for b in reps:
                base = hilbert(a, b)
                for d in range(1, 7):
                    assert unramified_scaling(a, b, d) == d * base
    with pytest.raises(ValueError):
        unramified_scaling(m.one(), m.one(), 0)


def test_class_representatives_cover_all_classes():
    m = TameFieldModel.create(5, 11)
    reps = class_representatives(m)
    assert len(reps) == 25
    assert len({r.class_vector() for r in reps}) == 25


def test_zero_signal_is_a_singleton():
    assert ZeroSignal() is ZERO
