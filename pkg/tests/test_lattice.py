import pytest
from hypothesis import given
from hypothesis import strategies as st

from regpowers.lattice import (
    HYPERPLANE,
    DivisorClass,
    degree_in_p3,
    euler_char,
    form_q,
    h0_ample,
    in_effective_cone,
    is_ample,
    pairing,
    sectional_genus,
)

coords = st.integers(min_value=-(10**9), max_value=10**9)
classes = st.builds(DivisorClass, coords, coords, coords)


def test_form_examples():
    assert form_q(DivisorClass(1, 0, 0)) == 4
    assert form_q(DivisorClass(9, 1, 1)) == 316
    assert form_q(DivisorClass(0, 1, 0)) == -4


def test_pairing_examples():
    assert pairing(DivisorClass(1, 0, 0), DivisorClass(9, 1, 1)) == 36
    assert pairing(DivisorClass(1, 0, 0), DivisorClass(0, 1, 0)) == 0


@given(classes)
def test_form_is_even_times_two(cls):
    assert form_q(cls) % 4 == 0


@given(classes)
def test_polarization_identity(cls):
    assert pairing(cls, cls) == form_q(cls)


@given(classes, classes, classes)
def test_pairing_symmetric_and_bilinear(a, b, e):
    assert pairing(a, b) == pairing(b, a)
    assert pairing(a + b, e) == pairing(a, e) + pairing(b, e)
    assert 2 * (form_q(a + b) - form_q(a) - form_q(b)) == 4 * pairing(a, b)


def test_euler_char_examples():
    assert euler_char(DivisorClass(1, 0, 0)) == 4
    assert euler_char(DivisorClass(0, 0, 0)) == 2
    assert euler_char(DivisorClass(1, -1, -1)) == 0


def test_cone_examples():
    assert in_effective_cone(DivisorClass(1, 0, 0))
    assert not in_effective_cone(DivisorClass(0, 1, 0))
    assert not in_effective_cone(DivisorClass(-1, 0, 0))
    assert is_ample(DivisorClass(1, 0, 0))
    assert is_ample(DivisorClass(9, 1, 1))
    assert not is_ample(DivisorClass(1, 1, 0))  # on the boundary, q = 0


@given(classes)
def test_ample_implies_effective(cls):
    if is_ample(cls):
        assert in_effective_cone(cls)


def test_h0_examples():
    assert h0_ample(DivisorClass(1, 0, 0)) == 4
    assert h0_ample(DivisorClass(9, 1, 1)) == 160
    assert h0_ample(DivisorClass(2, 0, 0)) == 10


def test_h0_rejects_non_ample():
    with pytest.raises(ValueError):
        h0_ample(DivisorClass(1, 1, 0))
    with pytest.raises(ValueError):
        h0_ample(DivisorClass(-1, 0, 0))


@given(classes)
def test_h0_equals_euler_char_on_ample(cls):
    # higher cohomology of an ample class vanishes
    if is_ample(cls):
        assert h0_ample(cls) == euler_char(cls)


def test_sectional_genus_examples():
    assert sectional_genus(DivisorClass(1, 0, 0)) == 3
    assert sectional_genus(DivisorClass(9, 1, 1)) == 159
    assert sectional_genus(DivisorClass(2, 1, 1)) == 5
    with pytest.raises(ValueError):
        sectional_genus(DivisorClass(0, 1, 0))


def test_degree_examples():
    assert degree_in_p3(DivisorClass(1, 0, 0)) == 4
    assert degree_in_p3(DivisorClass(9, 1, 1)) == 36
    assert degree_in_p3(DivisorClass(0, 1, 0)) == 0


@given(classes)
def test_degree_is_pairing_with_hyperplane(cls):
    assert degree_in_p3(cls) == pairing(cls, HYPERPLANE)


def test_class_arithmetic():
    a = DivisorClass(2, 3, -1)
    b = DivisorClass(1, -1, 4)
    assert a + b == DivisorClass(3, 2, 3)
    assert a - b == DivisorClass(1, 4, -5)
    assert -a == DivisorClass(-2, -3, 1)
    assert 3 * a == DivisorClass(6, 9, -3)
