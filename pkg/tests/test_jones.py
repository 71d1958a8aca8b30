import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import complexes
from jonespauli.jones import (
    DegeneratePolarization,
    JonesVector,
    PlaneWaveParams,
    StandardState,
    equal_up_to_global_phase,
    evaluate_field,
    field_at_phase,
    from_amplitude_phase,
    inner_norm,
    make_jones,
    standard_state,
)

R2 = 1 / math.sqrt(2)


def close(j, ex, ey, tol=1e-15):
    return abs(j.ex - ex) < tol and abs(j.ey - ey) < tol


@pytest.mark.parametrize("raw,expected", [
    ((1, 0), (1, 0)),
    ((1, 1j), (R2, 1j * R2)),
    ((3, 4j), (0.6, 0.8j)),
])
def test_make_jones(raw, expected):
    assert close(make_jones(*raw), *expected)


def test_make_jones_zero():
    with pytest.raises(DegeneratePolarization):
        make_jones(0, 0)


def test_unnormalized_direct_construction_rejected():
    with pytest.raises(ValueError):
        JonesVector(1, 1j)


@pytest.mark.parametrize("a,b,delta,expected", [
    (1, 0, 2.7, (1, 0)),
    (1, 1, math.pi / 2, (R2, 1j * R2)),
    (1, 1, -math.pi / 2, (R2, -1j * R2)),
])
def test_from_amplitude_phase(a, b, delta, expected):
    assert close(from_amplitude_phase(a, b, delta), *expected, tol=1e-15)


def test_from_amplitude_phase_zero():
    with pytest.raises(DegeneratePolarization):
        from_amplitude_phase(0, 0, 1.0)


@pytest.mark.parametrize("name,expected", [
    (StandardState.LinearX, (1, 0)),
    (StandardState.LinearY, (0, 1)),
    (StandardState.CircularRight, (R2, -1j * R2)),
    (StandardState.CircularLeft, (R2, 1j * R2)),
])
def test_standard_states(name, expected):
    j = standard_state(name)
    assert close(j, *expected)
    assert standard_state(name.value) == j
    assert abs(inner_norm(j) - 1) < 1e-15


def test_standard_state_unknown():
    with pytest.raises(ValueError, match="unknown polarization"):
        standard_state("Diagonal")


def test_inner_norm_values():
    assert inner_norm(JonesVector(1, 0)) == 1
    assert abs(inner_norm(JonesVector(R2, 1j * R2)) - 1) < 1e-15
    assert abs(inner_norm(make_jones(1, 1j)) - 1) < 1e-15


@given(complexes, complexes)
def test_constructor_normalizes(ex, ey):
    assume(abs(ex) + abs(ey) > 1e-6)
    assert abs(inner_norm(make_jones(ex, ey)) - 1) < 1e-12


@given(complexes, complexes, st.floats(0, 2 * math.pi))
def test_global_phase_preserved(ex, ey, phi):
    assume(abs(ex) + abs(ey) > 1e-6)
    w = cmath.exp(1j * phi)
    j = make_jones(w * ex, w * ey)
    ref = make_jones(ex, ey)
    assert abs(inner_norm(j) - 1) < 1e-12
    assert abs(j.ex - w * ref.ex) < 1e-12 and abs(j.ey - w * ref.ey) < 1e-12
    assert equal_up_to_global_phase(j, ref, 1e-9)


def test_global_phase_predicate_distinguishes_states():
    assert not equal_up_to_global_phase(standard_state("CircularLeft"), standard_state("CircularRight"))
    assert equal_up_to_global_phase(JonesVector(0, 1j), standard_state("LinearY"))
    assert JonesVector(0, 1j) != standard_state("LinearY")


class TestField:
    def test_zero_phase(self):
        assert field_at_phase(standard_state("LinearX"), 0) == (1, 0)

    def test_quarter_phase(self):
        fx, fy = field_at_phase(standard_state("LinearX"), math.pi / 2)
        assert abs(fx) < 1e-15 and fy == 0

    def test_circular_left(self):
        fx, fy = field_at_phase(standard_state("CircularLeft"), 0)
        assert abs(fx - R2) < 1e-15 and abs(fy) < 1e-15

    def test_plane_wave_params_validated(self):
        with pytest.raises(ValueError):
            PlaneWaveParams(k=0, w=1)
        with pytest.raises(ValueError):
            PlaneWaveParams(k=1, w=-2)

    @given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(-50, 50), st.floats(-50, 50), complexes, complexes)
    def test_periodic_in_z(self, k, w, z, t, ex, ey):
        assume(abs(ex) + abs(ey) > 1e-6)
        j = make_jones(ex, ey)
        p = PlaneWaveParams(k, w)
        a = evaluate_field(j, p, z, t)
        b = evaluate_field(j, p, z + 2 * math.pi / k, t)
        assert abs(a[0] - b[0]) < 1e-10 and abs(a[1] - b[1]) < 1e-10

    @given(st.floats(-100, 100))
    def test_traces(self, theta):
        fx, fy = field_at_phase(standard_state("LinearX"), theta)
        assert abs(fx - math.cos(theta)) < 1e-12 and fy == 0
        fx, fy = field_at_phase(standard_state("CircularLeft"), theta)
        assert abs(fx * fx + fy * fy - 0.5) < 1e-10
