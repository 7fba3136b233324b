"""The projective correspondence and its convention-pinning fixtures."""

import numpy as np
import pytest

from conftest import random_rotation3
from twistorz.acs import ank_reference_acs, hopf_acs, random_acs, vertex_acs
from twistorz.cp3 import (
    CP3Point,
    acs_to_cp3,
    cp3_to_acs,
    identify,
    identify_inverse,
    tetra_coords,
    wedge4,
)

HOPF_POINT = CP3Point(np.array([1, 0, 0, -1], dtype=complex))
SWAP_POINT = CP3Point(np.array([1, 1, -1, 1], dtype=complex))


def test_identification_table_lines():
    # v0 ^ v1 -> (e1 + i e2) / 2
    w = identify(np.array([1, 0, 0, 0, 0, 0], dtype=complex))
    assert np.allclose(w, [0.5, 0.5j, 0, 0, 0, 0])
    # v1 ^ v2 -> (e5 - i e6) / 2
    w = identify(np.array([0, 0, 0, 0, 0, 1], dtype=complex))
    assert np.allclose(w, [0, 0, 0, 0, 0.5, -0.5j])


def test_identify_round_trip(rng):
    for _ in range(50):
        b = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        assert np.max(np.abs(identify_inverse(identify(b)) - b)) < 1e-14


def test_wedge4_antisymmetry(rng):
    u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    assert np.max(np.abs(wedge4(u, v) + wedge4(v, u))) == 0.0
    assert np.max(np.abs(wedge4(u, u))) == 0.0


def test_vertex_points_forward():
    for k in range(4):
        corner = np.zeros(4, dtype=complex)
        corner[k] = 1.0
        acs = cp3_to_acs(CP3Point(corner))
        assert np.max(np.abs(acs.matrix - vertex_acs(k).matrix)) < 1e-12


def test_vertex_points_backward_exact():
    for k in range(4):
        corner = np.zeros(4, dtype=complex)
        corner[k] = 1.0
        point = acs_to_cp3(vertex_acs(k))
        assert point.projective_residual(CP3Point(corner)) < 1e-12


def test_named_fixture_points():
    assert acs_to_cp3(hopf_acs()).projective_residual(HOPF_POINT) < 1e-12
    assert acs_to_cp3(ank_reference_acs()).projective_residual(SWAP_POINT) < 1e-12
    assert np.max(np.abs(cp3_to_acs(HOPF_POINT).matrix - hopf_acs().matrix)) < 1e-12
    assert np.max(np.abs(cp3_to_acs(SWAP_POINT).matrix - ank_reference_acs().matrix)) < 1e-12


def test_round_trip_bijection(rng):
    worst = 0.0
    for _ in range(1000):
        coords = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        p = CP3Point(coords)
        q = acs_to_cp3(cp3_to_acs(p))
        worst = max(worst, p.projective_residual(q))
    assert worst < 1e-8


def test_acs_round_trip(rng):
    for seed in range(100):
        acs = random_acs(seed)
        back = cp3_to_acs(acs_to_cp3(acs))
        assert np.max(np.abs(back.matrix - acs.matrix)) < 1e-8


def test_eigenspace_isotropy(rng):
    # every +i eigenvector pairs to zero with itself under the bilinear
    # extension of the metric
    for seed in range(50):
        acs = random_acs(seed)
        i_star = acs.matrix.T
        for _ in range(5):
            alpha = rng.standard_normal(6)
            w = alpha - 1j * (i_star @ alpha)
            assert abs(np.sum(w * w)) < 1e-10


def test_tetra_coords_examples():
    assert np.allclose(tetra_coords(CP3Point(np.array([1, 0, 0, 0]))), [1, 0, 0, 0])
    assert np.allclose(tetra_coords(SWAP_POINT), [0.25, 0.25, 0.25, 0.25])
    assert np.allclose(tetra_coords(HOPF_POINT), [0.5, 0, 0, 0.5])


def test_phase_normalization():
    p = CP3Point(np.array([1j, 0, 0, -1j]))
    n = p.normalized().coords
    assert n[0].real > 0 and abs(n[0].imag) < 1e-15
    # idempotent
    again = CP3Point(n).normalized().coords
    assert np.max(np.abs(again - n)) < 1e-15


def test_rejects_zero_point():
    with pytest.raises(ValueError):
        CP3Point(np.zeros(4, dtype=complex))


def _projective_map_from_images(images, extra_image):
    """PGL(4) element from the images of the four corners plus [1,1,1,1]."""
    basis = np.column_stack([img.coords for img in images])
    lam = np.linalg.solve(basis, extra_image.coords)
    return basis @ np.diag(lam)


def test_conjugation_equivariance(rng):
    o1 = random_rotation3(rng)
    o2 = random_rotation3(rng)
    q = np.zeros((6, 6))
    q[0:3, 0:3] = o1
    q[3:6, 3:6] = o2

    corner_images = [acs_to_cp3(vertex_acs(k).conjugate(q)) for k in range(4)]
    ones = CP3Point(np.array([1, 1, 1, 1], dtype=complex))
    extra_image = acs_to_cp3(cp3_to_acs(ones).conjugate(q))
    m = _projective_map_from_images(corner_images, extra_image)

    worst = 0.0
    for seed in range(100):
        acs = random_acs(seed)
        p = acs_to_cp3(acs)
        direct = acs_to_cp3(acs.conjugate(q))
        mapped = CP3Point(m @ p.coords)
        worst = max(worst, direct.projective_residual(mapped))
    assert worst < 1e-6
