import json

import numpy as np
import pytest

from akltverify.errors import NormalizationError, ValidationError
from akltverify.sphere import (
    BUILTIN_NAMES,
    ISOTROPIC,
    SphereDistribution,
    antipodal_classes,
    builtin_distribution,
    design_strength,
    frame_potential,
    legendre_moment,
    load_distribution,
    symmetric_design_strength,
    symmetrize,
)


@pytest.mark.parametrize("name,count", [("tetrahedron", 4), ("octahedron", 6), ("cube", 8), ("icosahedron", 12),
                                        ("dodecahedron", 20), ("mu24", 24), ("mu32", 32)])
def test_point_counts(name, count):
    mu = builtin_distribution(name)
    assert len(mu) == count
    np.testing.assert_allclose(np.linalg.norm(mu.points, axis=1), 1)
    assert mu.weights.sum() == pytest.approx(1)


def test_octahedron_points():
    mu = builtin_distribution("octahedron")
    np.testing.assert_allclose(sorted(map(tuple, np.round(mu.points, 12))),
                               sorted(map(tuple, np.vstack([np.eye(3), -np.eye(3)]))))
    np.testing.assert_allclose(mu.weights, 1 / 6)


def test_mu32_icosahedron_weight():
    mu = builtin_distribution("mu32")
    assert mu.weights[:12].sum() == pytest.approx(5 / 14)


def test_mu24_not_center_symmetric():
    mu = builtin_distribution("mu24")
    np.testing.assert_allclose(mu.weights, 1 / 24)
    assert len(symmetrize(mu)) == 48


def test_symmetrize_examples():
    octa = builtin_distribution("octahedron")
    assert len(symmetrize(octa)) == 6
    sym = symmetrize(builtin_distribution("tetrahedron"))
    assert len(sym) == 8
    np.testing.assert_allclose(sym.weights, 1 / 8)
    np.testing.assert_allclose(np.abs(sym.points), 1 / np.sqrt(3))
    assert len(symmetrize(builtin_distribution("mu32"))) == 32
    assert symmetrize(ISOTROPIC) is ISOTROPIC


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_frame_potentials(name):
    mu = builtin_distribution(name)
    assert frame_potential(mu, 0) == pytest.approx(1)
    for t in range(0, 12, 2):
        assert frame_potential(mu, t) >= 1 / (t + 1) - 1e-12


def test_frame_potential_t2():
    assert frame_potential(builtin_distribution("tetrahedron"), 2) == pytest.approx(1 / 3)
    assert frame_potential(builtin_distribution("octahedron"), 2) == pytest.approx(1 / 3)
    with pytest.raises(ValidationError):
        frame_potential(builtin_distribution("cube"), 3)


@pytest.mark.parametrize("name,strength", [("tetrahedron", 2), ("octahedron", 3), ("cube", 3),
                                           ("icosahedron", 5), ("dodecahedron", 5), ("mu24", 7), ("mu32", 9)])
def test_design_strengths(name, strength):
    mu = builtin_distribution(name)
    assert design_strength(mu) == strength
    for k in range(1, strength + 1):
        assert abs(legendre_moment(mu, k)) < 1e-10


def test_symmetric_strength():
    # the symmetrized tetrahedron is the cube
    assert symmetric_design_strength(builtin_distribution("tetrahedron")) == 3
    assert symmetric_design_strength(builtin_distribution("icosahedron")) == 5
    assert symmetric_design_strength(ISOTROPIC) >= 9


def test_antipodal_classes():
    assert antipodal_classes(builtin_distribution("tetrahedron")) == 4
    assert antipodal_classes(builtin_distribution("cube")) == 4
    assert antipodal_classes(builtin_distribution("mu32")) == 16


def test_validation():
    with pytest.raises(NormalizationError):
        SphereDistribution([[1, 1, 0]], [1.0])
    with pytest.raises(ValidationError):
        SphereDistribution([[1, 0, 0], [0, 1, 0]], [0.3, 0.3])
    with pytest.raises(ValidationError):
        builtin_distribution("sphere")


def test_load_distribution_file(tmp_path):
    path = tmp_path / "axes.json"
    path.write_text(json.dumps(builtin_distribution("octahedron").to_json()))
    mu = load_distribution(path)
    assert len(mu) == 6 and design_strength(mu) == 3
    bad = tmp_path / "bad.json"
    bad.write_text('[{"v": [1, 0]}]')
    with pytest.raises(ValidationError):
        load_distribution(bad)
    assert load_distribution("cube").name == "cube"
