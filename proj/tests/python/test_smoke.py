"""Smoke tests for the python bindings."""

import math

import pytest

import hyperconic as hc

SQRT2 = math.sqrt(2.0)


def test_multivector_products():
    sig = hc.Signature(2, 0)
    e1 = hc.Multivector.basis_vector(sig, 1)
    e2 = hc.Multivector.basis_vector(sig, 2)
    e12 = e1.outer(e2)
    assert e12.coefficient(0b11) == pytest.approx(1.0)
    assert e2.outer(e1).coefficient(0b11) == pytest.approx(-1.0)

    back_and_forth = e1.geometric(e2).geometric(e2.geometric(e1))
    assert back_and_forth.scalar_part() == pytest.approx(1.0)

    sig3 = hc.Signature(3, 0)
    plane = hc.Multivector.basis_vector(sig3, 1).outer(
        hc.Multivector.basis_vector(sig3, 2)
    )
    assert plane.dual().vector_coords() == pytest.approx([0.0, 0.0, 1.0])


def test_duality_membership():
    sig = hc.Signature(3, 0)
    e1 = hc.Multivector.basis_vector(sig, 1)
    e2 = hc.Multivector.basis_vector(sig, 2)
    plane = e1.outer(e2)
    probe = hc.Multivector.vector(sig, [0.25, -1.5, 0.0])
    assert hc.opns_contains(plane, probe)
    assert hc.ipns_contains(plane.dual(), probe)


def test_embedding_and_incidence():
    assert hc.embed_point([1.0, 0.0]) == pytest.approx(
        [1.0, 0.0, 1.0 / SQRT2, 1.0 / SQRT2, 0.0, 0.0]
    )
    circle = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]
    assert hc.incidence([1.0, 0.0], circle) == pytest.approx(0.0)
    assert hc.incidence([0.0, 0.0], circle) == pytest.approx(-0.5)
    assert hc.incidence([2.0, 0.0], circle) == pytest.approx(1.5)


def test_tau_round_trip():
    matrix = [[2.0, 0.5, -1.0], [0.5, 3.0, 0.25], [-1.0, 0.25, -0.75]]
    coords = hc.tau(matrix)
    assert coords == pytest.approx([-1.0, 0.25, -0.75 / SQRT2, 2.0 / SQRT2,
                                    3.0 / SQRT2, 0.5])
    back = hc.tau_inv(coords)
    for i in range(3):
        assert back[i] == pytest.approx(matrix[i])


def test_veronese_and_index_set():
    assert hc.veronese([2.0, 3.0, 1.0], 2) == pytest.approx(
        [2.0, 3.0, 1.0, 4.0, 9.0, 6.0]
    )
    assert hc.index_set(2) == [3, 4, 5]
    assert hc.index_set(3) == [4, 5, 6, 8]


def test_exact_fit_recovers_the_circle():
    h = SQRT2 / 2.0
    points = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0], [h, h]]
    result = hc.fit_exact(points)
    form = hc.classify_conic(result.matrix)
    assert form.kind == hc.ConicKind.ELLIPSE
    assert form.semi_axes == pytest.approx([1.0, 1.0])
    assert form.center == pytest.approx([0.0, 0.0])
    assert max(abs(r) for r in result.residuals) < 1e-12

    oracle = hc.fit_oracle(points)
    cosine = abs(sum(a * b for a, b in zip(result.conic, oracle)))
    assert cosine == pytest.approx(1.0, abs=1e-9)


def test_degenerate_fit_raises():
    collinear = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0], [4.0, 4.0]]
    with pytest.raises(hc.DegeneracyError):
        hc.fit_exact(collinear)
    with pytest.raises(hc.AmbiguityError):
        hc.fit_oracle([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])


def test_training_round_trip():
    conic = hc.preset_conic("ellipse")
    points, labels = hc.generate_dataset(
        conic, samples_per_class=100, margin=0.1,
        lo=[-2.0, -2.0], hi=[2.0, 2.0], seed=1,
    )
    assert len(points) == 200
    assert sorted(set(labels)) == [-1, 1]

    model, report = hc.train(
        points, labels, learning_rate=0.05, max_epochs=5000,
        target_accuracy=2.0, seed=1,
    )
    assert report.accuracy >= 0.95
    matrix, form = hc.extract_conic(model)
    assert form.kind == hc.ConicKind.ELLIPSE
    assert abs(form.center[0]) <= 0.1
    assert abs(form.center[1]) <= 0.1
    assert -1.0 <= model.forward([0.3, -0.4]) <= 1.0


def test_conformal_sphere_side():
    assert hc.sphere_side([0.0, 0.0], 1.0, [0.0, 0.0]) == pytest.approx(0.5)
    assert hc.sphere_side([0.0, 0.0], 1.0, [1.0, 0.0]) == pytest.approx(0.0)
    assert hc.sphere_side([0.0, 0.0], 1.0, [5.0, 0.0]) < 0.0
    lifted = hc.lift([1.0, 0.0])
    assert lifted.is_vector()


def test_preset_names():
    assert "circle" in hc.preset_names()
    assert "ellipse" in hc.preset_names()
