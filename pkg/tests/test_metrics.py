import numpy as np
import pytest
from numpy.testing import assert_array_equal

from config import MirrorPRConfig
from metrics import (
    align_sign,
    dist_to_signs,
    evaluate,
    gate_sigma,
    relative_error,
    success_threshold,
)
from utils.validators import DimensionMismatchError, ValidationError


def test_distance_is_sign_invariant():
    truth = np.array([1.0, 2.0])
    assert dist_to_signs(truth, truth) == 0.0
    assert dist_to_signs(-truth, truth) == 0.0
    assert dist_to_signs(np.zeros(2), truth) == pytest.approx(np.sqrt(5.0))


def test_relative_error_example():
    truth = np.array([3.0, 4.0])
    assert relative_error(np.array([3.0, 4.5]), truth) == pytest.approx(0.1)
    assert relative_error(-truth, truth) == 0.0


def test_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        dist_to_signs(np.zeros(2), np.ones(3))


def test_align_sign():
    truth = np.array([1.0, -1.0])
    assert_array_equal(align_sign(-truth * 0.9, truth), truth * 0.9)
    assert_array_equal(align_sign(truth * 0.9, truth), truth * 0.9)


def test_success_threshold():
    eps = np.full(4, 0.5)
    assert success_threshold(eps, 4, 1.0) == pytest.approx(1.0)
    assert success_threshold(np.zeros(4), 4, 1.0) == MirrorPRConfig.SUCCESS_FLOOR
    with pytest.raises(ValidationError):
        success_threshold(eps, 4, 0.0)
    with pytest.raises(ValidationError):
        success_threshold(eps, 4, np.inf)


def test_evaluate_uses_strict_threshold():
    truth = np.array([1.0, 0.0])
    report = evaluate(np.array([1.1, 0.0]), truth, threshold=0.2)
    assert report.success
    assert report.rel_error == pytest.approx(0.1)
    assert not evaluate(np.array([1.2, 0.0]), truth, threshold=0.1).success
    assert set(report.to_dict()) == {"dist", "rel_error", "success", "threshold"}


def test_gate_sigma():
    assert gate_sigma(np.array([2.0, 0.0]), 0.1, 0.5) == pytest.approx(0.4)
    assert gate_sigma(np.array([0.5, 0.0]), 0.0, 0.5) == pytest.approx(0.125)
