import logging

import pytest

from utils import (
    ValidationError,
    config_digest,
    derive_seed,
    format_number,
    log_execution_time,
    make_rng,
    validate_open_interval,
    validate_positive,
    validate_vector,
)


def test_derive_seed_is_stable_and_separates_streams():
    assert derive_seed(7, 16, 32, 0, "init") == derive_seed(7, 16, 32, 0, "init")
    seeds = {derive_seed(7, *keys) for keys in [("noise",), ("truth",), (16, 32, 0, "init"),
                                                 (16, 32, 1, "init"), (16, 32, 0, "md-random")]}
    assert len(seeds) == 5
    assert 0 <= derive_seed(1, "noise") < 2 ** 63


def test_derive_seed_rejects_bad_keys():
    with pytest.raises(ValueError):
        derive_seed(1, -3)
    with pytest.raises(TypeError):
        derive_seed(1, 2.5)


def test_make_rng_reproducible():
    assert make_rng(3, "noise").random() == make_rng(3, "noise").random()


def test_format_number():
    assert format_number(0.1) == "0.10000000000000001"
    assert format_number(float("inf")) == "inf"
    assert format_number(2.0) == "2"


def test_config_digest_is_order_independent():
    assert config_digest({"a": 1, "b": 2}) == config_digest({"b": 2, "a": 1})
    assert len(config_digest({})) == 16


def test_validators():
    assert validate_vector([1, 2], length=2).dtype == float
    with pytest.raises(ValidationError):
        validate_vector([[1.0]])
    with pytest.raises(ValidationError):
        validate_positive(0.0, "gamma")
    assert validate_positive(0.0, "tol", allow_zero=True) == 0.0
    with pytest.raises(ValidationError):
        validate_open_interval(1.0, 0.0, 1.0, "kappa")


def test_log_execution_time(caplog):
    logger = logging.getLogger("timing-test")

    @log_execution_time(logger)
    def work():
        return 42

    with caplog.at_level(logging.DEBUG, logger="timing-test"):
        assert work() == 42
    assert any("took" in record.getMessage() for record in caplog.records)
