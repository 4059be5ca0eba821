"""Tests for settings, logging, the batch runner and file helpers"""

import hashlib
import json
import logging
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
import structlog
from pydantic import ValidationError

from qwalk.cli.main import main
from qwalk.core.config import Environment, Settings, settings
from qwalk.core.exceptions import (
    DesignError,
    InputParseError,
    ParameterError,
    QWalkError,
    TransferInvariantError,
)
from qwalk.core.executor import BatchRunner
from qwalk.core.logging import bind_run_context, get_logger, plain_values, setup_logging
from qwalk.services.families import cycle
from qwalk.services.walks import arc_reversal_walk, star_state
from qwalk.utils.files import atomic_write_text, canonical_digest
from qwalk.utils.rendering import render_frame


@pytest.fixture
def restore_logging() -> Iterator[None]:
    """Put logging back to the test configuration afterwards"""
    yield
    structlog.contextvars.clear_contextvars()
    setup_logging("WARNING")


def test_settings_reject_support_tol_above_oracle_tol() -> None:
    """Support classification must be finer than the oracle check"""
    with pytest.raises(ValidationError):
        Settings(SUPPORT_TOL=1e-6, ORACLE_TOL=1e-8)
    with pytest.raises(ValidationError):
        Settings(CLUSTER_TOL=0.0)


def test_settings_read_log_alias(monkeypatch: pytest.MonkeyPatch) -> None:
    """QWALK_LOG sets the level and is normalised to upper case"""
    monkeypatch.setenv("QWALK_LOG", "debug")

    assert Settings().LOG_LEVEL == "DEBUG"


def test_default_q_max() -> None:
    """q_max is the larger of the floor and twice the dimension"""
    settings = Settings(Q_MAX_FLOOR=64)

    assert settings.default_q_max(10) == 64
    assert settings.default_q_max(100) == 200


def test_exit_codes() -> None:
    """Parse errors exit 2, precondition and invariant violations 3"""
    assert QWalkError("x").exit_code == 1
    assert InputParseError("x").exit_code == 2
    assert DesignError("x").exit_code == 3
    assert TransferInvariantError("x").exit_code == 3
    assert str(ParameterError("Bad grid", n=0, m=2)) == "Bad grid (n=0, m=2)"


def test_plain_values_processor() -> None:
    """Fractions and numpy values become JSON-safe builtins"""
    event = {"event": "Decided pair", "tau": np.int64(6), "root": Fraction(-1, 3), "thetas": (np.float64(0.5), 1)}

    rendered = plain_values(None, "info", event)

    assert rendered == {"event": "Decided pair", "tau": 6, "root": "-1/3", "thetas": [0.5, 1]}
    assert type(rendered["tau"]) is int


@pytest.mark.usefixtures("restore_logging")
@pytest.mark.parametrize(
    ("environment", "callsite"),
    [(Environment.DEVELOPMENT, True), (Environment.PRODUCTION, False)],
)
def test_callsite_fields_only_in_development(
    monkeypatch: pytest.MonkeyPatch,
    capsys: pytest.CaptureFixture[str],
    environment: Environment,
    callsite: bool,
) -> None:
    """JSON log lines name the calling module and function in development only"""
    monkeypatch.setattr(settings, "ENVIRONMENT", environment)
    monkeypatch.setattr(settings, "LOG_FORMAT", "json")
    setup_logging("INFO")

    get_logger("qwalk.tests").info("Decided pair", tau=np.int64(3))

    line = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert (line["event"], line["tau"], line["level"]) == ("Decided pair", 3, "info")
    assert ("func_name" in line) is callsite
    if callsite:
        assert line["module"] == "test_core"
        assert line["func_name"] == "test_callsite_fields_only_in_development"


@pytest.mark.usefixtures("restore_logging")
def test_batch_runner_keeps_order_and_context() -> None:
    """Worker threads see the bound run context and results keep input order"""
    bind_run_context(input_digest="abc123")
    runner = BatchRunner(jobs=3)

    results = runner.map(
        lambda x: (x * x, structlog.contextvars.get_contextvars().get("input_digest")),
        list(range(8)),
    )

    assert results == [(x * x, "abc123") for x in range(8)]


def test_batch_runner_rejects_zero_jobs() -> None:
    """--jobs 0 is a parameter error"""
    with pytest.raises(ParameterError):
        BatchRunner(jobs=0)


@pytest.mark.usefixtures("restore_logging")
def test_log_level_flag(capsys: pytest.CaptureFixture[str]) -> None:
    """--log-level overrides QWALK_LOG for one run"""
    assert main(["--log-level", "info", "srg", "10", "3", "0", "1"]) == 0

    assert logging.getLogger().level == logging.INFO
    assert capsys.readouterr().out == "no peak state transfer (primitive)\n"


def test_canonical_digest_ignores_key_order() -> None:
    """Digests hash sorted compact JSON"""
    digest = canonical_digest({"n": 2, "edges": [[0, 1]]})

    assert digest == canonical_digest({"edges": [[0, 1]], "n": 2})
    assert digest == hashlib.sha256(b'{"edges":[[0,1]],"n":2}').hexdigest()


def test_atomic_write_leaves_no_temporary_files(tmp_path: Path) -> None:
    """The target appears whole and the temporary file is renamed away"""
    target = tmp_path / "nested" / "report.json"

    atomic_write_text(target, "{}\n")
    atomic_write_text(target, '{"n": 2}\n')

    assert target.read_text(encoding="utf-8") == '{"n": 2}\n'
    assert list(target.parent.iterdir()) == [target]


def test_render_frame_is_deterministic() -> None:
    """Equal states render to equal SVG bytes"""
    walk = arc_reversal_walk(cycle(4))
    state = star_state(walk, 0)

    first = render_frame(walk, state, title="t = 0")
    second = render_frame(walk, state, title="t = 0")

    assert first == second
    assert b"<svg" in first
