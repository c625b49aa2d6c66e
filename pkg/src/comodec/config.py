"""Run-time knobs and the exception hierarchy shared by all modules."""

from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace

WEAK_SAMPLES_ENV = "COMODEC_WEAK_SAMPLES"


@dataclass(frozen=True)
class AnalysisConfig:
    verify_wedge: bool = False  # compute every wedge both ways and compare
    seed: int = 0  # sampling seed for weak-closedness probes
    weak_samples: int = 64

    @classmethod
    def from_env(cls, **overrides) -> "AnalysisConfig":
        cfg = cls()
        raw = os.environ.get(WEAK_SAMPLES_ENV)
        if raw:
            cfg = replace(cfg, weak_samples=int(raw))
        return replace(cfg, **overrides)


_current: contextvars.ContextVar[AnalysisConfig] = contextvars.ContextVar(
    "comodec_config", default=AnalysisConfig()
)


def current_config() -> AnalysisConfig:
    return _current.get()


@contextlib.contextmanager
def use_config(cfg: AnalysisConfig | None = None, **overrides):
    """Run a block under ``cfg`` (or the current config with ``overrides``)."""
    base = cfg if cfg is not None else current_config()
    token = _current.set(replace(base, **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


class ComodecError(Exception):
    pass


class InputError(ComodecError):
    """Malformed input document or structure constants (CLI exit code 2)."""


class AnalysisRefusal(ComodecError):
    """An analysis the engine declines to run on this input (exit code 1)."""


class UnsupportedFieldError(AnalysisRefusal):
    pass


class NonSplitError(AnalysisRefusal):
    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class ConsistencyError(ComodecError):
    """Two independent computations of the same object disagree (exit code 3).

    This always means an arithmetic bug in this package.
    """
