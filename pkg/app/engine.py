"""
Engine facade that runs pipeline requests and notifies observers.
"""

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List
from app.exceptions import FalsificationError, FileOperationError
from app.logger import Logger
from app.monadal_config import config
from app.pipelines import PipelineFactory, PipelineRequest, PipelineResult
from app.report import Report, emit_report


def render_dumps(dumps: dict) -> bytes:
    """Dumps as deterministic JSON."""
    return (json.dumps(dumps, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode(
        config.default_encoding)


class EngineObserver(ABC):
    """Abstract base class for engine observers."""

    @abstractmethod
    def update(self, request: PipelineRequest, result: PipelineResult):
        """Called when a pipeline has finished."""
        pass


class LoggingObserver(EngineObserver):
    """Observer that logs reports."""

    def __init__(self):
        self.logger = Logger()

    def update(self, request: PipelineRequest, result: PipelineResult):
        self.logger.log_checks(result.report.failures)
        self.logger.log_pipeline(result.report)


class DumpObserver(EngineObserver):
    """Observer that writes dumps and the rendered report to the output directory."""

    def __init__(self):
        self.logger = Logger()

    def output_dir(self, request: PipelineRequest) -> Path:
        return Path(request.out) if request.out is not None else config.get_output_dir()

    def update(self, request: PipelineRequest, result: PipelineResult):
        out = self.output_dir(request)
        try:
            out.mkdir(parents=True, exist_ok=True)
            if result.dumps:
                (out / f"{request.command}.dump.json").write_bytes(render_dumps(result.dumps))
            (out / f"{request.command}.report.{request.fmt}").write_bytes(
                emit_report(result.report, request.fmt))
            self.logger.debug(f"Dumps written to {out}")
        except OSError as e:
            raise FileOperationError(f"Failed to write dumps to {out}: {e}")


class Engine:
    """Runs pipelines with the observer pattern."""

    def __init__(self):
        self.logger = Logger()
        self._observers: List[EngineObserver] = []

        # Register default observers
        self.register_observer(LoggingObserver())
        self.register_observer(DumpObserver())

    def register_observer(self, observer: EngineObserver):
        """Register an observer."""
        self._observers.append(observer)

    def unregister_observer(self, observer: EngineObserver):
        """Unregister an observer."""
        if observer in self._observers:
            self._observers.remove(observer)

    def _notify_observers(self, request: PipelineRequest, result: PipelineResult):
        for observer in self._observers:
            try:
                observer.update(request, result)
            except FileOperationError:
                raise
            except Exception as e:
                self.logger.error(f"Observer notification failed: {e}")

    def run(self, request: PipelineRequest) -> PipelineResult:
        """
        Run one request.

        A failed certificate inside the pipeline becomes a failing result
        carrying the offending report; parse errors propagate.
        """
        pipeline = PipelineFactory.create_pipeline(request.command)
        self.logger.info(f"Running {request.command}")
        try:
            result = pipeline.run(request)
        except FalsificationError as e:
            self.logger.warning(f"{request.command} aborted: {e}")
            report = e.report
            if report is None:
                report = Report(request.command)
                report.expect("certificate", request.command, False, str(e))
            result = PipelineResult(report)
        self._notify_observers(request, result)
        return result
