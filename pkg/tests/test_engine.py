"""
Tests for the engine facade and its observers
"""
import json
from unittest.mock import Mock
import pytest
from app.engine import DumpObserver, Engine, LoggingObserver, render_dumps
from app.exceptions import FileOperationError
from app.pipelines import FIXTURES_DIR, PipelineRequest

BAD_BRAIDING = {"type": "category", "name": "bad", "cayley": [[0, 1], [1, 0]],
                "bicharacter": [["1", "1"], ["1", "2"]]}


@pytest.fixture
def bad_category(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(BAD_BRAIDING), encoding="utf-8")
    return path


def hopf_request(out, fmt="text"):
    return PipelineRequest("check-hopf-algebra", hopf=FIXTURES_DIR / "kz2.json", samples=1,
                           out=out, fmt=fmt)


class TestEngine:
    """Tests for Engine.run"""

    def test_default_observers(self):
        """Test the engine registers logging and dump observers"""
        engine = Engine()
        kinds = [type(o) for o in engine._observers]
        assert kinds == [LoggingObserver, DumpObserver]

    def test_register_and_unregister(self, output_dir):
        """Test a custom observer is notified until unregistered"""
        engine = Engine()
        observer = Mock()
        engine.register_observer(observer)
        request = hopf_request(output_dir)
        result = engine.run(request)
        observer.update.assert_called_once_with(request, result)
        engine.unregister_observer(observer)
        engine.run(request)
        observer.update.assert_called_once()

    def test_failing_observer_is_logged(self, output_dir):
        """Test an observer exception does not abort the run"""
        engine = Engine()
        observer = Mock()
        observer.update.side_effect = RuntimeError("boom")
        engine.register_observer(observer)
        assert engine.run(hopf_request(output_dir)).report.passed

    def test_failed_checks(self, bad_category, output_dir):
        """Test a failing category yields exit code 1"""
        request = PipelineRequest("check-category", category=bad_category, samples=1,
                                  out=output_dir)
        result = Engine().run(request)
        assert result.report.exit_code == 1
        assert "hexagon" in result.report.failed_checks()

    def test_certificate_failure_becomes_report(self, bad_category, output_dir):
        """Test a FalsificationError inside a pipeline becomes a failing report"""
        request = PipelineRequest("centralize", category=bad_category, samples=1, out=output_dir)
        result = Engine().run(request)
        assert not result.report.passed


class TestDumpObserver:
    """Tests for DumpObserver"""

    def test_writes_dump_and_report(self, output_dir):
        """Test dumps and the rendered report land in the output directory"""
        Engine().run(hopf_request(output_dir, "json"))
        dump = json.loads((output_dir / "check-hopf-algebra.dump.json").read_text(encoding="utf-8"))
        assert dump["hopf"]["name"] == "kZ2"
        report = json.loads((output_dir / "check-hopf-algebra.report.json").read_text(encoding="utf-8"))
        assert report["summary"]["status"] == "PASS"

    def test_no_dump_without_data(self, output_dir):
        """Test check-category writes only the report"""
        request = PipelineRequest("check-category", category=FIXTURES_DIR / "vec.json",
                                  samples=1, out=output_dir)
        Engine().run(request)
        assert not (output_dir / "check-category.dump.json").exists()
        assert (output_dir / "check-category.report.text").exists()

    def test_deterministic_bytes(self, tmp_path):
        """Test two runs write byte-identical files"""
        first, second = tmp_path / "a", tmp_path / "b"
        Engine().run(hopf_request(first))
        Engine().run(hopf_request(second))
        for name in ("check-hopf-algebra.dump.json", "check-hopf-algebra.report.text"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_unwritable_output(self, tmp_path):
        """Test an output path that is a file raises"""
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(FileOperationError):
            Engine().run(hopf_request(blocker))

    def test_render_dumps_sorted(self):
        """Test dump rendering sorts keys"""
        assert render_dumps({"b": 1, "a": 2}).decode("utf-8") == '{\n  "a": 2,\n  "b": 1\n}\n'
