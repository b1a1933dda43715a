"""
Tests for the e.d.s. use case and its auto engine chain.
"""

from unittest.mock import Mock

import pytest


def _stub_engine(name, outcome=None, can_handle=True, complete=True):
    from app.domain.services import WedEngineInterface

    engine = Mock(spec=WedEngineInterface)
    engine.name = name
    engine.can_handle.return_value = can_handle
    engine.is_complete_for.return_value = complete
    engine.solve.return_value = outcome
    return engine


class TestSolveEdsUseCase:
    """Test single-engine runs."""

    @pytest.fixture
    def use_case(self, graph_repository, engines):
        """Use case over the in-memory repository."""
        from app.application.use_cases import SolveEdsUseCase

        return SolveEdsUseCase(graph_repository, engines)

    def test_brute_on_path(self, use_case):
        """Test the unique e.d.s. of P4."""
        from app.application.dto import SolveEdsRequest
        from app.domain.value_objects.solution import Engine, SolveStatus

        report = use_case.execute(SolveEdsRequest(graph_path="p4", engine="brute"))

        assert report.status is SolveStatus.SOLVED
        assert report.engine is Engine.BRUTE
        assert report.weight == 2
        assert report.vertices == [0, 3]
        assert report.exit_code == 0
        assert len(report.input_digest) == 64

    def test_report_payload(self, use_case):
        """Test the JSON payload of a solved run."""
        from app.application.dto import SolveEdsRequest

        report = use_case.execute(SolveEdsRequest(graph_path="p4", engine="s123"))
        payload = report.to_dict()

        assert payload["command"] == "eds"
        assert payload["status"] == "solved"
        assert payload["engine"] == "s123"
        assert payload["set"] == [0, 3]
        assert payload["weight"] == 2
        assert "timing_ms" not in payload
        assert "timing_ms" in report.to_dict(include_timing=True)

    def test_digest_is_stable(self, use_case):
        """Test that the same input gives the same digest."""
        from app.application.dto import SolveEdsRequest

        first = use_case.execute(SolveEdsRequest(graph_path="p4", engine="brute"))
        second = use_case.execute(SolveEdsRequest(graph_path="p4", engine="square"))
        assert first.input_digest == second.input_digest

    def test_no_eds(self, use_case):
        """Test C4 with the exhaustive engine."""
        from app.application.dto import SolveEdsRequest
        from app.domain.value_objects.solution import SolveStatus

        report = use_case.execute(SolveEdsRequest(graph_path="c4", engine="brute"))
        assert report.status is SolveStatus.NO_EDS
        assert report.weight is None
        assert report.exit_code == 1

    def test_not_chordal_is_an_error(self, use_case):
        """Test that the square engine reports non-chordal input as an error."""
        from app.application.dto import SolveEdsRequest
        from app.domain.value_objects.solution import SolveStatus

        report = use_case.execute(SolveEdsRequest(graph_path="c5", engine="square"))
        assert report.status is SolveStatus.ERROR
        assert report.message == "input-not-chordal"
        assert len(report.details["hole"]) == 5
        assert report.exit_code == 3

    def test_sidecar_weights_override(self, use_case, graph_repository):
        """Test sidecar weights replacing w lines and the unweighted switch."""
        from app.application.dto import SolveEdsRequest

        graph_repository.put("p3", "3 2\n0 1\n1 2\nw 1 9\n")
        graph_repository.put("p3.weights", "1 1\n")

        plain = use_case.execute(SolveEdsRequest(graph_path="p3", engine="brute"))
        override = use_case.execute(SolveEdsRequest(graph_path="p3", engine="brute", weights_path="p3.weights"))
        unweighted = use_case.execute(SolveEdsRequest(graph_path="p3", engine="brute", unweighted=True))

        assert plain.weight == 9
        assert override.weight == 1
        assert unweighted.weight == 1
        assert override.vertices == [1]

    def test_missing_graph(self, use_case):
        """Test that an unknown location is a parse error."""
        from app.application.dto import SolveEdsRequest
        from app.application.exceptions import ParseError

        with pytest.raises(ParseError):
            use_case.execute(SolveEdsRequest(graph_path="missing", engine="brute"))

    def test_unavailable_engine(self, graph_repository):
        """Test that asking for an unregistered engine is a validation error."""
        from app.application.dto import SolveEdsRequest
        from app.application.exceptions import ValidationError
        from app.application.use_cases import SolveEdsUseCase

        use_case = SolveEdsUseCase(graph_repository, {})
        with pytest.raises(ValidationError, match="not available"):
            use_case.execute(SolveEdsRequest(graph_path="p4", engine="brute"))


class TestAutoChain:
    """Test fallthrough in the auto engine chain."""

    def test_square_answers_first(self, graph_repository, engines):
        """Test that P4 is settled by the first engine."""
        from app.application.dto import SolveEdsRequest
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.solution import Engine

        report = SolveEdsUseCase(graph_repository, engines).execute(SolveEdsRequest(graph_path="p4"))
        assert report.engine is Engine.SQUARE
        assert report.details["attempts"] == ["square"]
        assert report.weight == 2

    def test_non_chordal_falls_through_to_brute(self, graph_repository, engines):
        """Test that C4 ends with the exhaustive engine."""
        from app.application.dto import SolveEdsRequest
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.solution import Engine, SolveStatus

        report = SolveEdsUseCase(graph_repository, engines).execute(SolveEdsRequest(graph_path="c4"))
        assert report.status is SolveStatus.NO_EDS
        assert report.engine is Engine.BRUTE
        assert report.details["attempts"] == ["square", "s123", "brute"]

    def test_four_sun_settled_by_s123(self, graph_repository, engines, four_sun):
        """Test that an inapplicable square hands over to the trusted s123 answer."""
        from app.application.dto import SolveEdsRequest
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.solution import Engine, SolveStatus

        graph_repository.save("sun", four_sun)
        report = SolveEdsUseCase(graph_repository, engines).execute(SolveEdsRequest(graph_path="sun"))

        assert report.status is SolveStatus.NO_EDS
        assert report.engine is Engine.S123
        assert report.details["attempts"] == ["square", "s123"]
        assert report.exit_code == 1

    def test_untrusted_no_eds_becomes_inapplicable(self):
        """Test that an incomplete negative answer is not reported as no-eds."""
        from app.domain.services import EngineOutcome
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.graph import Graph
        from app.domain.value_objects.solution import Engine, SolveStatus
        from app.domain.value_objects.weights import WeightMap

        s123 = _stub_engine(Engine.S123, EngineOutcome.no_eds(Engine.S123), complete=False)
        brute = _stub_engine(Engine.BRUTE, can_handle=False)
        use_case = SolveEdsUseCase(Mock(), {"s123": s123, "brute": brute})

        outcome, attempts = use_case.solve_auto(Graph.empty(3), WeightMap.uniform(3))

        assert outcome.status is SolveStatus.INAPPLICABLE
        assert outcome.message == "no engine could decide the instance"
        assert attempts == ["s123"]
        brute.solve.assert_not_called()

    def test_nothing_can_handle(self):
        """Test the chain when every engine declines."""
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.graph import Graph
        from app.domain.value_objects.solution import Engine, SolveStatus
        from app.domain.value_objects.weights import WeightMap

        brute = _stub_engine(Engine.BRUTE, can_handle=False)
        use_case = SolveEdsUseCase(Mock(), {"brute": brute})

        outcome, attempts = use_case.solve_auto(Graph.empty(2), WeightMap.uniform(2))
        assert outcome.status is SolveStatus.INAPPLICABLE
        assert attempts == []

    def test_custom_order(self, graph_repository, engines):
        """Test that the configured order is honoured."""
        from app.application.dto import SolveEdsRequest
        from app.application.use_cases import SolveEdsUseCase
        from app.domain.value_objects.solution import Engine

        use_case = SolveEdsUseCase(graph_repository, engines, auto_order=(Engine.BRUTE, Engine.SQUARE))
        report = use_case.execute(SolveEdsRequest(graph_path="p4"))
        assert report.engine is Engine.BRUTE
        assert report.details["attempts"] == ["brute"]


class TestRunReport:
    def test_weight_only_for_solved(self):
        """Test the report invariants."""
        from app.application.dto import RunReport
        from app.domain.value_objects.solution import SolveStatus

        with pytest.raises(ValueError):
            RunReport(command="eds", status=SolveStatus.NO_EDS, weight=3)
        with pytest.raises(ValueError):
            RunReport(command="eds", status=SolveStatus.SOLVED)

    def test_exit_codes(self):
        """Test exit codes by status and verdict."""
        from app.application.dto import RunReport
        from app.domain.value_objects.solution import SolveStatus

        assert RunReport(command="eds", status=SolveStatus.INAPPLICABLE).exit_code == 2
        assert RunReport(command="eds", status=SolveStatus.ERROR).exit_code == 3
        assert RunReport(command="check", status=SolveStatus.SOLVED, verdict=False).exit_code == 1
        assert RunReport(command="check", status=SolveStatus.SOLVED, verdict=True).exit_code == 0

    def test_error_helpers(self):
        """Test error message extraction."""
        from app.application.exceptions import ParseError, error_message, exit_code_from_error
        from app.domain.exceptions import InputTooLargeError

        assert error_message(ParseError("g.txt", 3, "bad")) == "g.txt:3: bad"
        assert error_message(InputTooLargeError("graph", 30, 24)) == "graph has size 30, limit is 24"
        assert error_message(RuntimeError()) == "RuntimeError"
        assert exit_code_from_error(RuntimeError("x")) == 3

    def test_exit_code_by_error_type(self):
        """Test that an inapplicable engine exits with 2 and other failures with 3."""
        from app.application.exceptions import ConfigurationError, ParseError, exit_code_from_error
        from app.domain.exceptions import (
            EngineInapplicableError,
            InputTooLargeError,
            NotChordalError,
            SquareNotChordalError,
            VerificationError,
        )

        assert exit_code_from_error(SquareNotChordalError((4, 5, 6, 7))) == 2
        assert exit_code_from_error(EngineInapplicableError("no structure")) == 2
        assert exit_code_from_error(NotChordalError((0, 1, 2, 3))) == 3
        assert exit_code_from_error(InputTooLargeError("graph", 30, 24)) == 3
        assert exit_code_from_error(VerificationError("bad")) == 3
        assert exit_code_from_error(ParseError("g.txt", 1, "bad")) == 3
        assert exit_code_from_error(ConfigurationError("bad")) == 3
