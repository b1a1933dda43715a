"""
Tests for seeded oracle campaigns.
"""

from unittest.mock import Mock

import pytest


def _spec(**overrides):
    from app.application.dto import CampaignSpec

    values = {"generator": "interval", "count": 6, "n": 9, "n_min": 3, "seed": 4, "engines": "square,brute"}
    values.update(overrides)
    return CampaignSpec(**values)


def _constant_engine(name, outcome):
    from app.domain.services import WedEngineInterface

    engine = Mock(spec=WedEngineInterface)
    engine.name = name
    engine.can_handle.return_value = True
    engine.solve.return_value = outcome
    return engine


class TestCampaignSpec:
    def test_lists_from_strings(self):
        """Test comma-separated engines and forbid lists."""
        from app.domain.value_objects.solution import Engine

        spec = _spec(generator="hfree", forbid="net, S_1_2_3")
        assert spec.engines == [Engine.SQUARE, Engine.BRUTE]
        assert spec.forbid == ["net", "S_1_2_3"]

    @pytest.mark.parametrize(
        "overrides",
        [
            {"n_min": 12},
            {"generator": "hfree"},
            {"generator": "x3c", "n": 7},
            {"engines": "square,greedy"},
            {"count": 0},
            {"colour": "blue"},
        ],
    )
    def test_invalid(self, overrides):
        """Test rejected specs."""
        from pydantic import ValidationError

        with pytest.raises(ValidationError):
            _spec(**overrides)


class TestRunCampaignUseCase:
    """Test campaign runs end to end."""

    def test_interval_engines_agree(self, engines):
        """Test that the square engine matches brute force on interval graphs."""
        from app.application.use_cases import RunCampaignUseCase

        result = RunCampaignUseCase(engines).execute(_spec(check_square_chordal=True))

        assert len(result.rows) == 6
        assert result.mismatches == []
        assert result.exit_code == 0
        for row in result.rows:
            assert 3 <= row.n <= 9
            assert set(row.results) == {"square", "brute"}

    def test_deterministic(self, engines):
        """Test that a seed reproduces the same rows."""
        from app.application.use_cases import RunCampaignUseCase, render_csv

        first = render_csv(RunCampaignUseCase(engines).execute(_spec()))
        second = render_csv(RunCampaignUseCase(engines).execute(_spec()))
        assert first == second

    def test_csv_header(self, engines):
        """Test the CSV column layout."""
        from app.application.use_cases import RunCampaignUseCase, render_csv

        text = render_csv(RunCampaignUseCase(engines).execute(_spec(count=2)))
        lines = text.splitlines()
        assert lines[0] == "index,n,m,square_status,square_weight,brute_status,brute_weight,agree,invariant_ok,note"
        assert len(lines) == 3
        assert lines[1].startswith("0,")

    def test_x3c_rows_carry_cover_note(self, engines):
        """Test that X3C campaigns compare existence with the cover."""
        from app.application.use_cases import RunCampaignUseCase

        spec = _spec(generator="x3c", n=6, n_min=1, triples=3, engines="brute", count=4)
        result = RunCampaignUseCase(engines).execute(spec)

        assert result.mismatches == []
        for row in result.rows:
            assert row.note in ("cover=yes", "cover=no")
            status, _ = row.results["brute"]
            assert (status == "solved") == (row.note == "cover=yes")

    def test_x3c_cover_guard(self, engines):
        """Test that an oversized triple list leaves the cover unknown."""
        from app.application.use_cases import RunCampaignUseCase

        spec = _spec(generator="x3c", n=6, n_min=1, triples=3, engines="brute", count=2)
        result = RunCampaignUseCase(engines, x3c_max_triples=1).execute(spec)

        assert [row.note for row in result.rows] == ["cover=unknown", "cover=unknown"]
        assert result.mismatches == []

    def test_disagreement_is_flagged(self, engines):
        """Test that a wrong engine produces mismatches and exit code 1."""
        from app.application.use_cases import RunCampaignUseCase
        from app.domain.services import EngineOutcome
        from app.domain.value_objects.solution import EdsSolution, Engine

        wrong = EngineOutcome.solved(Engine.S123, EdsSolution([0], 999, Engine.S123))
        mixed = {"brute": engines["brute"], "s123": _constant_engine(Engine.S123, wrong)}
        result = RunCampaignUseCase(mixed).execute(_spec(engines="s123,brute", count=3))

        assert len(result.mismatches) == 3
        assert result.exit_code == 1

    def test_require_applicable(self, engines):
        """Test that inapplicable answers fail when applicability is required."""
        from app.application.use_cases import RunCampaignUseCase
        from app.domain.services import EngineOutcome
        from app.domain.value_objects.solution import Engine

        refusing = _constant_engine(Engine.SQUARE, EngineOutcome.inapplicable(Engine.SQUARE, "square-not-chordal"))
        mixed = {"square": refusing, "brute": engines["brute"]}

        relaxed = RunCampaignUseCase(mixed).execute(_spec(count=2))
        strict = RunCampaignUseCase(mixed).execute(_spec(count=2, require_applicable=True))

        assert relaxed.mismatches == []
        assert len(strict.mismatches) == 2
        assert strict.rows[0].results["square"] == ("inapplicable", None)

    def test_exhausted_generator(self, engines):
        """Test that a failed sampler leaves a skipped row."""
        from app.application.use_cases import RunCampaignUseCase, render_csv

        spec = _spec(generator="hfree", forbid="P2", n=6, n_min=6, max_tries=2, count=1)
        result = RunCampaignUseCase(engines).execute(spec)

        row = result.rows[0]
        assert row.note == "generator exhausted"
        assert row.agree
        assert render_csv(result).splitlines()[1] == "0,0,0,skipped,,skipped,,true,true,generator exhausted"

    def test_parallel_matches_serial(self, engines):
        """Test that worker processes reproduce the serial rows."""
        from app.application.use_cases import RunCampaignUseCase
        from app.infrastructure.adapters import build_engines

        spec = _spec(count=4)
        serial = RunCampaignUseCase(engines).execute(spec)
        parallel = RunCampaignUseCase(engines, engine_factory=build_engines, workers=2).execute(spec)
        assert parallel.rows == serial.rows


class TestEvaluateInstance:
    def test_errors_never_agree(self):
        """Test that an engine error alone marks the row."""
        from app.application.use_cases import evaluate_instance
        from app.domain.services import EngineOutcome
        from app.domain.value_objects.solution import Engine

        failing = _constant_engine(Engine.SQUARE, EngineOutcome.error(Engine.SQUARE, "boom"))
        row = evaluate_instance(_spec(engines="square"), 0, {"square": failing})
        assert not row.agree
        assert row.results == {"square": ("error", None)}

    def test_missing_engine_is_skipped(self, engines):
        """Test that engines not provided are left out of the row."""
        from app.application.use_cases import evaluate_instance

        row = evaluate_instance(_spec(), 0, {"brute": engines["brute"]})
        assert set(row.results) == {"brute"}
        assert row.as_csv_fields(["square", "brute"])[3:5] == ["skipped", ""]
