import json
import math

import pytest
from pydantic import ValidationError

from src.errors import ConfigError, InvalidInput, MissingBound
from src.models import (
    BetaKind,
    BetaResult,
    Certificate,
    CertificateKind,
    ModeBounds,
    QuadraticNorm,
    ReproRow,
    ReproStatus,
    StructuredNorm,
    WeightedLpNorm,
    describe_norm,
    dump_config,
    parse_config,
    parse_config_text,
    parse_norm_spec,
    parse_pair_key,
)


class TestNormModels:
    def test_max_norm_round_trip(self):
        norm = WeightedLpNorm(p="inf", weights=[1.0, 2.0])
        assert norm.is_max_norm
        dumped = norm.model_dump(mode="json")
        assert dumped["p"] == "inf"
        assert WeightedLpNorm.model_validate(dumped) == norm

    def test_integer_exponent_dumps_as_int(self):
        assert WeightedLpNorm(p=2.0, weights=[1.0]).model_dump(mode="json")["p"] == 2

    @pytest.mark.parametrize(
        "data",
        [{"p": 0.5, "weights": [1.0]}, {"p": 2, "weights": [1.0, 0.0]}, {"p": 2, "weights": []}],
    )
    def test_invalid_lp(self, data):
        with pytest.raises(ValidationError):
            WeightedLpNorm.model_validate(data)

    def test_theta_is_stored_as_gram_matrix(self):
        norm = QuadraticNorm.from_theta([[2.0, 0.0], [1.0, 1.0]])
        assert norm.P == [[5.0, 1.0], [1.0, 1.0]]
        assert not norm.is_diagonal

    def test_quadratic_validation(self):
        with pytest.raises(ValidationError):
            QuadraticNorm(P=[[1.0, 2.0], [2.0, 1.0]])
        with pytest.raises(ValidationError):
            QuadraticNorm.model_validate({"P": [[1.0]], "Theta": [[1.0]]})

    def test_structured_dimensions(self):
        inner = [WeightedLpNorm.unweighted(2, 2), QuadraticNorm.identity(1)]
        outer = WeightedLpNorm.unweighted(math.inf, 2)
        norm = StructuredNorm(partition=[2, 1], inner=inner, outer=outer)
        assert norm.dim == 3
        assert norm.blocks == [slice(0, 2), slice(2, 3)]
        assert describe_norm(norm) == "structured[2+1]"
        with pytest.raises(ValidationError):
            StructuredNorm(partition=[1, 1], inner=inner, outer=outer)
        with pytest.raises(ValidationError):
            StructuredNorm(partition=[2, 1], inner=inner, outer=QuadraticNorm(P=[[2.0, 1.0], [1.0, 2.0]]))

    def test_parse_norm_spec(self):
        spec = parse_norm_spec({"type": "lp", "p": 1, "weights": [1, 1]})
        assert isinstance(spec, WeightedLpNorm)
        assert describe_norm(spec) == "lp1[2]"
        assert describe_norm(spec.model_copy(update={"label": "taxi"})) == "taxi"


class TestBounds:
    def test_tuple_and_string_keys(self):
        bounds = ModeBounds(alpha={1: -1.0}, beta={(1, 2): 2.0, " 2 -> 1 ": 0.5})
        assert bounds.beta == {"1->2": 2.0, "2->1": 0.5}
        assert bounds.beta_for(2, 1) == 0.5
        with pytest.raises(MissingBound):
            bounds.alpha_for(3)

    def test_bad_key(self):
        with pytest.raises(ValidationError):
            ModeBounds(alpha={1: -1.0}, beta={"1 to 2": 2.0})
        assert parse_pair_key("3->-1") == (3, -1)

    def test_sampled_coefficients_cannot_certify(self):
        sampled = BetaResult(value=1.5, kind=BetaKind.SAMPLED_LOWER, direction=("a", "b"))
        assert not sampled.is_certified
        with pytest.raises(InvalidInput):
            ModeBounds.from_results({1: -1.0, 2: -1.0}, {(1, 2): sampled})

    def test_provenance(self):
        exact = BetaResult(value=1.5, kind=BetaKind.EXACT, direction=("a", "b"), method="quadratic")
        bounds = ModeBounds.from_results({1: -1.0, 2: -1.0}, {(1, 2): exact})
        assert bounds.sources == {"1->2": "exact:quadratic"}

    def test_certificate_satisfaction_is_strict(self):
        assert not Certificate.from_rate(CertificateKind.GENERAL, 0.0).satisfied
        assert Certificate.from_rate(CertificateKind.GENERAL, 1e-9).satisfied


class TestReproRow:
    def test_status_must_agree_with_values(self):
        with pytest.raises(ValidationError):
            ReproRow(claim="x", published=1.0, computed=2.0, tolerance=0.1, status=ReproStatus.MATCH)
        with pytest.raises(ValidationError):
            ReproRow(claim="x", computed=2.0, status=ReproStatus.MISMATCH)

    def test_non_finite_computed_is_a_mismatch(self):
        assert ReproRow.compare("x", 1.0, math.nan, 10.0).status == ReproStatus.MISMATCH
        assert ReproRow.compare("x", 1.0, 1.05, 0.1).status == ReproStatus.MATCH
        assert ReproRow.info("x", 3.0).status == ReproStatus.INFORMATIONAL


class TestRunConfig:
    def test_shipped_config_round_trip(self, config_dir):
        config = parse_config_text((config_dir / "example1.json").read_text(encoding="utf-8"))
        assert parse_config(json.loads(json.dumps(dump_config(config)))) == config

    def test_bad_matrix_names_the_mode(self):
        with pytest.raises(ConfigError) as info:
            parse_config({"modes": {"1": {"kind": "linear", "A": [[1.0, 2.0]]}}})
        assert info.value.path.startswith("modes.1")

    def test_unknown_norm(self):
        with pytest.raises(ConfigError) as info:
            parse_config({"norm_schedule": {"1": "missing"}})
        assert info.value.path == "norm_schedule.1"

    def test_norm_dimension_mismatch(self):
        data = {
            "modes": {"1": {"kind": "linear", "A": [[-1.0]]}},
            "norms": {"e": {"type": "lp", "p": 2, "weights": [1.0, 1.0]}},
        }
        with pytest.raises(ConfigError) as info:
            parse_config(data)
        assert info.value.path == "norms.e"

    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError):
            parse_config({"modez": {}})

    def test_invalid_json(self):
        with pytest.raises(ConfigError) as info:
            parse_config_text("{not json")
        assert info.value.path == ""

    def test_ltv2_needs_frequency(self):
        with pytest.raises(ConfigError) as info:
            parse_config({"certify": {"method": "ltv2"}})
        assert info.value.path.startswith("certify")
