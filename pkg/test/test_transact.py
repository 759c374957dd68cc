import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import InvalidInput, UnsupportedPair
from src.models.certificate import ModeBounds
from src.models.norms import QuadraticNorm, StructuredNorm, WeightedLpNorm
from src.models.transaction import BetaKind, Prop4Variant
from src.norms import norm_eval_batch
from src.transact import (
    beta_exact,
    prop4_bound,
    prop5_structured,
    resolve_beta,
    sampled_sup,
    structured_beta,
)

DIM = 3
PROBES = 500
SOUNDNESS_SLACK = 1e-9

weight_entries = st.floats(min_value=0.25, max_value=4.0)
factor_entries = st.floats(min_value=-2.0, max_value=2.0, allow_subnormal=False)
weights = arrays(np.float64, (DIM,), elements=weight_entries)
factors = arrays(np.float64, (DIM, DIM), elements=factor_entries)


def norm_family(xi: np.ndarray, eta: np.ndarray, m: np.ndarray) -> list:
    return [
        WeightedLpNorm(p=1, weights=xi.tolist()),
        WeightedLpNorm(p=2, weights=eta.tolist()),
        WeightedLpNorm(p=math.inf, weights=eta.tolist()),
        QuadraticNorm(P=(m.T @ m + np.eye(DIM)).tolist()),
    ]


def probe_directions(n: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(11))
    return np.concatenate([np.eye(n), rng.standard_normal((PROBES, n))])


def assert_sound(source, target, value: float) -> None:
    xs = probe_directions(source.dim)
    ratios = norm_eval_batch(target, xs) / norm_eval_batch(source, xs)
    assert np.max(ratios) <= value * (1.0 + SOUNDNESS_SLACK)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(xi=weights, eta=weights, m=factors)
def test_exact_coefficients_are_sound_and_attained(xi, eta, m):
    family = norm_family(xi, eta, m)
    for source in family:
        for target in family:
            result = beta_exact(source, target)
            assert result.kind == BetaKind.EXACT
            assert_sound(source, target, result.value)
            sampled = sampled_sup(source, target, 2000)
            assert sampled.value <= result.value * (1.0 + SOUNDNESS_SLACK)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(xi=weights, eta=weights, m=factors)
def test_round_trip_product_is_at_least_one(xi, eta, m):
    family = norm_family(xi, eta, m)
    for source in family:
        for target in family:
            forward = resolve_beta(source, target).value
            backward = resolve_beta(target, source).value
            assert forward * backward >= 1.0 - 1e-9


def test_identical_norms_ignore_labels():
    a = WeightedLpNorm(p=1, weights=[1.0, 2.0], label="a")
    b = WeightedLpNorm(p=1, weights=[1.0, 2.0], label="b")
    result = beta_exact(a, b)
    assert result.value == 1.0
    assert result.method == "identical"
    assert result.direction == ("a", "b")


def test_unweighted_closed_forms():
    l1 = WeightedLpNorm.unweighted(1, 4)
    l2 = WeightedLpNorm.unweighted(2, 4)
    linf = WeightedLpNorm.unweighted("inf", 4)
    assert beta_exact(l2, l1).value == pytest.approx(2.0)
    assert beta_exact(linf, l1).value == pytest.approx(4.0)
    assert beta_exact(linf, l2).value == pytest.approx(2.0)
    assert beta_exact(l1, l2).value == pytest.approx(1.0)
    assert beta_exact(l1, linf).value == pytest.approx(1.0)


def test_dimension_mismatch():
    with pytest.raises(InvalidInput):
        beta_exact(WeightedLpNorm.unweighted(1, 2), WeightedLpNorm.unweighted(1, 3))


def test_p3_has_no_exact_rule_but_resolves_soundly():
    source = WeightedLpNorm(p=3, weights=[1.0, 2.0, 0.5])
    target = WeightedLpNorm(p=1, weights=[1.0, 1.0, 3.0])
    with pytest.raises(UnsupportedPair):
        beta_exact(source, target)
    result = resolve_beta(source, target)
    assert result.kind == BetaKind.PAPER_BOUND
    assert result.method == "chained-euclidean"
    assert_sound(source, target, result.value)


class TestWorkedExamples:
    def test_example1_coefficients(self, ex1_norms):
        # The published 1.796 and 1.05 are not reproduced by the printed factors
        assert resolve_beta(ex1_norms[2], ex1_norms[1]).value == pytest.approx(3.656311, abs=1e-5)
        assert resolve_beta(ex1_norms[1], ex1_norms[2]).value == pytest.approx(1.248911, abs=1e-5)

    def test_example2_coefficients(self, ex2_norms):
        assert resolve_beta(ex2_norms[1], ex2_norms[2]).value == pytest.approx(1.9079, abs=0.05)
        assert resolve_beta(ex2_norms[2], ex2_norms[1]).value == pytest.approx(10.4207, abs=0.05)

    def test_chua_coefficients(self, chua_off_norm, euclidean3):
        assert resolve_beta(chua_off_norm, euclidean3).value == pytest.approx(1.0)
        assert resolve_beta(euclidean3, chua_off_norm).value == pytest.approx(3.69645, abs=1e-5)

    def test_sampled_estimate_approaches_exact(self, ex1_norms):
        exact = resolve_beta(ex1_norms[2], ex1_norms[1]).value
        sampled = sampled_sup(ex1_norms[2], ex1_norms[1], 20000, seed=3)
        assert sampled.kind == BetaKind.SAMPLED_LOWER
        assert 0.99 * exact <= sampled.value <= exact * (1.0 + SOUNDNESS_SLACK)

    def test_sampling_is_reproducible(self, ex1_norms):
        first = sampled_sup(ex1_norms[1], ex1_norms[2], 500, seed=5)
        second = sampled_sup(ex1_norms[1], ex1_norms[2], 500, seed=5)
        assert first.value == second.value

    def test_sampled_values_cannot_certify(self, ex1_norms):
        sampled = sampled_sup(ex1_norms[1], ex1_norms[2], 100)
        assert not sampled.is_certified
        with pytest.raises(InvalidInput, match="sampled lower bound"):
            ModeBounds.from_results({1: -1.0, 2: -1.0}, {(1, 2): sampled})


class TestExponentChange:
    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(
        xi=weights,
        eta=weights,
        p=st.sampled_from([2.0, 3.0, math.inf]),
        q=st.sampled_from([1.0, 1.5]),
    )
    def test_corrected_bound_is_sound_both_ways(self, xi, eta, p, q):
        big = WeightedLpNorm(p=p, weights=xi.tolist())
        small = WeightedLpNorm(p=q, weights=eta.tolist())
        first = prop4_bound(p, xi, q, eta, 1)
        second = prop4_bound(p, xi, q, eta, 2)
        assert first.kind == BetaKind.PAPER_BOUND
        assert_sound(small, big, first.value)
        assert_sound(big, small, second.value)

    def test_corrected_factor_is_tight_for_unweighted_norms(self):
        ones = np.ones(4)
        bound = prop4_bound(2.0, ones, 1.0, ones, 2)
        exact = beta_exact(WeightedLpNorm.unweighted(2, 4), WeightedLpNorm.unweighted(1, 4))
        assert bound.value == pytest.approx(exact.value)
        assert bound.variant == Prop4Variant.CORRECTED

    def test_literal_variant_is_smaller(self):
        ones = np.ones(2)
        corrected = prop4_bound(2.0, ones, 1.0, ones, 2)
        literal = prop4_bound(2.0, ones, 1.0, ones, 2, variant="literal")
        assert literal.value == pytest.approx(2.0 - math.sqrt(2.0))
        assert literal.value < corrected.value
        assert literal.variant == Prop4Variant.LITERAL

    def test_max_norm_uses_weights_directly(self):
        bound = prop4_bound(math.inf, [4.0, 1.0], 1.0, [1.0, 1.0], 1)
        assert bound.value == pytest.approx(4.0)

    @pytest.mark.parametrize("p,q", [(1.0, 1.0), (1.0, 2.0), (2.0, 0.5)])
    def test_invalid_exponents(self, p, q):
        with pytest.raises(InvalidInput):
            prop4_bound(p, [1.0, 1.0], q, [1.0, 1.0], 1)

    def test_invalid_direction(self):
        with pytest.raises(InvalidInput):
            prop4_bound(2.0, [1.0], 1.0, [1.0], 3)


class TestStructured:
    def block_norm(self, scale: float) -> StructuredNorm:
        return StructuredNorm(
            partition=[2, 1],
            inner=[WeightedLpNorm(p=1, weights=[1.0, scale]), WeightedLpNorm.unweighted(2, 1)],
            outer=WeightedLpNorm(p=math.inf, weights=[1.0, scale]),
        )

    def test_prop5_scales_the_outer_norm(self):
        result = prop5_structured(1.0, [2.0, 3.0], WeightedLpNorm.unweighted(1, 2))
        assert result.value == pytest.approx(3.0)
        assert result.kind == BetaKind.PAPER_BOUND

    def test_prop5_rejects_non_positive(self):
        with pytest.raises(InvalidInput):
            prop5_structured(1.0, [0.0, 1.0], WeightedLpNorm.unweighted(1, 2))

    def test_structured_coefficient_is_sound(self):
        source, target = self.block_norm(1.0), self.block_norm(3.0)
        result = structured_beta(source, target)
        assert_sound(source, target, result.value)
        assert resolve_beta(source, target).value == pytest.approx(result.value)

    def test_partition_mismatch(self):
        other = StructuredNorm(
            partition=[1, 2],
            inner=[WeightedLpNorm.unweighted(2, 1), WeightedLpNorm.unweighted(2, 2)],
            outer=WeightedLpNorm.unweighted(2, 2),
        )
        with pytest.raises(UnsupportedPair):
            structured_beta(self.block_norm(1.0), other)

    def test_structured_to_flat_chains_through_euclidean(self):
        source = self.block_norm(2.0)
        target = WeightedLpNorm.unweighted(1, 3)
        result = resolve_beta(source, target)
        assert_sound(source, target, result.value)
