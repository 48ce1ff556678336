"""The verification suites themselves, including fault detection."""

from math import comb

import pytest

from cobweb import verify


def broken_chain_count(k, n):
    """A tempting but wrong closed form; exact division, loud on remainder."""
    quotient, remainder = divmod((n + 1 - k) * comb(n + k, n), n)
    if remainder:
        raise ArithmeticError(f"non-integral chain count at ({k}, {n})")
    return quotient


class TestSuites:
    def test_all_green_at_desk_scale(self):
        suites = verify.run_verify(8)
        assert sum(suite.cases for suite in suites) > 0
        assert all(not suite.failures for suite in suites)

    def test_sequence_token_parsing(self):
        assert verify.sequence_from_token("gauss3").name == "gauss(q=3)"
        assert verify.sequence_from_token("fib").name == "fibonacci"
        with pytest.raises(ValueError, match="unknown verify sequence"):
            verify.sequence_from_token("lucas")

    def test_scale_validation(self):
        with pytest.raises(ValueError):
            verify.run_verify(1)

    def test_skips_are_reported_not_passed(self):
        suites = {s.name: s for s in verify.run_verify(10)}
        chains = suites["layered poset chain products"]
        assert chains.skipped > 0  # level products beyond the chain guard
        assert not chains.failures


class TestFaultInjection:
    def test_broken_formula_is_detected_at_0_2(self):
        suites = verify.run_verify(6, chain_closed_form=broken_chain_count)
        failures = [f for suite in suites for f in suite.failures]
        assert failures, "the wrong closed form must not verify"
        assert "(0, 2)" in failures[0].inputs

    def test_broken_formula_failure_modes(self):
        # non-integral already at (0, 2) ...
        with pytest.raises(ArithmeticError):
            broken_chain_count(0, 2)
        # ... and over-counts at (1, 2): 3 instead of the single chain
        assert broken_chain_count(1, 2) == 3

    def test_failure_records_name_identity_and_values(self):
        suites = verify.run_verify(4, chain_closed_form=broken_chain_count)
        failure = next(f for suite in suites for f in suite.failures)
        assert failure.identity
        assert "(k, n)" in failure.inputs
        assert failure.expected and failure.actual
