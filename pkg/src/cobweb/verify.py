"""Cross-checks of every closed form against the brute-force oracle.

Each suite walks an input range, compares a closed form with an
independently computed value, and records mismatches (or exceptions
raised mid-check) as failures naming the identity, the inputs and both
values.  Poset suites scale with ``max_n``; the pure-arithmetic suites
(binomial algebra, GCD-morphism gate) always run at their full fixed
bounds since they are instant.

Chain enumerations that would blow the chain guard are reported as
skipped, never as passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import gridposet, oracle, pnfposet
from .sequences import (
    FSequence,
    f_binomial,
    f_factorial,
    gcd_morphic_check,
    gcd_morphic_family,
    lucas,
    make_sequence,
    seq_eval,
)

FBINOM_BOUND = 40
GCD_BOUND = 60
ORDER_LAW_BOUND = 8

# verify tokens: plain shipped names plus gauss with the base pre-bound
VERIFY_SEQ_TOKENS = ("fib", "naturals", "ones", "gauss2", "gauss3")
DEFAULT_VERIFY_SEQS = ("fib", "naturals", "ones", "gauss2")


def sequence_from_token(token: str) -> FSequence:
    if token not in VERIFY_SEQ_TOKENS:
        known = ", ".join(VERIFY_SEQ_TOKENS)
        raise ValueError(f"unknown verify sequence {token!r} (known: {known})")
    if token.startswith("gauss"):
        return make_sequence("gauss", int(token[5:]))
    return make_sequence(token)


@dataclass(frozen=True)
class CheckFailure:
    identity: str
    inputs: str
    expected: str
    actual: str


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    skipped: int = 0
    failures: list[CheckFailure] = field(default_factory=list)

    def check(self, identity: str, inputs: str, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append(
                CheckFailure(identity, inputs, repr(expected), repr(actual))
            )

    def fail(self, identity: str, inputs: str, expected, actual) -> None:
        self.cases += 1
        self.failures.append(CheckFailure(identity, inputs, str(expected), str(actual)))


def check_grid_counting(max_n: int) -> SuiteResult:
    """Size closed form vs raw enumeration; Whitney census sums to the size."""
    suite = SuiteResult("grid size and rank census")
    for n in range(2, max_n + 1):
        for k in range(n):
            enumerated = [
                (l, m) for l in range(k + 1) for m in range(l + 1, n + 1)
            ]
            suite.check(
                "grid size closed form = enumerated cardinality",
                f"(k, n) = ({k}, {n})",
                len(enumerated),
                gridposet.grid_size(k, n),
            )
            suite.check(
                "grid elements = enumerated set",
                f"(k, n) = ({k}, {n})",
                enumerated,
                gridposet.grid_elements(k, n),
            )
            whitney = gridposet.grid_whitney(k, n)
            suite.check(
                "sum of Whitney numbers = size",
                f"(k, n) = ({k}, {n})",
                gridposet.grid_size(k, n),
                sum(whitney),
            )
            suite.check(
                "Bell-like number = size",
                f"(k, n) = ({k}, {n})",
                gridposet.grid_size(k, n),
                gridposet.grid_bell(k, n),
            )
    return suite


def check_grid_chains(
    max_n: int,
    closed_form: Optional[Callable[[int, int], int]] = None,
    max_chains: Optional[int] = None,
) -> SuiteResult:
    """Exhaustive chain counts vs the closed form; gradedness; Catalan diagonal.

    ``closed_form`` is injectable (default: the ballot form) so a
    deliberately wrong formula can be shown to fail; the verifier's own
    fault-detection test relies on this seam.
    """
    if closed_form is None:
        closed_form = gridposet.grid_chain_count
    suite = SuiteResult("grid maximal chains vs oracle")
    for n in range(2, max_n + 1):
        for k in range(n):
            diagram = oracle.build_grid_hasse(k, n, max_index=max_n)
            try:
                report = oracle.enumerate_maximal_chains(diagram, max_chains=max_chains)
            except oracle.ScaleLimitError:
                suite.skipped += 1
                continue
            try:
                predicted = closed_form(k, n)
            except Exception as exc:  # a broken formula must surface as a failure
                suite.fail(
                    "chain-count closed form evaluates",
                    f"(k, n) = ({k}, {n})",
                    report.chain_count,
                    f"raised {type(exc).__name__}: {exc}",
                )
                continue
            suite.check(
                "chain-count closed form = exhaustive DFS count",
                f"(k, n) = ({k}, {n})",
                report.chain_count,
                predicted,
            )
            suite.check(
                "all maximal chains have k+n elements",
                f"(k, n) = ({k}, {n})",
                (k + n, k + n, True),
                (report.min_length, report.max_length, report.graded),
            )
            census = oracle.rank_level_counts(diagram)
            suite.check(
                "oracle rank census = Whitney vector",
                f"(k, n) = ({k}, {n})",
                gridposet.grid_whitney(k, n),
                census,
            )
    for n in range(1, max_n + 1):
        try:
            diagonal = closed_form(n - 1, n)
        except Exception as exc:
            suite.fail(
                "near-diagonal chain-count closed form evaluates",
                f"(k, n) = ({n - 1}, {n})",
                gridposet.catalan(n - 1),
                f"raised {type(exc).__name__}: {exc}",
            )
            continue
        suite.check(
            "near-diagonal chain count = Catalan number",
            f"n = {n}",
            gridposet.catalan(n - 1),
            diagonal,
        )
    return suite


def check_grid_order_laws(max_n: int) -> SuiteResult:
    """The componentwise relation is a partial order (exhaustive, small n)."""
    suite = SuiteResult("grid partial-order laws")
    for n in range(2, min(max_n, ORDER_LAW_BOUND) + 1):
        for k in range(n):
            elements = gridposet.grid_elements(k, n)
            leq = gridposet.grid_leq
            reflexive = all(leq(a, a) for a in elements)
            antisymmetric = all(
                not (leq(a, b) and leq(b, a))
                for a in elements
                for b in elements
                if a != b
            )
            transitive = all(
                not (leq(a, b) and leq(b, c)) or leq(a, c)
                for a in elements
                for b in elements
                for c in elements
            )
            suite.check(
                "reflexive, antisymmetric, transitive",
                f"(k, n) = ({k}, {n})",
                (True, True, True),
                (reflexive, antisymmetric, transitive),
            )
    return suite


def check_pnf_census(max_n: int, seqs: list[FSequence]) -> SuiteResult:
    """Oracle rank censuses of the layered poset equal the F-binomial levels."""
    suite = SuiteResult("layered poset census vs oracle")
    for seq in seqs:
        for n in range(1, max_n + 1):
            try:
                diagram = oracle.build_pnf_hasse(n, seq, max_index=max_n)
            except oracle.ScaleLimitError:
                suite.skipped += 1
                continue
            suite.check(
                "oracle rank census = F-binomial level sizes",
                f"(n, F) = ({n}, {seq.name})",
                pnfposet.pnf_whitney_vector(n, seq),
                oracle.rank_level_counts(diagram),
            )
            suite.check(
                "Bell-like number = total size",
                f"(n, F) = ({n}, {seq.name})",
                len(diagram.vertices),
                pnfposet.pnf_bell(n, seq),
            )
    return suite


def check_pnf_identities(max_n: int, seqs: list[FSequence]) -> SuiteResult:
    """Stirling/Whitney duality, policy step, Fibonacci specialization."""
    suite = SuiteResult("layered poset identities")
    for seq in seqs:
        for n in range(1, max_n + 1):
            for j in range(-1, n + 2):
                suite.check(
                    "S(n, j, F) = Whitney number at rank n - j",
                    f"(n, j, F) = ({n}, {j}, {seq.name})",
                    pnfposet.pnf_whitney(n, n - j, seq),
                    pnfposet.pnf_stirling2(n, j, seq),
                )
            step = pnfposet.pnf_bell(n, seq, "include") - pnfposet.pnf_bell(
                n, seq, "exclude"
            )
            suite.check(
                "including the degenerate level adds 1 for even n, 0 for odd",
                f"(n, F) = ({n}, {seq.name})",
                1 if n % 2 == 0 else 0,
                step,
            )
    fib_pair = [1, 1]  # Fib(1), Fib(2)
    nat = make_sequence("naturals")
    for n in range(1, max_n + 1):
        suite.check(
            "Bell-like numbers of naturals = shifted Fibonacci",
            f"n = {n}",
            fib_pair[-1],
            pnfposet.pnf_bell(n, nat),
        )
        fib_pair.append(fib_pair[-1] + fib_pair[-2])
    return suite


def check_pnf_chain_products(max_n: int, seqs: list[FSequence]) -> SuiteResult:
    """Chain count of an ordinal sum of antichains = product of level sizes."""
    suite = SuiteResult("layered poset chain products")
    for seq in seqs:
        for n in range(1, max_n + 1):
            product = 1
            for size in pnfposet.pnf_whitney_vector(n, seq):
                product *= size
            if product > oracle.DEFAULT_MAX_CHAINS:
                suite.skipped += 1
                continue
            diagram = oracle.build_pnf_hasse(n, seq, max_index=max_n)
            report = oracle.enumerate_maximal_chains(diagram)
            suite.check(
                "chain count = product of level sizes",
                f"(n, F) = ({n}, {seq.name})",
                product,
                report.chain_count,
            )
            suite.check(
                "layered poset is graded",
                f"(n, F) = ({n}, {seq.name})",
                True,
                report.graded,
            )
    return suite


def check_fbinom_algebra(seqs: list[FSequence]) -> SuiteResult:
    """Symmetry, edge rows, factorial recurrence; Pascal specialization."""
    suite = SuiteResult("F-binomial algebra")
    for seq in seqs:
        previous_factorial = 1
        for n in range(FBINOM_BOUND + 1):
            suite.check(
                "edge binomials are 1",
                f"(F, n) = ({seq.name}, {n})",
                (1, 1),
                (f_binomial(seq, n, 0), f_binomial(seq, n, n)),
            )
            for k in range(n + 1):
                suite.check(
                    "binomial symmetry",
                    f"(F, n, k) = ({seq.name}, {n}, {k})",
                    f_binomial(seq, n, n - k),
                    f_binomial(seq, n, k),
                )
            if n >= 1:
                current = f_factorial(seq, n)
                suite.check(
                    "factorial recurrence F_n! = F_{n-1}! * F_n",
                    f"(F, n) = ({seq.name}, {n})",
                    previous_factorial * seq_eval(seq, n),
                    current,
                )
                previous_factorial = current
    nat = make_sequence("naturals")
    pascal = [[1]]
    for n in range(1, 31):
        row = [1] + [pascal[-1][k - 1] + pascal[-1][k] for k in range(1, n)] + [1]
        pascal.append(row)
    for n in range(31):
        suite.check(
            "naturals binomials = Pascal recurrence",
            f"n = {n}",
            pascal[n],
            [f_binomial(nat, n, k) for k in range(n + 1)],
        )
        suite.check(
            "Pascal row sum = 2^n",
            f"n = {n}",
            2**n,
            sum(f_binomial(nat, n, k) for k in range(n + 1)),
        )
    return suite


def check_gcd_morphism() -> SuiteResult:
    """The shipped GCD-morphic family passes at the fixed bound; lucas fails."""
    suite = SuiteResult("GCD-morphism gate")
    for seq in gcd_morphic_family():
        report = gcd_morphic_check(seq, GCD_BOUND)
        suite.check(
            "sequence is GCD-morphic up to the bound",
            f"(F, N) = ({seq.name}, {GCD_BOUND})",
            True,
            report.holds,
        )
    negative = gcd_morphic_check(lucas(), GCD_BOUND)
    witness = negative.counterexample
    suite.check(
        "lucas fails with first counterexample (2, 4)",
        f"(F, N) = (lucas, {GCD_BOUND})",
        (False, 2, 4),
        (negative.holds, witness.n if witness else None, witness.m if witness else None),
    )
    return suite


def run_verify(
    max_n: int,
    seq_tokens: Optional[list[str]] = None,
    chain_closed_form: Optional[Callable[[int, int], int]] = None,
) -> list[SuiteResult]:
    """Run every suite; poset ranges scale with ``max_n``."""
    if max_n < 2:
        raise ValueError(f"verification scale must be >= 2, got {max_n}")
    tokens = list(seq_tokens) if seq_tokens else list(DEFAULT_VERIFY_SEQS)
    seqs = [sequence_from_token(token) for token in tokens]
    return [
        check_grid_counting(max_n),
        check_grid_chains(max_n, closed_form=chain_closed_form),
        check_grid_order_laws(max_n),
        check_pnf_census(max_n, seqs),
        check_pnf_identities(max_n, seqs),
        check_pnf_chain_products(max_n, seqs),
        check_fbinom_algebra(seqs),
        check_gcd_morphism(),
    ]
