"""The graded poset P(n, F): an ordinal sum of antichain levels.

For a sequence F, level k of P(n, F) is an antichain holding one element
per copy counted by the F-binomial (n-k choose k)_F; every element of
level k lies below every element of level k+1, and elements sharing a
level are incomparable.  Rank is the level index.

Levels exist for 0 <= k < n/2 always.  For even n the boundary level
k = n/2 is degenerate (it always has exactly one element, since
(n/2 choose n/2)_F = 1) and is controlled by a policy flag:

* ``"include"`` (default): keep the boundary level.  With F = naturals
  the Bell-like numbers then satisfy B_n = Fib(n+1).
* ``"exclude"``: drop it, so the top rank is ceil(n/2) - 1.

Whitney numbers of P(n, F) are the level sizes; the Stirling-style view
S(n, j, F) reads the same census at rank k = n - j; the Bell-like number
B_n(F) is the total size, i.e. the diagonal F-binomial sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import FSequence, f_binomial

POLICIES = ("include", "exclude")
DEFAULT_POLICY = "include"


def _check_policy(policy: str) -> None:
    if policy not in POLICIES:
        raise ValueError(f"degenerate-layer policy must be one of {POLICIES}, got {policy!r}")


def pnf_max_rank(n: int, policy: str = DEFAULT_POLICY) -> int:
    """Largest existing level index: floor(n/2) if including the boundary level."""
    if n < 1:
        raise ValueError(f"poset degree must be >= 1, got {n}")
    _check_policy(policy)
    return n // 2 if policy == "include" else (n - 1) // 2


def pnf_whitney(n: int, k: int, seq: FSequence, policy: str = DEFAULT_POLICY) -> int:
    """Number of elements at rank k: (n-k choose k)_F, or 0 beyond the top level."""
    if k < 0 or k > pnf_max_rank(n, policy):
        return 0
    return f_binomial(seq, n - k, k)


def pnf_whitney_vector(n: int, seq: FSequence, policy: str = DEFAULT_POLICY) -> list[int]:
    """The full rank census [W_0, ..., W_maxrank]."""
    return [pnf_whitney(n, k, seq, policy) for k in range(pnf_max_rank(n, policy) + 1)]


def pnf_stirling2(n: int, j: int, seq: FSequence, policy: str = DEFAULT_POLICY) -> int:
    """Stirling-style reading S(n, j, F) of the census, at rank k = n - j."""
    k = n - j
    if k < 0:
        return 0
    return pnf_whitney(n, k, seq, policy)


def pnf_bell(n: int, seq: FSequence, policy: str = DEFAULT_POLICY) -> int:
    """Total size of P(n, F): the diagonal sum of F-binomials over its levels.

    n = 0 is the empty-poset convention and returns 1.
    """
    if n < 0:
        raise ValueError(f"poset degree must be >= 0, got {n}")
    _check_policy(policy)
    if n == 0:
        return 1
    return sum(pnf_whitney_vector(n, seq, policy))


def pnf_bell_sequence(
    seq: FSequence, count: int, policy: str = DEFAULT_POLICY
) -> list[int]:
    """[B_1(F), ..., B_count(F)]."""
    if count < 1:
        raise ValueError(f"sequence length must be >= 1, got {count}")
    return [pnf_bell(n, seq, policy) for n in range(1, count + 1)]


@dataclass(frozen=True)
class PnFPoset:
    """P(n, F) with its degenerate-layer policy, bundling the module operations."""

    n: int
    seq: FSequence
    policy: str = DEFAULT_POLICY

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"poset degree must be >= 1, got {self.n}")
        _check_policy(self.policy)

    def max_rank(self) -> int:
        return pnf_max_rank(self.n, self.policy)

    def whitney(self, k: int) -> int:
        return pnf_whitney(self.n, k, self.seq, self.policy)

    def whitney_vector(self) -> list[int]:
        return pnf_whitney_vector(self.n, self.seq, self.policy)

    def stirling2(self, j: int) -> int:
        return pnf_stirling2(self.n, j, self.seq, self.policy)

    def bell(self) -> int:
        return pnf_bell(self.n, self.seq, self.policy)

    def level_sizes(self) -> list[int]:
        return self.whitney_vector()
