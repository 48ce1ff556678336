"""Admissible integer sequences with exact factorials and generalized binomials.

A sequence F is *admissible* when F_n >= 1 for every n >= 1 (F_0 may be 0).
Each admissible F induces an exact generalized Pascal triangle through the
F-factorial F_n! = F_1 * F_2 * ... * F_n and the F-binomial

    (n choose k)_F = F_n! / (F_k! * F_{n-k}!).

F = naturals recovers ordinary binomials, F_n = (q^n - 1)/(q - 1) the
Gaussian q-binomials, and F = fibonacci the fibonomial triangle.  All
arithmetic is exact big-integer arithmetic; every division is checked and a
non-zero remainder raises instead of silently truncating.

A sequence is *GCD-morphic* when gcd(F_n, F_m) = F_{gcd(n, m)} for all
n, m >= 1; ``gcd_morphic_check`` tests this exhaustively up to a bound.
The GCD-morphic shipped sequences have integral F-binomials throughout.
``lucas`` ships as a deliberate negative control: its first GCD-morphism
counterexample is (n, m) = (2, 4) and its first non-integral F-binomial is
(4 choose 2)_L = 84/9.

Every function here is pure: no shared mutable state, safe to call from
multiple threads, deterministic for equal inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional


class AdmissibilityError(ValueError):
    """A sequence value violates F_n >= 1 for some queried index n >= 1."""


class NonIntegralError(ArithmeticError):
    """An F-binomial division left a remainder (non-admissible sequence)."""


@dataclass(frozen=True)
class FSequence:
    """A named integer sequence n -> F_n supplied by a total callable.

    ``claims_gcd_morphic`` records the expectation tests hold the sequence
    to; it is never trusted by the arithmetic itself.
    """

    name: str
    value_at: Callable[[int], int] = field(repr=False)
    claims_gcd_morphic: bool = False

    def __repr__(self) -> str:
        return f"FSequence({self.name!r})"


@dataclass(frozen=True)
class GcdCounterexample:
    """Witness that gcd(F_n, F_m) != F_{gcd(n, m)}."""

    n: int
    m: int
    index_gcd: int  # gcd(n, m)
    value_gcd: int  # gcd(F_n, F_m)
    value_at_index_gcd: int  # F_{gcd(n, m)}


@dataclass(frozen=True)
class GcdMorphicReport:
    """Outcome of an exhaustive GCD-morphism check up to ``checked_bound``."""

    checked_bound: int
    holds: bool
    counterexample: Optional[GcdCounterexample] = None


def seq_eval(seq: FSequence, n: int) -> int:
    """Return F_n, enforcing admissibility at the queried index."""
    if n < 0:
        raise ValueError(f"sequence index must be >= 0, got {n}")
    value = seq.value_at(n)
    if n >= 1 and value < 1:
        raise AdmissibilityError(
            f"{seq.name}: F_{n} = {value} violates admissibility (F_n >= 1 for n >= 1)"
        )
    return value


def f_factorial(seq: FSequence, n: int) -> int:
    """Return F_n! = F_1 * F_2 * ... * F_n (empty product 1 for n = 0)."""
    if n < 0:
        raise ValueError(f"factorial index must be >= 0, got {n}")
    result = 1
    for i in range(1, n + 1):
        result *= seq_eval(seq, i)
    return result


def f_binomial(seq: FSequence, n: int, k: int) -> int:
    """Return the exact F-binomial (n choose k)_F; 0 outside 0 <= k <= n.

    Computed as an incremental product, multiplying by F_{n-i} and dividing
    by F_{i+1} at step i.  Each intermediate value is itself an F-binomial,
    so for GCD-morphic sequences every division is exact; a remainder means
    the sequence is not admissible for this triangle and raises.
    """
    if n < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    result = 1
    for i in range(k):
        result *= seq_eval(seq, n - i)
        divisor = seq_eval(seq, i + 1)
        result, remainder = divmod(result, divisor)
        if remainder:
            raise NonIntegralError(
                f"({n} choose {k})_F is not an integer for F = {seq.name}: "
                f"step {i + 1} leaves remainder {remainder} after dividing by "
                f"F_{i + 1} = {divisor}"
            )
    return result


def gcd_morphic_check(seq: FSequence, bound: int) -> GcdMorphicReport:
    """Exhaustively test gcd(F_n, F_m) = F_{gcd(n, m)} for 1 <= n <= m <= bound.

    Returns the first counterexample in lexicographic (n, m) order, if any.
    """
    if bound < 1:
        raise ValueError(f"check bound must be >= 1, got {bound}")
    values = [seq_eval(seq, i) for i in range(bound + 1)]
    for n in range(1, bound + 1):
        for m in range(n, bound + 1):
            value_gcd = gcd(values[n], values[m])
            index_gcd = gcd(n, m)
            if value_gcd != values[index_gcd]:
                witness = GcdCounterexample(n, m, index_gcd, value_gcd, values[index_gcd])
                return GcdMorphicReport(bound, False, witness)
    return GcdMorphicReport(bound, True, None)


# --- shipped sequences -------------------------------------------------------


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (F_n, F_{n+1}) without shared state
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def _fib_value(n: int) -> int:
    return _fib_pair(n)[0]


def _lucas_value(n: int) -> int:
    # L_n = 2*F_{n+1} - F_n
    a, b = _fib_pair(n)
    return 2 * b - a


def fibonacci() -> FSequence:
    """F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}; F_0 = 0."""
    return FSequence("fibonacci", _fib_value, claims_gcd_morphic=True)


def naturals() -> FSequence:
    """F_n = n."""
    return FSequence("naturals", lambda n: n, claims_gcd_morphic=True)


def ones() -> FSequence:
    """F_n = 1 for all n."""
    return FSequence("ones", lambda n: 1, claims_gcd_morphic=True)


def gaussian(q: int) -> FSequence:
    """F_n = (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1) for integer q >= 2."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"gaussian base must be an integer >= 2, got {q!r}")
    return FSequence(
        f"gauss(q={q})", lambda n: (q**n - 1) // (q - 1), claims_gcd_morphic=True
    )


def lucas() -> FSequence:
    """L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}; not GCD-morphic."""
    return FSequence("lucas", _lucas_value, claims_gcd_morphic=False)


SEQUENCE_NAMES = ("fib", "naturals", "ones", "gauss", "lucas")


def make_sequence(name: str, q: Optional[int] = None) -> FSequence:
    """Build a shipped sequence by CLI name; ``q`` is required iff name is 'gauss'."""
    if name == "gauss":
        if q is None:
            raise ValueError("sequence 'gauss' requires the base parameter q")
        return gaussian(q)
    if q is not None:
        raise ValueError(f"sequence {name!r} does not take a base parameter q")
    factories = {
        "fib": fibonacci,
        "naturals": naturals,
        "ones": ones,
        "lucas": lucas,
    }
    if name not in factories:
        known = ", ".join(SEQUENCE_NAMES)
        raise ValueError(f"unknown sequence {name!r} (known: {known})")
    return factories[name]()


def gcd_morphic_family() -> list[FSequence]:
    """The shipped sequences expected to pass the GCD-morphism gate."""
    return [fibonacci(), naturals(), ones(), gaussian(2), gaussian(3)]
