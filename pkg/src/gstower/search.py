"""Minimal-order search for two-generator groups with relation degrees
{3, 7}, and the exhaustive cross-check of its optimality.

The greedy search pushes dimension counts into the lowest open index
(lowest indices shrink the comparison product fastest), re-checking the
relaxed inequality after every increment.  Because the greedy sequence
minimizes the product pointwise among cap-respecting sequences of equal
sum, a violated greedy stage rules out every sequence of that sum; the
brute-force routine verifies this downstream of nothing, by direct
enumeration with exact witnesses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bounds import CapProfile, upper_caps
from .gs_check import (
    CheckMode,
    RelationProfile,
    check_inequality,
    gs_lhs_poly,
    relaxed_product_poly,
)
from .jennings import DimensionSequence, is_prime
from .series import positive_on_open_unit_interval


class CapExhaustedError(RuntimeError):
    """Every cap through the validity limit was reached without the
    inequality holding."""


@dataclass(frozen=True)
class GreedyStep:
    """One violated stage of the greedy search."""

    sequence: tuple[int, ...]
    total: int
    witness: Fraction
    witness_value: Fraction


@dataclass(frozen=True)
class SearchResult:
    min_sum: int
    sequence: DimensionSequence
    violation_trace: tuple[GreedyStep, ...]
    ab: tuple[int, int]
    order_exponent_bound: int

    @property
    def base_exponent(self) -> int:
        """The (a, b)-independent part of the exponent bound."""
        return self.min_sum - 2


def _trim(seq: list[int]) -> tuple[int, ...]:
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def min_order_search(p: int, a: int = 1, b: int = 1) -> SearchResult:
    """Smallest cap-respecting sum for which the relaxed inequality holds,
    with the full violated-stage trace.

    The abelianization parameters (a, b) only add the prime-power-index
    correction 2(a-1) + (b-a) to the exponent bound: for p >= 11 those
    indices sit beyond the searched range and cannot interact with it.
    """
    if not is_prime(p) or p <= 7:
        raise ValueError("the cap table requires a prime p >= 11")
    if not 1 <= a <= b:
        raise ValueError("need 1 <= a <= b")
    profile = RelationProfile(2, (3, 7))
    caps = upper_caps(p, p - 2, ztype_37=True)
    seq = [0] * caps.n_max
    seq[0] = min(2, caps.cap(1))
    trace: list[GreedyStep] = []
    while True:
        dimseq = DimensionSequence.from_values(p, seq)
        report = check_inequality(profile, dimseq, CheckMode.RELAXED)
        if report.holds:
            break
        trace.append(
            GreedyStep(
                sequence=_trim(seq),
                total=sum(seq),
                witness=report.witness,
                witness_value=report.witness_value,
            )
        )
        for i in range(caps.n_max):
            if seq[i] < caps.cap(i + 1):
                seq[i] += 1
                break
        else:
            raise CapExhaustedError(
                f"all caps through n = {caps.n_max} exhausted at sum {sum(seq)}"
            )
    min_sum = sum(seq)
    exponent = min_sum + 2 * (a - 1) + (b - a)
    return SearchResult(
        min_sum=min_sum,
        sequence=DimensionSequence.from_values(p, seq),
        violation_trace=tuple(trace),
        ab=(a, b),
        order_exponent_bound=exponent,
    )


def greedy_fill(caps: CapProfile, total: int) -> tuple[int, ...]:
    """The sequence the greedy search would reach at the given sum:
    as much mass as the caps allow at the lowest indices."""
    if total > sum(caps.as_list()):
        raise CapExhaustedError(f"sum {total} exceeds the cap total")
    out = [0] * caps.n_max
    remaining = total
    for i in range(caps.n_max):
        take = min(remaining, caps.cap(i + 1))
        out[i] = take
        remaining -= take
        if remaining == 0:
            break
    return tuple(out)


@dataclass(frozen=True)
class BruteForceResult:
    prime: int
    sum_limit: int
    n_max: int
    examined: int
    all_violated: bool
    holds_examples: tuple[tuple[int, ...], ...]


# Rationals tried first when confirming a violation; 1/2 kills almost
# everything, the cluster near 0.55 handles the near-feasible sequences.
_FAST_POINTS = (
    Fraction(1, 2),
    Fraction(5, 9),
    Fraction(11, 20),
    Fraction(4, 7),
    Fraction(3, 5),
    Fraction(5, 8),
    Fraction(2, 3),
)


def brute_force_infeasibility(
    p: int, sum_limit: int, n_max: int = 9
) -> BruteForceResult:
    """Enumerate every cap-respecting sequence on indices 1..n_max with
    sum <= sum_limit and confirm each violates the relaxed inequality.

    Each violation is confirmed by an exact nonpositive evaluation at a
    rational point (fast path), falling back to the full positivity
    decision when no prepared point works.  Any sequence for which the
    inequality actually holds is reported, and all_violated set False.
    """
    if not is_prime(p) or p <= 7:
        raise ValueError("the cap table requires a prime p >= 11")
    profile = RelationProfile(2, (3, 7))
    caps = upper_caps(p, n_max, ztype_37=True)
    cap_list = caps.as_list()
    lhs = gs_lhs_poly(profile)

    points = _FAST_POINTS + tuple(
        Fraction(k, 20) for k in range(1, 20) if Fraction(k, 20) not in _FAST_POINTS
    )
    lhs_at = {t: lhs(t) for t in points}
    # factor_pow[n][e][t] = (1 - t^n)^e
    factor_pow: list[list[dict[Fraction, Fraction]]] = [[]]
    for n in range(1, n_max + 1):
        col = []
        for e in range(cap_list[n - 1] + 1):
            col.append({t: (1 - t ** n) ** e for t in points})
        factor_pow.append(col)

    def violated_at(seq: tuple[int, ...]) -> bool:
        for t in points:
            prod = Fraction(1)
            for n, e in enumerate(seq, start=1):
                if e:
                    prod *= factor_pow[n][e][t]
            if lhs_at[t] - prod <= 0:
                return True
        target = lhs - relaxed_product_poly(DimensionSequence.from_values(p, list(seq)))
        return not positive_on_open_unit_interval(target).holds

    examined = 0
    holds_examples: list[tuple[int, ...]] = []
    for seq in itertools.product(*(range(c + 1) for c in cap_list)):
        if sum(seq) > sum_limit:
            continue
        examined += 1
        if not violated_at(seq):
            holds_examples.append(_trim(list(seq)))
    return BruteForceResult(
        prime=p,
        sum_limit=sum_limit,
        n_max=n_max,
        examined=examined,
        all_violated=not holds_examples,
        holds_examples=tuple(holds_examples),
    )
