"""Validity of candidate dimension sequences under the counting recursion.

Given a relation profile and a finitely supported sequence a, the
filtration expansion gives c_n, and the recursion

    sum_i r_i c_(n-i) - d c_(n-1) = 1 + e_n      (r_0 = 1, r_1 = 0)

defines the defect sequence e_n.  A sequence is valid when it respects
the proven caps, e stays nonnegative, and both c and e stabilize; the
terminal value of 1 + e_n is (r + 1 - d) times the group order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import upper_caps
from .gs_check import RelationProfile, gs_lhs_poly
from .jennings import DimensionSequence, JenningsData, jennings_transform


class HorizonTooSmallError(ValueError):
    """The requested horizon ends before stabilization can be observed."""


class NotStabilizedError(ValueError):
    """Supplied sequence data does not end in its stabilized regime."""


def default_profile() -> RelationProfile:
    """Two generators, relation degrees {3, 7}."""
    return RelationProfile(2, (3, 7))


def e_sequence(
    a: DimensionSequence,
    profile: RelationProfile,
    horizon: int,
    data: JenningsData | None = None,
) -> tuple[int, ...]:
    """Defect values e_1..e_horizon from the counting recursion."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if data is None:
        data = jennings_transform(a)
    c = data.c_at
    out = []
    for n in range(1, horizon + 1):
        v = c(n) - profile.d * c(n - 1) - 1
        for k in profile.levels:
            v += c(n - k)
        out.append(v)
    return tuple(out)


def stabilized_defect(profile: RelationProfile, order: int) -> int:
    """Terminal value of e_n: (r + 1 - d) * order - 1."""
    return (profile.r + 1 - profile.d) * order - 1


@dataclass(frozen=True)
class ValidityReport:
    prime: int
    profile: RelationProfile
    a: DimensionSequence
    b: tuple[int, ...]
    c: tuple[int, ...]
    e: tuple[int, ...]
    horizon: int
    caps_ok: bool
    e_nonnegative: bool
    stabilized: bool
    order_exponent: int
    c_limit: int
    e_limit: int
    verdict: str
    first_failure: str | None

    @property
    def valid(self) -> bool:
        return self.verdict == "VALID"


def _caps_failure(a: DimensionSequence, profile: RelationProfile) -> str | None:
    """First cap violation, or None.  Caps are only asserted for profiles
    with two generators, two relations, and deepest-degree-3 comparison
    available (min level 3); and only at indices n < p - 1."""
    if profile.d != 2 or profile.r != 2 or (profile.levels and profile.levels[0] != 3):
        return None
    if not a.entries:
        return None
    limit = min(a.max_index, a.prime - 2)
    if limit < 1:
        return None
    caps = upper_caps(a.prime, limit, ztype_37=profile.levels == (3, 7))
    for n in range(1, limit + 1):
        if a.get(n) > caps.cap(n):
            return f"a_{n} = {a.get(n)} exceeds cap {caps.cap(n)}"
    return None


def is_valid(
    a: DimensionSequence,
    profile: RelationProfile | None = None,
    horizon_margin: int = 8,
) -> ValidityReport:
    """Full validity report for a candidate sequence.

    Checks run in a fixed order so the first failure is deterministic:
    caps, then monotonicity of c, then nonnegativity of e, then
    stabilization of both tails.
    """
    if profile is None:
        profile = default_profile()
    if horizon_margin < 1:
        raise HorizonTooSmallError("horizon margin must be >= 1")
    data = jennings_transform(a)
    n_stab = data.stabilization_index
    horizon = n_stab + max(profile.max_level, 1) + horizon_margin
    e = e_sequence(a, profile, horizon, data=data)
    order = data.order
    e_limit = stabilized_defect(profile, order)

    first_failure: str | None = None

    cap_fail = _caps_failure(a, profile)
    caps_ok = cap_fail is None
    if first_failure is None and cap_fail:
        first_failure = cap_fail

    c_monotone = all(x <= y for x, y in zip(data.c, data.c[1:]))
    if first_failure is None and not c_monotone:
        first_failure = "c sequence is not non-decreasing"

    e_nonnegative = all(v >= 0 for v in e)
    if first_failure is None and not e_nonnegative:
        n_bad = next(n for n, v in enumerate(e, start=1) if v < 0)
        first_failure = f"e_{n_bad} = {e[n_bad - 1]} is negative"

    stab_from = n_stab + max(profile.max_level, 1)
    stabilized = (
        data.c[-1] == order
        and all(v == e_limit for v in e[stab_from:])
    )
    if first_failure is None and not stabilized:
        first_failure = "tail values have not stabilized inside the horizon"

    verdict = "VALID" if first_failure is None else "INVALID"
    return ValidityReport(
        prime=a.prime,
        profile=profile,
        a=a,
        b=data.b,
        c=data.c,
        e=e,
        horizon=horizon,
        caps_ok=caps_ok,
        e_nonnegative=e_nonnegative,
        stabilized=stabilized,
        order_exponent=data.order_exponent,
        c_limit=order,
        e_limit=e_limit,
        verdict=verdict,
        first_failure=first_failure,
    )


def mildness_defect(
    a: DimensionSequence,
    profile: RelationProfile,
    horizon: int | None = None,
) -> tuple[int, ...]:
    """The e sequence read as the obstruction to mildness: all zeros
    through the horizon exactly when the presentation-side polynomial
    equals the filtration series there.  Any finite group eventually has
    e_n = (r + 1 - d)|G| - 1 > 0, so only infinite quotients are mild."""
    if horizon is None:
        data = jennings_transform(a)
        horizon = data.stabilization_index + profile.max_level + 1
        return e_sequence(a, profile, horizon, data=data)
    return e_sequence(a, profile, horizon)


def gs_equality_eval(
    a: DimensionSequence,
    profile: RelationProfile,
    t: Fraction | int,
    c: tuple[int, ...] | None = None,
    e: tuple[int, ...] | None = None,
) -> tuple[Fraction, Fraction]:
    """Both sides of the counting identity at a rational t in [0, 1).

    Left side: sum_k r_k t^k - d t + 1.  Right side: the reciprocal of
    the filtration polynomial plus the ratio of the e- and c-series, with
    the geometric tails summed in closed form.  Sequences c and e default
    to the recursion values; explicitly supplied ones (e.g. measured from
    a group algebra) must already be stabilized at their tail.
    """
    t = Fraction(t)
    if not 0 <= t < 1:
        raise ValueError("t must lie in [0, 1)")
    data = jennings_transform(a)
    p = a.prime
    order = data.order
    n_stab = data.stabilization_index
    # the deepest lag in the recursion is max(max_level, 1), so e_n is
    # constant for n > tail_start
    tail_start = n_stab + max(profile.max_level, 1)
    e_limit = stabilized_defect(profile, order)

    if c is None:
        c = data.c
    else:
        if len(c) <= n_stab or c[-1] != order:
            raise NotStabilizedError("supplied c sequence does not reach the group order")
    if e is None:
        e = e_sequence(a, profile, tail_start + 1, data=data)
    else:
        if len(e) <= tail_start or e[-1] != e_limit:
            raise NotStabilizedError("supplied e sequence does not reach its terminal value")

    lhs = gs_lhs_poly(profile)(t)

    if t == 0:
        return lhs, Fraction(1)

    def c_at(n: int) -> int:
        return c[n] if n < len(c) else order

    def e_at(n: int) -> int:
        return e[n - 1] if n - 1 < len(e) else e_limit

    c_series = sum((c_at(n) * t ** n for n in range(1, n_stab + 1)), Fraction(0))
    c_series += order * t ** (n_stab + 1) / (1 - t)
    e_series = sum((e_at(n) * t ** n for n in range(1, tail_start + 1)), Fraction(0))
    e_series += e_limit * t ** (tail_start + 1) / (1 - t)

    rhs = 1 / data.jennings_poly(t) + e_series / c_series
    return lhs, rhs
