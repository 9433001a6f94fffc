"""Catalog of polynomial identities, each verified exactly in Q[l, x].

Both sides of every identity are assembled from the public family builders
(never from a shared derivation path), the residual LHS - RHS is computed
as an exact polynomial, and a case passes iff that residual is identically
zero -- not small, zero.  ``x`` stays symbolic in every polynomial identity
and ``l`` stays symbolic everywhere except the classical-limit checks,
which substitute l = 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .bipoly import BiPoly, binomial
from .series import EgfSeries
from .families import (
    Argument,
    FamilyId,
    FamilySpec,
    LambdaMode,
    build_egf,
    central_factorial_power,
    classical_value,
    deg_bernoulli2_alt_egf,
    deg_falling_factorial,
    falling_factorial,
    triangular_numbers,
)
from enum import Enum

_L = BiPoly.lam()
_X = BiPoly.x()
_ONE = BiPoly.const(1)
_SYM = Argument.symbolic()
_TWO = Fraction(2)


class UnknownIdentity(ValueError):
    """The requested identity name is not in the catalog."""


class IdentityId(Enum):
    """Every identity in the verification catalog, keyed by its CLI name."""

    EQ2 = "eq2"
    EQ4 = "eq4"
    EQ5_RECON = "eq5-reconstruction"
    EQ18_EQUIV = "eq18-equivalence"
    EQ21 = "eq21"
    EQ23 = "eq23"
    EQ25 = "eq25"
    THM2 = "thm2"
    THM2_COROLLARY = "thm2-corollary"
    THM3 = "thm3"
    THM4 = "thm4"
    B_SECOND_KIND_RELATION = "b-second-kind-relation"
    LIMITS_LAMBDA0 = "limits-lambda0"
    STIRLING_INVERSION = "stirling-inversion"
    COMPOSITIONAL_INVERSE = "compositional-inverse"


#: Accepted spellings beyond the canonical kebab names.
ALIASES: dict[str, IdentityId] = {
    "thm1": IdentityId.EQ23,
    "thm1-main": IdentityId.EQ23,
    "thm1-moreover": IdentityId.EQ21,
}


@dataclass(frozen=True)
class Case:
    """One verified index tuple: its indices and the exact residual polynomial."""

    indices: Mapping[str, object]
    residual: BiPoly

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    def to_json_dict(self) -> dict[str, object]:
        return {
            "indices": dict(self.indices),
            "status": "pass" if self.passed else "fail",
            "residual": self.residual.to_records(),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity over its index ranges."""

    identity: IdentityId
    max_n: int
    max_order: int | None
    trunc: int
    profile: str | None
    cases: tuple[Case, ...]
    wall_time_ms: float

    @property
    def all_pass(self) -> bool:
        return all(case.passed for case in self.cases)

    def failures(self) -> list[Case]:
        return [case for case in self.cases if not case.passed]

    def to_json_dict(self, include_timing: bool = False) -> dict[str, object]:
        out: dict[str, object] = {
            "identity": self.identity.value,
            "ranges": {
                "max_n": self.max_n,
                "max_order": self.max_order,
                "trunc": self.trunc,
            },
            "profile": self.profile,
            "cases": [case.to_json_dict() for case in self.cases],
        }
        if include_timing:
            out["wall_time_ms"] = round(self.wall_time_ms, 3)
        return out


# -- shared helpers -----------------------------------------------------------


def _series(family: FamilyId, trunc: int, order: Fraction | int = 1,
            argument: Argument = _SYM,
            lambda_mode: LambdaMode = LambdaMode()) -> "list[BiPoly]":
    return build_egf(
        FamilySpec(family, Fraction(order), argument, lambda_mode), trunc
    ).values()


def eq21_rhs_term(n: int, m: int, r: int) -> BiPoly:
    """The weight l^(n-m) * B2*_(n-m)^(r)(2x/l - r) expanded as a polynomial.

    Writing the order-r type 2 Bernoulli polynomial of degree j = n - m as
    sum_i c_i y^i, the weight is sum_i c_i (2x - r*l)^i l^(j-i); every power
    of l is nonnegative because i <= j, so the result lives in Q[l, x].
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if r < 1:
        raise ValueError(f"order must be a positive integer, got {r}")
    j = n - m
    poly = classical_value(FamilyId.TYPE2_DEG_BERNOULLI, j, order=r)
    by_degree: dict[int, Fraction] = {}
    for (dl, dx), c in poly.terms().items():
        if dl != 0:
            raise AssertionError("classical value unexpectedly contains l")
        by_degree[dx] = c
    replacement = _X * 2 - _L * r
    acc = BiPoly.zero()
    power = _ONE
    for i in range(j + 1):
        c = by_degree.get(i)
        if c:
            acc = acc + power * BiPoly({(j - i, 0): c})
        if i < j:
            power = power * replacement
    return acc


# -- identity checkers --------------------------------------------------------


def _check_eq23(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # b2*_{n,l}(x) = b_{n,l}^(1)(x) + b_{n,l}^(1)(x - 1)
    lhs = _series(FamilyId.TYPE2_DEG_BERNOULLI2, trunc)
    rhs_a = _series(FamilyId.DEG_BERNOULLI2, trunc)
    rhs_b = _series(FamilyId.DEG_BERNOULLI2, trunc, argument=Argument.shifted(-1))
    return [
        Case({"n": n}, lhs[n] - rhs_a[n] - rhs_b[n]) for n in range(max_n + 1)
    ]


def _check_eq21(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # sum_m b_{m,l}^(r)(x) S2(n,m)
    #   = sum_m C(n,m) [l^(n-m) B2*_(n-m)^(r)(2x/l - r)] S2(m+r,r)/C(m+r,r) 2^(m+r-n)
    cases = []
    for r in range(1, (max_order or 1) + 1):
        b_r = _series(FamilyId.DEG_BERNOULLI2, trunc, order=r)
        for n in range(max_n + 1):
            lhs = BiPoly.zero()
            for m in range(n + 1):
                s2 = triangular_numbers(FamilyId.STIRLING2, n, m).constant()
                if s2:
                    lhs = lhs + b_r[m] * s2
            rhs = BiPoly.zero()
            for m in range(n + 1):
                s2 = triangular_numbers(FamilyId.STIRLING2, m + r, r).constant()
                factor = (
                    binomial(n, m) * s2 / binomial(m + r, r) * _TWO ** (m + r - n)
                )
                if factor:
                    rhs = rhs + eq21_rhs_term(n, m, r) * factor
            cases.append(Case({"n": n, "r": r}, lhs - rhs))
    return cases


def _check_eq25(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # b2*_{n,l}(x) = sum_l C(n,l) b2*_{l,l} (x)_{n-l}
    poly_values = _series(FamilyId.TYPE2_DEG_BERNOULLI2, trunc)
    number_values = _series(
        FamilyId.TYPE2_DEG_BERNOULLI2, trunc, argument=Argument.numeric(0)
    )
    ff = [falling_factorial(n, _X) for n in range(max_n + 1)]
    cases = []
    for n in range(max_n + 1):
        rhs = BiPoly.zero()
        for m in range(n + 1):
            rhs = rhs + number_values[m] * ff[n - m] * binomial(n, m)
        cases.append(Case({"n": n}, poly_values[n] - rhs))
    return cases


def _check_thm2(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # sum_l b2*_{l,l}^(k)(x) S2_l(n,l)
    #   = sum_l C(n,l) 2^(l+k)/C(l+k,k) S2_{l/2}(l+k,k) (x-k)_{n-l,l}
    half = LambdaMode.scaled(Fraction(1, 2))
    cases = []
    for k in range(1, (max_order or 1) + 1):
        bstar = _series(FamilyId.TYPE2_DEG_BERNOULLI2, trunc, order=k)
        for n in range(max_n + 1):
            lhs = BiPoly.zero()
            for m in range(n + 1):
                lhs = lhs + bstar[m] * triangular_numbers(FamilyId.DEG_STIRLING2, n, m)
            rhs = BiPoly.zero()
            for m in range(n + 1):
                weight = binomial(n, m) * _TWO ** (m + k) / binomial(m + k, k)
                rhs = rhs + (
                    triangular_numbers(FamilyId.DEG_STIRLING2, m + k, k, half)
                    * deg_falling_factorial(n - m, _X - k)
                    * weight
                )
            cases.append(Case({"n": n, "k": k}, lhs - rhs))
    return cases


def _check_thm2_corollary(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # 2^(n+k) S2_{l/2}(n+k,k) = C(n+k,k) sum_l b2*_{l,l}^(k)(k) S2_l(n,l)
    half = LambdaMode.scaled(Fraction(1, 2))
    cases = []
    for k in range(1, (max_order or 1) + 1):
        bstar_at_k = _series(
            FamilyId.TYPE2_DEG_BERNOULLI2, trunc, order=k, argument=Argument.numeric(k)
        )
        for n in range(max_n + 1):
            lhs = triangular_numbers(FamilyId.DEG_STIRLING2, n + k, k, half) * (
                _TWO ** (n + k)
            )
            acc = BiPoly.zero()
            for m in range(n + 1):
                acc = acc + bstar_at_k[m] * triangular_numbers(
                    FamilyId.DEG_STIRLING2, n, m
                )
            rhs = acc * binomial(n + k, k)
            cases.append(Case({"n": n, "k": k}, lhs - rhs))
    return cases


def _check_thm3(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # b2*_{n,l}^(k)(x) = sum_l beta2*_{l,l}^(-k)(x) S1_l(n,l)
    cases = []
    for k in range(1, (max_order or 1) + 1):
        bstar = _series(FamilyId.TYPE2_DEG_BERNOULLI2, trunc, order=k)
        beta = _series(FamilyId.TYPE2_DEG_BERNOULLI, trunc, order=-k)
        for n in range(max_n + 1):
            rhs = BiPoly.zero()
            for m in range(n + 1):
                rhs = rhs + beta[m] * triangular_numbers(FamilyId.DEG_STIRLING1, n, m)
            cases.append(Case({"n": n, "k": k}, bstar[n] - rhs))
    return cases


def _check_thm4(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # sum_{m=k..n} sum_{l=k..m} T_l(l,k) S1_l(m,l) C(n,m) (k/2)_{n-m}
    #   = sum_{m=k..n} S1_l(m,k) b_{n-m,l}^(k) C(n,m)
    cases = []
    for k in range(0, (max_order or 0) + 1):
        b_k = _series(
            FamilyId.DEG_BERNOULLI2, trunc, order=k, argument=Argument.numeric(0)
        )
        for n in range(k, max_n + 1):
            lhs = BiPoly.zero()
            for m in range(k, n + 1):
                inner = BiPoly.zero()
                for j in range(k, m + 1):
                    inner = inner + (
                        triangular_numbers(FamilyId.DEG_CENTRAL_FACTORIAL, j, k)
                        * triangular_numbers(FamilyId.DEG_STIRLING1, m, j)
                    )
                lhs = lhs + inner * falling_factorial(n - m, Fraction(k, 2)) * binomial(n, m)
            rhs = BiPoly.zero()
            for m in range(k, n + 1):
                rhs = rhs + (
                    triangular_numbers(FamilyId.DEG_STIRLING1, m, k)
                    * b_k[n - m]
                    * binomial(n, m)
                )
            cases.append(Case({"n": n, "k": k}, lhs - rhs))
    return cases


def _check_eq2(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # B2*_n(x) = 2^(n-1) B_n((x+1)/2)
    type2 = _series(FamilyId.TYPE2_BERNOULLI, trunc)
    bernoulli = _series(FamilyId.BERNOULLI_ORDER_R, trunc)
    half_shift = (_X + 1) * Fraction(1, 2)
    cases = []
    for n in range(max_n + 1):
        rhs = bernoulli[n].subs_x_poly(half_shift) * _TWO ** (n - 1)
        cases.append(Case({"n": n}, type2[n] - rhs))
    return cases


def _check_eq4(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # E2*_n(x) = 2^n E_n((x+1)/2)
    type2 = _series(FamilyId.TYPE2_EULER, trunc)
    euler = _series(FamilyId.EULER, trunc)
    half_shift = (_X + 1) * Fraction(1, 2)
    cases = []
    for n in range(max_n + 1):
        rhs = euler[n].subs_x_poly(half_shift) * _TWO**n
        cases.append(Case({"n": n}, type2[n] - rhs))
    return cases


def _check_eq5_recon(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # x^n = sum_k T(n,k) x^[k]
    powers = [central_factorial_power(k) for k in range(max_n + 1)]
    cases = []
    for n in range(max_n + 1):
        acc = BiPoly.zero()
        for k in range(n + 1):
            t = triangular_numbers(FamilyId.CENTRAL_FACTORIAL, n, k)
            if t:
                acc = acc + t * powers[k]
        cases.append(Case({"n": n}, acc - _X**n))
    return cases


def _check_eq18_equiv(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # (t/log_l(1+t))^a (1+t)^x  ==  (l*t/((1+t)^(l/2)-(1+t)^(-l/2)))^a (1+t)^(x-l*a/2)
    cases = []
    for alpha in (Fraction(1), Fraction(2), Fraction(1, 2)):
        direct = _series(FamilyId.DEG_BERNOULLI2, trunc, order=alpha)
        alt = deg_bernoulli2_alt_egf(alpha, trunc=trunc).values()
        for n in range(max_n + 1):
            cases.append(Case({"alpha": str(alpha), "n": n}, direct[n] - alt[n]))
    return cases


def _check_b_second_kind(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # b_n^(r)(x) = B_n^(n-r+1)(x+1); the right-hand order may be <= 0.
    shifted = Argument.shifted(1)
    cases = []
    for r in range(1, (max_order or 1) + 1):
        classical_b = _series(
            FamilyId.DEG_BERNOULLI2, trunc, order=r, lambda_mode=LambdaMode.numeric(0)
        )
        for n in range(max_n + 1):
            rhs = build_egf(
                FamilySpec(
                    FamilyId.BERNOULLI_ORDER_R,
                    Fraction(n - r + 1),
                    shifted,
                    LambdaMode.numeric(0),
                ),
                trunc,
            ).value(n)
            cases.append(Case({"n": n, "r": r}, classical_b[n] - rhs))
    return cases


#: Classical-limit catalog: (family, extra index, degenerate spec, classical spec).
def _limit_pairs(trunc: int) -> list[tuple[dict[str, object], FamilySpec, FamilySpec]]:
    lam0 = LambdaMode.numeric(0)
    pairs: list[tuple[dict[str, object], FamilySpec, FamilySpec]] = []

    def seq(family: FamilyId, classical: FamilyId | None = None,
            order: Fraction | int = 1, **extra: object) -> None:
        deg = FamilySpec(family, Fraction(order), _SYM, LambdaMode())
        cls = FamilySpec(classical or family, Fraction(order) if classical is None else Fraction(1), _SYM, lam0)
        pairs.append(({"family": family.value, **extra}, deg, cls))

    seq(FamilyId.DEG_EXP)
    seq(FamilyId.DEG_LOG)
    seq(FamilyId.DEG_BERNOULLI, FamilyId.BERNOULLI_ORDER_R)
    seq(FamilyId.DEG_EULER, FamilyId.EULER)
    seq(FamilyId.DEG_DAEHEE, FamilyId.DAEHEE)
    seq(FamilyId.TYPE2_DEG_BERNOULLI, FamilyId.TYPE2_BERNOULLI)
    seq(FamilyId.TYPE2_DEG_BERNOULLI2)
    for alpha in (Fraction(1), Fraction(2), Fraction(1, 2)):
        seq(FamilyId.DEG_BERNOULLI2, order=alpha, alpha=str(alpha))
    return pairs


_LIMIT_TRIANGLES = [
    (FamilyId.DEG_STIRLING1, FamilyId.STIRLING1),
    (FamilyId.DEG_STIRLING2, FamilyId.STIRLING2),
    (FamilyId.DEG_CENTRAL_FACTORIAL, FamilyId.CENTRAL_FACTORIAL),
]


def _check_limits(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # Substituting l = 0 in each degenerate family reproduces its classical
    # counterpart -- the assertable form of every classical-limit statement.
    cases = []
    for extra, deg_spec, classical_spec in _limit_pairs(trunc):
        deg_values = build_egf(deg_spec, trunc).values()
        classical_values = build_egf(classical_spec, trunc).values()
        for n in range(max_n + 1):
            residual = deg_values[n].subs_lam(0) - classical_values[n]
            cases.append(Case({**extra, "n": n}, residual))
    for deg_family, classical_family in _LIMIT_TRIANGLES:
        for n in range(max_n + 1):
            for k in range(n + 1):
                residual = triangular_numbers(deg_family, n, k).subs_lam(
                    0
                ) - triangular_numbers(classical_family, n, k)
                cases.append(Case({"family": deg_family.value, "n": n, "k": k}, residual))
    return cases


def _check_stirling_inversion(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # sum_l S2_l(n,l) S1_l(l,m) = delta(n,m), symbolic l
    cases = []
    for n in range(max_n + 1):
        for m in range(n + 1):
            acc = BiPoly.zero()
            for j in range(m, n + 1):
                acc = acc + (
                    triangular_numbers(FamilyId.DEG_STIRLING2, n, j)
                    * triangular_numbers(FamilyId.DEG_STIRLING1, j, m)
                )
            delta = _ONE if n == m else BiPoly.zero()
            cases.append(Case({"n": n, "m": m}, acc - delta))
    return cases


def _check_compositional_inverse(max_n: int, max_order: int | None, trunc: int) -> list[Case]:
    # e_l(log_l(1+t)) = 1 + t  and  log_l(1 + (e_l(t) - 1)) = t, symbolic l
    e_series = build_egf(
        FamilySpec(FamilyId.DEG_EXP, Fraction(1), Argument.numeric(1), LambdaMode()),
        trunc,
    )
    log_series = build_egf(
        FamilySpec(FamilyId.DEG_LOG, Fraction(1), _SYM, LambdaMode()), trunc
    )
    one_plus_t = e_series.compose(log_series)
    back = log_series.compose(e_series - EgfSeries.one(trunc))
    cases = []
    for n in range(max_n + 1):
        expected = _ONE if n <= 1 else BiPoly.zero()
        cases.append(
            Case({"direction": "exp-after-log", "n": n}, one_plus_t.value(n) - expected)
        )
    for n in range(max_n + 1):
        expected = _ONE if n == 1 else BiPoly.zero()
        cases.append(
            Case({"direction": "log-after-exp", "n": n}, back.value(n) - expected)
        )
    return cases


# -- catalog and entry points -------------------------------------------------


@dataclass(frozen=True)
class _Entry:
    checker: Callable[[int, int | None, int], list[Case]]
    uses_order: bool
    quick: tuple[int, int | None, int]  # (max_n, max_order, trunc)
    full: tuple[int, int | None, int]


_CATALOG: dict[IdentityId, _Entry] = {
    IdentityId.EQ2: _Entry(_check_eq2, False, (8, None, 12), (20, None, 20)),
    IdentityId.EQ4: _Entry(_check_eq4, False, (8, None, 12), (20, None, 20)),
    IdentityId.EQ5_RECON: _Entry(_check_eq5_recon, False, (8, None, 12), (10, None, 16)),
    IdentityId.EQ18_EQUIV: _Entry(_check_eq18_equiv, False, (8, None, 12), (12, None, 16)),
    IdentityId.EQ21: _Entry(_check_eq21, True, (8, 3, 12), (12, 4, 16)),
    IdentityId.EQ23: _Entry(_check_eq23, False, (8, None, 12), (12, None, 16)),
    IdentityId.EQ25: _Entry(_check_eq25, False, (8, None, 12), (12, None, 16)),
    IdentityId.THM2: _Entry(_check_thm2, True, (8, 3, 12), (12, 4, 16)),
    IdentityId.THM2_COROLLARY: _Entry(
        _check_thm2_corollary, True, (8, 3, 12), (12, 4, 16)
    ),
    IdentityId.THM3: _Entry(_check_thm3, True, (8, 3, 12), (12, 4, 16)),
    IdentityId.THM4: _Entry(_check_thm4, True, (8, 3, 12), (12, 6, 16)),
    IdentityId.B_SECOND_KIND_RELATION: _Entry(
        _check_b_second_kind, True, (8, 3, 12), (10, 5, 16)
    ),
    IdentityId.LIMITS_LAMBDA0: _Entry(_check_limits, False, (8, None, 12), (12, None, 16)),
    IdentityId.STIRLING_INVERSION: _Entry(
        _check_stirling_inversion, False, (8, None, 12), (12, None, 16)
    ),
    IdentityId.COMPOSITIONAL_INVERSE: _Entry(
        _check_compositional_inverse, False, (8, None, 12), (16, None, 16)
    ),
}


def coerce_identity(name: "IdentityId | str") -> IdentityId:
    """Resolve an IdentityId, its kebab name, or an accepted alias."""
    if isinstance(name, IdentityId):
        return name
    try:
        return IdentityId(name)
    except ValueError:
        pass
    if name in ALIASES:
        return ALIASES[name]
    raise UnknownIdentity(f"unknown identity {name!r}")


def default_ranges(identity: "IdentityId | str", profile: str = "full") -> tuple[int, int | None, int]:
    """The (max_n, max_order, trunc) ranges an identity gets under a profile."""
    entry = _CATALOG[coerce_identity(identity)]
    if profile == "quick":
        return entry.quick
    if profile == "full":
        return entry.full
    raise ValueError(f"unknown profile {profile!r}")


def verify(
    identity: "IdentityId | str",
    max_n: int,
    max_order: int | None = None,
    trunc: int = 16,
    profile: str | None = None,
) -> VerificationReport:
    """Verify one identity over inclusive index ranges, returning exact residuals."""
    identity = coerce_identity(identity)
    entry = _CATALOG[identity]
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    if trunc < max_n:
        raise ValueError(f"truncation order {trunc} is below max_n {max_n}")
    if entry.uses_order:
        if max_order is None:
            max_order = entry.full[1]
        if max_order is None or max_order < 0:
            raise ValueError(f"identity {identity.value} needs a nonnegative order bound")
    start = time.perf_counter()
    cases = entry.checker(max_n, max_order, trunc)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        identity=identity,
        max_n=max_n,
        max_order=max_order if entry.uses_order else None,
        trunc=trunc,
        profile=profile,
        cases=tuple(cases),
        wall_time_ms=elapsed_ms,
    )


def verify_all(profile: str = "full") -> list[VerificationReport]:
    """Run the whole catalog under a profile; failures are reported, not raised."""
    reports = []
    for identity in IdentityId:
        max_n, max_order, trunc = default_ranges(identity, profile)
        reports.append(verify(identity, max_n, max_order, trunc, profile=profile))
    return reports
