"""Named builders for the special-polynomial families of the package.

Each family is one generating-function recipe over the ring Q[l, x]; the
catalog (``list_families`` / the CLI ``list-families`` command) documents
every recipe.  ``l`` is the deformation parameter: classical families are
the degenerate recipes with the deformation switched off, and coefficients
are polynomial in ``l`` by construction, so the classical limit is the
exact substitution l -> 0.

Two construction rules keep negative powers of ``l`` out of the ring:

* log_l(1+t) = ((1+t)^l - 1)/l is built from its closed coefficient
  formula (value n is prod_{j=1..n-1}(l - j)), never by dividing a series
  by l;
* e_l^x(t) = (1 + l*t)^(x/l) is built from the degenerate falling-factorial
  recurrence (x)_{n,l} = (x)_{n-1,l} * (x - (n-1)l).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .bipoly import BiPoly, factorial
from .series import EgfSeries

_L = BiPoly.lam()
_X = BiPoly.x()
_ONE = BiPoly.const(1)
_ZERO = BiPoly.zero()
_HALF = Fraction(1, 2)


class UnsupportedOrder(ValueError):
    """The requested order parameter is outside the family's exact domain."""


class FamilyId(Enum):
    """Every family the package can build, keyed by its CLI name."""

    BERNOULLI_ORDER_R = "bernoulli-order-r"
    EULER = "euler"
    TYPE2_BERNOULLI = "type2-bernoulli"
    TYPE2_EULER = "type2-euler"
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    CENTRAL_FACTORIAL = "central-factorial"
    DAEHEE = "daehee"
    FALLING_FACTORIAL = "falling-factorial"
    DEG_FALLING_FACTORIAL = "deg-falling-factorial"
    DEG_EXP = "deg-exp"
    DEG_LOG = "deg-log"
    DEG_BERNOULLI = "deg-bernoulli"
    DEG_EULER = "deg-euler"
    DEG_CENTRAL_FACTORIAL = "deg-central-factorial"
    DEG_DAEHEE = "deg-daehee"
    DEG_BERNOULLI2 = "deg-bernoulli2"
    TYPE2_DEG_BERNOULLI2 = "type2-deg-bernoulli2"
    TYPE2_DEG_BERNOULLI = "type2-deg-bernoulli"
    DEG_STIRLING1 = "deg-stirling1"
    DEG_STIRLING2 = "deg-stirling2"
    CENTRAL_FACTORIAL_POWER = "central-factorial-power"


@dataclass(frozen=True)
class Argument:
    """The x-argument of a family: symbolic x, a rational, or x shifted by a rational."""

    kind: str = "symbolic"
    value: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("symbolic", "numeric", "shifted"):
            raise ValueError(f"unknown argument kind {self.kind!r}")
        object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def symbolic(cls) -> "Argument":
        return cls("symbolic")

    @classmethod
    def numeric(cls, value: Fraction | int) -> "Argument":
        return cls("numeric", Fraction(value))

    @classmethod
    def shifted(cls, value: Fraction | int) -> "Argument":
        return cls("shifted", Fraction(value))

    def to_poly(self) -> BiPoly:
        if self.kind == "symbolic":
            return _X
        if self.kind == "numeric":
            return BiPoly.const(self.value)
        return _X + self.value

    def label(self) -> str:
        if self.kind == "symbolic":
            return "x"
        if self.kind == "numeric":
            return str(self.value)
        if self.value < 0:
            return f"x-{-self.value}"
        return f"x+{self.value}"


@dataclass(frozen=True)
class LambdaMode:
    """How the deformation parameter enters: symbolic l, a rational, or l scaled by c."""

    kind: str = "symbolic"
    value: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("symbolic", "numeric", "scaled"):
            raise ValueError(f"unknown lambda mode {self.kind!r}")
        object.__setattr__(self, "value", Fraction(self.value))

    @classmethod
    def symbolic(cls) -> "LambdaMode":
        return cls("symbolic")

    @classmethod
    def numeric(cls, value: Fraction | int) -> "LambdaMode":
        return cls("numeric", Fraction(value))

    @classmethod
    def scaled(cls, value: Fraction | int) -> "LambdaMode":
        return cls("scaled", Fraction(value))

    def to_poly(self) -> BiPoly:
        if self.kind == "symbolic":
            return _L
        if self.kind == "numeric":
            return BiPoly.const(self.value)
        return _L * self.value

    def label(self) -> str:
        if self.kind == "symbolic":
            return "symbolic"
        if self.kind == "numeric":
            return str(self.value)
        return f"{self.value}*l"


@dataclass(frozen=True)
class FamilySpec:
    """Selects one generating function: family, order, x-argument, lambda mode."""

    family: FamilyId
    order: Fraction = Fraction(1)
    argument: Argument = field(default_factory=Argument)
    lambda_mode: LambdaMode = field(default_factory=LambdaMode)

    def __post_init__(self):
        object.__setattr__(self, "order", Fraction(self.order))


@dataclass(frozen=True)
class FamilyInfo:
    """Catalog entry: output kind, parameter surface, and the defining recipe."""

    kind: str  # "sequence" | "triangle" | "polynomial"
    order_domain: str  # "rational" | "integer" | "nonneg-integer" | "none"
    takes_argument: bool
    degenerate: bool
    recipe: str


CATALOG: dict[FamilyId, FamilyInfo] = {
    FamilyId.BERNOULLI_ORDER_R: FamilyInfo(
        "sequence", "rational", True, False, "(t/(e^t - 1))^r * e^(x*t)"
    ),
    FamilyId.EULER: FamilyInfo("sequence", "none", True, False, "2/(e^t + 1) * e^(x*t)"),
    FamilyId.TYPE2_BERNOULLI: FamilyInfo(
        "sequence", "none", True, False, "t/(e^t - e^(-t)) * e^(x*t)"
    ),
    FamilyId.TYPE2_EULER: FamilyInfo(
        "sequence", "none", True, False, "2/(e^t + e^(-t)) * e^(x*t)"
    ),
    FamilyId.STIRLING1: FamilyInfo(
        "triangle", "nonneg-integer", False, False, "(1/k!) * log(1+t)^k"
    ),
    FamilyId.STIRLING2: FamilyInfo(
        "triangle", "nonneg-integer", False, False, "(1/k!) * (e^t - 1)^k"
    ),
    FamilyId.CENTRAL_FACTORIAL: FamilyInfo(
        "triangle", "nonneg-integer", False, False, "(1/k!) * (e^(t/2) - e^(-t/2))^k"
    ),
    FamilyId.DAEHEE: FamilyInfo("sequence", "none", True, False, "(log(1+t)/t) * (1+t)^x"),
    FamilyId.FALLING_FACTORIAL: FamilyInfo(
        "sequence", "none", True, False, "(1+t)^x  [value n is (x)_n]"
    ),
    FamilyId.DEG_FALLING_FACTORIAL: FamilyInfo(
        "sequence", "none", True, True, "e_l^x(t)  [value n is (x)_{n,l}]"
    ),
    FamilyId.DEG_EXP: FamilyInfo(
        "sequence", "none", True, True, "e_l^x(t) = (1 + l*t)^(x/l)"
    ),
    FamilyId.DEG_LOG: FamilyInfo(
        "sequence", "none", False, True, "log_l(1+t) = ((1+t)^l - 1)/l"
    ),
    FamilyId.DEG_BERNOULLI: FamilyInfo(
        "sequence", "none", True, True, "t/(e_l(t) - 1) * e_l^x(t)"
    ),
    FamilyId.DEG_EULER: FamilyInfo(
        "sequence", "none", True, True, "2/(e_l(t) + 1) * e_l^x(t)"
    ),
    FamilyId.DEG_CENTRAL_FACTORIAL: FamilyInfo(
        "triangle", "nonneg-integer", False, True, "(1/k!) * (e_l^(1/2)(t) - e_l^(-1/2)(t))^k"
    ),
    FamilyId.DEG_DAEHEE: FamilyInfo(
        "sequence", "none", True, True, "(log_l(1+t)/t) * (1+t)^x"
    ),
    FamilyId.DEG_BERNOULLI2: FamilyInfo(
        "sequence", "rational", True, True, "(t/log_l(1+t))^a * (1+t)^x"
    ),
    FamilyId.TYPE2_DEG_BERNOULLI2: FamilyInfo(
        "sequence", "integer", True, True, "(((1+t) - (1+t)^(-1))/log_l(1+t))^a * (1+t)^x"
    ),
    FamilyId.TYPE2_DEG_BERNOULLI: FamilyInfo(
        "sequence", "integer", True, True, "(t/(e_l(t) - e_l^(-1)(t)))^a * e_l^x(t)"
    ),
    FamilyId.DEG_STIRLING1: FamilyInfo(
        "triangle", "nonneg-integer", False, True, "(1/k!) * log_l(1+t)^k"
    ),
    FamilyId.DEG_STIRLING2: FamilyInfo(
        "triangle", "nonneg-integer", False, True, "(1/k!) * (e_l(t) - 1)^k"
    ),
    FamilyId.CENTRAL_FACTORIAL_POWER: FamilyInfo(
        "polynomial", "none", False, False, "x^[n] = x*(x + n/2 - 1)*(x + n/2 - 2)*...*(x - n/2 + 1)"
    ),
}

TRIANGLE_FAMILIES = frozenset(f for f, info in CATALOG.items() if info.kind == "triangle")


# -- polynomial building blocks -------------------------------------------


def _step_product(n: int, arg: BiPoly, step: BiPoly) -> BiPoly:
    """arg * (arg - step) * ... * (arg - (n-1)*step); the empty product is 1."""
    if n < 0:
        raise ValueError(f"product length must be nonnegative, got {n}")
    prod = _ONE
    for j in range(n):
        prod = prod * (arg - step * j)
    return prod


def falling_factorial(n: int, arg: BiPoly | Fraction | int) -> BiPoly:
    """The classical falling factorial (arg)_n = arg*(arg-1)*...*(arg-n+1)."""
    if not isinstance(arg, BiPoly):
        arg = BiPoly.const(arg)
    return _step_product(n, arg, _ONE)


def deg_falling_factorial(
    n: int, arg: BiPoly | Fraction | int, lam: BiPoly | Fraction | int = _L
) -> BiPoly:
    """The degenerate falling factorial (arg)_{n,lam} with step lam instead of 1."""
    if not isinstance(arg, BiPoly):
        arg = BiPoly.const(arg)
    if not isinstance(lam, BiPoly):
        lam = BiPoly.const(lam)
    return _step_product(n, arg, lam)


def central_factorial_power(n: int) -> BiPoly:
    """The central factorial x^[n] = x * (x + n/2 - 1) * (x + n/2 - 2) * ... * (x - n/2 + 1)."""
    if n < 0:
        raise ValueError(f"central factorial power needs n >= 0, got {n}")
    if n == 0:
        return _ONE
    prod = _X
    for j in range(1, n):
        prod = prod * (_X + (Fraction(n, 2) - j))
    return prod


# -- series building blocks -------------------------------------------------


def deg_exp_egf(arg: BiPoly, lam: BiPoly, trunc: int) -> EgfSeries:
    """e_lam^arg(t): the EGF whose value at n is (arg)_{n,lam}."""
    coeffs = [_ONE]
    prod = _ONE
    for n in range(1, trunc + 1):
        prod = prod * (arg - lam * (n - 1))
        coeffs.append(prod * (1 / factorial(n)))
    return EgfSeries(coeffs)


def deg_log1p_egf(lam: BiPoly, trunc: int) -> EgfSeries:
    """log_lam(1+t): value at n >= 1 is prod_{j=1..n-1}(lam - j); value 0 at n = 0.

    This closed form keeps every coefficient polynomial in the deformation
    parameter, so the classical logarithm is the exact instance lam = 0.
    """
    coeffs = [_ZERO]
    prod = _ONE
    for n in range(1, trunc + 1):
        if n > 1:
            prod = prod * (lam - (n - 1))
        coeffs.append(prod * (1 / factorial(n)))
    return EgfSeries(coeffs)


def pow1p_egf(exponent: BiPoly, trunc: int) -> EgfSeries:
    """(1+t)^exponent for a polynomial exponent: coefficient n is (exponent)_n / n!."""
    coeffs = [_ONE]
    prod = _ONE
    for n in range(1, trunc + 1):
        prod = prod * (exponent - (n - 1))
        coeffs.append(prod * (1 / factorial(n)))
    return EgfSeries(coeffs)


def _one_plus_t(trunc: int) -> EgfSeries:
    coeffs = [_ONE, _ONE] + [_ZERO] * (trunc - 1)
    return EgfSeries(coeffs[: trunc + 1]) if trunc >= 1 else EgfSeries([_ONE])


def _require_integer(order: Fraction, family: FamilyId) -> int:
    if order.denominator != 1:
        raise UnsupportedOrder(
            f"{family.value} needs an integer order for exact coefficients, got {order}"
        )
    return order.numerator


def _require_unit_order(order: Fraction, family: FamilyId) -> None:
    if order != 1:
        raise UnsupportedOrder(f"{family.value} takes no order parameter (got {order})")


# -- EGF dispatch ------------------------------------------------------------


def build_egf(spec: FamilySpec, trunc: int) -> EgfSeries:
    """Build the truncated EGF selected by ``spec``.

    The value of the result at index n (``.value(n)``) is the n-th family
    member; coefficients are polynomial in ``l`` and ``x``.
    """
    if trunc < 0:
        raise ValueError(f"truncation order must be nonnegative, got {trunc}")
    if CATALOG[spec.family].kind == "polynomial":
        raise ValueError(
            f"{spec.family.value} is a polynomial family; use central_factorial_power()"
        )
    return _build_egf_cached(spec, trunc)


@lru_cache(maxsize=1024)
def _build_egf_cached(spec: FamilySpec, trunc: int) -> EgfSeries:
    fid = spec.family
    order = spec.order
    arg = spec.argument.to_poly()
    lam = spec.lambda_mode.to_poly()
    N = trunc

    if fid in TRIANGLE_FAMILIES:
        k = _require_integer(order, fid)
        if k < 0:
            raise UnsupportedOrder(f"{fid.value} needs a nonnegative column index, got {k}")
        kernel = _triangle_kernel(fid, lam, N)
        return kernel.pow(k).scale(1 / factorial(k))

    if fid in (FamilyId.DEG_EXP, FamilyId.DEG_FALLING_FACTORIAL):
        _require_unit_order(order, fid)
        return deg_exp_egf(arg, lam, N)

    if fid is FamilyId.FALLING_FACTORIAL:
        _require_unit_order(order, fid)
        return pow1p_egf(arg, N)

    if fid is FamilyId.DEG_LOG:
        _require_unit_order(order, fid)
        return deg_log1p_egf(lam, N)

    if fid in (FamilyId.DAEHEE, FamilyId.DEG_DAEHEE):
        _require_unit_order(order, fid)
        if fid is FamilyId.DAEHEE:
            lam = _ZERO
        kernel = deg_log1p_egf(lam, N + 1).shift_div_t(1)
        return kernel * pow1p_egf(arg, N)

    if fid is FamilyId.DEG_BERNOULLI2:
        # (t/log_l(1+t))^a * (1+t)^x; any rational order a is exact because
        # the normalized kernel has constant term 1.
        kernel = deg_log1p_egf(lam, N + 1).shift_div_t(1).pow(-order)
        return kernel * pow1p_egf(arg, N)

    if fid is FamilyId.TYPE2_DEG_BERNOULLI2:
        # (((1+t) - (1+t)^(-1)) / log_l(1+t))^a * (1+t)^x; the kernel has
        # constant term 2, so only integer orders stay inside Q[l, x].
        a = _require_integer(order, fid)
        numerator = (_one_plus_t(N + 1) - pow1p_egf(-_ONE, N + 1)).shift_div_t(1)
        kernel = numerator.divide(deg_log1p_egf(lam, N + 1).shift_div_t(1))
        return kernel.pow(a) * pow1p_egf(arg, N)

    if fid is FamilyId.TYPE2_DEG_BERNOULLI:
        # (t/(e_l(t) - e_l^(-1)(t)))^a * e_l^x(t); kernel constant term is 1/2,
        # so only integer orders stay inside Q[l, x].
        a = _require_integer(order, fid)
        diff = deg_exp_egf(_ONE, lam, N + 1) - deg_exp_egf(-_ONE, lam, N + 1)
        kernel = diff.shift_div_t(1).pow(-a)
        return kernel * deg_exp_egf(arg, lam, N)

    if fid is FamilyId.TYPE2_BERNOULLI:
        _require_unit_order(order, fid)
        diff = deg_exp_egf(_ONE, _ZERO, N + 1) - deg_exp_egf(-_ONE, _ZERO, N + 1)
        kernel = diff.shift_div_t(1).pow(-1)
        return kernel * deg_exp_egf(arg, _ZERO, N)

    if fid is FamilyId.BERNOULLI_ORDER_R:
        kernel = (deg_exp_egf(_ONE, _ZERO, N + 1) - EgfSeries.one(N + 1)).shift_div_t(1)
        return kernel.pow(-order) * deg_exp_egf(arg, _ZERO, N)

    if fid is FamilyId.DEG_BERNOULLI:
        _require_unit_order(order, fid)
        kernel = (deg_exp_egf(_ONE, lam, N + 1) - EgfSeries.one(N + 1)).shift_div_t(1)
        return kernel.pow(-1) * deg_exp_egf(arg, lam, N)

    if fid in (FamilyId.EULER, FamilyId.DEG_EULER):
        _require_unit_order(order, fid)
        if fid is FamilyId.EULER:
            lam = _ZERO
        denom = deg_exp_egf(_ONE, lam, N) + EgfSeries.one(N)
        return deg_exp_egf(arg, lam, N).scale(2).divide(denom)

    if fid is FamilyId.TYPE2_EULER:
        _require_unit_order(order, fid)
        denom = deg_exp_egf(_ONE, _ZERO, N) + deg_exp_egf(-_ONE, _ZERO, N)
        return deg_exp_egf(arg, _ZERO, N).scale(2).divide(denom)

    raise ValueError(f"no EGF recipe for family {fid!r}")


def _triangle_kernel(fid: FamilyId, lam: BiPoly, trunc: int) -> EgfSeries:
    if fid is FamilyId.STIRLING1:
        return deg_log1p_egf(_ZERO, trunc)
    if fid is FamilyId.DEG_STIRLING1:
        return deg_log1p_egf(lam, trunc)
    if fid is FamilyId.STIRLING2:
        return deg_exp_egf(_ONE, _ZERO, trunc) - EgfSeries.one(trunc)
    if fid is FamilyId.DEG_STIRLING2:
        return deg_exp_egf(_ONE, lam, trunc) - EgfSeries.one(trunc)
    if fid is FamilyId.CENTRAL_FACTORIAL:
        return deg_exp_egf(BiPoly.const(_HALF), _ZERO, trunc) - deg_exp_egf(
            BiPoly.const(-_HALF), _ZERO, trunc
        )
    if fid is FamilyId.DEG_CENTRAL_FACTORIAL:
        return deg_exp_egf(BiPoly.const(_HALF), lam, trunc) - deg_exp_egf(
            BiPoly.const(-_HALF), lam, trunc
        )
    raise ValueError(f"{fid!r} is not a triangle family")


# -- triangle tables ---------------------------------------------------------

_triangle_cache: dict[tuple[FamilyId, LambdaMode], tuple[int, list[list[BiPoly]]]] = {}
_triangle_lock = threading.Lock()


def triangular_numbers(
    family: FamilyId, n: int, k: int, lambda_mode: LambdaMode = LambdaMode()
) -> BiPoly:
    """Entry (n, k) of a connection-coefficient triangle.

    Outside the triangle 0 <= k <= n the value is the zero polynomial.
    Tables are memoized per (family, lambda mode) and grown on demand;
    cached values are immutable and safe to share across threads.
    """
    if family not in TRIANGLE_FAMILIES:
        raise ValueError(f"{family.value} is not a triangle family")
    if n < 0 or k < 0 or k > n:
        return _ZERO
    return _triangle_table(family, lambda_mode, n)[n][k]


def _triangle_table(
    family: FamilyId, mode: LambdaMode, nmax: int
) -> list[list[BiPoly]]:
    key = (family, mode)
    with _triangle_lock:
        cached = _triangle_cache.get(key)
        if cached is not None and cached[0] >= nmax:
            return cached[1]
    size = max(nmax, 8, 2 * cached[0] if cached else 0)
    kernel = _triangle_kernel(family, mode.to_poly(), size)
    table = [[_ZERO] * (size + 1) for _ in range(size + 1)]
    power = EgfSeries.one(size)
    table[0][0] = _ONE
    for k in range(1, size + 1):
        power = (power * kernel).scale(Fraction(1, k))
        for n in range(k, size + 1):
            table[n][k] = power.value(n)
    with _triangle_lock:
        existing = _triangle_cache.get(key)
        if existing is None or existing[0] < size:
            _triangle_cache[key] = (size, table)
        else:
            table = existing[1]
    return table


def clear_caches() -> None:
    """Drop all memoized tables and series (mainly for tests)."""
    with _triangle_lock:
        _triangle_cache.clear()
    _build_egf_cached.cache_clear()


# -- classical values and the alternative second-kind route ------------------


def classical_value(
    family: FamilyId,
    n: int,
    argument: Argument | None = None,
    order: Fraction | int = 1,
) -> BiPoly:
    """The classical (deformation switched off) family value at index n."""
    spec = FamilySpec(
        family,
        Fraction(order),
        argument if argument is not None else Argument(),
        LambdaMode.numeric(0),
    )
    return build_egf(spec, n).value(n)


def deg_bernoulli2_alt_egf(
    order: Fraction | int,
    argument: Argument | None = None,
    lambda_mode: LambdaMode | None = None,
    trunc: int = 16,
) -> EgfSeries:
    """Alternative route to the order-a degenerate Bernoulli polynomials of
    the second kind:

        (l*t / ((1+t)^(l/2) - (1+t)^(-l/2)))^a * (1+t)^(x - l*a/2)

    The denominator's coefficients are odd polynomials in ``l``, so dividing
    by ``l*t`` is exact polynomial division.  The series is built at symbolic
    ``l`` and the lambda mode is substituted coefficient-wise afterwards.
    """
    order = Fraction(order)
    argument = argument if argument is not None else Argument()
    lambda_mode = lambda_mode if lambda_mode is not None else LambdaMode()
    half_l = _L * _HALF
    diff = pow1p_egf(half_l, trunc + 1) - pow1p_egf(-half_l, trunc + 1)
    normalized = EgfSeries([c.div_lam() for c in diff.shift_div_t(1).coefficients])
    kernel = normalized.pow(-order)
    exponent = argument.to_poly() - half_l * order
    series = kernel * pow1p_egf(exponent, trunc)
    if lambda_mode.kind == "numeric":
        return EgfSeries([c.subs_lam(lambda_mode.value) for c in series.coefficients])
    if lambda_mode.kind == "scaled":
        return EgfSeries([c.scale_lam(lambda_mode.value) for c in series.coefficients])
    return series


def list_families() -> list[dict[str, str]]:
    """The family catalog as deterministic records (name, kind, order, recipe)."""
    rows = []
    for fid in FamilyId:
        info = CATALOG[fid]
        rows.append(
            {
                "name": fid.value,
                "kind": info.kind,
                "order": info.order_domain,
                "argument": "x" if info.takes_argument else "-",
                "deformation": "l" if info.degenerate else "-",
                "recipe": info.recipe,
            }
        )
    return rows
