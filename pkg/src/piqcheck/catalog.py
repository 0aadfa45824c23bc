"""Registry of the Pi_q / psi identity catalog, evaluation, and verification.

The catalog holds 31 identities in two families: one relating the constants
Pi_q, Pi_{q^2}, Pi_{q^3}, Pi_{q^6} (with psi-quotient equivalents), the other
relating Pi_q, Pi_{q^2}, Pi_{q^5}, Pi_{q^10}.  Identities carrying a +/- sign
pattern are expanded into two records at registration; ids follow the stable
scheme ``EQ<label>`` with a ``+`` or ``-`` suffix for the sign variants.

Each record stores its two sides as expression trees (see :mod:`.dsl`).
Verification evaluates both sides as Laurent series in t (q = t^4) at a
requested order and reports either ``verified`` (the difference vanishes at
every comparable exponent), ``falsified`` (with the first failing exponent
and both coefficients), or ``error`` when evaluation could not produce a
meaningful comparison range.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import theta
from .dsl import (
    Add,
    Const,
    Div,
    Expr,
    Mul,
    Phi,
    Pi,
    PowInt,
    Psi,
    QPow,
    Sqrt,
    Sub,
    parse,
    to_text,
)
from .series import InsufficientPrecision, LaurentSeries, SeriesError

DEFAULT_ORDER = 200
"""Default t-order for verification (q-order 50)."""

MIN_ORDER = 8


class UnknownIdentity(KeyError):
    """Lookup of an id that is not in the registry."""


class EvalError(SeriesError):
    """A series error, annotated with the path to the failing expression node."""

    def __init__(self, path: str, cause: Exception):
        self.path = path
        self.cause = cause
        super().__init__(f"{path}: {cause}")


# ----------------------------------------------------------------------
# evaluation


def _eval(e: Expr, order: int, path: str) -> LaurentSeries:
    try:
        if isinstance(e, Pi):
            return theta.pi_product(e.k, order)
        if isinstance(e, Psi):
            return theta.psi(e.k, order)
        if isinstance(e, Phi):
            return theta.phi(e.k, order)
        if isinstance(e, QPow):
            exp = e.t_exponent
            return LaurentSeries.monomial(exp, order + max(exp, 0))
        if isinstance(e, Const):
            return LaurentSeries.constant(e.value, order)
    except SeriesError as err:
        raise EvalError(path, err) from err
    if isinstance(e, (Add, Sub, Mul, Div)):
        lhs = _eval(e.left, order, f"{path}/{type(e).__name__}.left")
        rhs = _eval(e.right, order, f"{path}/{type(e).__name__}.right")
        try:
            if isinstance(e, Add):
                return lhs + rhs
            if isinstance(e, Sub):
                return lhs - rhs
            if isinstance(e, Mul):
                return lhs * rhs
            return lhs / rhs
        except SeriesError as err:
            raise EvalError(f"{path}/{type(e).__name__}", err) from err
    if isinstance(e, PowInt):
        base = _eval(e.base, order, f"{path}/PowInt.base")
        try:
            return base**e.exponent
        except SeriesError as err:
            raise EvalError(f"{path}/PowInt", err) from err
    if isinstance(e, Sqrt):
        arg = _eval(e.arg, order, f"{path}/Sqrt.arg")
        try:
            return arg.sqrt()
        except SeriesError as err:
            raise EvalError(f"{path}/Sqrt", err) from err
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(e: Expr, order: int) -> LaurentSeries:
    """Evaluate an expression tree to a Laurent series with tracked order."""
    if order < MIN_ORDER:
        raise ValueError(f"order must be at least {MIN_ORDER}")
    return _eval(e, order, "")


# ----------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class IdentityRecord:
    """A registered identity: two expression trees plus catalog labelling."""

    id: str
    label: str
    lhs: Expr
    rhs: Expr
    sign_variant: str | None = None

    @property
    def lhs_text(self) -> str:
        return to_text(self.lhs)

    @property
    def rhs_text(self) -> str:
        return to_text(self.rhs)


@dataclass(frozen=True)
class FirstFailure:
    exponent: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of comparing the two sides of an identity as series."""

    id: str
    status: str                      # 'verified' | 'falsified' | 'error'
    order: int
    valid_order: int | None = None
    first_failure: FirstFailure | None = None
    error: str | None = None
    elapsed: float = 0.0


_RECORDS: dict[str, IdentityRecord] = {}


def _register(label: str, lhs_text: str, rhs_text: str, sign: str | None = None) -> None:
    ident = f"EQ{label}" + (sign or "")
    if ident in _RECORDS:
        raise ValueError(f"duplicate identity id {ident}")
    _RECORDS[ident] = IdentityRecord(
        id=ident, label=label, lhs=parse(lhs_text), rhs=parse(rhs_text), sign_variant=sign
    )


def _register_pm(label: str, lhs_template: str, rhs_template: str) -> None:
    for sign, pm, mp in (("+", "+", "-"), ("-", "-", "+")):
        lhs = lhs_template.replace("{pm}", pm).replace("{mp}", mp)
        rhs = rhs_template.replace("{pm}", pm).replace("{mp}", mp)
        _register(label, lhs, rhs, sign)


def _build_registry() -> None:
    # -- family in Pi_q, Pi_{q^2}, Pi_{q^3}, Pi_{q^6} (plus Pi_{q^4}, Pi_{q^9})
    _register("1-1", "Pi(q)^2 / (Pi(q^2) * Pi(q^4)) - Pi(q^2)^2 / Pi(q^4)^2", "4")
    _register(
        "1-6",
        "Pi(q^3)^2 + 3 * Pi(q) * Pi(q^9)",
        "sqrt(Pi(q) * Pi(q^9)) * (Pi(q) + 3 * Pi(q^9))",
    )
    _register(
        "11-2",
        "Pi(q^2) * Pi(q^3)^2 / (Pi(q^6) * Pi(q)^2)",
        "(Pi(q^2) - Pi(q^6)) / (Pi(q^2) + 3 * Pi(q^6))",
    )
    _register(
        "11-5",
        "Pi(q^2) * Pi(q^3)^4",
        "Pi(q^6) * (Pi(q^2) - Pi(q^6))^3 * (Pi(q^2) + 3 * Pi(q^6))",
    )
    _register(
        "11-6",
        "Pi(q^6) * Pi(q)^4",
        "Pi(q^2) * (Pi(q^2) - Pi(q^6)) * (Pi(q^2) + 3 * Pi(q^6))^3",
    )
    _register(
        "11-4",
        "sqrt(Pi(q^2) * Pi(q^6)) * (Pi(q)^2 - 3 * Pi(q^3)^2)",
        "sqrt(Pi(q) * Pi(q^3)) * (Pi(q^2)^2 + 3 * Pi(q^6)^2)",
    )
    _register(
        "11-7",
        "Pi(q^2)^2 * (Pi(q)^4 + 18 * Pi(q)^2 * Pi(q^3)^2 - 27 * Pi(q^3)^4)",
        "Pi(q) * Pi(q^3) * (Pi(q)^4 + 16 * Pi(q^2)^4)",
    )
    _register(
        "11-8",
        "Pi(q^6)^2 * (Pi(q)^4 - 6 * Pi(q)^2 * Pi(q^3)^2 - 3 * Pi(q^3)^4)",
        "Pi(q) * Pi(q^3) * (Pi(q^3)^4 + 16 * Pi(q^6)^4)",
    )
    _register_pm(
        "11-9",
        "Pi(q) * Pi(q^3) * (Pi(q)^2 {pm} 4 * Pi(q^2)^2)^2",
        "Pi(q^2)^2 * (Pi(q) {mp} Pi(q^3)) * (Pi(q) {pm} 3 * Pi(q^3))^3",
    )
    _register_pm(
        "11-10",
        "Pi(q) * Pi(q^3) * (Pi(q^3)^2 {pm} 4 * Pi(q^6)^2)^2",
        "Pi(q^6)^2 * (Pi(q) {mp} Pi(q^3))^3 * (Pi(q) {pm} 3 * Pi(q^3))",
    )

    # -- the same family written in psi quotients
    _register(
        "21-1",
        "psi(q^2)^2 * psi(q^3)^4 / (psi(q^6)^2 * psi(q)^4)",
        "(psi(q^2)^2 - q^1 * psi(q^6)^2) / (psi(q^2)^2 + 3 * q^1 * psi(q^6)^2)",
    )
    _register(
        "21-2",
        "psi(q^6)^2 / psi(q^2)^2 * (psi(q)^8 / psi(q^2)^8)",
        "(1 - q^1 * psi(q^6)^2 / psi(q^2)^2) * (1 + 3 * q^1 * psi(q^6)^2 / psi(q^2)^2)^3",
    )
    _register(
        "21-3",
        "psi(q^2) * psi(q^6) * (psi(q)^4 - 3 * q^1 * psi(q^3)^4)",
        "psi(q) * psi(q^3) * (psi(q^2)^4 + 3 * q^2 * psi(q^6)^4)",
    )
    _register(
        "21-4",
        "psi(q^3)^2 / psi(q)^2 * (1 + 16 * q^1 * psi(q^2)^8 / psi(q)^8)",
        "psi(q^2)^4 / psi(q)^4 "
        "* (1 + 18 * q^1 * psi(q^3)^4 / psi(q)^4 - 27 * q^2 * psi(q^3)^8 / psi(q)^8)",
    )
    _register(
        "21-5",
        "psi(q)^2 / psi(q^3)^2 * (1 + 16 * q^3 * psi(q^6)^8 / psi(q^3)^8)",
        "psi(q^6)^4 / psi(q^3)^4 "
        "* (psi(q)^8 / psi(q^3)^8 - 6 * q^1 * psi(q)^4 / psi(q^3)^4 - 3 * q^2)",
    )
    _register_pm(
        "21-6",
        "psi(q^3)^2 / psi(q)^2 * (1 {pm} 4 * q^1/2 * psi(q^2)^4 / psi(q)^4)^2",
        "psi(q^2)^4 / psi(q)^4 * (1 {mp} q^1/2 * psi(q^3)^2 / psi(q)^2) "
        "* (1 {pm} 3 * q^1/2 * psi(q^3)^2 / psi(q)^2)^3",
    )
    _register_pm(
        "21-7",
        "psi(q)^2 / psi(q^3)^2 * (1 {pm} 4 * q^3/2 * psi(q^6)^4 / psi(q^3)^4)^2",
        "psi(q^6)^4 / psi(q^3)^4 * (psi(q)^2 / psi(q^3)^2 {mp} q^1/2)^3 "
        "* (psi(q)^2 / psi(q^3)^2 {pm} 3 * q^1/2)",
    )

    # -- family in Pi_q, Pi_{q^2}, Pi_{q^5}, Pi_{q^10}
    _register(
        "1-7",
        "Pi(q^2) * Pi(q^5)^4 * (16 * Pi(q^10)^4 - Pi(q^5)^4)",
        "Pi(q^10)^3 * (5 * Pi(q^10) - Pi(q^2)) * (Pi(q^2) - Pi(q^10))^5",
    )
    _register(
        "1-2",
        "Pi(q^10) * Pi(q)^4 * (16 * Pi(q^2)^4 - Pi(q)^4)",
        "Pi(q^2)^3 * (5 * Pi(q^10) - Pi(q^2))^5 * (Pi(q^2) - Pi(q^10))",
    )
    _register(
        "1-3",
        "Pi(q) * Pi(q^5) * (16 * Pi(q^2)^4 - Pi(q)^4)^2",
        "Pi(q^2)^4 * (5 * Pi(q^5) - Pi(q))^5 * (Pi(q^5) - Pi(q))",
    )
    _register(
        "1-4",
        "Pi(q) * Pi(q^5) * (16 * Pi(q^10)^4 - Pi(q^5)^4)^2",
        "Pi(q^10)^4 * (5 * Pi(q^5) - Pi(q)) * (Pi(q^5) - Pi(q))^5",
    )
    _register(
        "1-5",
        "(Pi(q) * Pi(q^10) - Pi(q^2) * Pi(q^5))^2",
        "Pi(q^2) * Pi(q^10) * (Pi(q^5) - Pi(q)) * (5 * Pi(q^5) - Pi(q))",
    )

    # -- the same family written in psi quotients
    _register(
        "3-1",
        "psi(q^2)^2 / psi(q^10)^2 * (psi(q^5)^8 / psi(q^10)^8) "
        "* (16 * q^5 - psi(q^5)^8 / psi(q^10)^8)",
        "(5 * q^2 - psi(q^2)^2 / psi(q^10)^2) * (psi(q^2)^2 / psi(q^10)^2 - q^2)^5",
    )
    _register(
        "3-2",
        "psi(q^10)^2 / psi(q^2)^2 * (psi(q)^8 / psi(q^2)^8) "
        "* (16 * q^1 - psi(q)^8 / psi(q^2)^8)",
        "(5 * q^2 * psi(q^10)^2 / psi(q^2)^2 - 1)^5 * (1 - q^2 * psi(q^10)^2 / psi(q^2)^2)",
    )
    _register(
        "3-3",
        "psi(q^5)^2 / psi(q)^2 * (16 * q^1 * psi(q^2)^8 / psi(q)^8 - 1)^2",
        "psi(q^2)^8 / psi(q)^8 * (5 * q^1 * psi(q^5)^2 / psi(q)^2 - 1)^5 "
        "* (q^1 * psi(q^5)^2 / psi(q)^2 - 1)",
    )
    _register(
        "3-4",
        "psi(q)^2 / psi(q^5)^2 * (16 * q^5 * psi(q^10)^8 / psi(q^5)^8 - 1)^2",
        "psi(q^10)^8 / psi(q^5)^8 * (5 * q^1 - psi(q)^2 / psi(q^5)^2) "
        "* (q^1 - psi(q)^2 / psi(q^5)^2)^5",
    )
    _register(
        "3-5",
        "(q^1 * psi(q)^2 / psi(q^5)^2 - psi(q^2)^2 / psi(q^10)^2)^2",
        "psi(q^2)^2 / psi(q^10)^2 * (q^1 - psi(q)^2 / psi(q^5)^2) "
        "* (5 * q^1 - psi(q)^2 / psi(q^5)^2)",
    )


_build_registry()
assert len(_RECORDS) == 31


def list_identities() -> tuple[IdentityRecord, ...]:
    """All registered identities, sorted by id."""
    return tuple(_RECORDS[k] for k in sorted(_RECORDS))


def get_identity(ident: str) -> IdentityRecord:
    try:
        return _RECORDS[ident]
    except KeyError:
        raise UnknownIdentity(ident) from None


def known_ids() -> tuple[str, ...]:
    return tuple(sorted(_RECORDS))


# ----------------------------------------------------------------------
# verification


def verify_sides(ident: str, lhs: Expr, rhs: Expr, order: int) -> VerifyReport:
    """Compare two expression sides as series; the core of :func:`verify`."""
    started = time.perf_counter()
    try:
        left = evaluate(lhs, order)
        right = evaluate(rhs, order)
    except SeriesError as err:
        return VerifyReport(
            id=ident, status="error", order=order, error=str(err),
            elapsed=time.perf_counter() - started,
        )
    diff = left - right
    valid = diff.order
    # the comparison is vacuous when every known exponent sits below the
    # content of both sides
    floor = min(
        (s.valuation for s in (left, right) if not s.is_zero), default=None
    )
    if floor is not None and valid <= floor:
        return VerifyReport(
            id=ident, status="error", order=order, valid_order=valid,
            error=(
                "InsufficientPrecision: no comparable coefficients below "
                f"t^{valid} (content starts at t^{floor})"
            ),
            elapsed=time.perf_counter() - started,
        )
    if diff.is_zero:
        return VerifyReport(
            id=ident, status="verified", order=order, valid_order=valid,
            elapsed=time.perf_counter() - started,
        )
    exp = diff.first_nonzero_exponent()
    failure = FirstFailure(exponent=exp, lhs=left.coefficient(exp), rhs=right.coefficient(exp))
    return VerifyReport(
        id=ident, status="falsified", order=order, valid_order=valid,
        first_failure=failure, elapsed=time.perf_counter() - started,
    )


def verify(ident: str, order: int = DEFAULT_ORDER) -> VerifyReport:
    """Verify a registered identity at the given t-order."""
    rec = get_identity(ident)
    return verify_sides(rec.id, rec.lhs, rec.rhs, order)


def verify_record(rec: IdentityRecord, order: int = DEFAULT_ORDER) -> VerifyReport:
    """Verify an (possibly unregistered) record, e.g. a mutated identity."""
    return verify_sides(rec.id, rec.lhs, rec.rhs, order)


def verify_expressions(lhs: Expr, rhs: Expr, order: int = DEFAULT_ORDER, ident: str = "user") -> VerifyReport:
    """Verify a user-supplied lhs/rhs pair."""
    return verify_sides(ident, lhs, rhs, order)


def verify_all(order: int = DEFAULT_ORDER) -> list[VerifyReport]:
    """Verify the whole catalog; reports are ordered by id."""
    return [verify(ident, order) for ident in known_ids()]


# ----------------------------------------------------------------------
# cheap structural audit


@dataclass(frozen=True)
class HomogeneityEntry:
    id: str
    lhs_valuation: int | None
    rhs_valuation: int | None

    @property
    def consistent(self) -> bool:
        return self.lhs_valuation == self.rhs_valuation


def audit_homogeneity(probe_order: int = 64) -> list[HomogeneityEntry]:
    """Compare the evaluated valuations of both sides at a small probe order.

    A transcription slip in a registry entry almost always shifts the leading
    exponent of one side, so this cheap pass catches such errors before a
    full-order verification run.
    """
    out = []
    for rec in list_identities():
        lv = evaluate(rec.lhs, probe_order).first_nonzero_exponent()
        rv = evaluate(rec.rhs, probe_order).first_nonzero_exponent()
        out.append(HomogeneityEntry(rec.id, lv, rv))
    return out
