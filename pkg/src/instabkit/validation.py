"""Input validation helpers shared by the computational modules and the CLI."""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

from ._linalg import as_fraction

#: Largest number of subsets any exhaustive enumeration will visit by default.
DEFAULT_GUARD = 2**20


class ValidationError(ValueError):
    """Raised when an input violates a type invariant.

    ``invariant`` names the violated condition; the CLI reports it verbatim.
    """

    def __init__(self, message: str, invariant: str = "input"):
        super().__init__(message)
        self.invariant = invariant


class GuardExceeded(ValidationError):
    """Raised when an exhaustive enumeration would exceed its subset guard."""

    def __init__(self, n_subsets: int, guard: int):
        super().__init__(
            f"enumeration of {n_subsets} subsets exceeds the guard of {guard}",
            invariant="enumeration_guard",
        )
        self.n_subsets = n_subsets
        self.guard = guard


def check_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction, accepting ints, Fractions, 'p/q' strings and [p, q] pairs."""
    if isinstance(x, bool):
        raise ValidationError(f"not a rational number: {x!r}", "rational")
    if isinstance(x, (list, tuple)):
        if len(x) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
            raise ValidationError(f"rational pair must be [num, den] integers: {x!r}", "rational")
        if x[1] <= 0:
            raise ValidationError(f"denominator must be positive: {x!r}", "rational")
        return Fraction(x[0], x[1])
    try:
        return as_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational number: {x!r}", "rational") from exc


def check_vector(xs, length: int | None = None, name: str = "vector") -> tuple[Fraction, ...]:
    try:
        v = tuple(check_rational(x) for x in xs)
    except TypeError as exc:
        raise ValidationError(f"{name} must be a sequence", name) from exc
    if length is not None and len(v) != length:
        raise ValidationError(f"{name} has length {len(v)}, expected {length}", f"{name}_length")
    return v


def check_square(rows, n: int, name: str = "matrix") -> tuple[tuple[Fraction, ...], ...]:
    rows = tuple(rows)
    if len(rows) != n:
        raise ValidationError(f"{name} must have {n} rows, got {len(rows)}", f"{name}_shape")
    return tuple(check_vector(r, n, name) for r in rows)


def check_integral(v, name: str = "weight") -> tuple[int, ...]:
    out = []
    for x in v:
        if Fraction(x).denominator != 1:
            raise ValidationError(f"{name} is not integral: {tuple(v)}", "integral_lattice")
        out.append(int(x))
    return tuple(out)


def check_prime(p) -> int | str:
    """Validate a characteristic: a prime integer or the token ``"zero"``."""
    if p == "zero" or p == 0:
        return "zero"
    try:
        p_int = int(p)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"characteristic must be a prime or 'zero': {p!r}", "prime") from exc
    if p_int != p and str(p_int) != str(p):
        raise ValidationError(f"characteristic must be an integer: {p!r}", "prime")
    if not isprime(p_int):
        raise ValidationError(f"{p_int} is not prime", "prime")
    return p_int


def check_guard(n_subsets: int, guard: int | None) -> None:
    guard = DEFAULT_GUARD if guard is None else guard
    if n_subsets > guard:
        raise GuardExceeded(n_subsets, guard)
