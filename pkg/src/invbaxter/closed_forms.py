"""Exact closed-form counts for involutive Baxter permutations.

All arithmetic is on Python integers or Fractions. Every division that
the formulas promise to be exact is checked.
"""

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from .errors import ContractError
from .perm_core import ParameterProfile
from .walks import det3, is_feasible


class DerivedParams(NamedTuple):
    q: int
    s: int
    t: int


def derived(prof: ParameterProfile) -> DerivedParams:
    n, k, p, r = prof
    return DerivedParams(n + p - k, n - k - r, k + r)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ContractError(f"{what} is not an integer: {value}")
    return value.numerator


def a_multi_matrix(prof: ParameterProfile) -> list[list[int]]:
    k = prof.k
    q, s, t = derived(prof)
    return [
        [q * (q + 1), q * (q - 1), s * (s - 1)],
        [k * (q + 1), (k + 1) * q, s * (t + 1)],
        [k * (k - 1), k * (k + 1), t * (t + 1)],
    ]


def a_multi(prof: ParameterProfile) -> int:
    """Involutive Baxter permutations with the given ``(n, k, p, r)``.

    Returns 0 for infeasible profiles. ``n`` must be positive; the
    identity permutations (``n = 0``) are not covered.
    """
    prof = ParameterProfile(*prof)
    if not is_feasible(prof):
        return 0
    n, k, p, r = prof
    q, s, t = derived(prof)
    numer = comb(p + r, r) * comb(n + p - 1, k) ** 2 * comb(n, t) * det3(a_multi_matrix(prof))
    denom = n * q * q * (q + 1) * (k + 1) * (t + 1)
    value = _exact(Fraction(numer, denom), f"a{tuple(prof)}")
    if value < 0:
        raise ContractError(f"a{tuple(prof)} is negative: {value}")
    return value


def b_fpf(n: int) -> int:
    """Fixed-point-free involutive Baxter permutations of size ``2n``."""
    if n < 1:
        raise ContractError("n must be at least 1")
    return _exact(Fraction(3 * 2 ** (n - 1) * comb(2 * n, n), (n + 1) * (n + 2)), f"b_{n}")


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def u_count(n: int) -> int:
    if n < 1:
        raise ContractError("n must be at least 1")
    return _exact(Fraction(2 ** (n - 1) * factorial(2 * n), factorial(n) * factorial(n + 1)), f"u_{n}")


def s_count(n: int) -> int:
    if n < 1:
        raise ContractError("n must be at least 1")
    if n == 1:
        return 0
    return _exact(
        Fraction(2 ** n * factorial(2 * n - 1), factorial(n - 2) * factorial(n + 2)), f"s_{n}"
    )


def _diag_walks(steps: int, x0: int, x1: int) -> int:
    # L/R paths with `steps` steps from abscissa x0 to x1 (doubled units)
    d = x1 - x0
    if abs(d) > steps or (steps + d) % 2:
        return 0
    return comb(steps, (steps + d) // 2)


def disjoint_pair_lgv(n: int, start_gap: int, end_gap: int = 1) -> int:
    """Sum of 2x2 LGV determinants over all end positions."""
    steps = n - 1
    a1, a2 = 0, 2 * start_gap
    total = 0
    for e in range(a1 - steps, a1 + steps + 1):
        f = e + 2 * end_gap
        total += (
            _diag_walks(steps, a1, e) * _diag_walks(steps, a2, f)
            - _diag_walks(steps, a1, f) * _diag_walks(steps, a2, e)
        )
    return total


def disjoint_pair_count(n: int, start_gap: int, end_gap: int = 1) -> int:
    """Vertex-disjoint pairs of ``(n-1)``-step diagonal paths whose starts
    are ``start_gap`` apart and whose ends are ``end_gap`` apart."""
    if n < 1:
        raise ContractError("n must be at least 1")
    if end_gap != 1 or start_gap not in (1, 2):
        raise ContractError("closed forms exist for start gap 1 or 2 and end gap 1")
    if start_gap == 1:
        value = catalan(n)
    elif n == 1:
        value = 0
    else:
        value = _exact(Fraction(4 * factorial(2 * n - 1), factorial(n - 2) * factorial(n + 2)), "pair count")
    check = disjoint_pair_lgv(n, start_gap, end_gap)
    if check != value:
        raise ContractError(f"pair count {value} disagrees with LGV {check} at n={n}")
    return value


def feasible_profiles(n: int, p: int):
    """Feasible ``(n, k, p, r)`` with the given ``n`` and ``p``."""
    for k in range(n + p):
        for r in range(n - k + 1):
            prof = ParameterProfile(n, k, p, r)
            if is_feasible(prof):
                yield prof
