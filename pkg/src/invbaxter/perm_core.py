"""Permutations in one-line notation: Baxter and involution predicates,
descent classification, parameter profiles and exhaustive generators.

A permutation of size ``m`` is any sequence containing each of ``1..m``
exactly once; tuples are used throughout so values are hashable.
"""

from collections import Counter
from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

from .errors import ContractError

Permutation = tuple  # tuple[int, ...], one-line notation on 1..m


class ParameterProfile(NamedTuple):
    """``(n, k, p, r)``: half the non-fixed points, half the non-crossing
    descents, the fixed points and the crossing descents."""

    n: int
    k: int
    p: int
    r: int


def check_permutation(perm: Sequence[int]) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ContractError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2143"`` (sizes below 10) or ``"2,1,4,3"``."""
    text = text.strip()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
        return check_permutation(int(v) for v in parts)
    return check_permutation(int(c) for c in text)


def is_involution(perm: Sequence[int]) -> bool:
    return all(perm[v - 1] == i for i, v in enumerate(perm, start=1))


def _has_vincular(perm: Sequence[int]) -> bool:
    # Reference form: literal quadruple loop over i < j, j+1 < l.
    m = len(perm)
    for j in range(1, m - 2):
        a, b = perm[j], perm[j + 1]
        for i in range(j):
            x = perm[i]
            for l in range(j + 2, m):
                y = perm[l]
                if b < x < y < a:  # 2-41-3
                    return True
                if a < y < x < b:  # 3-14-2
                    return True
    return False


def is_baxter_naive(perm: Sequence[int]) -> bool:
    """Direct O(m^4) check for occurrences of 2-41-3 and 3-14-2."""
    return not _has_vincular(perm)


def is_baxter(perm: Sequence[int]) -> bool:
    """True iff ``perm`` avoids the vincular patterns 2-41-3 and 3-14-2.

    Anchored on the adjacent pair: a 2-41-3 occurrence needs a descent
    ``a > b`` at positions ``j, j+1``, some earlier value ``x`` strictly
    between them and some later value strictly between ``x`` and ``a``.
    It suffices to try the smallest admissible ``x``. The 3-14-2 case is
    symmetric on ascents, using the largest admissible ``x``.
    """
    m = len(perm)
    for j in range(1, m - 2):
        a, b = perm[j], perm[j + 1]
        lo, hi = (b, a) if a > b else (a, b)
        prefix = [x for x in perm[:j] if lo < x < hi]
        if not prefix:
            continue
        suffix = perm[j + 2:]
        if a > b:
            x = min(prefix)
            if any(x < y < a for y in suffix):
                return False
        else:
            x = max(prefix)
            if any(a < y < x for y in suffix):
                return False
    return True


def descent_profile(perm: Sequence[int]) -> list[tuple[int, bool]]:
    """List ``(i, crossing)`` for each descent ``i`` (1-based).

    A descent crosses the diagonal when ``perm(i) > i`` and
    ``perm(i+1) < i+1``.
    """
    out = []
    for i in range(1, len(perm)):
        a, b = perm[i - 1], perm[i]
        if a > b:
            out.append((i, a > i and b < i + 1))
    return out


def profile(perm: Sequence[int]) -> ParameterProfile:
    fixed = sum(1 for i, v in enumerate(perm, start=1) if v == i)
    moved = len(perm) - fixed
    descents = descent_profile(perm)
    crossing = sum(1 for _, c in descents if c)
    flat = len(descents) - crossing
    if moved % 2 or flat % 2:
        raise ContractError(
            f"{perm}: {moved} non-fixed points, {flat} non-crossing descents"
            " (both must be even)"
        )
    return ParameterProfile(moved // 2, flat // 2, fixed, crossing)


def enumerate_involutions(m: int, fixed_point_free: bool = False) -> Iterator[Permutation]:
    """Yield the involutions of size ``m`` in lexicographic order.

    Backtracking over positions left to right: position ``i`` either
    keeps an image already forced by an earlier 2-cycle, or chooses its
    image among itself and the free later positions in increasing order,
    which is exactly lexicographic order of the one-line word.
    """
    if m < 0:
        raise ContractError("size must be non-negative")
    if fixed_point_free and m % 2:
        return
    image = [0] * (m + 1)

    def rec(i):
        if i > m:
            yield tuple(image[1:])
            return
        if image[i]:
            yield from rec(i + 1)
            return
        if not fixed_point_free:
            image[i] = i
            yield from rec(i + 1)
            image[i] = 0
        for j in range(i + 1, m + 1):
            if image[j]:
                continue
            image[i], image[j] = j, i
            yield from rec(i + 1)
            image[i] = image[j] = 0

    yield from rec(1)


def enumerate_baxter(m: int) -> Iterator[Permutation]:
    """All Baxter permutations of size ``m`` (brute force over S_m)."""
    for perm in permutations(range(1, m + 1)):
        if is_baxter(perm):
            yield perm


def involutive_baxter(m: int, fixed_point_free: bool = False) -> Iterator[Permutation]:
    for perm in enumerate_involutions(m, fixed_point_free):
        if is_baxter(perm):
            yield perm


def profile_census(m: int) -> dict[ParameterProfile, int]:
    """Count involutive Baxter permutations of size ``m`` by profile.

    Keys are ordered by decreasing ``n``, then ``k, p, r``.
    """
    counts = Counter(profile(perm) for perm in involutive_baxter(m))
    return dict(sorted(counts.items(), key=lambda kv: (-kv[0].n, kv[0][1:])))


def inverse(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        inv[v - 1] = i
    return tuple(inv)


def reverse_complement(perm: Sequence[int]) -> Permutation:
    m = len(perm)
    return tuple(m + 1 - v for v in reversed(perm))
