"""Binary walks on Z^2, vertex-disjoint triples and their LGV counts.

Walks use East ``(+1, 0)`` and North ``(0, +1)`` steps, written as
words over ``"E"`` and ``"N"``. "Non-intersecting" always means pairwise
vertex-disjoint, endpoints included.
"""

import os
from dataclasses import dataclass
from itertools import permutations, product
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .errors import CapacityError, ContractError, FormatError
from .perm_core import ParameterProfile

DEFAULT_MAX_STEPS = int(os.environ.get("INVBAXTER_MAX_STEPS", 24))

STEP = {"E": (1, 0), "N": (0, 1)}


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticePoint(self.x + other[0], self.y + other[1])


@dataclass(frozen=True)
class BinaryWalk:
    start: LatticePoint
    steps: str = ""

    def __post_init__(self):
        object.__setattr__(self, "start", LatticePoint(*self.start))
        if set(self.steps) - set("EN"):
            raise FormatError(f"bad step word {self.steps!r}")

    def __len__(self):
        return len(self.steps)

    @property
    def east(self) -> int:
        return self.steps.count("E")

    @property
    def end(self) -> LatticePoint:
        e = self.east
        return LatticePoint(self.start.x + e, self.start.y + len(self.steps) - e)

    def points(self) -> list[LatticePoint]:
        x, y = self.start
        pts = [LatticePoint(x, y)]
        for s in self.steps:
            dx, dy = STEP[s]
            x += dx
            y += dy
            pts.append(LatticePoint(x, y))
        return pts

    def to_dict(self) -> dict:
        return {"start": [self.start.x, self.start.y], "steps": self.steps}

    @classmethod
    def from_dict(cls, data: dict) -> "BinaryWalk":
        x, y = data["start"]
        return cls(LatticePoint(int(x), int(y)), data["steps"])


def disjoint(*walks: BinaryWalk) -> bool:
    """True iff the walks are pairwise vertex-disjoint."""
    seen = set()
    for w in walks:
        pts = w.points()
        if seen.intersection(pts):
            return False
        seen.update(pts)
    return True


def walk_count(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of binary walks from ``a`` to ``b``."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


def det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def lgv_matrix(starts, ends) -> list[list[int]]:
    return [[walk_count(a, b) for b in ends] for a in starts]


def lgv_count_3(starts, ends) -> int:
    """Number of vertex-disjoint triples routing ``starts[i]`` to ``ends[i]``.

    Valid when no disjoint routing can connect the points under a
    non-identity permutation. A negative determinant proves that
    assumption false and raises.
    """
    d = det3(lgv_matrix(starts, ends))
    if d < 0:
        raise ContractError(f"negative LGV determinant {d}: configuration is permutable")
    return d


def lgv_count_2(starts, ends) -> int:
    m = lgv_matrix(starts, ends)
    d = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if d < 0:
        raise ContractError(f"negative LGV determinant {d}: configuration is permutable")
    return d


def _walks_avoiding(a: LatticePoint, b: LatticePoint, blocked: set) -> Iterator[str]:
    # Lexicographic (E < N) DFS over walks a -> b that avoid `blocked`.
    if a in blocked or b.x < a.x or b.y < a.y:
        return
    word = []

    def rec(x, y):
        if x == b.x and y == b.y:
            yield "".join(word)
            return
        if x < b.x and (x + 1, y) not in blocked:
            word.append("E")
            yield from rec(x + 1, y)
            word.pop()
        if y < b.y and (x, y + 1) not in blocked:
            word.append("N")
            yield from rec(x, y + 1)
            word.pop()

    yield from rec(a.x, a.y)


def _combined_length(starts, ends) -> int:
    return sum(max(0, b[0] - a[0]) + max(0, b[1] - a[1]) for a, b in zip(starts, ends))


def enumerate_disjoint_walks(starts, ends, max_steps: int = DEFAULT_MAX_STEPS) -> Iterator[tuple[BinaryWalk, ...]]:
    """Yield every vertex-disjoint tuple of walks ``starts[i] -> ends[i]``.

    Tuples come out in lexicographic order of their step words. Raises
    CapacityError when the combined walk length exceeds ``max_steps``.
    """
    starts = [LatticePoint(*a) for a in starts]
    ends = [LatticePoint(*b) for b in ends]
    total = _combined_length(starts, ends)
    if total > max_steps:
        raise CapacityError(f"combined length {total} exceeds bound {max_steps}")

    def rec(idx, blocked, chosen):
        if idx == len(starts):
            yield tuple(chosen)
            return
        # later starts must stay free
        later = set(starts[idx + 1:])
        for word in _walks_avoiding(starts[idx], ends[idx], blocked | later):
            w = BinaryWalk(starts[idx], word)
            chosen.append(w)
            yield from rec(idx + 1, blocked | set(w.points()), chosen)
            chosen.pop()

    yield from rec(0, set(), [])


def enumerate_disjoint_triples(starts, ends, max_steps: int = DEFAULT_MAX_STEPS):
    if len(starts) != 3 or len(ends) != 3:
        raise ContractError("need three starts and three ends")
    return enumerate_disjoint_walks(starts, ends, max_steps)


def count_disjoint_routings(starts, ends, max_steps: int = DEFAULT_MAX_STEPS) -> dict[tuple, int]:
    """Brute-force count of disjoint routings for every assignment of
    ends to starts, keyed by the permutation used."""
    out = {}
    for sigma in permutations(range(len(ends))):
        routed = [ends[j] for j in sigma]
        out[sigma] = sum(1 for _ in enumerate_disjoint_walks(starts, routed, max_steps))
    return out


# --- walk tuples encoding involutive Baxter permutations --------------------

TUPLE_STARTS = (LatticePoint(-1, 1), LatticePoint(0, 0), LatticePoint(0, -1))


def is_feasible(prof: ParameterProfile) -> bool:
    n, k, p, r = prof
    if min(prof) < 0 or n < 1:
        return False
    return k <= n + p - 1 and r <= n - k


def tuple_ends(prof: ParameterProfile) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
    n, k, p, r = prof
    return (
        LatticePoint(k - 1, n + p - k),
        LatticePoint(k, n + p - k - 1),
        LatticePoint(k + r, n - k - r - 1),
    )


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``parts`` non-negative integers summing to ``total``,
    in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class WalkTuple:
    w1: BinaryWalk
    w2: BinaryWalk
    w3: BinaryWalk
    s: tuple[int, ...]

    def profile(self) -> ParameterProfile:
        """Recover ``(n, k, p, r)`` from the endpoints and weights."""
        k = self.w2.end.x
        p = sum(self.s)
        r = len(self.s) - 1
        n = len(self.w3)
        return ParameterProfile(n, k, p, r)

    def is_valid(self, prof: ParameterProfile | None = None) -> bool:
        prof = prof or self.profile()
        if (self.w1.start, self.w2.start, self.w3.start) != TUPLE_STARTS:
            return False
        if (self.w1.end, self.w2.end, self.w3.end) != tuple_ends(prof):
            return False
        if len(self.s) != prof.r + 1 or sum(self.s) != prof.p or min(self.s) < 0:
            return False
        return disjoint(self.w1, self.w2, self.w3)

    def to_dict(self) -> dict:
        return {
            "w1": self.w1.to_dict(),
            "w2": self.w2.to_dict(),
            "w3": self.w3.to_dict(),
            "s": [str(v) for v in self.s],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WalkTuple":
        return cls(
            BinaryWalk.from_dict(data["w1"]),
            BinaryWalk.from_dict(data["w2"]),
            BinaryWalk.from_dict(data["w3"]),
            tuple(int(v) for v in data["s"]),
        )


def walk_tuple_count(prof: ParameterProfile) -> int:
    prof = ParameterProfile(*prof)
    if not is_feasible(prof):
        return 0
    return comb(prof.p + prof.r, prof.r) * lgv_count_3(TUPLE_STARTS, tuple_ends(prof))


def enumerate_walk_tuples(prof: ParameterProfile, max_steps: int = DEFAULT_MAX_STEPS) -> Iterator[WalkTuple]:
    prof = ParameterProfile(*prof)
    if not is_feasible(prof):
        return
    weights = list(compositions(prof.p, prof.r + 1))
    for w1, w2, w3 in enumerate_disjoint_triples(TUPLE_STARTS, tuple_ends(prof), max_steps):
        if prof.p == 0 and not w3.steps.startswith("E"):
            raise ContractError(f"third walk {w3.steps!r} leaves its start northwards")
        for s in weights:
            yield WalkTuple(w1, w2, w3, s)


# --- relaxed tuples: free third endpoint, weights absorb the slack ---------

@dataclass(frozen=True)
class RelaxedTuple:
    w1: BinaryWalk
    w2: BinaryWalk
    w3: BinaryWalk
    s: tuple[int, ...]

    def __post_init__(self):
        if not is_relaxed_tuple(self.w1, self.w2, self.w3, self.s):
            raise ContractError("not a relaxed walk tuple")

    @property
    def a(self) -> int:
        return self.w3.end.x - self.w2.end.x

    @property
    def b(self) -> int:
        e2, e3 = self.w2.end, self.w3.end
        return e2.x + e2.y - e3.x - e3.y


def is_relaxed_tuple(w1: BinaryWalk, w2: BinaryWalk, w3: BinaryWalk, s: Sequence[int]) -> bool:
    if (w1.start, w2.start, w3.start) != TUPLE_STARTS:
        return False
    if len(w1) != len(w2) or w1.east != w2.east:
        return False
    e2, e3 = w2.end, w3.end
    a = e3.x - e2.x
    b = e2.x + e2.y - e3.x - e3.y
    if a < 0 or b < 0:
        return False
    if len(s) != a + 1 or sum(s) != b or any(v < 0 for v in s):
        return False
    return disjoint(w1, w2, w3)


def all_words(length: int, alphabet: str = "EN") -> Iterator[str]:
    for letters in product(alphabet, repeat=length):
        yield "".join(letters)
