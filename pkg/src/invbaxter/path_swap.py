"""Diagonal path triples and the head-swap involution.

Paths take steps ``L = (-1, +1)`` and ``R = (+1, +1)`` in doubled
coordinates, so every position is integral and a gap of 1 in the
original half-unit picture is a gap of 2 here. Three paths starting at
``-2``, ``0`` and ``2`` advance in lockstep: after ``t`` steps all sit at
height ``t``, so two paths share a point iff they share an abscissa at
the same time.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple

from .errors import CapacityError, ContractError, FormatError
from .walks import WalkTuple

DEFAULT_MAX_N = int(os.environ.get("INVBAXTER_MAX_N", 8))

LABELS = ("R", "U", "S", "mirS", "V", "Shat")


@dataclass(frozen=True)
class DiagonalPath:
    start_x: int
    steps: str = ""

    def __post_init__(self):
        if self.start_x % 2:
            raise FormatError("start abscissa must be even")
        if set(self.steps) - set("LR"):
            raise FormatError(f"bad step word {self.steps!r}")

    def xs(self) -> tuple[int, ...]:
        return _xs(self.start_x, self.steps)

    @property
    def end_x(self) -> int:
        return self.start_x + self.steps.count("R") - self.steps.count("L")

    def mirror(self) -> "DiagonalPath":
        return DiagonalPath(-self.start_x, self.steps.translate(_FLIP))

    def to_dict(self) -> dict:
        return {"start_x": self.start_x, "steps": self.steps}


_FLIP = str.maketrans("LR", "RL")


@lru_cache(maxsize=None)
def _xs(start_x: int, steps: str) -> tuple[int, ...]:
    x = start_x
    out = [x]
    for s in steps:
        x += 1 if s == "R" else -1
        out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class DiagonalTriple:
    left: DiagonalPath
    mid: DiagonalPath
    right: DiagonalPath

    def __post_init__(self):
        if (self.left.start_x, self.mid.start_x, self.right.start_x) != (-2, 0, 2):
            raise ContractError("triples start at -2, 0, 2")
        if not len(self.left.steps) == len(self.mid.steps) == len(self.right.steps):
            raise ContractError("paths of a triple have equal length")

    @classmethod
    def from_words(cls, left: str, mid: str, right: str) -> "DiagonalTriple":
        return cls(DiagonalPath(-2, left), DiagonalPath(0, mid), DiagonalPath(2, right))

    @property
    def n(self) -> int:
        return len(self.mid.steps) + 1

    @property
    def words(self) -> tuple[str, str, str]:
        return self.left.steps, self.mid.steps, self.right.steps

    def mirror(self) -> "DiagonalTriple":
        return DiagonalTriple(self.right.mirror(), self.mid.mirror(), self.left.mirror())

    def to_dict(self) -> dict:
        return {"left": self.left.to_dict(), "mid": self.mid.to_dict(), "right": self.right.to_dict()}


class Classes(NamedTuple):
    in_R: bool
    in_U: bool
    in_S: bool
    in_mirS: bool
    in_V: bool

    @property
    def in_Shat(self) -> bool:
        return self.in_S or self.in_mirS


def _apart(a, b) -> bool:
    return all(x != y for x, y in zip(a, b))


def _meet(a, b) -> bool:
    return any(x == y for x, y in zip(a, b))


def _classify_xs(l, m, r) -> Classes:
    in_u = _apart(l, m) and m[-1] - l[-1] == 2
    in_s = in_u and _meet(m, r)
    in_r = in_u and not in_s and _apart(l, r)
    # mirror image lies in S: mid/right form the barrier, left meets mid
    in_mirs = _apart(m, r) and r[-1] - m[-1] == 2 and _meet(l, m)
    in_v = _apart(l, r) and r[-1] - l[-1] == 2
    return Classes(in_r, in_u, in_s, in_mirs, in_v)


def classify(t: DiagonalTriple) -> Classes:
    return _classify_xs(t.left.xs(), t.mid.xs(), t.right.xs())


def first_meeting(t: DiagonalTriple) -> tuple[int, str] | None:
    """Earliest time the middle path touches an outer one, with the side.

    If both outer paths are hit at that time (only possible when they
    coincide there) the right side is reported.
    """
    l, m, r = t.left.xs(), t.mid.xs(), t.right.xs()
    for time in range(1, len(m)):
        if m[time] == r[time]:
            return time, "right"
        if m[time] == l[time]:
            return time, "left"
    return None


def _swap_heads(t: DiagonalTriple, time: int, side: str) -> DiagonalTriple:
    # Paths are labelled by start, so exchanging heads up to the meeting
    # point is the same as exchanging the step words from `time` on.
    left, mid, right = t.words
    if side == "right":
        mid, right = mid[:time] + right[time:], right[:time] + mid[time:]
    else:
        mid, left = mid[:time] + left[time:], left[:time] + mid[time:]
    return DiagonalTriple.from_words(left, mid, right)


def swap_v_to_shat(t: DiagonalTriple) -> DiagonalTriple:
    """Head swap sending a triple of V into S (right meeting) or mir(S)."""
    if not classify(t).in_V:
        raise ContractError("triple is not in V")
    meeting = first_meeting(t)
    if meeting is None:
        raise ContractError(f"middle path of {t.words} meets neither outer path")
    return _swap_heads(t, *meeting)


def swap_shat_to_v(t: DiagonalTriple) -> DiagonalTriple:
    c = classify(t)
    if c.in_S == c.in_mirS:
        raise ContractError(f"{t.words}: in S={c.in_S}, in mir(S)={c.in_mirS}; need exactly one")
    meeting = first_meeting(t)
    side = "right" if c.in_S else "left"
    if meeting is None or meeting[1] != side:
        raise ContractError(f"{t.words}: first meeting {meeting} not on the {side}")
    return _swap_heads(t, *meeting)


def _label_test(label: str):
    if label == "Shat":
        return lambda c: c.in_S or c.in_mirS
    if label not in LABELS:
        raise ContractError(f"unknown class label {label!r}")
    attr = "in_" + label
    return lambda c: getattr(c, attr)


def enumerate_class(n: int, label: str, max_n: int = DEFAULT_MAX_N) -> Iterator[DiagonalTriple]:
    """All triples of ``(n-1)``-step paths in the named class, ordered
    lexicographically by (left, mid, right) words with ``L < R``."""
    if n < 1:
        raise ContractError("n must be at least 1")
    if n > max_n:
        raise CapacityError(f"n={n} exceeds bound {max_n}")
    accept = _label_test(label)
    words = ["".join(w) for w in product("LR", repeat=n - 1)]
    xs = {start: [_xs(start, w) for w in words] for start in (-2, 0, 2)}
    for a, wl in enumerate(words):
        l = xs[-2][a]
        for b, wm in enumerate(words):
            m = xs[0][b]
            for c, wr in enumerate(words):
                if accept(_classify_xs(l, m, xs[2][c])):
                    yield DiagonalTriple.from_words(wl, wm, wr)


def class_size(n: int, label: str, max_n: int = DEFAULT_MAX_N) -> int:
    return sum(1 for _ in enumerate_class(n, label, max_n))


def rotate_from_binary(t: WalkTuple) -> DiagonalTriple:
    """Rotate a walk tuple with no weight (p = 0) into a diagonal triple.

    ``(x, y) -> (x - y, x + y)`` sends East to R and North to L; the first
    (East) step of the third walk is dropped so it starts at ``(2, 0)``.
    """
    if sum(t.s) != 0:
        raise ContractError("only tuples with p = 0 rotate into diagonal triples")
    if not t.w3.steps.startswith("E"):
        raise ContractError("third walk must start with East")
    to_diag = str.maketrans("EN", "RL")
    return DiagonalTriple.from_words(
        t.w1.steps.translate(to_diag),
        t.w2.steps.translate(to_diag),
        t.w3.steps[1:].translate(to_diag),
    )
