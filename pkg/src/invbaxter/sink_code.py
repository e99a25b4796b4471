"""Sink codes: marked sink-corners and sink-edges as a walk plus weights.

A sink of degree ``i + 1`` has ``i`` corners between consecutive
sink-edges. Edge ``j`` (``0 <= j <= i``) sits between corner ``j - 1``
and corner ``j`` when those exist. An edge may be marked only if every
corner it touches is marked.

In the padded corner walk ``E + (E if marked else N for each corner) + E``
edge ``j`` is the lattice point between step ``j`` and step ``j + 1``.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContractError, FormatError
from .walks import BinaryWalk, LatticePoint, WalkTuple, compositions


@dataclass(frozen=True)
class SinkDecoration:
    corner_marks: tuple[bool, ...]
    edge_marks: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "corner_marks", tuple(bool(c) for c in self.corner_marks))
        object.__setattr__(self, "edge_marks", tuple(bool(e) for e in self.edge_marks))
        if len(self.edge_marks) != len(self.corner_marks) + 1:
            raise ContractError("need exactly one more edge than corners")
        allowed = markable_edges(self.corner_marks)
        bad = [j for j, e in enumerate(self.edge_marks) if e and j not in allowed]
        if bad:
            raise ContractError(f"edges {bad} are marked next to an unmarked corner")

    @property
    def i(self) -> int:
        return len(self.corner_marks)

    @property
    def p(self) -> int:
        return sum(self.edge_marks)

    @property
    def q(self) -> int:
        return sum(self.corner_marks)

    def to_strings(self) -> tuple[str, str]:
        bits = lambda marks: "".join("1" if m else "0" for m in marks)
        return bits(self.corner_marks), bits(self.edge_marks)

    @classmethod
    def from_strings(cls, corners: str, edges: str) -> "SinkDecoration":
        if set(corners + edges) - set("01"):
            raise FormatError("mark strings must be over 0/1")
        return cls(tuple(c == "1" for c in corners), tuple(e == "1" for e in edges))


@dataclass(frozen=True)
class SinkCodePair:
    w: str
    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))


def markable_edges(corner_marks: Sequence[bool]) -> set[int]:
    padded = [True, *corner_marks, True]
    return {j for j in range(len(corner_marks) + 1) if padded[j] and padded[j + 1]}


def encode(d: SinkDecoration) -> SinkCodePair:
    """Encode a decoration as its sink code ``(w, s)``.

    Deleting the point of a marked edge fuses the two East steps around
    it; each fused East step remembers how many points it swallowed.
    The weight list covers every East step, then the final step is cut.
    """
    padded = "E" + "".join("E" if c else "N" for c in d.corner_marks) + "E"
    steps = [padded[0]]
    weights = [0]
    for j in range(1, len(padded)):
        if d.edge_marks[j - 1]:
            # both neighbours are East: merge into the current East step
            if steps[-1] != "E" or padded[j] != "E":
                raise ContractError("marked edge not flanked by East steps")
            weights[-1] += 1
            continue
        steps.append(padded[j])
        if padded[j] == "E":
            weights.append(0)
    assert steps[-1] == "E"
    return SinkCodePair("".join(steps[:-1]), tuple(weights))


def check_code(c: SinkCodePair, i: int) -> None:
    if set(c.w) - set("EN"):
        raise FormatError(f"bad step word {c.w!r}")
    if c.w and c.w[0] != "E":
        raise FormatError("a non-empty sink-code walk starts with East")
    if len(c.s) != c.w.count("E") + 1:
        raise FormatError(f"{len(c.s)} weights for {c.w.count('E') + 1} East steps")
    if any(v < 0 for v in c.s):
        raise FormatError("weights must be non-negative")
    if len(c.w) + sum(c.s) != i + 1:
        raise FormatError(f"walk length plus total weight must be {i + 1}")


def decode(c: SinkCodePair, i: int) -> SinkDecoration:
    check_code(c, i)
    full = c.w + "E"
    steps = []
    marked_points = set()
    weights = iter(c.s)
    for letter in full:
        if letter == "N":
            steps.append("N")
            continue
        t = next(weights)
        steps.append("E")
        for _ in range(t):
            marked_points.add(len(steps))  # point after the last step
            steps.append("E")
    # steps now spell the padded corner walk
    corners = tuple(ch == "E" for ch in steps[1:-1])
    edges = tuple((j + 1) in marked_points for j in range(i + 1))
    return SinkDecoration(corners, edges)


def enumerate_decorations(i: int) -> Iterator[SinkDecoration]:
    """Every valid decoration with ``i`` corners."""
    for cbits in range(1 << i):
        corners = tuple(bool(cbits >> (i - 1 - j) & 1) for j in range(i))
        allowed = sorted(markable_edges(corners))
        for ebits in range(1 << len(allowed)):
            edges = [False] * (i + 1)
            for pos, j in enumerate(allowed):
                if ebits >> (len(allowed) - 1 - pos) & 1:
                    edges[j] = True
            yield SinkDecoration(corners, tuple(edges))


def enumerate_codes(i: int) -> Iterator[SinkCodePair]:
    """Every syntactically valid sink code for ``i`` corners."""
    for p in range(i + 2):
        length = i + 1 - p
        if length == 0:
            yield SinkCodePair("", (p,))
            continue
        for tail in range(1 << (length - 1)):
            w = "E" + "".join("N" if tail >> (length - 2 - j) & 1 else "E" for j in range(length - 1))
            for s in compositions(p, w.count("E") + 1):
                yield SinkCodePair(w, s)


# --- splicing the sink code into the third walk ----------------------------

def trailing_norths(steps: str) -> int:
    return len(steps) - len(steps.rstrip("N"))


def splice(w3: BinaryWalk, i: int, w: str) -> BinaryWalk:
    """Replace the suffix ``E N^i`` of ``w3`` by the word ``w``."""
    suffix = "E" + "N" * i
    if not w3.steps.endswith(suffix) or trailing_norths(w3.steps) != i:
        raise ContractError(f"{w3.steps!r} does not end with exactly E N^{i}")
    return BinaryWalk(w3.start, w3.steps[: len(w3.steps) - len(suffix)] + w)


def unsplice(w3_prime: BinaryWalk, w2_end: Sequence[int]) -> BinaryWalk:
    """Undo :func:`splice` given where the second walk ends.

    The pre-splice walk ends at ``(x2 + 1, y2 - 1)`` and agrees with
    ``w3_prime`` while ``x <= x2``.
    """
    x2, y2 = w2_end
    target = LatticePoint(x2 + 1, y2 - 1)
    pts = w3_prime.points()
    cut = 0
    while cut < len(w3_prime) and pts[cut + 1].x <= x2:
        cut += 1
    corner = pts[cut]
    if corner.x != x2 or target.y < corner.y:
        raise ContractError(f"no completion of {w3_prime.steps!r} reaches {tuple(target)}")
    return BinaryWalk(w3_prime.start, w3_prime.steps[:cut] + "E" + "N" * (target.y - corner.y))


def strip_decoration(t: WalkTuple) -> tuple[BinaryWalk, SinkDecoration]:
    """Split a walk tuple into its undecorated third walk and the
    sink decoration carried by the spliced suffix and the weights."""
    w3 = unsplice(t.w3, t.w2.end)
    i = trailing_norths(w3.steps)
    word = t.w3.steps[len(w3.steps) - i - 1:]
    return w3, decode(SinkCodePair(word, t.s), i)


def attach_decoration(w1: BinaryWalk, w2: BinaryWalk, w3: BinaryWalk, d: SinkDecoration) -> WalkTuple:
    """Inverse of :func:`strip_decoration`."""
    code = encode(d)
    return WalkTuple(w1, w2, splice(w3, d.i, code.w), code.s)
