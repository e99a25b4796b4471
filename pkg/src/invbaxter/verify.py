"""Exhaustive verification suites.

Each suite returns a :class:`SuiteResult` holding one row per checked
item and the first counterexample found, if any. Rows are produced in a
fixed order regardless of ``jobs``.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import closed_forms as cf
from . import path_swap as ps
from . import perm_core as pc
from . import sink_code as sc
from . import walks as wk


@dataclass
class SuiteResult:
    name: str
    columns: list[str]
    rows: list[dict] = field(default_factory=list)
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def add(self, row: dict, ok: bool = True, detail: dict | None = None):
        self.rows.append(row)
        if not ok and self.counterexample is None:
            self.counterexample = {**row, **(detail or {})}


def _pmap(fn: Callable, items: Iterable, jobs: int = 1) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _census_rows(m: int) -> list[tuple]:
    census = pc.profile_census(m)
    out = []
    for n in range(1, m // 2 + 1):
        for prof in cf.feasible_profiles(n, m - 2 * n):
            out.append((prof, census.get(prof, 0)))
    # profiles seen in the census but outside the feasible range
    seen = {prof for prof, _ in out}
    for prof, count in census.items():
        if prof.n > 0 and prof not in seen:
            out.append((prof, count))
    return out


def _bijection_item(m: int) -> list[tuple]:
    out = []
    for prof, census in _census_rows(m):
        tuples = list(wk.enumerate_walk_tuples(prof))
        roundtrip = 0
        for t in tuples:
            w3, deco = sc.strip_decoration(t)
            if sc.attach_decoration(t.w1, t.w2, w3, deco) == t and deco.p == prof.p \
                    and deco.q == prof.p + prof.r - 1:
                roundtrip += 1
        out.append((prof, census, len(tuples), wk.walk_tuple_count(prof), roundtrip))
    return out


def verify_bijection(max_size: int = 8, jobs: int = 1) -> SuiteResult:
    """Walk tuples versus involutive Baxter permutations, per profile."""
    res = SuiteResult("bijection", ["n", "k", "p", "r", "census", "tuples", "lgv", "roundtrip"])
    for batch in _pmap(_bijection_item, range(1, max_size + 1), jobs):
        for prof, census, tuples, lgv, roundtrip in batch:
            row = dict(zip("nkpr", prof), census=census, tuples=tuples, lgv=lgv, roundtrip=roundtrip)
            res.add(row, census == tuples == lgv == roundtrip)
    return res


def _formula_item(m: int) -> list[tuple]:
    return [(prof, census, cf.a_multi(prof)) for prof, census in _census_rows(m)]


def verify_formula(max_size: int = 10, jobs: int = 1) -> SuiteResult:
    """Closed-form multivariate counts versus the brute-force census,
    plus the fixed-point-free total at every even size."""
    res = SuiteResult("formula", ["n", "k", "p", "r", "census", "formula"])
    for batch in _pmap(_formula_item, range(1, max_size + 1), jobs):
        for prof, census, formula in batch:
            res.add(dict(zip("nkpr", prof), census=census, formula=formula), census == formula)
    for n in range(1, max_size // 2 + 1):
        brute = sum(1 for _ in pc.involutive_baxter(2 * n, fixed_point_free=True))
        formula = cf.b_fpf(n)
        res.add(dict(n=n, k="*", p=0, r="*", census=brute, formula=formula), brute == formula)
    return res


def _involution_item(n: int) -> dict:
    v = list(ps.enumerate_class(n, "V"))
    counts = {label: ps.class_size(n, label) for label in ("R", "U", "S", "mirS")}
    images = [ps.swap_v_to_shat(t) for t in v]
    forward = sum(1 for x in images if ps.classify(x).in_Shat)
    back = sum(1 for t, x in zip(v, images) if ps.swap_shat_to_v(x) == t)
    distinct = len(set(images))
    shat = list(ps.enumerate_class(n, "Shat"))
    reverse = sum(1 for x in shat if ps.swap_v_to_shat(ps.swap_shat_to_v(x)) == x)
    rotated = 0
    for k in range(n):
        for r in range(n - k + 1):
            for t in wk.enumerate_walk_tuples(pc.ParameterProfile(n, k, 0, r)):
                if ps.classify(ps.rotate_from_binary(t)).in_R:
                    rotated += 1
    return dict(
        n=n, V=len(v), S=counts["S"], mirS=counts["mirS"], U=counts["U"], R=counts["R"],
        Shat=len(shat), two_s=2 * cf.s_count(n), u=cf.u_count(n), b=cf.b_fpf(n),
        forward=forward, back=back, distinct=distinct, reverse=reverse, rotated=rotated,
    )


def verify_involution(max_n: int = 7, jobs: int = 1) -> SuiteResult:
    """Head-swap round trips and class sizes of the diagonal triples."""
    res = SuiteResult("involution", ["n", "V", "S", "mirS", "U", "R", "two_s", "u", "b",
                                     "forward", "back", "reverse", "rotated"])
    for row in _pmap(_involution_item, range(1, max_n + 1), jobs):
        ok = (
            row["V"] == row["two_s"] == row["S"] + row["mirS"] == row["Shat"]
            and row["S"] == row["mirS"]
            and row["U"] == row["R"] + row["S"] == row["u"]
            and row["R"] == row["b"] == row["rotated"]
            and row["V"] == row["forward"] == row["back"] == row["distinct"]
            and row["Shat"] == row["reverse"]
        )
        res.add({c: row[c] for c in res.columns}, ok)
    return res


def _sinkcode_item(i: int) -> dict:
    decorations = list(sc.enumerate_decorations(i))
    codes = list(sc.enumerate_codes(i))
    dec_fail = sum(1 for d in decorations if sc.decode(sc.encode(d), i) != d)
    code_fail = sum(1 for c in codes if sc.encode(sc.decode(c, i)) != c)
    stat_fail = 0
    by_stats = {}
    for d in decorations:
        c = sc.encode(d)
        p, q = d.p, d.q
        good = (
            len(c.s) == q + 2 - p and sum(c.s) == p
            and c.w.count("E") == q + 1 - p and len(c.w) == i + 1 - p
            and (c.w == "") == all(d.edge_marks)
        )
        stat_fail += not good
        by_stats[p, q] = by_stats.get((p, q), 0) + 1
    code_stats = {}
    for c in codes:
        p = sum(c.s)
        q = c.w.count("E") + p - 1
        code_stats[p, q] = code_stats.get((p, q), 0) + 1
    return dict(i=i, decorations=len(decorations), codes=len(codes), decode_encode_fail=dec_fail,
                encode_decode_fail=code_fail, count_fail=stat_fail,
                stats_match=by_stats == code_stats)


def verify_sinkcode(max_i: int = 8, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("sinkcode", ["i", "decorations", "codes", "decode_encode_fail",
                                   "encode_decode_fail", "count_fail", "stats_match"])
    for row in _pmap(_sinkcode_item, range(max_i + 1), jobs):
        ok = (row["decorations"] == row["codes"] and row["stats_match"]
              and not (row["decode_encode_fail"] or row["encode_decode_fail"] or row["count_fail"]))
        res.add(row, ok)
    return res


def random_configuration(rng: random.Random, max_steps: int):
    """Random start/end triples, each ordered weakly north-west to
    south-east, every end reachable from its own start, with combined
    walk length at most ``max_steps``."""
    while True:
        def chain(first):
            pts = [first]
            for _ in range(2):
                dx, dy = 0, 0
                while dx == dy == 0:
                    dx, dy = rng.randint(0, 2), rng.randint(0, 2)
                pts.append(wk.LatticePoint(pts[-1].x + dx, pts[-1].y - dy))
            return pts
        starts = chain(wk.LatticePoint(0, 0))
        ends = chain(wk.LatticePoint(rng.randint(-1, 5), rng.randint(-1, 5)))
        reachable = all(wk.walk_count(a, b) for a, b in zip(starts, ends))
        if reachable and wk._combined_length(starts, ends) <= max_steps:
            return tuple(starts), tuple(ends)


def lgv_configurations(max_steps: int = 18, random_count: int = 200, seed: int = 0,
                       max_size: int | None = None) -> list[tuple[str, tuple, tuple]]:
    """Walk-tuple endpoint configurations plus seeded random ones.

    Walk-tuple configurations are taken for every profile with
    ``2n + p <= max_size`` (default: all profiles whose combined length
    fits in ``max_steps``).
    """
    configs = []
    size = max_size if max_size is not None else max_steps
    for m in range(1, size + 1):
        for n in range(1, m // 2 + 1):
            for prof in cf.feasible_profiles(n, m - 2 * n):
                ends = wk.tuple_ends(prof)
                if wk._combined_length(wk.TUPLE_STARTS, ends) <= max_steps:
                    configs.append(("profile " + ",".join(map(str, prof)), wk.TUPLE_STARTS, ends))
    rng = random.Random(seed)
    for j in range(random_count):
        starts, ends = random_configuration(rng, max_steps)
        configs.append((f"random {j}", starts, ends))
    return configs


def _lgv_item(config) -> dict:
    label, starts, ends = config
    routings = wk.count_disjoint_routings(starts, ends, max_steps=10 ** 6)
    identity = routings[(0, 1, 2)]
    crossed = sum(v for sigma, v in routings.items() if sigma != (0, 1, 2))
    return dict(config=label, starts=" ".join(f"{a.x}:{a.y}" for a in starts),
                ends=" ".join(f"{b.x}:{b.y}" for b in ends),
                det=wk.det3(wk.lgv_matrix(starts, ends)), brute=identity, crossed=crossed)


def verify_lgv(max_steps: int = 18, random_count: int = 200, seed: int = 0,
               max_size: int | None = None, jobs: int = 1) -> SuiteResult:
    """Determinant versus brute-force enumeration of disjoint triples."""
    res = SuiteResult("lgv", ["config", "starts", "ends", "det", "brute", "crossed"])
    configs = lgv_configurations(max_steps, random_count, seed, max_size)
    for row in _pmap(_lgv_item, configs, jobs):
        res.add(row, row["det"] == row["brute"] and row["crossed"] == 0)
    return res


def _identities_item(n: int) -> dict:
    b, u, s = cf.b_fpf(n), cf.u_count(n), cf.s_count(n)
    multi = sum(cf.a_multi(prof) for prof in cf.feasible_profiles(n, 0))
    pairs = cf.disjoint_pair_count(n, 1) * 2 ** (n - 1)
    return dict(n=n, b=b, u=u, s=s, u_minus_s=u - s, multi_sum=multi, pair_u=pairs)


def _integrality_item(m: int) -> int:
    # a_multi raises on a non-zero remainder
    count = 0
    for n in range(1, m // 2 + 1):
        for prof in cf.feasible_profiles(n, m - 2 * n):
            cf.a_multi(prof)
            count += 1
    return count


def verify_identities(max_n: int = 20, max_size: int | None = None, jobs: int = 1) -> SuiteResult:
    """Closed-form identities for ``n <= max_n`` and exact integrality of
    every multivariate count with ``2n + p <= max_size`` (default
    ``2 * max_n``)."""
    res = SuiteResult("identities", ["n", "b", "u", "s", "u_minus_s", "multi_sum", "pair_u"])
    for row in _pmap(_identities_item, range(1, max_n + 1), jobs):
        res.add(row, row["b"] == row["u_minus_s"] == row["multi_sum"] and row["u"] == row["pair_u"])
    size = max_size if max_size is not None else 2 * max_n
    checked = sum(_pmap(_integrality_item, range(1, size + 1), jobs))
    res.add(dict(n=f"2n+p<={size}", b="", u="", s="", u_minus_s="", multi_sum=f"{checked} integral", pair_u=""))
    return res


SUITES = {
    "bijection": verify_bijection,
    "formula": verify_formula,
    "involution": verify_involution,
    "sinkcode": verify_sinkcode,
    "lgv": verify_lgv,
    "identities": verify_identities,
}
