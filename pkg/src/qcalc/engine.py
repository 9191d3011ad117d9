"""Formula dispatch, cross-formula consistency checks, and the sweep.

Every orbit class is computable three independent ways (pipe dreams,
chained generic pipe dreams, and a ratio of fixed-point restrictions),
for both the quiver polynomial and the CSM class of the open locus.
check() runs all six and also tests the two derived laws: the quiver
polynomial has degree l(z(r)) - |D_Hom|, and it is the coefficient of
h^(L - l(z(r))) in the CSM class.  Failures are recorded in the report,
never raised, so a sweep always completes and aggregates.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import blockperm, cgpd, localization, pipedream
from .blockperm import length, perm_set, regions, zelevinsky_permutation
from .poly import Poly, format_poly
from .quiver import Dims, RankArray, enumerate_rank_arrays, to_json

QPOLY_METHODS = {
    "pd": pipedream.quiver_poly_pd,
    "cgpd": cgpd.quiver_poly_cgpd,
    "ratio": localization.quiver_poly_ratio,
}
CSM_METHODS = {
    "pd": pipedream.csm_pd,
    "cgpd": cgpd.csm_cgpd,
    "ratio": localization.csm_ratio,
}


def compute(r: RankArray, target: str, method: str) -> Poly:
    """One polynomial of the orbit of r, by the named formula."""
    table = {"qpoly": QPOLY_METHODS, "csm": CSM_METHODS}.get(target)
    if table is None:
        raise ValueError(f"unknown target {target!r}")
    fn = table.get(method)
    if fn is None:
        raise ValueError(f"unknown method {method!r} for target {target!r}")
    return fn(r)


@dataclass(frozen=True)
class ConsistencyReport:
    """All six polynomials of one orbit with their agreement flags.

    equal maps pair names like "qpoly:pd=cgpd" to booleans; counts holds
    the enumeration sizes; timings_ms the per-method wall times.
    """

    rank: RankArray
    polynomials: dict[str, Poly]
    equal: dict[str, bool]
    degree_ok: bool
    leading_ok: bool
    counts: dict[str, int]
    timings_ms: dict[str, float]

    @property
    def ok(self) -> bool:
        return (
            all(self.equal.values()) and self.degree_ok and self.leading_ok
        )

    def to_json(self) -> dict:
        return {
            "input": to_json(self.rank),
            "polynomials": {
                name: format_poly(p) for name, p in self.polynomials.items()
            },
            "equal": dict(self.equal),
            "degree_ok": self.degree_ok,
            "leading_ok": self.leading_ok,
            "counts": dict(self.counts),
            "timings_ms": dict(self.timings_ms),
            "ok": self.ok,
        }


def check(r: RankArray) -> ConsistencyReport:
    """Compute all six polynomials of r and verify every cross relation."""
    polys: dict[str, Poly] = {}
    timings: dict[str, float] = {}
    for target, table in (("qpoly", QPOLY_METHODS), ("csm", CSM_METHODS)):
        for method, fn in table.items():
            start = time.perf_counter()
            polys[f"{target}_{method}"] = fn(r)
            timings[f"{target}_{method}"] = (time.perf_counter() - start) * 1000.0

    equal = {}
    for target in ("qpoly", "csm"):
        for left, right in (("pd", "cgpd"), ("pd", "ratio"), ("cgpd", "ratio")):
            equal[f"{target}:{left}={right}"] = (
                polys[f"{target}_{left}"] == polys[f"{target}_{right}"]
            )

    dims = r.dims
    reg = regions(dims)
    z = zelevinsky_permutation(r)
    codim = length(z) - len(reg.dhom_cells)
    degree_ok = polys["qpoly_pd"].degree() == codim
    leading_ok = (
        polys["csm_pd"].hbar_coefficient(reg.L - length(z)) == polys["qpoly_pd"]
    )

    targets = frozenset(perm_set(r))
    counts = {
        "perm": len(targets),
        "rp_star": len(
            pipedream.enumerate_pipe_dreams(dims, z, "strict", "reduced")
        ),
        "p_total": sum(
            1 for _ in pipedream.locus_pipe_dreams(dims, targets, "strict", "all")
        ),
        "cgpd": len(cgpd.enumerate_cgpd(r)),
        "cgpd_infinity": len(cgpd.cgpd_infinity(r)),
    }
    return ConsistencyReport(
        rank=r,
        polynomials=polys,
        equal=equal,
        degree_ok=degree_ok,
        leading_ok=leading_ok,
        counts=counts,
        timings_ms=timings,
    )


def sweep_dims(budget: int) -> list[Dims]:
    """All dims with n >= 1 and dim Hom = sum r_i r_{i+1} <= budget,
    ordered by length then lexicographically."""
    out: list[Dims] = []

    def rec(prefix: list[int], used: int):
        if len(prefix) >= 2:
            out.append(Dims(tuple(prefix)))
        last = prefix[-1]
        nxt = 1
        while used + last * nxt <= budget:
            prefix.append(nxt)
            rec(prefix, used + last * nxt)
            prefix.pop()
            nxt += 1

    first = 1
    while first <= budget:
        rec([first], 0)
        first += 1
    out.sort(key=lambda dims: (dims.n, dims.r))
    return out


def worker_count() -> int:
    env = os.environ.get("QCALC_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(budget: int) -> list[ConsistencyReport]:
    """check() on every orbit of every dims within budget, in the order
    of sweep_dims then enumerate_rank_arrays; parallel over orbits."""
    ranks = [
        r for dims in sweep_dims(budget) for r in enumerate_rank_arrays(dims)
    ]
    workers = worker_count()
    if workers <= 1 or len(ranks) <= 1:
        return [check(r) for r in ranks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check, ranks, chunksize=1))
