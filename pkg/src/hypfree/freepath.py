"""Free-path search over the subset lattice between nested free arrangements,
plus the extensional two-deletion / three-deletion verification harnesses.

The search runs bottom-up: breadth-first one-plane additions admitting only
free nodes, memoized by canonical arrangement key. A failed search sweeps the
whole subset lattice so the negative answer is an exhaustive certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arrangement import Arrangement, Hyperplane, add_hyperplane, delete, is_essential
from .freeness import FreenessCertificate, is_free

DEFAULT_GAP_CAP = 20

FOUND = "FOUND"
NONE = "NONE"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PathResult:
    status: str
    chain: tuple = ()            # arrangements from sub to super when FOUND
    certificates: tuple = ()     # matching freeness certificates
    explored: dict = field(default_factory=dict)  # bitmask -> "free" | "not_free"
    gap: int = 0

    def chain_masks(self):
        return tuple(m for m, _ in self.chain)


def _subset_arrangement(base: Arrangement, extra, mask: int) -> Arrangement:
    hs = list(base.hyperplanes)
    for i, h in enumerate(extra):
        if mask >> i & 1:
            hs.append(h)
    return Arrangement(base.dim, hs, base.disc)


def free_path(sub: Arrangement, sup: Arrangement, gap_cap: int = DEFAULT_GAP_CAP) -> PathResult:
    """Search for a chain of free arrangements from sub to sup, one plane a step.

    FOUND returns the chain with per-node certificates; NONE is exhaustive
    (every intermediate subset carries a verdict); gaps above gap_cap return
    INCONCLUSIVE instead of running unbounded.
    """
    if not sub.issubset(sup):
        raise ValueError("endpoints must be nested arrangements")
    if not isinstance(is_free(sub), FreenessCertificate):
        raise ValueError("lower endpoint is not free")
    if not isinstance(is_free(sup), FreenessCertificate):
        raise ValueError("upper endpoint is not free")
    extra = sorted((h for h in sup if h not in sub), key=Hyperplane.sort_key)
    k = len(extra)
    if k > gap_cap:
        return PathResult(status=INCONCLUSIVE, gap=k)
    full = (1 << k) - 1
    explored = {}

    def verdict(mask: int):
        v = explored.get(mask)
        if v is None:
            arr = _subset_arrangement(sub, extra, mask)
            v = "free" if isinstance(is_free(arr), FreenessCertificate) else "not_free"
            explored[mask] = v
        return v

    parent = {0: None}
    frontier = [0]
    verdict(0)
    while frontier and full not in parent:
        next_frontier = []
        for mask in frontier:
            for i in range(k):
                if mask >> i & 1:
                    continue
                child = mask | (1 << i)
                if child in parent:
                    continue
                if verdict(child) == "free":
                    parent[child] = mask
                    next_frontier.append(child)
        frontier = next_frontier

    if full in parent:
        masks = []
        m = full
        while m is not None:
            masks.append(m)
            m = parent[m]
        masks.reverse()
        chain = []
        certs = []
        for m in masks:
            arr = _subset_arrangement(sub, extra, m)
            chain.append((m, arr))
            certs.append(is_free(arr))
        return PathResult(status=FOUND, chain=tuple(chain), certificates=tuple(certs),
                          explored=dict(explored), gap=k)

    for mask in range(full + 1):
        verdict(mask)
    return PathResult(status=NONE, explored=dict(explored), gap=k)


# -- theorem harnesses ----------------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    name: str
    applicable: bool   # both endpoints free, so the statement bites
    passed: bool       # vacuously true when not applicable
    detail: dict


def verify_theorem_two(arr: Arrangement, i1: int, i2: int) -> TheoremReport:
    """Two free endpoints two planes apart force a free midpoint."""
    if i1 == i2:
        raise ValueError("need two distinct hyperplane indices")
    free_a = isinstance(is_free(arr), FreenessCertificate)
    lo = delete(arr, max(i1, i2))
    lo = delete(lo, min(i1, i2))
    free_b = isinstance(is_free(lo), FreenessCertificate)
    d1_free = d2_free = None
    applicable = free_a and free_b
    passed = True
    if applicable:
        d1_free = isinstance(is_free(delete(arr, i1)), FreenessCertificate)
        d2_free = isinstance(is_free(delete(arr, i2)), FreenessCertificate)
        passed = d1_free or d2_free
    return TheoremReport(
        name="two_deletion", applicable=applicable, passed=passed,
        detail={"free_super": free_a, "free_sub": free_b,
                "deletion_1_free": d1_free, "deletion_2_free": d2_free})


def verify_theorem_three(arr: Arrangement, i1: int, i2: int, i3: int) -> TheoremReport:
    """In K^3, free endpoints three planes apart admit a free path."""
    if arr.dim != 3:
        raise ValueError("the three-plane statement is for K^3 only")
    if len({i1, i2, i3}) != 3:
        raise ValueError("need three distinct hyperplane indices")
    free_a = isinstance(is_free(arr), FreenessCertificate)
    lo = arr
    for i in sorted((i1, i2, i3), reverse=True):
        lo = delete(lo, i)
    free_b = isinstance(is_free(lo), FreenessCertificate)
    applicable = free_a and free_b
    status = None
    passed = True
    if applicable:
        result = free_path(lo, arr)
        status = result.status
        passed = result.status == FOUND
    return TheoremReport(
        name="three_deletion", applicable=applicable, passed=passed,
        detail={"free_super": free_a, "free_sub": free_b, "path_status": status})


# -- seeded corpus generation -----------------------------------------------------


def random_arrangement(seed: int, dim: int, n: int, coeff_bound: int,
                       max_retries: int = 200) -> Arrangement:
    """Deterministic essential arrangement with small integer coefficients.

    Rejection-samples pairwise non-proportional integer forms; the same seed
    always yields the same arrangement.
    """
    if n < dim:
        raise ValueError("need at least dim hyperplanes for an essential arrangement")
    rng = random.Random(seed)
    for _ in range(max_retries):
        seen = set()
        forms = []
        tries = 0
        while len(forms) < n and tries < 50 * n:
            tries += 1
            vec = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(dim))
            if not any(vec):
                continue
            h = Hyperplane(vec)
            if h in seen:
                continue
            seen.add(h)
            forms.append(h)
        if len(forms) < n:
            continue
        arr = Arrangement(dim, forms)
        if is_essential(arr):
            return arr
    raise ValueError(f"could not sample an essential arrangement "
                     f"(seed={seed}, dim={dim}, n={n}, bound={coeff_bound})")
