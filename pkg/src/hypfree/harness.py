"""Seeded corpus construction and the theorem verification harnesses.

Every harness is deterministic given (seed, count, nmax): the corpus, the
candidate hyperplanes and the record order depend only on them, and worker
threads only evaluate pure memoized functions, so reports are byte-identical
across thread counts.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor

from .arrangement import Arrangement, Hyperplane, add_hyperplane, delete, restrict
from .families import cat_shi, catalan, pentagon, shi, shi_cat, weyl
from .freeness import FreenessCertificate, is_free
from .freepath import FOUND, free_path, random_arrangement, verify_theorem_three, verify_theorem_two
from .spog import SpogCertificate, SpogInconclusive, spog_check


def corpus(seed: int, count: int, nmax: int, coeff_bound: int = 3,
           include_classics: bool = True):
    """Labelled list of arrangements: seeded random members plus the classics."""
    members = []
    span = max(nmax - 3, 1)
    for i in range(count):
        n = 4 + (i % span)
        arr = random_arrangement(seed * 1_000_003 + i, 3, n, coeff_bound)
        members.append((f"random[{i}] n={n}", arr))
    if include_classics:
        pa, pb = pentagon()
        a2, b2 = weyl("A2"), weyl("B2")
        members += [
            ("pentagon super", pa),
            ("pentagon sub", pb),
            ("A2 Shi^1", shi(a2, 1)),
            ("A2 Cat^1", catalan(a2, 1)),
            ("A2 Shi^2", shi(a2, 2)),
            ("B2 Shi^{1,1}", shi(b2, (1, 1))),
            ("B2 Cat^1Shi^1", cat_shi(b2, 1, 1)),
            ("B2 Shi^1Cat^1", shi_cat(b2, 1, 1)),
        ]
    return members


def _map_ordered(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _report(name, seed, count, nmax, records):
    checked = sum(r["checked"] for r in records)
    vacuous = sum(r["vacuous"] for r in records)
    violations = [v for r in records for v in r["violations"]]
    return {
        "harness": name,
        "seed": seed,
        "count": count,
        "nmax": nmax,
        "members": len(records),
        "checked": checked,
        "vacuous": vacuous,
        "violations": violations,
        "records": records,
    }


def run_thm12(seed: int, count: int, nmax: int, threads: int = 1) -> dict:
    """Two free endpoints two apart force a free midpoint, across the corpus."""
    members = corpus(seed, count, nmax)

    def work(item):
        label, arr = item
        rec = {"label": label, "n": len(arr), "checked": 0, "vacuous": 0,
               "violations": [], "free": False}
        if not isinstance(is_free(arr), FreenessCertificate):
            rec["vacuous"] = len(arr) * (len(arr) - 1) // 2
            return rec
        rec["free"] = True
        for i in range(len(arr)):
            for j in range(i + 1, len(arr)):
                rep = verify_theorem_two(arr, i, j)
                if not rep.applicable:
                    rec["vacuous"] += 1
                    continue
                rec["checked"] += 1
                if not rep.passed:
                    rec["violations"].append(
                        {"label": label, "pair": [i, j], "detail": rep.detail})
        return rec

    return _report("thm12", seed, count, nmax, _map_ordered(work, members, threads))


def run_thm13(seed: int, count: int, nmax: int, threads: int = 1) -> dict:
    """Free endpoints three apart admit a free path (three variables)."""
    members = corpus(seed, count, nmax)

    def work(item):
        label, arr = item
        rec = {"label": label, "n": len(arr), "checked": 0, "vacuous": 0,
               "violations": [], "free": False}
        if arr.dim != 3:
            return rec
        if not isinstance(is_free(arr), FreenessCertificate):
            n = len(arr)
            rec["vacuous"] = n * (n - 1) * (n - 2) // 6
            return rec
        rec["free"] = True
        n = len(arr)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    rep = verify_theorem_three(arr, i, j, k)
                    if not rep.applicable:
                        rec["vacuous"] += 1
                        continue
                    rec["checked"] += 1
                    if not rep.passed:
                        rec["violations"].append(
                            {"label": label, "triple": [i, j, k], "detail": rep.detail})
        return rec

    return _report("thm13", seed, count, nmax, _map_ordered(work, members, threads))


def _candidate_hyperplanes(arr: Arrangement, seed: int, how_many: int, coeff_bound: int = 3):
    """Deterministic new hyperplanes for addition checks (rational members only)."""
    if arr.disc != 0:
        return []
    rng = random.Random(seed)
    out = []
    guard = 0
    while len(out) < how_many and guard < 200:
        guard += 1
        vec = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(arr.dim))
        if not any(vec):
            continue
        h = Hyperplane(vec)
        if h in arr or h in out:
            continue
        out.append(h)
    return out


def run_spoglevels(seed: int, count: int, nmax: int, threads: int = 1,
                   additions_per_member: int = 3) -> dict:
    """Level formulas: deletions of free members and additions to free members."""
    members = corpus(seed, count, nmax)

    def work(indexed):
        idx, (label, arr) = indexed
        rec = {"label": label, "n": len(arr), "checked": 0, "vacuous": 0,
               "violations": [], "free": False, "levels": []}
        cert = is_free(arr)
        if not isinstance(cert, FreenessCertificate):
            return rec
        rec["free"] = True
        exps = cert.exponents
        for i in range(len(arr)):
            smaller = delete(arr, i)
            if isinstance(is_free(smaller), FreenessCertificate):
                rec["vacuous"] += 1
                continue
            rec["checked"] += 1
            expected_level = len(arr) - 1 - len(restrict(arr, i))
            sc = spog_check(smaller)
            if isinstance(sc, SpogInconclusive):
                rec["violations"].append({"label": label, "op": "delete", "index": i,
                                          "detail": f"inconclusive: {sc.reason}"})
                continue
            if not isinstance(sc, SpogCertificate):
                rec["violations"].append({"label": label, "op": "delete", "index": i,
                                          "detail": f"not SPOG: {sc.reason}"})
                continue
            ok = sc.poexp == exps and sc.level == expected_level
            rec["levels"].append({"op": "delete", "index": i, "poexp": list(sc.poexp),
                                  "level": sc.level, "expected": expected_level})
            if not ok:
                rec["violations"].append(
                    {"label": label, "op": "delete", "index": i,
                     "detail": f"poexp {sc.poexp} level {sc.level}, expected "
                               f"poexp {exps} level {expected_level}"})
        if arr.dim == 3:
            for h in _candidate_hyperplanes(arr, seed * 7_919 + idx, additions_per_member):
                bigger = add_hyperplane(arr, h)
                if isinstance(is_free(bigger), FreenessCertificate):
                    rec["vacuous"] += 1
                    continue
                rec["checked"] += 1
                hi = bigger.hyperplanes.index(h)
                expected_level = len(restrict(bigger, hi)) - 1
                expected_poexp = (1, exps[1] + 1, exps[2] + 1)
                sc = spog_check(bigger)
                if not isinstance(sc, SpogCertificate):
                    reason = getattr(sc, "reason", "unknown")
                    rec["violations"].append({"label": label, "op": "add",
                                              "form": repr(h), "detail": f"not SPOG: {reason}"})
                    continue
                ok = sc.poexp == expected_poexp and sc.level == expected_level
                rec["levels"].append({"op": "add", "form": repr(h), "poexp": list(sc.poexp),
                                      "level": sc.level, "expected": expected_level})
                if not ok:
                    rec["violations"].append(
                        {"label": label, "op": "add", "form": repr(h),
                         "detail": f"poexp {sc.poexp} level {sc.level}, expected "
                                   f"poexp {expected_poexp} level {expected_level}"})
        return rec

    return _report("spoglevels", seed, count, nmax,
                   _map_ordered(work, list(enumerate(members)), threads))


def run_adddel(seed: int, count: int, nmax: int, threads: int = 1) -> dict:
    """Both A and a deletion free force the restriction pattern of exponents."""
    members = corpus(seed, count, nmax)

    def work(item):
        label, arr = item
        rec = {"label": label, "n": len(arr), "checked": 0, "vacuous": 0,
               "violations": [], "free": False}
        cert = is_free(arr)
        if not isinstance(cert, FreenessCertificate):
            return rec
        rec["free"] = True
        exps = list(cert.exponents)
        for i in range(len(arr)):
            smaller = delete(arr, i)
            sub_cert = is_free(smaller)
            if not isinstance(sub_cert, FreenessCertificate):
                rec["vacuous"] += 1
                continue
            rec["checked"] += 1
            restr = restrict(arr, i)
            restr_cert = is_free(restr)
            if not isinstance(restr_cert, FreenessCertificate):
                rec["violations"].append({"label": label, "index": i,
                                          "detail": "restriction not free"})
                continue
            if not _adddel_pattern(exps, list(sub_cert.exponents),
                                   list(restr_cert.exponents)):
                rec["violations"].append(
                    {"label": label, "index": i,
                     "detail": f"exponent pattern fails: {exps} / "
                               f"{list(sub_cert.exponents)} / {list(restr_cert.exponents)}"})
        return rec

    return _report("adddel", seed, count, nmax, _map_ordered(work, members, threads))


def _adddel_pattern(exp_a, exp_sub, exp_restr) -> bool:
    """exp(A) = pattern + (d), exp(A') = pattern + (d-1), exp(A^H) = pattern."""
    for idx, d in enumerate(exp_a):
        rest = exp_a[:idx] + exp_a[idx + 1:]
        if sorted(rest) != sorted(exp_restr):
            continue
        if sorted(rest + [d - 1]) == sorted(exp_sub):
            return True
    return False


def atmore_chains(nmax: int):
    """The rank-2 deformation inclusion chains at k = 1, capped by nmax."""
    chains = []
    a2 = weyl("A2")
    chains.append(("A2 Shi^1 < Cat^1", shi(a2, 1), catalan(a2, 1)))
    chains.append(("A2 Cat^1 < Shi^2", catalan(a2, 1), shi(a2, 2)))
    for tag in ("B2", "G2"):
        rs = weyl(tag)
        chains.append((f"{tag} Shi^(1,1) < Cat^1Shi^1", shi(rs, (1, 1)), cat_shi(rs, 1, 1)))
        chains.append((f"{tag} Shi^(1,1) < Shi^1Cat^1", shi(rs, (1, 1)), shi_cat(rs, 1, 1)))
        chains.append((f"{tag} Cat^(1,1) < Cat^1Shi^2", catalan(rs, (1, 1)), cat_shi(rs, 1, 2)))
        chains.append((f"{tag} Cat^(1,1) < Shi^2Cat^1", catalan(rs, (1, 1)), shi_cat(rs, 2, 1)))
    return [(label, lo, hi) for label, lo, hi in chains if len(hi) <= nmax]


def run_atmore(seed: int, count: int, nmax: int, threads: int = 1) -> dict:
    """Free paths along the Weyl deformation inclusions (combinatorial freeness)."""
    chains = atmore_chains(nmax)

    def work(chain):
        label, lo, hi = chain
        rec = {"label": label, "n": len(hi), "checked": 0, "vacuous": 0,
               "violations": [], "gap": len(hi) - len(lo)}
        lo_cert, hi_cert = is_free(lo), is_free(hi)
        for end, cert in (("lower", lo_cert), ("upper", hi_cert)):
            if not isinstance(cert, FreenessCertificate):
                rec["violations"].append({"label": label, "detail": f"{end} endpoint not free"})
        if rec["violations"]:
            return rec
        rec["exponents"] = {"lower": list(lo_cert.exponents), "upper": list(hi_cert.exponents)}
        rec["checked"] = 1
        result = free_path(lo, hi)
        rec["path"] = result.status
        if result.status != FOUND:
            rec["violations"].append({"label": label, "detail": f"path {result.status}"})
        return rec

    return _report("atmore", seed, count, nmax, _map_ordered(work, chains, threads))


HARNESSES = {
    "thm12": run_thm12,
    "thm13": run_thm13,
    "spoglevels": run_spoglevels,
    "adddel": run_adddel,
    "atmore": run_atmore,
}

MIN_CHECKED = {"thm12": 30, "thm13": 10, "spoglevels": 1, "adddel": 1, "atmore": 1}
