"""Self-contained JSON certificates and their independent checker.

Emission serializes engine results; the checker re-verifies claims using only
membership tests (componentwise exact division), exact polynomial division and
determinant evaluation — no generator search — so a certificate stands on its
own. Schema is versioned; unknown fields are rejected.
"""

from __future__ import annotations

import json

from . import __version__
from .arrangement import Arrangement, Hyperplane, defining_polynomial
from .derivations import Derivation, euler_derivation
from .freeness import FreenessCertificate, NotFree
from .polys import HomPoly, det_poly, exact_divide
from .scalars import Scalar, format_scalar, parse_scalar

SCHEMA = 1


class CertificateError(ValueError):
    pass


# -- serialization ---------------------------------------------------------------


def scalar_to_json(s: Scalar) -> str:
    return format_scalar(s)


def poly_to_json(p: HomPoly):
    return [[list(e), format_scalar(c)] for e, c in sorted(p.coeffs.items(), reverse=True)]


def derivation_to_json(t: Derivation):
    return {"degree": t.degree, "components": [poly_to_json(c) for c in t.components]}


def arrangement_to_json(arr: Arrangement):
    return {"field": arr.field_name(), "rank": arr.dim,
            "hyperplanes": [[format_scalar(c) for c in h.coeffs] for h in arr]}


def free_certificate_to_json(cert: FreenessCertificate) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "free",
        "tool_version": __version__,
        "arrangement": arrangement_to_json(cert.arrangement),
        "exponents": list(cert.exponents),
        "basis": [derivation_to_json(t) for t in cert.basis],
        "saito_constant": scalar_to_json(cert.saito_constant),
        "char_poly": list(cert.char_poly),
    }


def not_free_to_json(res: NotFree) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "not_free",
        "tool_version": __version__,
        "arrangement": arrangement_to_json(res.arrangement),
        "reason": res.reason,
        "char_poly": list(res.char_poly),
    }


def spog_certificate_to_json(cert) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "spog",
        "tool_version": __version__,
        "arrangement": arrangement_to_json(cert.arrangement),
        "poexp": list(cert.poexp),
        "level": cert.level,
        "generators": [derivation_to_json(t) for t in cert.generators],
        "relation": [poly_to_json(a) for a in cert.relation],
        "hilbert_checked_to": cert.hilbert_checked_to,
    }


def path_result_to_json(result, sub: Arrangement, sup: Arrangement) -> dict:
    from .freepath import FOUND
    doc = {
        "schema": SCHEMA,
        "kind": "free_path",
        "tool_version": __version__,
        "status": result.status,
        "gap": result.gap,
        "sub": arrangement_to_json(sub),
        "super": arrangement_to_json(sup),
        "explored": {str(m): v for m, v in sorted(result.explored.items())},
        "explored_count": len(result.explored),
        "chain": None,
    }
    if result.status == FOUND:
        doc["chain"] = [{"mask": m,
                         "arrangement": arrangement_to_json(arr),
                         "certificate": free_certificate_to_json(c)}
                        for (m, arr), c in zip(result.chain, result.certificates)]
    return doc


def to_json_text(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


# -- parsing ----------------------------------------------------------------------


def _field_disc(name: str) -> int:
    if name == "Q":
        return 0
    parts = name.split()
    if len(parts) == 2 and parts[0] == "Qsqrt":
        return int(parts[1])
    raise CertificateError(f"bad field name {name!r}")


def arrangement_from_json(doc) -> Arrangement:
    _expect_keys(doc, {"field", "rank", "hyperplanes"})
    disc = _field_disc(doc["field"])
    rank = doc["rank"]
    hs = [Hyperplane([parse_scalar(tok, disc) for tok in row])
          for row in doc["hyperplanes"]]
    return Arrangement(rank, hs, disc)


def poly_from_json(data, nvars: int, degree: int, disc: int) -> HomPoly:
    coeffs = {}
    for e, tok in data:
        coeffs[tuple(e)] = parse_scalar(tok, disc)
    return HomPoly(nvars, degree, coeffs)


def derivation_from_json(doc, nvars: int, disc: int) -> Derivation:
    _expect_keys(doc, {"degree", "components"})
    d = doc["degree"]
    return Derivation([poly_from_json(c, nvars, d, disc) for c in doc["components"]])


def _expect_keys(doc, keys):
    got = set(doc)
    if got != keys:
        extra = got - keys
        missing = keys - got
        raise CertificateError(f"unexpected fields {sorted(extra)}, missing {sorted(missing)}")


# -- independent re-verification ----------------------------------------------------


def _tangency_by_division(theta: Derivation, h: Hyperplane) -> bool:
    val = theta.apply_to_form(h)
    if val.is_zero():
        return True
    return exact_divide(val, h.form()) is not None


def check_free_certificate(doc: dict) -> Arrangement:
    """Re-verify a freeness certificate; returns the arrangement on success."""
    _expect_keys(doc, {"schema", "kind", "tool_version", "arrangement", "exponents",
                       "basis", "saito_constant", "char_poly"})
    if doc["schema"] != SCHEMA:
        raise CertificateError(f"unsupported schema {doc['schema']}")
    if doc["kind"] != "free":
        raise CertificateError("not a freeness certificate")
    arr = arrangement_from_json(doc["arrangement"])
    exps = tuple(doc["exponents"])
    if list(exps) != sorted(exps):
        raise CertificateError("exponents not sorted")
    if sum(exps) != len(arr):
        raise CertificateError("exponent sum does not match the arrangement size")
    if len(arr) and 1 not in exps:
        raise CertificateError("exponents of a nonempty arrangement must contain 1")
    basis = [derivation_from_json(b, arr.dim, arr.disc) for b in doc["basis"]]
    if len(basis) != arr.dim:
        raise CertificateError("basis size must equal the rank")
    if tuple(sorted(t.degree for t in basis)) != exps:
        raise CertificateError("basis degrees disagree with the exponents")
    if len(arr) and basis[0] != euler_derivation(arr.dim):
        raise CertificateError("first basis member must be the euler derivation")
    for i, t in enumerate(basis):
        for h in arr:
            if not _tangency_by_division(t, h):
                raise CertificateError(f"basis member {i} is not tangent to {h}")
    det = det_poly([list(t.components) for t in basis])
    c = parse_scalar(doc["saito_constant"], arr.disc)
    if not c:
        raise CertificateError("saito constant must be nonzero")
    expect = defining_polynomial(arr).scale(c)
    if det != expect:
        raise CertificateError("determinant is not the stated multiple of Q")
    # Terao factorization consistency: chi == prod (t - e_i)
    coeffs = [1]
    for e in exps:
        coeffs = [a for a in coeffs] + [0]
        for j in range(len(coeffs) - 1, 0, -1):
            coeffs[j] = coeffs[j] - e * coeffs[j - 1]
    if list(doc["char_poly"]) != coeffs:
        raise CertificateError("char_poly does not factor as prod(t - e_i)")
    return arr


def check_spog_certificate(doc: dict) -> Arrangement:
    """Re-verify the checkable part of a SPOG certificate.

    Membership, the single relation, its degree bookkeeping and the size
    identity sum(deg g_i) == |A| + level + 1 are all exact; minimality of the
    generating set is the engine's claim and is not re-derivable without a
    generator search.
    """
    _expect_keys(doc, {"schema", "kind", "tool_version", "arrangement", "poexp",
                       "level", "generators", "relation", "hilbert_checked_to"})
    if doc["schema"] != SCHEMA:
        raise CertificateError(f"unsupported schema {doc['schema']}")
    if doc["kind"] != "spog":
        raise CertificateError("not a SPOG certificate")
    arr = arrangement_from_json(doc["arrangement"])
    gens = [derivation_from_json(g, arr.dim, arr.disc) for g in doc["generators"]]
    if len(gens) != arr.dim + 1:
        raise CertificateError("SPOG needs rank+1 generators")
    level = doc["level"]
    poexp = tuple(doc["poexp"])
    degrees = [t.degree for t in gens]
    if gens[0] != euler_derivation(arr.dim):
        raise CertificateError("first generator must be the euler derivation")
    if degrees[-1] != level:
        raise CertificateError("last generator must carry the level degree")
    if tuple(sorted(degrees[:-1])) != poexp:
        raise CertificateError("poexp must list the non-level generator degrees")
    if sum(degrees) != len(arr) + level + 1:
        raise CertificateError("generator degrees violate the size identity")
    for i, t in enumerate(gens):
        for h in arr:
            if not _tangency_by_division(t, h):
                raise CertificateError(f"generator {i} is not tangent to {h}")
    relation = [poly_from_json(a, arr.dim, level + 1 - t.degree, arr.disc)
                if level + 1 - t.degree >= 0 else HomPoly.zero(arr.dim, 0)
                for a, t in zip(doc["relation"], gens)]
    if all(a.is_zero() for a in relation):
        raise CertificateError("relation must be nonzero")
    total = None
    for a, t in zip(relation, gens):
        if a.is_zero():
            continue
        contrib = [a * comp for comp in t.components]
        total = contrib if total is None else [x + y for x, y in zip(total, contrib)]
    if total is None or any(not v.is_zero() for v in total):
        raise CertificateError("relation does not evaluate to zero")
    return arr


def check_path_certificate(doc: dict):
    """Structural re-verification of a path result document."""
    _expect_keys(doc, {"schema", "kind", "tool_version", "status", "gap", "sub",
                       "super", "explored", "explored_count", "chain"})
    if doc["schema"] != SCHEMA:
        raise CertificateError(f"unsupported schema {doc['schema']}")
    if doc["kind"] != "free_path":
        raise CertificateError("not a path certificate")
    sub = arrangement_from_json(doc["sub"])
    sup = arrangement_from_json(doc["super"])
    if not sub.issubset(sup):
        raise CertificateError("endpoints are not nested")
    gap = doc["gap"]
    if gap != len(sup) - len(sub):
        raise CertificateError("gap does not match the endpoints")
    if doc["status"] == "NONE":
        if doc["explored_count"] != 2 ** gap or len(doc["explored"]) != 2 ** gap:
            raise CertificateError("negative certificate must cover every subset")
        free_masks = {int(m) for m, v in doc["explored"].items() if v == "free"}
        if 0 not in free_masks or (2 ** gap - 1) not in free_masks:
            raise CertificateError("endpoints must carry free verdicts")
        # no monotone chain through free masks may connect the endpoints
        reach = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(gap):
                    child = m | (1 << i)
                    if child != m and child in free_masks and child not in reach:
                        reach.add(child)
                        nxt.append(child)
            frontier = nxt
        if 2 ** gap - 1 in reach:
            raise CertificateError("explored map admits a free chain; NONE is wrong")
    elif doc["status"] == "FOUND":
        chain = doc["chain"]
        if not chain:
            raise CertificateError("FOUND result must carry a chain")
        sizes = []
        arrs = []
        for node in chain:
            _expect_keys(node, {"mask", "arrangement", "certificate"})
            arr = check_free_certificate(node["certificate"])
            if arrangement_from_json(node["arrangement"]) != arr:
                raise CertificateError("chain node and its certificate disagree")
            arrs.append(arr)
            sizes.append(len(arr))
        if arrs[0] != sub or arrs[-1] != sup:
            raise CertificateError("chain endpoints disagree with the inputs")
        for a, b in zip(arrs, arrs[1:]):
            if len(b) != len(a) + 1 or not a.issubset(b):
                raise CertificateError("consecutive chain nodes must differ by one plane")
    return sub, sup
