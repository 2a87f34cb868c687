"""Central and affine hyperplane arrangements over Q or Q(sqrt d).

Hyperplanes are linear forms normalized to leading coefficient 1, and an
Arrangement keeps them in canonical (sort-key) order, so structural equality
is set equality and arrangements are usable as memoization keys.
"""

from __future__ import annotations

from .polys import HomPoly
from .scalars import FieldError, Scalar, _check_squarefree, format_scalar, parse_scalar

ZERO = Scalar.zero()
ONE = Scalar.one()


class Hyperplane:
    """Linear form through the origin; coefficients normalized, leading 1."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs):
        cs = [c if isinstance(c, Scalar) else Scalar.rational(c) for c in coeffs]
        lead = next((c for c in cs if c), None)
        if lead is None:
            raise ValueError("hyperplane form cannot be the zero vector")
        if lead != ONE:
            inv = lead.inverse()
            cs = [c * inv if c else c for c in cs]
        self.coeffs = tuple(cs)
        self._hash = hash(self.coeffs)

    @property
    def dim(self):
        return len(self.coeffs)

    def pivot(self) -> int:
        """Index of the leading (== 1) coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable: zero form")

    def form(self) -> HomPoly:
        return HomPoly.linear(self.coeffs)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "H(" + " ".join(format_scalar(c) for c in self.coeffs) + ")"


class Arrangement:
    """Finite set of pairwise distinct central hyperplanes in K^dim."""

    __slots__ = ("dim", "disc", "hyperplanes", "_hash")

    def __init__(self, dim: int, hyperplanes, disc: int = 0):
        if disc:
            _check_squarefree(disc)
        self.dim = dim
        self.disc = disc  # 0 = rationals, else Q(sqrt disc)
        hs = [h if isinstance(h, Hyperplane) else Hyperplane(h) for h in hyperplanes]
        for h in hs:
            if h.dim != dim:
                raise ValueError(f"hyperplane {h} not in dimension {dim}")
            for c in h.coeffs:
                if c.d and c.d != disc:
                    raise FieldError(f"coefficient {c} outside declared field")
        hs.sort(key=Hyperplane.sort_key)
        for a, b in zip(hs, hs[1:]):
            if a == b:
                raise ValueError(f"repeated hyperplane {a}")
        self.hyperplanes = tuple(hs)
        self._hash = hash((dim, disc, self.hyperplanes))

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, i):
        return self.hyperplanes[i]

    def __contains__(self, h):
        return h in self.hyperplanes

    def __eq__(self, other):
        return (isinstance(other, Arrangement) and self.dim == other.dim
                and self.disc == other.disc and self.hyperplanes == other.hyperplanes)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, n={len(self)}, disc={self.disc})"

    def field_name(self) -> str:
        return "Q" if self.disc == 0 else f"Qsqrt {self.disc}"

    def issubset(self, other: "Arrangement") -> bool:
        if self.dim != other.dim or self.disc != other.disc:
            return False
        mine, theirs = set(self.hyperplanes), set(other.hyperplanes)
        return mine <= theirs


class AffineArrangement:
    """Affine hyperplanes c.x + e = 0 in K^dim (not necessarily central)."""

    __slots__ = ("dim", "disc", "lines")

    def __init__(self, dim: int, lines, disc: int = 0):
        self.dim = dim
        self.disc = disc
        seen = []
        for coeffs, const in lines:
            cs = tuple(c if isinstance(c, Scalar) else Scalar.rational(c) for c in coeffs)
            e = const if isinstance(const, Scalar) else Scalar.rational(const)
            if not any(cs):
                raise ValueError("affine hyperplane needs a nonzero linear part")
            full = cs + (e,)
            lead = next(c for c in full if c)
            inv = lead.inverse()
            full = tuple(c * inv if c else c for c in full)
            seen.append(full)
        seen.sort(key=lambda f: tuple(c.sort_key() for c in f))
        for a, b in zip(seen, seen[1:]):
            if a == b:
                raise ValueError("repeated affine hyperplane")
        self.lines = tuple((f[:-1], f[-1]) for f in seen)

    def __len__(self):
        return len(self.lines)

    def __eq__(self, other):
        return (isinstance(other, AffineArrangement) and self.dim == other.dim
                and self.disc == other.disc and self.lines == other.lines)

    def __hash__(self):
        return hash((self.dim, self.disc, self.lines))


# -- basic operations ----------------------------------------------------------


def defining_polynomial(arr: Arrangement) -> HomPoly:
    """Product of all defining forms; degree == |arr|."""
    q = HomPoly.constant(arr.dim, 1)
    for h in arr:
        q = q * h.form()
    return q


def delete(arr: Arrangement, index: int) -> Arrangement:
    if not 0 <= index < len(arr):
        raise IndexError(f"hyperplane index {index} out of range")
    rest = arr.hyperplanes[:index] + arr.hyperplanes[index + 1:]
    return Arrangement(arr.dim, rest, arr.disc)


def add_hyperplane(arr: Arrangement, h: Hyperplane) -> Arrangement:
    return Arrangement(arr.dim, arr.hyperplanes + (h,), arr.disc)


def restrict(arr: Arrangement, index: int) -> Arrangement:
    """Restriction to the chosen hyperplane, in eliminated coordinates.

    The pivot variable of the host form is eliminated; images of the other
    forms are normalized and deduplicated (distinct flats of the host).
    """
    host = arr[index]
    p = host.pivot()
    # on the host: x_p = -sum_{k != p} a_k x_k
    repl = [-c for i, c in enumerate(host.coeffs) if i != p]
    images = []
    seen = set()
    for j, h in enumerate(arr):
        if j == index:
            continue
        cs = list(h.coeffs)
        bp = cs[p]
        rest = [c for i, c in enumerate(cs) if i != p]
        img = [rc + bp * rp if bp else rc for rc, rp in zip(rest, repl)]
        if not any(img):
            raise AssertionError("restriction image vanished for a distinct hyperplane")
        hp = Hyperplane(img)
        if hp not in seen:
            seen.add(hp)
            images.append(hp)
    return Arrangement(arr.dim - 1, images, arr.disc)


def cone(aff: AffineArrangement) -> Arrangement:
    """Homogenize with a new last variable z and append the hyperplane z = 0."""
    hs = [Hyperplane(coeffs + (const,)) for coeffs, const in aff.lines]
    z = Hyperplane([ZERO] * aff.dim + [ONE])
    return Arrangement(aff.dim + 1, hs + [z], aff.disc)


def decone(arr: Arrangement, index: int) -> AffineArrangement:
    """Set the chosen form to 1 after a coordinate change sending it last.

    cone(decone(arr, i)) equals arr transformed by that coordinate change, so
    the two are linearly isomorphic.
    """
    host = arr[index]
    p = host.pivot()
    a = host.coeffs
    lines = []
    for j, h in enumerate(arr):
        if j == index:
            continue
        b = h.coeffs
        bp = b[p]
        coeffs = tuple(b[i] - bp * a[i] if bp else b[i]
                       for i in range(arr.dim) if i != p)
        lines.append((coeffs, bp))
    return AffineArrangement(arr.dim - 1, lines, arr.disc)


def coordinate_image_under_decone(arr: Arrangement, index: int) -> Arrangement:
    """The linear image of arr under the decone coordinate change (for tests)."""
    host = arr[index]
    p = host.pivot()
    a = host.coeffs
    forms = []
    for h in arr:
        b = h.coeffs
        bp = b[p]
        coeffs = [b[i] - bp * a[i] if bp else b[i] for i in range(arr.dim) if i != p]
        coeffs.append(bp)
        forms.append(Hyperplane(coeffs))
    return Arrangement(arr.dim, forms, arr.disc)


def form_rank(arr: Arrangement) -> int:
    from .linalg import ExactMatrix, rref
    if not len(arr):
        return 0
    m = ExactMatrix([list(h.coeffs) for h in arr])
    _, pivots = rref(m)
    return len(pivots)


def is_essential(arr: Arrangement) -> bool:
    return form_rank(arr) == arr.dim


# -- text file format ------------------------------------------------------------


def parse_field_line(tokens, lineno):
    if tokens == ["Q"]:
        return 0
    if len(tokens) == 2 and tokens[0] == "Qsqrt":
        try:
            d = int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: bad discriminant {tokens[1]!r}")
        _check_squarefree(d)
        return d
    raise ValueError(f"line {lineno}: expected 'field Q' or 'field Qsqrt d'")


def parse_arrangement_text(text: str):
    """Parse the arrangement text format; returns Arrangement or AffineArrangement.

    Line 1: `field Q` | `field Qsqrt d`; line 2: `rank L` (central) or
    `affine L`; then one hyperplane per line, scalar tokens separated by
    spaces (affine lines carry L coefficients plus one constant).
    Lines starting with `#` are comments.
    """
    disc = None
    shape = None
    dim = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if disc is None:
            if tokens[0] != "field":
                raise ValueError(f"line {lineno}: expected 'field ...' header")
            disc = parse_field_line(tokens[1:], lineno)
            continue
        if shape is None:
            if tokens[0] not in ("rank", "affine") or len(tokens) != 2:
                raise ValueError(f"line {lineno}: expected 'rank L' or 'affine L'")
            shape = tokens[0]
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad dimension {tokens[1]!r}")
            if dim < 1:
                raise ValueError(f"line {lineno}: dimension must be positive")
            continue
        want = dim if shape == "rank" else dim + 1
        if len(tokens) != want:
            raise ValueError(f"line {lineno}: expected {want} scalar tokens, got {len(tokens)}")
        try:
            row = [parse_scalar(t, disc) for t in tokens]
        except (ValueError, FieldError) as exc:
            raise ValueError(f"line {lineno}: {exc}")
        rows.append((lineno, row))
    if disc is None or shape is None:
        raise ValueError("missing 'field'/'rank' headers")
    try:
        if shape == "rank":
            return Arrangement(dim, [r for _, r in rows], disc)
        return AffineArrangement(dim, [(tuple(r[:-1]), r[-1]) for _, r in rows], disc)
    except ValueError as exc:
        raise ValueError(f"invalid arrangement: {exc}")


def format_arrangement_text(arr) -> str:
    if isinstance(arr, Arrangement):
        lines = [f"field {arr.field_name()}", f"rank {arr.dim}"]
        for h in arr:
            lines.append(" ".join(format_scalar(c) for c in h.coeffs))
        return "\n".join(lines) + "\n"
    lines = [f"field {'Q' if arr.disc == 0 else f'Qsqrt {arr.disc}'}", f"affine {arr.dim}"]
    for coeffs, const in arr.lines:
        lines.append(" ".join(format_scalar(c) for c in coeffs) + " " + format_scalar(const))
    return "\n".join(lines) + "\n"
