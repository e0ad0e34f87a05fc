"""Link invariants computed from a diagram.

Goeritz matrix and the signature correction term follow the checkerboard
conventions of :mod:`linkbounds.diagram` (see ``iota`` / ``gl_type`` there):
the incidence number of a crossing is +1 exactly when the white regions
occupy the corner pair (1,3), a crossing is of type II exactly when its
incidence number equals its oriented sign, and

    signature = sign(G) - sum of incidence numbers over type II crossings.

With these conventions the positively oriented Hopf link has signature -1
and the table trefoil -2, matching the standard tables.

The Jones polynomial is normalized so the unknot maps to 1: the bracket in
the variable A is corrected by (-A^3)^(-writhe) and A is substituted by
t^(-1/4).  A k-component unlink then yields (-t^(1/2) - t^(-1/2))^(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy as sp

from . import exactla
from .diagram import (
    DisconnectedDiagramError,
    LinkDiagram,
    Shading,
    checkerboard,
    crossing_sign,
    iota,
    gl_type,
    orientation_classes,
    writhe,
)

_t = sp.Symbol("t", positive=True)

DEFAULT_JONES_CAP = 16


class CrossingCapExceeded(ValueError):
    """Bracket state sum refused: too many crossings."""


@dataclass(frozen=True)
class GoeritzData:
    """Unreduced matrix G' over the white regions, the Goeritz matrix G
    (row and column of the region ``base`` deleted), and the correction
    term mu (depends on the orientation carried by the diagram)."""

    g_prime: tuple[tuple[int, ...], ...]
    g: tuple[tuple[int, ...], ...]
    shading: Shading
    region_order: tuple[int, ...]
    mu: int


def goeritz(
    d: LinkDiagram,
    s: Shading | None = None,
    region_order: Sequence[int] | None = None,
) -> GoeritzData:
    """Goeritz data of a connected diagram.

    ``region_order`` lists the white face indices as R_0, ..., R_n; R_0 is
    the deleted region.  Defaults to increasing face index.
    """
    if not d.is_connected():
        raise DisconnectedDiagramError("Goeritz matrix needs a connected diagram")
    if d.n_crossings == 0:
        empty = ()
        return GoeritzData((), (), Shading((), ()), (), 0)
    if s is None:
        s = checkerboard(d, 0)
    white = list(s.white)
    if region_order is None:
        region_order = tuple(white)
    else:
        region_order = tuple(region_order)
        if sorted(region_order) != sorted(white):
            raise ValueError("region_order must be a permutation of the white faces")
    index = {f: i for i, f in enumerate(region_order)}
    n1 = len(region_order)
    gp = [[0] * n1 for _ in range(n1)]
    white_set = set(white)
    mu = 0
    for ci in range(d.n_crossings):
        inc = iota(d, s, ci)
        if gl_type(d, s, ci) == 2:
            mu += inc
        pair = (0, 2) if d.face_of[(ci, 0)] in white_set else (1, 3)
        ri = index[d.face_of[(ci, pair[0])]]
        rj = index[d.face_of[(ci, pair[1])]]
        if ri != rj:
            gp[ri][rj] -= inc
            gp[rj][ri] -= inc
    for i in range(n1):
        gp[i][i] = -sum(gp[i][j] for j in range(n1) if j != i)
    g = tuple(tuple(row[1:]) for row in gp[1:])
    return GoeritzData(
        g_prime=tuple(tuple(row) for row in gp),
        g=g,
        shading=s,
        region_order=region_order,
        mu=mu,
    )


def signature(d: LinkDiagram, pick: int = 0) -> int:
    """Gordon-Litherland signature of the oriented link: sign(G) - mu.

    Independent of the shading pick and the region labeling.
    """
    if not d.is_connected():
        raise DisconnectedDiagramError("signature needs a connected diagram")
    if d.n_crossings == 0:
        return 0
    gd = goeritz(d, checkerboard(d, pick))
    return exactla.inertia(gd.g).signature - gd.mu


def determinant(d: LinkDiagram) -> int:
    """|det G|.  The sign of det G depends on shading and labeling
    conventions, so the absolute value is the reported invariant."""
    if not d.is_connected():
        raise DisconnectedDiagramError("determinant needs a connected diagram")
    if d.n_crossings == 0:
        return 1
    return abs(exactla.det_exact(goeritz(d).g))


def nullity(d: LinkDiagram) -> int:
    if not d.is_connected():
        raise DisconnectedDiagramError("nullity needs a connected diagram")
    if d.n_crossings == 0:
        return 0
    return exactla.inertia(goeritz(d).g).nullity


def goeritz_snf(d: LinkDiagram) -> exactla.SnfResult:
    return exactla.snf([list(r) for r in goeritz(d).g])


def linking_number(
    d: LinkDiagram, part1: Iterable[int], part2: Iterable[int] | None = None
) -> int:
    """Half the signed count of crossings between the two component sets.

    ``part2`` defaults to the complement of ``part1``.  The bipartition
    must be nontrivial.
    """
    p1 = set(part1)
    if part2 is None:
        p2 = set(range(d.k)) - p1
    else:
        p2 = set(part2)
    if not p1 or not p2:
        raise ValueError("bipartition must be nontrivial")
    if p1 & p2:
        raise ValueError("component sets overlap")
    total = 0
    for ci in range(d.n_crossings):
        cu, co = d.strands_at(ci)
        if (cu in p1 and co in p2) or (cu in p2 and co in p1):
            total += crossing_sign(d, ci)
    if total % 2:
        raise AssertionError("odd mixed-crossing sign sum")
    return total // 2


def lk_matrix(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    """Pairwise linking numbers over all components (free loops included,
    always 0).  Symmetric with zero diagonal."""
    k = d.k
    m = [[0] * k for _ in range(k)]
    for ci in range(d.n_crossings):
        cu, co = d.strands_at(ci)
        if cu != co:
            s = crossing_sign(d, ci)
            m[cu][co] += s
            m[co][cu] += s
    for i in range(k):
        for j in range(k):
            if m[i][j] % 2:
                raise AssertionError("odd mixed-crossing sign sum")
            m[i][j] //= 2
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class LinkInvariants:
    k: int
    sigma: int
    eta: int
    det: int
    lk: tuple[tuple[int, ...], ...]


def link_invariants(d: LinkDiagram) -> LinkInvariants:
    return LinkInvariants(
        k=d.k,
        sigma=signature(d),
        eta=nullity(d),
        det=determinant(d),
        lk=lk_matrix(d),
    )


def signature_classes(d: LinkDiagram) -> dict[tuple[int, ...], int]:
    """Signature per orientation class (key: orientation flags)."""
    return {o.orientation: signature(o) for o in orientation_classes(d)}


# Kauffman bracket / Jones polynomial


def _bracket_coeffs(d: LinkDiagram, cap: int) -> dict[int, int]:
    """Kauffman bracket as exponent -> coefficient in the variable A.

    State sum over the 2^n smoothings; the A-smoothing of a crossing joins
    slots 0-1 and 2-3, the B-smoothing slots 0-3 and 1-2.  Each state
    contributes A^(a-b) * delta^(loops-1) with delta = -A^2 - A^-2.
    """
    n = d.n_crossings
    if n > cap:
        raise CrossingCapExceeded(
            f"{n} crossings exceed the bracket cap of {cap}"
        )
    # slot ids 4*ci + pos; alpha pairs slot ids along edges
    alpha = {}
    for s1, s2 in d.edge_slots.values():
        a = 4 * s1[0] + s1[1]
        b = 4 * s2[0] + s2[1]
        alpha[a] = b
        alpha[b] = a

    def loops(state: int) -> int:
        seen = [False] * (4 * n)
        count = 0
        for start in range(4 * n):
            if seen[start]:
                continue
            count += 1
            cur = start
            while not seen[cur]:
                seen[cur] = True
                ci, pos = divmod(cur, 4)
                if (state >> ci) & 1:  # B-smoothing: 0-3, 1-2
                    mate = ci * 4 + (3 - pos)
                else:  # A-smoothing: 0-1, 2-3
                    mate = ci * 4 + (pos ^ 1)
                seen[mate] = True
                cur = alpha[mate]
        return count

    # delta^m expanded once per needed power
    poly: dict[int, int] = {}
    delta_pows: dict[int, dict[int, int]] = {0: {0: 1}}

    def delta_pow(m: int) -> dict[int, int]:
        if m not in delta_pows:
            prev = delta_pow(m - 1)
            cur: dict[int, int] = {}
            for e, c in prev.items():
                cur[e + 2] = cur.get(e + 2, 0) - c
                cur[e - 2] = cur.get(e - 2, 0) - c
            delta_pows[m] = cur
        return delta_pows[m]

    if n == 0:
        circles = d.free_loops
        return dict(delta_pow(max(circles - 1, 0)))

    for state in range(1 << n):
        b = state.bit_count()
        exp = (n - b) - b
        m = loops(state) + d.free_loops - 1
        for e, c in delta_pow(m).items():
            key = e + exp
            poly[key] = poly.get(key, 0) + c
    return {e: c for e, c in poly.items() if c}


def kauffman_jones(d: LinkDiagram, cap: int = DEFAULT_JONES_CAP) -> sp.Expr:
    """Jones polynomial with the unknot normalized to 1, as a sympy
    expression in t (with half/quarter-integer powers for even component
    counts)."""
    coeffs = jones_coeffs(d, cap)
    return sum(
        (c * _t ** sp.Rational(e, 4) for e, c in sorted(coeffs.items())),
        sp.Integer(0),
    )


def jones_coeffs(d: LinkDiagram, cap: int = DEFAULT_JONES_CAP) -> dict[int, int]:
    """Jones polynomial as a map (exponent of t^(1/4)) -> coefficient.

    Writhe-corrected bracket with A = t^(-1/4); exact integer data suited
    to equality tests.
    """
    bracket = _bracket_coeffs(d, cap)
    w = writhe(d)
    # multiply by (-A^3)^(-w), then substitute A = t^(-1/4)
    sign = -1 if w % 2 else 1
    out: dict[int, int] = {}
    for e, c in bracket.items():
        out[-(e - 3 * w)] = sign * c
    return out


def jones_unlink_value(k: int) -> dict[int, int]:
    """Jones data of the k-component unlink: (-t^(1/2) - t^(-1/2))^(k-1)."""
    poly = {0: 1}
    for _ in range(k - 1):
        nxt: dict[int, int] = {}
        for e, c in poly.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        poly = nxt
    return poly


def jones_mirror(coeffs: dict[int, int]) -> dict[int, int]:
    """Jones data of the mirror image (t -> 1/t)."""
    return {-e: c for e, c in coeffs.items()}
