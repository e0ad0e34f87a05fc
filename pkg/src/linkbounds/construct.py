"""Programmatic diagram builders.

These produce PD codes for standard families (closed braids, rational
tangle closures, twist and torus knots, the connected unlink rows) and for
medial diagrams of embedded signed planar multigraphs.  The bundled dataset
and the knot identification table are generated from these builders, and
the test suite uses them as independent sources of known link types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .diagram import LinkDiagram


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; generator ``i`` crosses strand i over
    strand i+1 (1-based), ``-i`` the inverse crossing."""
    if strands is None:
        strands = max((abs(g) for g in word), default=1) + 1
    if any(g == 0 or abs(g) >= strands for g in word):
        raise ValueError("bad braid word")
    nxt = itertools.count(1)
    # current edge label on each strand position
    cur = [next(nxt) for _ in range(strands)]
    first = list(cur)
    crossings = []
    for g in word:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]  # left, right incoming (from the top)
        c, d = next(nxt), next(nxt)  # left, right outgoing
        # braid runs downward; a positive generator makes a crossing of
        # sign +1 (closure of [1, 1, 1] is the right-handed trefoil)
        if g > 0:
            # under-strand a -> d, over-strand b -> c; ccw from top-left
            crossings.append((a, c, d, b))
        else:
            # under-strand b -> c, over-strand a -> d; ccw from top-right
            crossings.append((b, a, c, d))
        cur[i], cur[i + 1] = c, d
    # close up: identify cur[i] with first[i]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    free = 0
    for a, b in zip(cur, first):
        if a == b:
            free += 1  # strand crossed nothing: a detached circle
            continue
        ra, rb = find(a), find(b)
        if ra == rb:
            raise AssertionError("closure arcs merged twice")
        parent[ra] = rb
    relabeled = [tuple(find(e) for e in c) for c in crossings]
    return LinkDiagram(relabeled, free_loops=free)


@dataclass(frozen=True)
class Tangle:
    """A 2-string tangle as PD data with four boundary edge labels.

    ``nw, ne, sw, se`` are the labels of the edges reaching the four
    boundary points.  ``loops`` counts closed crossing-free circles inside.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    nw: int
    ne: int
    sw: int
    se: int
    loops: int = 0

    def next_label(self) -> int:
        labels = [e for c in self.crossings for e in c]
        labels += [self.nw, self.ne, self.sw, self.se]
        return max(labels) + 1


def zero_tangle() -> Tangle:
    """Two horizontal strands: nw-ne on top, sw-se below."""
    return Tangle((), nw=1, ne=1, sw=2, se=2)


def infinity_tangle() -> Tangle:
    """Two vertical strands: nw-sw and ne-se."""
    return Tangle((), nw=1, ne=2, sw=1, se=2)


def twist_h(t: Tangle, sign: int) -> Tangle:
    """Add a horizontal half-twist at the right (twisting ne and se).

    ``sign=+1`` puts the strand arriving from se over the one from ne.
    """
    a, b = t.ne, t.se
    n = t.next_label()
    ne2, se2 = n, n + 1
    # ends ccw around the new crossing: west-top (a), west-bottom (b),
    # east-bottom (se2), east-top (ne2)
    if sign > 0:
        c = (a, b, se2, ne2)  # under-strand a -> se2, over b -> ne2
    else:
        c = (b, se2, ne2, a)  # under-strand b -> ne2, over a -> se2
    return replace(t, crossings=t.crossings + (c,), ne=ne2, se=se2)


def twist_v(t: Tangle, sign: int) -> Tangle:
    """Add a vertical half-twist at the bottom (twisting sw and se).

    ``sign=+1`` puts the strand arriving from sw over the one from se.
    """
    a, b = t.sw, t.se
    n = t.next_label()
    sw2, se2 = n, n + 1
    # ends ccw around the new crossing: north-west (a), south-west (sw2),
    # south-east (se2), north-east (b)
    if sign > 0:
        c = (b, a, sw2, se2)  # under-strand b -> sw2, over a -> se2
    else:
        c = (a, sw2, se2, b)  # under-strand a -> se2, over b -> sw2
    return replace(t, crossings=t.crossings + (c,), sw=sw2, se=se2)


def rational_tangle(cf: Sequence[int]) -> Tangle:
    """Rational tangle from a Conway sequence, twisting horizontally then
    vertically in alternation, starting with horizontal twists.

    ``cf=[a1, a2, a3, ...]`` applies a1 horizontal twists, a2 vertical,
    a3 horizontal, and so on; negative entries twist the other way.
    """
    t = zero_tangle()
    for i, a in enumerate(cf):
        op = twist_h if i % 2 == 0 else twist_v
        s = 1 if a > 0 else -1
        for _ in range(abs(a)):
            t = op(t, s)
    return t


def compose_h(t1: Tangle, t2: Tangle) -> Tangle:
    """Glue t2 to the right of t1 (t1.ne to t2.nw, t1.se to t2.sw)."""
    shift = t1.next_label()
    c2 = tuple(tuple(e + shift for e in c) for c in t2.crossings)
    t = Tangle(
        t1.crossings + c2,
        nw=t1.nw,
        ne=t2.ne + shift,
        sw=t1.sw,
        se=t2.se + shift,
        loops=t1.loops + t2.loops,
    )
    return _merge(t, [(t1.ne, t2.nw + shift), (t1.se, t2.sw + shift)])


def _merge(t: Tangle, pairs: Iterable[tuple[int, int]]) -> Tangle:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    loops = t.loops
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            parent[ra] = rb
    crossings = tuple(tuple(find(e) for e in c) for c in t.crossings)
    return Tangle(
        crossings,
        nw=find(t.nw),
        ne=find(t.ne),
        sw=find(t.sw),
        se=find(t.se),
        loops=loops,
    )


def _close(t: Tangle, pairs: list[tuple[int, int]], name: str | None) -> LinkDiagram:
    merged = _merge(t, pairs)
    used = {e for c in merged.crossings for e in c}
    free = merged.loops
    # a boundary strand glued into a crossing-free circle
    for e in {merged.nw, merged.ne, merged.sw, merged.se}:
        if e not in used:
            free += 1
    # both closure arcs may belong to one circle counted twice
    if not merged.crossings and merged.nw == merged.sw == merged.ne == merged.se:
        free = merged.loops + 1
    return LinkDiagram(merged.crossings, free_loops=free, name=name)


def closure_num(t: Tangle, name: str | None = None) -> LinkDiagram:
    """Numerator closure: joins nw-ne and sw-se."""
    return _close(t, [(t.nw, t.ne), (t.sw, t.se)], name)


def closure_den(t: Tangle, name: str | None = None) -> LinkDiagram:
    """Denominator closure: joins nw-sw and ne-se."""
    return _close(t, [(t.nw, t.sw), (t.ne, t.se)], name)


def two_bridge(cf: Sequence[int], name: str | None = None) -> LinkDiagram:
    """Numerator closure of the rational tangle of the Conway sequence."""
    return closure_num(rational_tangle(cf), name)


def torus2(n: int, name: str | None = None) -> LinkDiagram:
    """The (2, n) torus link: numerator closure of n horizontal twists."""
    return two_bridge([n], name)


def twist_knot(m: int, name: str | None = None) -> LinkDiagram:
    """Twist knot with m half-twists and a clasp (m=1 trefoil, 2 figure
    eight, 3 gives 5_2, 4 the Stevedore knot 6_1, ...)."""
    return two_bridge([m, 2], name)


def hopf_link(positive: bool = True) -> LinkDiagram:
    d = LinkDiagram([(4, 1, 3, 2), (1, 4, 2, 3)], name="hopf")
    if not positive:
        d = mirror(d).with_name("hopf-")
    return d


def unlink_row(k: int) -> LinkDiagram:
    """Connected diagram of the k-component unlink: k circles in a row,
    adjacent circles overlapping twice with no clasping."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return LinkDiagram((), free_loops=1, name="unlink1")
    # circle i (1-based) uses edges u_i (upper/outer), d_i (lower), r_i
    # (right lens), l_i (left lens); boundary circles merge u=d
    label = itertools.count(1)
    u = {}
    d = {}
    r = {}
    ell = {}
    for i in range(1, k + 1):
        u[i] = next(label)
        d[i] = u[i] if i in (1, k) else next(label)
        if i < k:
            r[i] = next(label)
        if i > 1:
            ell[i] = next(label)
    crossings = []
    for i in range(1, k):
        crossings.append((r[i], u[i + 1], u[i], ell[i + 1]))
        crossings.append((d[i], d[i + 1], r[i], ell[i + 1]))
    return LinkDiagram(crossings, name=f"unlink{k}")


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Mirror image: every crossing changes over/under, so each tuple is
    rotated to start at the old over-entry slot."""
    new = []
    for ci, c in enumerate(d.crossings):
        s = d.over_in[ci]
        new.append((c[s], c[(s + 1) % 4], c[(s + 2) % 4], c[(s + 3) % 4]))
    return LinkDiagram(new, d.free_loops, d.name, d.orientation)


@dataclass(frozen=True)
class TaitGraph:
    """An embedded signed planar multigraph.

    ``rotations`` lists, per vertex, the counterclockwise cyclic order of
    its incident edge-ends as (edge index, end) pairs; a self-loop's two
    ends are (e, 0) and (e, 1).  ``signs`` holds one +-1 per edge.
    """

    rotations: tuple[tuple[tuple[int, int], ...], ...]
    signs: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return len(self.signs)


def tait_medial(g: TaitGraph, name: str | None = None) -> LinkDiagram:
    """Medial link diagram of an embedded signed multigraph.

    Crossings correspond to edges, link edges to vertex corners.  The
    vertex regions become one checkerboard class; an edge of sign +1 gives
    its crossing incidence number +1 with respect to the shading whose
    white regions are the vertex regions, so an all-positive graph yields
    an alternating diagram whose Goeritz matrix (white class on the vertex
    side) has g_ij = -(number of edges between vertices i and j).
    """
    # where[(e, end)] = (vertex, position in rotation)
    where: dict[tuple[int, int], tuple[int, int]] = {}
    for v, rot in enumerate(g.rotations):
        for pos, half in enumerate(rot):
            if half in where:
                raise ValueError(f"edge end {half} appears twice")
            where[half] = (v, pos)
    for e in range(g.n_edges):
        if (e, 0) not in where or (e, 1) not in where:
            raise ValueError(f"edge {e} is missing an end")

    # corner ids: one per (vertex, position); corner (v, i) lies between
    # rotation entries i and i+1
    corner_id: dict[tuple[int, int], int] = {}
    nxt = itertools.count(1)
    for v, rot in enumerate(g.rotations):
        for pos in range(len(rot)):
            corner_id[(v, pos)] = next(nxt)

    def corner(v: int, pos: int) -> int:
        return corner_id[(v, pos % len(g.rotations[v]))]

    crossings = []
    for e in range(g.n_edges):
        u, iu = where[(e, 0)]
        w, iw = where[(e, 1)]
        se = corner(u, iu - 1)
        sw = corner(u, iu)
        ne = corner(w, iw)
        nw = corner(w, iw - 1)
        if g.signs[e] > 0:
            crossings.append((ne, nw, sw, se))
        else:
            crossings.append((se, ne, nw, sw))
    return LinkDiagram(crossings, name=name)
