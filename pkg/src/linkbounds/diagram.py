"""Planar link diagrams given by PD codes.

A diagram is a list of crossings, each a 4-tuple of edge labels listed
counterclockwise starting at the incoming under-strand, so the under-strand
enters at position 0 and leaves at position 2.  Every edge label occurs
exactly twice over all tuples.  Components without crossings (detached round
circles) are carried as a separate ``free_loops`` count since they have no
PD representation.

Each component carries a base direction inherited from the PD succession
(under-strands run slot 0 to slot 2; over-strand directions are propagated
from this).  The ``orientation`` vector holds one flag of +-1 per
edge-component, relative to that base direction.

File format (one file per link)::

    # comment
    name L10a99
    components 2
    orient 1 -1
    loops 0
    X 1 6 2 7
    X 5 2 6 3
    ...

``name``, ``components``, ``orient`` and ``loops`` headers are optional;
``components`` is validated against the parsed diagram.  ``orient`` lists
flags for the edge-components in canonical order (sorted by smallest edge
label).  Faces are computed from the rotation system implicit in the
tuples; a corner ``(c, i)`` denotes the region between edge-ends ``i`` and
``i + 1`` of crossing ``c``, and faces are the orbits of the map sending a
corner to ``other_end(edge at slot i+1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class PDError(ValueError):
    """Malformed or non-planar PD data."""


class DisconnectedDiagramError(ValueError):
    """Raised by operations that require a connected diagram."""


Slot = tuple[int, int]


class LinkDiagram:
    """An immutable oriented link diagram.

    Derived combinatorial data (successor maps, components, faces) is
    computed once at construction; all editing operations return new
    diagrams.
    """

    def __init__(
        self,
        crossings: Sequence[Sequence[int]],
        free_loops: int = 0,
        name: str | None = None,
        orientation: Sequence[int] | None = None,
    ):
        self.crossings: tuple[tuple[int, int, int, int], ...] = tuple(
            tuple(int(e) for e in c) for c in crossings
        )
        for c in self.crossings:
            if len(c) != 4:
                raise PDError(f"crossing {c} does not have 4 edge labels")
        if free_loops < 0:
            raise PDError("negative free loop count")
        self.free_loops = int(free_loops)
        self.name = name

        self._build_edges()
        self._orient_passages()
        self._build_components()
        self._build_faces()

        if orientation is None:
            orientation = (1,) * len(self.components)
        orientation = tuple(int(x) for x in orientation)
        if len(orientation) != len(self.components) or any(
            x not in (1, -1) for x in orientation
        ):
            raise PDError("orientation vector must list +-1 per edge-component")
        self.orientation = orientation

    # construction helpers

    def _build_edges(self) -> None:
        slots: dict[int, list[Slot]] = {}
        for ci, c in enumerate(self.crossings):
            for pos, e in enumerate(c):
                slots.setdefault(e, []).append((ci, pos))
        for e, ss in slots.items():
            if len(ss) != 2:
                raise PDError(f"edge {e} occurs {len(ss)} times, expected 2")
        self.edge_slots: dict[int, tuple[Slot, Slot]] = {
            e: (ss[0], ss[1]) for e, ss in slots.items()
        }
        self.edges: tuple[int, ...] = tuple(sorted(slots))

    def _other_end(self, slot: Slot) -> Slot:
        e = self.crossings[slot[0]][slot[1]]
        s1, s2 = self.edge_slots[e]
        return s2 if slot == s1 else s1

    def _orient_passages(self) -> None:
        """Assign a direction to every strand passage.

        ``head[slot]`` is True when the edge at that slot points into the
        crossing.  Each passage (slots 0/2 for the under-strand, 1/3 for
        the over-strand) has one in and one out end, and every edge has
        exactly one head end; this system is solved by propagation, with
        one canonical seed per unresolved strand (lowest slot is taken as
        incoming, under-strands preferring slot 0).  Tuples whose incoming
        under-end lands on slot 2 are then rotated by two positions, so
        slot 0 always holds the incoming under-strand afterwards.
        """
        head: dict[Slot, bool] = {}
        pending: list[Slot] = []

        def assign(slot: Slot, value: bool) -> None:
            old = head.get(slot)
            if old is None:
                head[slot] = value
                pending.append(slot)
            elif old != value:
                raise PDError("inconsistent strand directions in PD code")

        all_slots = [
            (ci, pos) for ci in range(len(self.crossings)) for pos in range(4)
        ]
        while True:
            while pending:
                slot = pending.pop()
                ci, pos = slot
                assign(self._other_end(slot), not head[slot])
                assign((ci, (pos + 2) % 4), not head[slot])
            undecided = [s for s in all_slots if s not in head]
            if not undecided:
                break
            # prefer declaring an under-in end, so files already in the
            # strict convention (incoming under-strand at slot 0) resolve
            # to themselves
            seed = min(
                (s for s in undecided if s[1] == 0), default=min(undecided)
            )
            assign(seed, True)

        rotated = [
            ci for ci in range(len(self.crossings)) if not head[(ci, 0)]
        ]
        if rotated:
            crossings = list(self.crossings)
            for ci in rotated:
                c = crossings[ci]
                crossings[ci] = (c[2], c[3], c[0], c[1])
                for pos in (0, 1):
                    head[(ci, pos)], head[(ci, pos + 2)] = (
                        head[(ci, pos + 2)],
                        head[(ci, pos)],
                    )
            self.crossings = tuple(crossings)
            self._build_edges()

        self._head = head
        self.over_in: dict[int, int] = {
            ci: (1 if head[(ci, 1)] else 3) for ci in range(len(self.crossings))
        }

    def _build_components(self) -> None:
        succ: dict[int, int] = {}
        for ci, c in enumerate(self.crossings):
            succ[c[0]] = c[2]
            s = self.over_in[ci]
            succ[c[s]] = c[4 - s]
        self.succ = succ

        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for e in self.edges:
            if e in seen:
                continue
            cyc = [e]
            seen.add(e)
            nxt = succ[e]
            while nxt != e:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = succ[nxt]
            comps.append(tuple(cyc))
        comps.sort(key=min)
        # rotate each cycle to start at its smallest label
        self.components: tuple[tuple[int, ...], ...] = tuple(
            cyc[cyc.index(min(cyc)):] + cyc[: cyc.index(min(cyc))] for cyc in comps
        )
        self.comp_of: dict[int, int] = {
            e: i for i, cyc in enumerate(self.components) for e in cyc
        }

    def _build_faces(self) -> None:
        corners = [(ci, pos) for ci in range(len(self.crossings)) for pos in range(4)]
        remaining = set(corners)
        faces: list[tuple[Slot, ...]] = []
        for start in corners:
            if start not in remaining:
                continue
            face = []
            cur = start
            while True:
                face.append(cur)
                remaining.discard(cur)
                ci, pos = cur
                cur = self._other_end((ci, (pos + 1) % 4))
                if cur == start:
                    break
            faces.append(tuple(face))
        faces.sort(key=lambda f: min(f))
        self.faces: tuple[tuple[Slot, ...], ...] = tuple(faces)
        self.face_of: dict[Slot, int] = {
            corner: i for i, face in enumerate(faces) for corner in face
        }
        self._check_planarity()

    def _crossing_pieces(self) -> list[set[int]]:
        """Connected groups of crossing indices (edges as connections)."""
        n = len(self.crossings)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s1, s2 in self.edge_slots.values():
            a, b = find(s1[0]), find(s2[0])
            if a != b:
                parent[a] = b
        groups: dict[int, set[int]] = {}
        for ci in range(n):
            groups.setdefault(find(ci), set()).add(ci)
        return sorted(groups.values(), key=min)

    def _check_planarity(self) -> None:
        for piece in self._crossing_pieces():
            nfaces = len(
                {self.face_of[(ci, pos)] for ci in piece for pos in range(4)}
            )
            if nfaces != len(piece) + 2:
                raise PDError(
                    f"PD code is not planar: piece with {len(piece)} crossings "
                    f"has {nfaces} faces"
                )

    # basic queries

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def k(self) -> int:
        """Total number of components, free loops included."""
        return len(self.components) + self.free_loops

    def is_connected(self) -> bool:
        if self.n_crossings == 0:
            return self.free_loops <= 1
        return self.free_loops == 0 and len(self._crossing_pieces()) == 1

    def edge_dir(self, e: int) -> int:
        """Current direction of edge ``e``: +1 along base succession."""
        return self.orientation[self.comp_of[e]]

    def strands_at(self, ci: int) -> tuple[int, int]:
        """Component indices (under, over) of the two strands at a crossing."""
        c = self.crossings[ci]
        return self.comp_of[c[0]], self.comp_of[c[self.over_in[ci]]]

    def with_orientation(self, flags: Sequence[int]) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.free_loops, self.name, flags)

    def with_name(self, name: str | None) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.free_loops, name, self.orientation)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return (
            f"<LinkDiagram{label}: {self.k} comp, {self.n_crossings} cross>"
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinkDiagram)
            and self.crossings == other.crossings
            and self.free_loops == other.free_loops
            and self.orientation == other.orientation
        )

    def __hash__(self) -> int:
        return hash((self.crossings, self.free_loops, self.orientation))


@dataclass(frozen=True)
class Shading:
    """A checkerboard 2-coloring of the faces; ``white`` lists the unshaded
    face indices in increasing order (the Goeritz regions R_0..R_n)."""

    white: tuple[int, ...]
    shaded: tuple[int, ...]

    @property
    def white_count(self) -> int:
        return len(self.white)


def parse_pd(text: str) -> LinkDiagram:
    """Parse the PD file format described in the module docstring."""
    name: str | None = None
    declared_k: int | None = None
    orient: list[int] | None = None
    loops = 0
    crossings: list[tuple[int, int, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0].lower()
        try:
            if kind == "name":
                name = " ".join(parts[1:])
            elif kind == "components":
                declared_k = int(parts[1])
            elif kind == "orient":
                orient = [int(x) for x in parts[1:]]
            elif kind == "loops":
                loops = int(parts[1])
            elif kind == "x":
                if len(parts) != 5:
                    raise PDError(
                        f"line {lineno}: crossing needs 4 edge labels"
                    )
                crossings.append(tuple(int(x) for x in parts[1:]))  # type: ignore[arg-type]
            else:
                raise PDError(f"line {lineno}: unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, PDError):
                raise
            raise PDError(f"line {lineno}: {exc}") from exc

    if not crossings and loops == 0:
        raise PDError("no crossings")
    d = LinkDiagram(crossings, free_loops=loops, name=name, orientation=None)
    if orient is not None:
        d = d.with_orientation(orient)
    if declared_k is not None and d.k != declared_k:
        raise PDError(f"file declares {declared_k} components, diagram has {d.k}")
    return d


def format_pd(d: LinkDiagram) -> str:
    lines = []
    if d.name:
        lines.append(f"name {d.name}")
    lines.append(f"components {d.k}")
    if any(x != 1 for x in d.orientation):
        lines.append("orient " + " ".join(str(x) for x in d.orientation))
    if d.free_loops:
        lines.append(f"loops {d.free_loops}")
    for c in d.crossings:
        lines.append("X " + " ".join(str(e) for e in c))
    return "\n".join(lines) + "\n"


def crossing_sign(d: LinkDiagram, ci: int) -> int:
    """Sign of an oriented crossing: +1 when the over-strand enters at
    position 3 under the current orientation."""
    base = 1 if d.over_in[ci] == 3 else -1
    under_comp, over_comp = d.strands_at(ci)
    return base * d.orientation[under_comp] * d.orientation[over_comp]


def writhe(d: LinkDiagram) -> int:
    return sum(crossing_sign(d, ci) for ci in range(d.n_crossings))


def change_crossing(d: LinkDiagram, ci: int) -> LinkDiagram:
    """Swap over- and under-strand at one crossing.

    The tuple is rotated so the old over-entry slot becomes the new slot 0;
    the projection, and hence the component structure, is unchanged.
    """
    if not 0 <= ci < d.n_crossings:
        raise ValueError(f"no crossing {ci}")
    s = d.over_in[ci]
    new = list(d.crossings)
    c = new[ci]
    new[ci] = (c[s], c[(s + 1) % 4], c[(s + 2) % 4], c[(s + 3) % 4])
    return LinkDiagram(new, d.free_loops, d.name, d.orientation)


def change_crossings(d: LinkDiagram, subset: Iterable[int]) -> LinkDiagram:
    for ci in subset:
        d = change_crossing(d, ci)
    return d


def sublink(d: LinkDiagram, keep: Iterable[int]) -> LinkDiagram:
    """Keep the given components (indices; free loops come after the
    edge-components), erasing crossings that involve a deleted strand."""
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("empty component set")
    n_edge_comps = len(d.components)
    for idx in keep_set:
        if not 0 <= idx < d.k:
            raise ValueError(f"no component {idx}")
    kept_loops = len([i for i in keep_set if i >= n_edge_comps])
    kept_comps = sorted(i for i in keep_set if i < n_edge_comps)

    # merge edges across erased crossings with a union-find over kept edges
    parent: dict[int, int] = {
        e: e for i in kept_comps for e in d.components[i]
    }

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    surviving: list[tuple[int, ...]] = []
    for ci, c in enumerate(d.crossings):
        under_c, over_c = d.strands_at(ci)
        u_kept = under_c in keep_set
        o_kept = over_c in keep_set
        if u_kept and o_kept:
            surviving.append(c)
            continue
        s = d.over_in[ci]
        if u_kept:
            a, b = find(c[0]), find(c[2])
            if a != b:
                parent[a] = b
        if o_kept:
            a, b = find(c[s]), find(c[4 - s])
            if a != b:
                parent[a] = b

    new_crossings = [tuple(find(e) for e in c) for c in surviving]
    # components whose every crossing was erased become free loops
    used = {e for c in new_crossings for e in c}
    extra_loops = 0
    for i in kept_comps:
        if not any(find(e) in used for e in d.components[i]):
            extra_loops += 1
    orientation = [d.orientation[i] for i in kept_comps]
    sub = LinkDiagram(
        new_crossings,
        free_loops=kept_loops + extra_loops,
        name=d.name,
    )
    # carry orientations over to the surviving components
    flags = []
    for cyc in sub.components:
        old_comp = d.comp_of[cyc[0]]
        flags.append(d.orientation[old_comp])
    del orientation
    return sub.with_orientation(flags)


def checkerboard(d: LinkDiagram, pick: int = 0) -> Shading:
    """Checkerboard-color the faces; ``pick`` chooses which of the two
    color classes is the unshaded (white) one.

    ``pick=0`` makes white the class containing the face of corner
    ``(0, 0)``; ``pick=1`` the other one.
    """
    if not d.is_connected():
        raise DisconnectedDiagramError(
            "checkerboard shading needs a connected diagram"
        )
    if d.n_crossings == 0:
        raise DisconnectedDiagramError(
            "checkerboard shading needs at least one crossing"
        )
    if pick not in (0, 1):
        raise ValueError("pick must be 0 or 1")
    nfaces = len(d.faces)
    color = [-1] * nfaces
    color[d.face_of[(0, 0)]] = 0
    queue = [d.face_of[(0, 0)]]
    # adjacency: at each corner (c, i), the faces on the two sides of the
    # edge-end at slot i are the faces of corners (c, i) and (c, i - 1)
    adj: dict[int, set[int]] = {i: set() for i in range(nfaces)}
    for ci in range(d.n_crossings):
        for pos in range(4):
            f1 = d.face_of[(ci, pos)]
            f2 = d.face_of[(ci, (pos - 1) % 4)]
            adj[f1].add(f2)
            adj[f2].add(f1)
    while queue:
        f = queue.pop()
        for g in adj[f]:
            if color[g] == -1:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise PDError("faces are not checkerboard-colorable")
    if any(c == -1 for c in color):
        raise DisconnectedDiagramError("face graph is disconnected")
    white = tuple(i for i in range(nfaces) if color[i] == pick)
    shaded = tuple(i for i in range(nfaces) if color[i] != pick)
    return Shading(white=white, shaded=shaded)


def white_corner_class(d: LinkDiagram, s: Shading, ci: int) -> int:
    """Which opposite corner pair of crossing ``ci`` is white: 0 for the
    corners (ci,0),(ci,2), 1 for (ci,1),(ci,3)."""
    if d.face_of[(ci, 0)] in set(s.white):
        return 0
    return 1


def iota(d: LinkDiagram, s: Shading, ci: int) -> int:
    """Incidence number of a crossing w.r.t. a shading: +1 (right-handed)
    when the white regions occupy the corner pair (ci,0),(ci,2), else -1.
    Orientation-independent.

    This sign rule and the type rule in ``gl_type`` are pinned jointly by
    requiring signature 0 for both one-kink unknot diagrams and -1 for the
    positively oriented Hopf link, for both shading picks.
    """
    return 1 if white_corner_class(d, s, ci) == 0 else -1


def gl_type(d: LinkDiagram, s: Shading, ci: int) -> int:
    """Crossing type w.r.t. orientation and shading: 2 when the incidence
    number equals the crossing sign, else 1."""
    return 2 if iota(d, s, ci) == crossing_sign(d, ci) else 1


def orientation_classes(d: LinkDiagram) -> Iterator[LinkDiagram]:
    """All 2^(k-1) orientation classes, first edge-component held forward.

    Reversing every component preserves all crossing signs, so these
    classes cover every orientation up to that global symmetry.
    """
    m = len(d.components)
    if m == 0:
        yield d
        return
    for rest in itertools.product((1, -1), repeat=m - 1):
        yield d.with_orientation((1,) + rest)


def split_pieces(d: LinkDiagram) -> list[LinkDiagram]:
    """Split a diagram into its connected pieces (free loops become
    single-circle pieces)."""
    pieces = []
    for group in d._crossing_pieces():
        crossings = [d.crossings[ci] for ci in sorted(group)]
        sub = LinkDiagram(crossings, name=d.name)
        flags = tuple(
            d.orientation[d.comp_of[cyc[0]]] for cyc in sub.components
        )
        pieces.append(sub.with_orientation(flags))
    pieces += [
        LinkDiagram((), free_loops=1, name=d.name) for _ in range(d.free_loops)
    ]
    return pieces
