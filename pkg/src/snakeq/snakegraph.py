"""Snake graphs of arcs and their perfect matchings.

An arc crossing d internal arcs yields a chain of d square tiles, one per
crossing.  Each tile is the quadrilateral around the crossed arc, drawn with
that arc as its northwest-southeast diagonal: the triangle the arc comes from
occupies the southwest half, the triangle it moves into occupies the
northeast half, and the half-triangles are mirrored on every second tile so
that the drawn orientation alternates along the chain.  Consecutive tiles are
glued along the side of the shared triangle not met by the arc, which lands
on the east or the north side of the earlier tile and decides whether the
chain grows rightward or upward.

Perfect matchings of the resulting plane graph are the combinatorial support
of Laurent expansions.  This module enumerates them exactly, distinguishes
the two all-boundary matchings, computes height and weight data, twists, and
the label-equivalence classes used to compare expansions across a flip.

Tiles are indexed from 1; an edge is addressed as (tile, position) with
positions "S", "W", "E", "N", and a shared edge belongs to the earlier tile.
An arc already in the triangulation has a degenerate one-edge graph with the
single edge reference (0, "G").
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import Arc, ArcTrace, SurfaceError, Triangulation, trace_arc

__all__ = [
    "EdgeRef",
    "Matching",
    "POSITION_ORDER",
    "SnakeGraph",
    "TauClass",
    "Tile",
]

POSITION_ORDER = ("S", "W", "E", "N")

EdgeRef = tuple[int, str]
Matching = frozenset[EdgeRef]

DEGENERATE_EDGE: EdgeRef = (0, "G")


@dataclass(frozen=True)
class Tile:
    """One square tile: its diagonal label, four side labels, and placement."""

    index: int
    diagonal: int
    south: int
    west: int
    east: int
    north: int
    x: int
    y: int

    def label(self, position: str) -> int:
        if position == "S":
            return self.south
        if position == "W":
            return self.west
        if position == "E":
            return self.east
        if position == "N":
            return self.north
        raise ValueError(f"unknown position {position!r}")


@dataclass(frozen=True)
class TauClass:
    """An equivalence class of same-labeled edges, with its anchor tile.

    Kinds: "I" and "II" are the two-edge classes attached to a tile whose
    diagonal carries the label (straight run versus turn), "III" is such a
    class truncated to one edge at the end of the graph, and "IV" is a
    leftover single edge not attached to any diagonal of that label.
    """

    anchor: int
    kind: str
    edges: tuple[EdgeRef, ...]


class SnakeGraph:
    """The snake graph of an arc over a fixed triangulation."""

    def __init__(self, triangulation: Triangulation, arc: Arc):
        self.triangulation = triangulation
        self.arc = arc
        self.trace: ArcTrace = trace_arc(triangulation, arc)
        self.degenerate_label: int | None = arc.arc
        self.tiles: tuple[Tile, ...]
        self.glue: tuple[str, ...]
        if self.degenerate_label is None:
            self._build_tiles()
        else:
            self.tiles = ()
            self.glue = ()
        self._index_edges()

    @property
    def d(self) -> int:
        return len(self.tiles)

    def _build_tiles(self) -> None:
        tris = self.triangulation.triangles
        path = self.trace.triangle_path
        crossings = self.arc.crossings
        tiles: list[Tile] = []
        glue: list[str] = []
        x = y = 0
        for j in range(1, len(crossings) + 1):
            diag = crossings[j - 1]
            _, s_in, t_in = tris[path[j - 1]].rotated(diag)
            _, s_out, t_out = tris[path[j]].rotated(diag)
            if j % 2 == 1:
                north, east = s_out, t_out
                south, west = s_in, t_in
            else:
                north, east = t_out, s_out
                south, west = t_in, s_in
            tiles.append(Tile(j, diag, south, west, east, north, x, y))
            if j < len(crossings):
                connector = self.trace.connectors[j - 1]
                if connector == east:
                    glue.append("R")
                    x += 1
                elif connector == north:
                    glue.append("U")
                    y += 1
                else:
                    raise AssertionError(
                        f"connector {connector} of tile {j} sits on neither the "
                        "east nor the north side"
                    )
        self.tiles = tuple(tiles)
        self.glue = tuple(glue)
        for j in range(1, len(tiles)):
            connector = self.trace.connectors[j - 1]
            received = tiles[j].west if glue[j - 1] == "R" else tiles[j].south
            if received != connector:
                raise AssertionError(
                    f"glued sides of tiles {j} and {j + 1} disagree: "
                    f"{connector} versus {received}"
                )

    def _index_edges(self) -> None:
        refs: list[EdgeRef] = []
        labels: dict[EdgeRef, int] = {}
        verts: dict[EdgeRef, frozenset[tuple[int, int]]] = {}
        if self.degenerate_label is not None:
            refs.append(DEGENERATE_EDGE)
            labels[DEGENERATE_EDGE] = self.degenerate_label
            verts[DEGENERATE_EDGE] = frozenset(((0, 0), (1, 0)))
        for tile in self.tiles:
            owned = set(POSITION_ORDER)
            if tile.index >= 2:
                owned.discard("W" if self.glue[tile.index - 2] == "R" else "S")
            for pos in POSITION_ORDER:
                if pos not in owned:
                    continue
                ref = (tile.index, pos)
                refs.append(ref)
                labels[ref] = tile.label(pos)
                verts[ref] = self._side_vertices(tile, pos)
        self.edge_refs: tuple[EdgeRef, ...] = tuple(refs)
        self._labels = labels
        self._vertices = verts
        self._matchings: tuple[Matching, ...] | None = None

    @staticmethod
    def _side_vertices(tile: Tile, pos: str) -> frozenset[tuple[int, int]]:
        x, y = tile.x, tile.y
        if pos == "S":
            return frozenset(((x, y), (x + 1, y)))
        if pos == "W":
            return frozenset(((x, y), (x, y + 1)))
        if pos == "E":
            return frozenset(((x + 1, y), (x + 1, y + 1)))
        return frozenset(((x, y + 1), (x + 1, y + 1)))

    def edge_label(self, ref: EdgeRef) -> int:
        return self._labels[ref]

    def edge_vertices(self, ref: EdgeRef) -> frozenset[tuple[int, int]]:
        return self._vertices[ref]

    def glue_edges(self) -> tuple[EdgeRef, ...]:
        return tuple(
            (j, "E" if g == "R" else "N") for j, g in enumerate(self.glue, start=1)
        )

    def tile_edge_refs(self, p: int) -> tuple[EdgeRef, EdgeRef, EdgeRef, EdgeRef]:
        """Canonical references of tile p's south, west, east, north sides."""
        if not 1 <= p <= self.d:
            raise ValueError(f"tile index {p} out of range")
        south: EdgeRef = (p, "S")
        west: EdgeRef = (p, "W")
        if p >= 2:
            if self.glue[p - 2] == "R":
                west = (p - 1, "E")
            else:
                south = (p - 1, "N")
        return (south, west, (p, "E"), (p, "N"))

    # ------------------------------------------------------------------
    # perfect matchings

    def matchings(self) -> tuple[Matching, ...]:
        """All perfect matchings, ordered by their bit strings."""
        if self._matchings is None:
            found = self._enumerate()
            self._matchings = tuple(
                sorted(found, key=self.matching_bits)
            )
        return self._matchings

    def _enumerate(self) -> list[Matching]:
        vertices: set[tuple[int, int]] = set()
        incident: dict[tuple[int, int], list[EdgeRef]] = {}
        for ref in self.edge_refs:
            for v in self._vertices[ref]:
                vertices.add(v)
                incident.setdefault(v, []).append(ref)
        results: list[Matching] = []
        chosen: list[EdgeRef] = []

        def extend(uncovered: set[tuple[int, int]]) -> None:
            if not uncovered:
                results.append(frozenset(chosen))
                return
            pivot = min(
                uncovered,
                key=lambda v: sum(
                    1
                    for e in incident[v]
                    if self._vertices[e] <= uncovered
                ),
            )
            for e in incident[pivot]:
                vs = self._vertices[e]
                if not vs <= uncovered:
                    continue
                chosen.append(e)
                extend(uncovered - vs)
                chosen.pop()

        extend(vertices)
        return results

    def matching_bits(self, matching: Matching) -> str:
        return "".join("1" if ref in matching else "0" for ref in self.edge_refs)

    def boundary_matchings(self) -> tuple[Matching, ...]:
        glue = set(self.glue_edges())
        return tuple(p for p in self.matchings() if not (p & glue))

    def minimal_matching(self) -> Matching:
        """The all-boundary matching through the west side of the first tile."""
        if self.degenerate_label is not None:
            return self.matchings()[0]
        boundary = self.boundary_matchings()
        if len(boundary) != 2:
            raise AssertionError(
                f"expected exactly two all-boundary matchings, found {len(boundary)}"
            )
        with_west = [p for p in boundary if (1, "W") in p]
        if len(with_west) != 1:
            raise AssertionError(
                "expected exactly one all-boundary matching through the west "
                "side of tile 1"
            )
        return with_west[0]

    def maximal_matching(self) -> Matching:
        if self.degenerate_label is not None:
            return self.matchings()[0]
        boundary = self.boundary_matchings()
        minimal = self.minimal_matching()
        other = [p for p in boundary if p != minimal]
        return other[0]

    # ------------------------------------------------------------------
    # twists

    def can_twist(self, matching: Matching, p: int) -> bool:
        if self.degenerate_label is not None:
            return False
        return len(set(self.tile_edge_refs(p)) & matching) == 2

    def twist(self, matching: Matching, p: int) -> Matching:
        """Swap the two matched sides of tile p for the two unmatched ones."""
        if not self.can_twist(matching, p):
            raise ValueError(f"matching has no twist at tile {p}")
        return matching ^ frozenset(self.tile_edge_refs(p))

    def twistable_tiles(self, matching: Matching) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.d + 1) if self.can_twist(matching, p))

    def twist_graph(
        self,
    ) -> tuple[tuple[Matching, ...], list[tuple[int, int, int]]]:
        """All matchings plus the twist moves between them.

        Returns the canonically ordered matchings and a list of triples
        (i, j, p) meaning the i-th matching twists at tile p into the j-th,
        recorded once per unordered pair with i < j.
        """
        all_matchings = self.matchings()
        index = {m: i for i, m in enumerate(all_matchings)}
        moves: list[tuple[int, int, int]] = []
        for i, m in enumerate(all_matchings):
            for p in self.twistable_tiles(m):
                j = index[self.twist(m, p)]
                if i < j:
                    moves.append((i, j, p))
        return all_matchings, moves

    # ------------------------------------------------------------------
    # exponent data

    def height_vector(self, matching: Matching) -> tuple[int, ...]:
        """Multiplicity of each internal arc among tiles enclosed by the
        symmetric difference with the minimal matching."""
        n = self.triangulation.n_internal
        heights = [0] * n
        if self.degenerate_label is not None:
            return tuple(heights)
        cycle = matching ^ self.minimal_matching()
        verticals = []
        for ref in cycle:
            tile = self.tiles[ref[0] - 1]
            if ref[1] == "W":
                verticals.append((tile.x, tile.y))
            elif ref[1] == "E":
                verticals.append((tile.x + 1, tile.y))
        for tile in self.tiles:
            crossings_right = sum(
                1 for vx, vy in verticals if vy == tile.y and vx > tile.x
            )
            if crossings_right % 2 == 1:
                heights[tile.diagonal] += 1
        return tuple(heights)

    def weight_vector(self, matching: Matching) -> tuple[int, ...]:
        """Sum of basis vectors of the internal labels of the matched edges."""
        n = self.triangulation.n_internal
        weights = [0] * n
        for ref in matching:
            label = self._labels[ref]
            if self.triangulation.is_internal(label):
                weights[label] += 1
        return tuple(weights)

    def crossing_vector(self) -> tuple[int, ...]:
        n = self.triangulation.n_internal
        out = [0] * n
        for c in self.arc.crossings:
            out[c] += 1
        return tuple(out)

    # ------------------------------------------------------------------
    # label-equivalence classes along a flip diagonal

    def tau_classes(self, tau: int) -> list[TauClass]:
        """Equivalence classes of the edges labeled ``tau``.

        Edges labeled tau flanking a tile whose diagonal is tau are grouped
        with that tile; every other tau-labeled edge is its own class.
        """
        classes: list[tuple[int, int, TauClass]] = []
        assigned: set[EdgeRef] = set()
        for p in range(1, self.d + 1):
            if self.tiles[p - 1].diagonal != tau:
                continue
            members: list[EdgeRef] = []
            if p >= 2:
                pos = "N" if self.glue[p - 2] == "R" else "E"
                ref = (p - 1, pos)
                if self._labels[ref] != tau:
                    raise AssertionError(
                        f"edge {ref} beside the tau-diagonal tile {p} is not "
                        f"labeled {tau}"
                    )
                members.append(ref)
            if p <= self.d - 1:
                pos = "S" if self.glue[p - 1] == "R" else "W"
                ref = (p + 1, pos)
                if self._labels[ref] != tau:
                    raise AssertionError(
                        f"edge {ref} beside the tau-diagonal tile {p} is not "
                        f"labeled {tau}"
                    )
                members.append(ref)
            if not members:
                continue
            if len(members) == 2:
                touching = bool(
                    self._vertices[members[0]] & self._vertices[members[1]]
                )
                kind = "II" if touching else "I"
            else:
                kind = "III"
            assigned.update(members)
            classes.append((p, 0, TauClass(p, kind, tuple(members))))
        for i, ref in enumerate(self.edge_refs):
            if self._labels[ref] == tau and ref not in assigned:
                classes.append((ref[0], 1, TauClass(ref[0], "IV", (ref,))))
        classes.sort(key=lambda item: (item[0], item[1]))
        return [c for _, _, c in classes]

    def nu_signature(self, matching: Matching, tau: int) -> tuple[int, ...]:
        """Per-class matched-edge counts, shifted by one on kinds I to III."""
        out = []
        for cls in self.tau_classes(tau):
            count = sum(1 for e in cls.edges if e in matching)
            out.append(count if cls.kind == "IV" else count - 1)
        return tuple(out)
