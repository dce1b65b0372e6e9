"""The twist-defined valuation on perfect matchings.

Each twist of a matching at a tile carries an integer increment computed from
the positions of same-labeled edges around that tile, and the valuation v is
the unique integer potential with v = 0 on the two extremal matchings whose
twist-differences realize those increments.  Well-definedness is a theorem,
not an assumption: this module recomputes v along every twist move and from
two traversal orders, and raises if any cycle or endpoint fails to close up.
"""

from __future__ import annotations

from .snakegraph import EdgeRef, Matching, POSITION_ORDER, SnakeGraph

__all__ = [
    "ValuationError",
    "compute_valuation",
    "omega",
    "ordered_matched_edges",
]

_POSITION_RANK = {pos: i for i, pos in enumerate(POSITION_ORDER)}


class ValuationError(ValueError):
    """Raised when the twist increments fail to define a potential."""


def ordered_matched_edges(graph: SnakeGraph, matching: Matching) -> list[EdgeRef]:
    """The matched edges sorted by owning tile, then south, west, east, north."""
    return sorted(
        matching, key=lambda ref: (ref[0], _POSITION_RANK.get(ref[1], -1))
    )


def omega(graph: SnakeGraph, matching: Matching, p: int, d_scale: int = 1) -> int:
    """Twist increment at tile p: v(matching) - v(twist at p).

    The two matched sides of tile p sit next to each other in the ordered
    edge list; the increment counts edges of the diagonal's label strictly
    after minus strictly before them, corrects by the occurrences of that
    label among later minus earlier crossings, carries a sign read off from
    which pair of sides is matched, and scales by the compatibility scalar.
    """
    if not graph.can_twist(matching, p):
        raise ValueError(f"matching has no twist at tile {p}")
    ordered = ordered_matched_edges(graph, matching)
    tile_refs = graph.tile_edge_refs(p)
    pair = [ref for ref in ordered if ref in tile_refs]
    lo = ordered.index(pair[0])
    hi = ordered.index(pair[1])
    if hi != lo + 1:
        raise AssertionError(
            f"matched sides of tile {p} are not adjacent in the ordered edge list"
        )
    tau = graph.tiles[p - 1].diagonal
    n_after = sum(
        1 for ref in ordered[hi + 1 :] if graph.edge_label(ref) == tau
    )
    n_before = sum(1 for ref in ordered[:lo] if graph.edge_label(ref) == tau)
    crossings = graph.arc.crossings
    m_after = crossings[p:].count(tau)
    m_before = crossings[: p - 1].count(tau)

    south, west, east, north = tile_refs
    matched = set(pair)
    if matched == {south, north}:
        horizontal = True
    elif matched == {west, east}:
        horizontal = False
    else:
        raise AssertionError(f"twistable tile {p} is matched on adjacent sides")
    positive = horizontal == (p % 2 == 1)
    magnitude = (n_after - m_after - n_before + m_before) * d_scale
    return magnitude if positive else -magnitude


def compute_valuation(graph: SnakeGraph, d_scale: int = 1) -> dict[Matching, int]:
    """Valuation of every perfect matching, anchored at the extremal ones.

    Starts from the all-boundary matching on the counterclockwise side with
    value 0 and propagates along twists.  Raises :class:`ValuationError` if
    any twist cycle is inconsistent, if the opposite extremal matching does
    not land on 0, or if a reversed traversal disagrees.
    """
    first = _propagate(graph, d_scale, reverse=False)
    second = _propagate(graph, d_scale, reverse=True)
    if first != second:
        raise ValuationError(
            "valuation ill-defined: traversal order changes the result"
        )
    minimal = graph.minimal_matching()
    if first[minimal] != 0:
        raise ValuationError(
            "valuation ill-defined: the minimal matching has value "
            f"{first[minimal]}, expected 0"
        )
    return first


def _propagate(
    graph: SnakeGraph, d_scale: int, reverse: bool
) -> dict[Matching, int]:
    values: dict[Matching, int] = {graph.maximal_matching(): 0}
    queue = [graph.maximal_matching()]
    while queue:
        current = queue.pop() if reverse else queue.pop(0)
        tiles = graph.twistable_tiles(current)
        for p in reversed(tiles) if reverse else tiles:
            step = omega(graph, current, p, d_scale)
            neighbor = graph.twist(current, p)
            value = values[current] - step
            known = values.get(neighbor)
            if known is None:
                values[neighbor] = value
                queue.append(neighbor)
            elif known != value:
                raise ValuationError(
                    "valuation ill-defined: twist cycle assigns both "
                    f"{known} and {value} to a matching"
                )
    all_matchings = graph.matchings()
    if len(values) != len(all_matchings):
        raise ValuationError(
            "valuation ill-defined: twists do not connect all matchings"
        )
    return values
