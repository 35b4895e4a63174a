"""Replacing omnidirectional unit-range antennas by quarter-wedge antennas.

Given points whose unit-disk graph is connected, every point receives a
quarter-aperture wedge with range exactly ``14*sqrt(2)`` such that the
resulting symmetric graph is connected and every unit-disk edge is
bridged by a short path: at most 9 hops in "basic" mode, at most 8 in
"refined" mode.

The construction tiles the plane with 7x7 grid cells.  Cells holding at
least four points are *full*; each full cell elects four of its points
as hubs and orients them as a perpendicular fan, so the hub wedges cover
the plane and the hubs form a connected cluster that also reaches the
hub clusters of nearby full cells.  Everyone else aims at a hub that
covers them.  The range is what makes this work: a point in a non-full
cell is served by a full cell bordering its own, and two points in
bordering cells are at most ``14*sqrt(2)`` apart.  The grid geometry
guarantees such a bordering full cell exists, because a unit-step path
cannot cross the three-cell band around its starting cell without
dropping four consecutive points into one cell on the way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .geometry import (
    DIST_SQ_TOL,
    Point,
    convex_hull,
    orientation_sign,
    squared_distance,
    vec_dot_sign,
)
from .orientation import (
    OrientationAssignment,
    normalize_angle,
    orient_cluster,
    orient_toward,
    orient_quadruplet,
)
from .scg import AntennaConfig, CommGraph, build_scg

CELL_SIDE = 7.0
REPLACEMENT_RANGE = 14.0 * math.sqrt(2.0)
FULL_CELL_MIN = 4

FULL = "full"
NON_FULL = "non_full"
EMPTY = "empty"

_FAN = (0.25 * math.pi, 0.75 * math.pi, 1.25 * math.pi, 1.75 * math.pi)


def _lex(p: Point) -> tuple[float, float]:
    return p.as_tuple()


@dataclass(frozen=True)
class GridPartition:
    """Partition of the plane into half-open 7x7 cells.

    A point with offset (dx, dy) from ``origin`` lands in cell
    (floor(dx/7), floor(dy/7)); cell boundaries belong to the cell on
    their upper-right side.
    """

    origin: tuple[float, float]
    cells: dict[tuple[int, int], tuple[Point, ...]]

    def cell_of(self, p: Point) -> tuple[int, int]:
        return (
            math.floor((p.x - self.origin[0]) / CELL_SIDE),
            math.floor((p.y - self.origin[1]) / CELL_SIDE),
        )

    def points_in(self, index: tuple[int, int]) -> tuple[Point, ...]:
        return self.cells.get(index, ())

    def status(self, index: tuple[int, int]) -> str:
        count = len(self.cells.get(index, ()))
        if count >= FULL_CELL_MIN:
            return FULL
        return NON_FULL if count else EMPTY

    def full_cells(self) -> list[tuple[int, int]]:
        return sorted(c for c, pts in self.cells.items() if len(pts) >= FULL_CELL_MIN)

    def block(self, index: tuple[int, int]) -> list[tuple[int, int]]:
        """The 3x3 block of cell indices centered on ``index``."""
        i, j = index
        return [(i + di, j + dj) for di in (-1, 0, 1) for dj in (-1, 0, 1)]


def grid_partition(
    points: Sequence[Point], origin: Optional[tuple[float, float]] = None
) -> GridPartition:
    if not points:
        raise ValueError("empty point set")
    if origin is None:
        origin = (
            float(math.floor(min(p.x for p in points))),
            float(math.floor(min(p.y for p in points))),
        )
    buckets: dict[tuple[int, int], list[Point]] = {}
    for p in points:
        idx = (
            math.floor((p.x - origin[0]) / CELL_SIDE),
            math.floor((p.y - origin[1]) / CELL_SIDE),
        )
        buckets.setdefault(idx, []).append(p)
    return GridPartition(origin, {c: tuple(pts) for c, pts in sorted(buckets.items())})


def build_udg(points: Sequence[Point]) -> CommGraph:
    """Unit-disk graph: an edge wherever two points are at distance <= 1."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    dx = xs[:, None] - xs[None, :]
    dy = ys[:, None] - ys[None, :]
    close = dx * dx + dy * dy <= 1.0 + DIST_SQ_TOL
    n = len(pts)
    edges = frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if close[i, j]
    )
    return CommGraph(tuple(pts), edges)


# ---------------------------------------------------------------------------
# Hub selection inside a full cell
# ---------------------------------------------------------------------------


def select_hubs_basic(cell_points: Sequence[Point]) -> OrientationAssignment:
    """Four hubs for basic mode: the lexicographically smallest four."""
    if len(cell_points) < FULL_CELL_MIN:
        raise ValueError("hub selection needs a full cell")
    return orient_quadruplet(sorted(cell_points, key=_lex)[:4])


def select_hubs_refined(cell_points: Sequence[Point]) -> OrientationAssignment:
    """Four hubs whose first two ("supporting") jointly cover the cell.

    The supporting pair spans a longest hull edge, so its aimed wedges
    cover the closed half-plane containing the hull, hence every point
    of the cell.  The other two hubs take the opposite orientations and
    sit inside the closed strip over the base (a point there always
    exists, else some hull edge would beat the longest), ordered so that
    the one further along the base faces back over the base start; that
    ordering is what keeps all four hubs mutually connected.
    """
    pts = sorted(set(cell_points), key=_lex)
    if len(pts) < FULL_CELL_MIN or len(pts) != len(list(cell_points)):
        raise ValueError("hub selection needs a full cell of distinct points")
    hull = convex_hull(pts)
    if len(hull) == 2:
        edges = [(hull[0], hull[1])]
    else:
        edges = [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    best = max(squared_distance(*e) for e in edges)
    tied = [e for e in edges if squared_distance(*e) == best]
    a1, a2 = min(tied, key=lambda e: (_lex(e[0]), _lex(e[1])))

    rest = [p for p in pts if p != a1 and p != a2]
    strip = [
        p
        for p in rest
        if vec_dot_sign(a1, p, a1, a2) >= 0
        and vec_dot_sign(a2, p, a1, a2) <= 0
        and orientation_sign(a1, a2, p) >= 0
    ]
    if not strip:
        raise ValueError("no point over the longest hull edge; cell is not full")
    a3 = min(strip, key=_lex)
    a4 = min((p for p in rest if p != a3), key=_lex)

    s = vec_dot_sign(a3, a4, a1, a2)  # sign of proj(a4) - proj(a3) on the base
    if s > 0:
        left, right = a3, a4
    elif s < 0:
        left, right = a4, a3
    else:
        left, right = sorted((a3, a4), key=_lex)
    theta = math.atan2(a2.y - a1.y, a2.x - a1.x)
    entries = tuple(
        (p, normalize_angle(theta + off))
        for p, off in zip((a1, a2, right, left), _FAN)
    )
    return OrientationAssignment(entries=entries, base=(a1, a2), case="refined")


# ---------------------------------------------------------------------------
# Closest full cell along the unit-disk graph
# ---------------------------------------------------------------------------


def full_cell_labels(grid: GridPartition, udg: CommGraph) -> dict[Point, tuple[int, int]]:
    """For every reachable point, the cell of its nearest full-cell point.

    Distance is hop count in the unit-disk graph; among all full-cell
    points at minimal distance the smallest cell index wins, so the
    result is independent of traversal order.
    """
    adj = udg.neighbor_lists()
    label: dict[int, tuple[int, int]] = {}
    layer: list[int] = []
    for i, p in enumerate(udg.vertices):
        cell = grid.cell_of(p)
        if grid.status(cell) == FULL:
            prev = label.get(i)
            if prev is None or cell < prev:
                label[i] = cell
            layer.append(i)
    if not layer:
        raise ValueError("no full cell")
    seen = set(layer)
    while layer:
        nxt: dict[int, tuple[int, int]] = {}
        for u in layer:
            for w in adj[u]:
                if w in seen:
                    continue
                cand = label[u]
                if w not in nxt or cand < nxt[w]:
                    nxt[w] = cand
        for w, cell in nxt.items():
            label[w] = cell
            seen.add(w)
        layer = sorted(nxt)
    return {udg.vertices[i]: cell for i, cell in label.items()}


def closest_full_cell(p: Point, grid: GridPartition, udg: CommGraph) -> tuple[int, int]:
    """Cell index of the full cell nearest to ``p`` in unit-disk hops."""
    labels = full_cell_labels(grid, udg)
    if p not in labels:
        raise ValueError("point cannot reach any full cell")
    return labels[p]


# ---------------------------------------------------------------------------
# The replacement itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReplacementResult:
    """One antenna per input point (same order), plus how it was built."""

    configs: tuple[AntennaConfig, ...]
    mode: str
    grid: GridPartition
    small_instance: bool = False

    def config_of(self, p: Point) -> AntennaConfig:
        for c in self.configs:
            if c.location == p:
                return c
        raise KeyError(f"no antenna at {p}")


def orient_small_instance(
    points: Sequence[Point], grid: Optional[GridPartition] = None
) -> ReplacementResult:
    """Replacement for instances with no full cell.

    A connected unit-disk graph without a full cell fits in a 14x14
    square (leaving the starting cell's block would create one), so the
    replacement range spans every pairwise distance and a single
    connected cluster orientation suffices.
    """
    oris = orient_cluster(points)
    configs = tuple(
        AntennaConfig(p, oris[p], range=REPLACEMENT_RANGE) for p in points
    )
    return ReplacementResult(
        configs=configs,
        mode="small",
        grid=grid if grid is not None else grid_partition(points),
        small_instance=True,
    )


def replace(
    points: Sequence[Point],
    mode: str = "refined",
    origin: Optional[tuple[float, float]] = None,
) -> ReplacementResult:
    """Assign a wedge (range ``14*sqrt(2)``) to every point.

    Requires a connected unit-disk graph over distinct points.  In
    "basic" mode every full cell elects the lexicographically smallest
    four points as hubs and every non-full-cell point aims at a covering
    hub of the full cell nearest to itself; the symmetric graph then
    spans unit-disk edges within 9 hops.  In "refined" mode hubs are
    chosen around a longest hull edge and non-full-cell points are
    grouped into unit-disk components that share one target full cell,
    tightening the bound to 8 hops.
    """
    if mode not in ("basic", "refined"):
        raise ValueError(f"unknown replacement mode: {mode!r}")
    pts = list(points)
    udg = build_udg(pts)
    if not _udg_connected(udg):
        raise ValueError("unit-disk graph is not connected")
    grid = grid_partition(pts, origin)
    if not grid.full_cells():
        return orient_small_instance(pts, grid)

    hubs: dict[tuple[int, int], OrientationAssignment] = {}
    for cell in grid.full_cells():
        cell_pts = grid.points_in(cell)
        hubs[cell] = (
            select_hubs_basic(cell_pts) if mode == "basic" else select_hubs_refined(cell_pts)
        )

    orientation: dict[Point, float] = {}
    for cell, assignment in hubs.items():
        hub_set = set(assignment.points())
        for p, ang in assignment.entries:
            orientation[p] = ang
        for p in grid.points_in(cell):
            if p not in hub_set:
                orientation[p] = orient_toward(p, assignment.entries)

    stray = [p for p in pts if p not in orientation]
    if stray:
        labels = full_cell_labels(grid, udg)
        if mode == "basic":
            for p in stray:
                orientation[p] = orient_toward(p, hubs[labels[p]].entries)
        else:
            sub = build_udg(stray)
            for comp in _components(sub):
                rep = min((sub.vertices[i] for i in comp), key=_lex)
                target = hubs[labels[rep]].entries
                for i in comp:
                    orientation[sub.vertices[i]] = orient_toward(sub.vertices[i], target)

    configs = tuple(
        AntennaConfig(p, orientation[p], range=REPLACEMENT_RANGE) for p in pts
    )
    return ReplacementResult(configs=configs, mode=mode, grid=grid)


def _udg_connected(udg: CommGraph) -> bool:
    return len(_components(udg)[0]) == len(udg.vertices) if udg.vertices else True


def _components(g: CommGraph) -> list[list[int]]:
    """Connected components as sorted index lists, smallest vertex first."""
    adj = g.neighbor_lists()
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in range(len(g.vertices)):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# Verification helpers
# ---------------------------------------------------------------------------


class SpannerReport(NamedTuple):
    ok: bool
    worst_edge: Optional[tuple[Point, Point]]
    max_hops: float


def verify_hop_spanner(udg: CommGraph, scg: CommGraph, limit: float) -> SpannerReport:
    """Check every unit-disk edge is spanned by at most ``limit`` hops.

    Both graphs must share the same vertex tuple.  All-pairs hop counts
    come from breadth-first search over the symmetric graph (delegated
    to scipy's compiled graph routines).
    """
    if udg.vertices != scg.vertices:
        raise ValueError("graphs disagree on vertices")
    n = len(scg.vertices)
    if not udg.edges:
        return SpannerReport(True, None, 0)
    rows, cols = [], []
    for i, j in scg.edges:
        rows += [i, j]
        cols += [j, i]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    dist = shortest_path(mat, method="D", directed=False, unweighted=True)
    worst: Optional[tuple[Point, Point]] = None
    max_hops = 0.0
    for i, j in sorted(udg.edges):
        h = float(dist[i, j])
        if h > max_hops:
            max_hops = h
            worst = (udg.vertices[i], udg.vertices[j])
    ok = bool(max_hops <= limit)
    if math.isfinite(max_hops):
        max_hops = int(max_hops)
    return SpannerReport(ok, worst, max_hops)


def path_hits_full_cell(path: Sequence[Point], grid: GridPartition) -> bool:
    """Does a unit-step path leaving its starting block visit a full cell?

    ``path`` must be a walk in the unit-disk graph (consecutive points
    at distance at most 1) that starts in some cell C and ends outside
    the 3x3 block around C; anything else raises ``ValueError``.  Returns
    True iff some vertex of the path lies in a full cell of the block
    other than C itself.  For grids built from a connected point set
    this always holds; it is the reason served full cells border the
    cells they serve.
    """
    if len(path) < 2:
        raise ValueError("path too short")
    for p, q in zip(path, path[1:]):
        if squared_distance(p, q) > 1.0 + DIST_SQ_TOL:
            raise ValueError("not a unit-disk path: step longer than 1")
    start = grid.cell_of(path[0])
    block = set(grid.block(start))
    if grid.cell_of(path[-1]) in block:
        raise ValueError("path does not leave the starting block")
    for p in path:
        cell = grid.cell_of(p)
        if cell in block and cell != start and grid.status(cell) == FULL:
            return True
    return False
