"""Planar sites and the geometric graphs built from them.

Only generators and oracles use coordinates. The robust algorithms never see
them; they get abstract graphs.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, TextIO, Union

import numpy as np

from .graph import (
    DirectedGraph,
    UndirectedGraph,
    build_directed,
    build_undirected,
    directed_from_lists,
)

# Relative gap kept between every inter-site distance and every radius threshold.
MARGIN = 1e-9

# Upper bound on the entries of one distance block (rows x candidates).
_BLOCK = 1 << 22


class NonUnitRadius(ValueError):
    pass


class SitesFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, eq=False)
class SiteSet:
    x: np.ndarray
    y: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        for name in ("x", "y", "r"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.float64))
        if not (len(self.x) == len(self.y) == len(self.r)):
            raise ValueError("x, y, r must have equal length")
        if not (np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise ValueError("coordinates must be finite")
        if len(self.r) and not (np.isfinite(self.r).all() and (self.r > 0).all()):
            raise ValueError("radii must be positive and finite")

    @classmethod
    def from_records(cls, records) -> "SiteSet":
        arr = np.asarray(list(records), dtype=np.float64).reshape(-1, 3)
        return cls(arr[:, 0], arr[:, 1], arr[:, 2])

    def __len__(self) -> int:
        return len(self.x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SiteSet):
            return NotImplemented
        return all(np.array_equal(getattr(self, k), getattr(other, k)) for k in "xyr")

    def records(self) -> list[tuple[float, float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist(), self.r.tolist()))


# ---------------------------------------------------------------------------
# grid bucketing
# ---------------------------------------------------------------------------


def _grid_blocks(x: np.ndarray, y: np.ndarray, cell: float) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (rows, candidates) id arrays covering every pair within ``cell``.

    Every site appears as a row exactly once; its candidates are all sites in
    the 3x3 block of cells around its own cell, sorted by id. Large cells are
    split into row chunks so a distance block stays bounded.
    """
    n = len(x)
    if n == 0:
        return
    cx = np.floor((x - x.min()) / cell).astype(np.int64)
    cy = np.floor((y - y.min()) / cell).astype(np.int64)
    width = int(cy.max()) + 3
    key = (cx + 1) * width + (cy + 1)
    order = np.argsort(key, kind="stable")
    skey = key[order]
    starts = np.flatnonzero(np.r_[True, skey[1:] != skey[:-1]])
    ends = np.r_[starts[1:], n]
    members = {int(skey[s]): order[s:e] for s, e in zip(starts, ends)}
    offsets = [dx * width + dy for dx in (-1, 0, 1) for dy in (-1, 0, 1)]
    for k, rows in members.items():
        parts = [members[k + o] for o in offsets if k + o in members]
        cand = np.sort(np.concatenate(parts))
        step = max(1, _BLOCK // max(1, len(cand)))
        for s in range(0, len(rows), step):
            yield rows[s : s + step], cand


def _d2(x, y, rows, cand) -> np.ndarray:
    dx = x[rows, None] - x[None, cand]
    dy = y[rows, None] - y[None, cand]
    return dx * dx + dy * dy


def unit_disk_graph(S: SiteSet) -> UndirectedGraph:
    """Edge iff center distance <= 2, decided on squared distances (<= 4)."""
    n = len(S)
    if n and not np.all(S.r == 1.0):
        bad = int(np.flatnonzero(S.r != 1.0)[0])
        raise NonUnitRadius(f"site {bad} has radius {S.r[bad]!r}")
    idx_dtype = np.int32 if n < 2**31 else np.int64
    nbrs: list[np.ndarray | None] = [None] * n
    for rows, cand in _grid_blocks(S.x, S.y, 2.0):
        mask = _d2(S.x, S.y, rows, cand) <= 4.0
        mask &= rows[:, None] != cand[None, :]
        counts = mask.sum(axis=1)
        _, c = np.nonzero(mask)
        cols = cand[c].astype(idx_dtype)
        del mask, c
        for v, piece in zip(rows.tolist(), np.split(cols, np.cumsum(counts)[:-1])):
            nbrs[v] = piece
    degree = np.fromiter((len(a) for a in nbrs), dtype=np.int64, count=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degree, out=indptr[1:])
    indices = np.concatenate(nbrs) if n else np.zeros(0, dtype=idx_dtype)
    del nbrs
    return UndirectedGraph(indptr, indices, degree)


def transmission_graph(S: SiteSet) -> DirectedGraph:
    """Arc s -> t iff ||st|| <= r_s (t != s)."""
    n = len(S)
    heads: list[np.ndarray | None] = [None] * n
    if n:
        cell = float(S.r.max())
        for rows, cand in _grid_blocks(S.x, S.y, cell):
            mask = _d2(S.x, S.y, rows, cand) <= (S.r[rows] ** 2)[:, None]
            mask &= rows[:, None] != cand[None, :]
            counts = mask.sum(axis=1)
            cols = cand[np.nonzero(mask)[1]]
            for v, piece in zip(rows.tolist(), np.split(cols, np.cumsum(counts)[:-1])):
                heads[v] = piece
    degree = np.fromiter((len(a) for a in heads), dtype=np.int64, count=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degree, out=indptr[1:])
    indices = np.concatenate(heads).astype(np.int64) if n else np.zeros(0, dtype=np.int64)
    return DirectedGraph(indptr, indices)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _near_threshold(S_x, S_y, S_r, only: np.ndarray | None = None) -> np.ndarray:
    """Ids to resample: for each pair whose distance sits within the relative
    margin of r_s, r_t or r_s + r_t, the larger id of the pair."""
    n = len(S_x)
    bad = np.zeros(n, dtype=bool)
    if n < 2:
        return np.flatnonzero(bad)
    cell = 2.0 * float(S_r.max())
    for rows, cand in _grid_blocks(S_x, S_y, cell):
        if only is not None:
            rows = rows[only[rows]]
            if rows.size == 0:
                continue
        d = np.sqrt(_d2(S_x, S_y, rows, cand))
        ri = S_r[rows][:, None]
        rj = S_r[cand][None, :]
        hit = np.zeros(d.shape, dtype=bool)
        for t in (ri, rj, ri + rj):
            hit |= np.abs(d - t) < MARGIN * t
        hit &= rows[:, None] != cand[None, :]
        i, j = np.nonzero(hit)
        if i.size:
            bad[np.maximum(rows[i], cand[j])] = True
    return np.flatnonzero(bad)


def random_sites(
    n: int,
    box: float,
    radius_range: tuple[float, float] = (1.0, 1.0),
    seed: int = 0,
) -> SiteSet:
    """Uniform sites in ``[0, box]^2`` with radii uniform in ``radius_range``.

    Deterministic in ``seed``. Sites whose distance to another site falls
    within relative ``MARGIN`` of a radius threshold are redrawn, so edge sets
    do not hinge on the last bits of a floating-point comparison.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if box <= 0:
        raise ValueError("box must be positive")
    lo, hi = radius_range
    if not (0 < lo <= hi):
        raise ValueError("radius_range must satisfy 0 < lo <= hi")
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.0, box, n)
    y = rng.uniform(0.0, box, n)
    r = np.full(n, float(lo)) if lo == hi else rng.uniform(lo, hi, n)
    only = None
    for _ in range(1000):
        bad = _near_threshold(x, y, r, only)
        if bad.size == 0:
            break
        x[bad] = rng.uniform(0.0, box, bad.size)
        y[bad] = rng.uniform(0.0, box, bad.size)
        # pairs not involving a redrawn site are unchanged; recheck only those rows
        # (the check is symmetric, so scanning redrawn rows covers all new pairs)
        only = np.zeros(n, dtype=bool)
        only[bad] = True
    else:  # pragma: no cover
        raise RuntimeError("could not place sites away from thresholds")
    return SiteSet(x, y, r)


def lattice_sites(
    rows: int,
    cols: int,
    kind: str = "square",
    spacing: float = 1.9,
    jitter: float = 0.03,
    keep: float = 1.0,
    seed: int = 0,
) -> SiteSet:
    """Jittered square or honeycomb lattice of unit-radius sites.

    With the default spacing only lattice neighbors are within distance 2, so
    the unit disk graph is a grid (girth 4) or hexagonal mesh (girth 6);
    ``keep < 1`` deletes sites at random, which produces longer shortest cycles.
    """
    rng = np.random.default_rng(seed)
    pts = []
    if kind == "square":
        for i in range(rows):
            for j in range(cols):
                pts.append((j * spacing, i * spacing))
    elif kind == "hex":
        # honeycomb: two sites per rhombic unit cell
        a1 = np.array([math.sqrt(3) * spacing, 0.0])
        a2 = np.array([math.sqrt(3) / 2 * spacing, 1.5 * spacing])
        for i in range(rows):
            for j in range(cols):
                base = i * a2 + j * a1
                pts.append(tuple(base))
                pts.append(tuple(base + np.array([0.0, spacing])))
    else:
        raise ValueError(f"unknown lattice kind {kind!r}")
    p = np.asarray(pts, dtype=np.float64).reshape(-1, 2)
    p = p + rng.uniform(-jitter, jitter, p.shape)
    if keep < 1.0:
        p = p[rng.random(len(p)) < keep]
    r = np.ones(len(p))
    bad = _near_threshold(p[:, 0], p[:, 1], r)
    if bad.size:
        p = np.delete(p, bad, axis=0)
        r = r[: len(p)]
    return SiteSet(p[:, 0], p[:, 1], r)


def ring_sites(k: int, spacing: float = 1.9, jitter: float = 0.02, seed: int = 0) -> SiteSet:
    """k unit-radius sites on a circle, consecutive ones ``spacing`` apart.

    For k >= 4 only consecutive sites are within distance 2, so the unit disk
    graph is the cycle C_k.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    rng = np.random.default_rng(seed)
    radius = spacing / (2 * math.sin(math.pi / k))
    t = 2 * math.pi * np.arange(k) / k
    x = radius * np.cos(t) + rng.uniform(-jitter, jitter, k)
    y = radius * np.sin(t) + rng.uniform(-jitter, jitter, k)
    return SiteSet(x, y, np.ones(k))


# ---------------------------------------------------------------------------
# adversarial and classic fixtures
# ---------------------------------------------------------------------------


def star(k: int) -> UndirectedGraph:
    """K_{1,k}: vertex 0 is the center."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return build_undirected(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_undirected(10, outer + spokes + inner)


def dicycle(k: int) -> DirectedGraph:
    if k < 2:
        raise ValueError("a directed cycle needs k >= 2")
    return build_directed(k, [(i, (i + 1) % k) for i in range(k)])


def bistar(k: int) -> DirectedGraph:
    """Center 0 joined to k leaves by arcs in both directions."""
    if k < 1:
        raise ValueError("k must be >= 1")
    arcs = [(0, i) for i in range(1, k + 1)] + [(i, 0) for i in range(1, k + 1)]
    return build_directed(k + 1, arcs)


def adversarial(kind: str, k: int | None = None):
    table = {"star": star, "dicycle": dicycle, "bistar": bistar}
    if kind == "petersen":
        return petersen()
    if kind not in table:
        raise ValueError(f"unknown adversarial kind {kind!r}")
    if k is None:
        raise ValueError(f"{kind} needs a size parameter k")
    return table[kind](k)


def cycle_graph(k: int) -> UndirectedGraph:
    return build_undirected(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> UndirectedGraph:
    return build_undirected(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> UndirectedGraph:
    return build_undirected(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    return build_undirected(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid_graph(rows: int, cols: int) -> UndirectedGraph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_undirected(rows * cols, edges)


# ---------------------------------------------------------------------------
# sites text format: "n" then n lines "x y r"
# ---------------------------------------------------------------------------


def format_sites(S: SiteSet) -> str:
    lines = [str(len(S))]
    lines += [f"{x:.17g} {y:.17g} {r:.17g}" for x, y, r in S.records()]
    return "\n".join(lines) + "\n"


def parse_sites(text: str) -> SiteSet:
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not rows:
        raise SitesFormatError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 1:
        raise SitesFormatError("header must be the site count", lineno)
    try:
        n = int(head[0])
    except ValueError:
        raise SitesFormatError(f"bad site count {head[0]!r}", lineno) from None
    if len(rows) - 1 != n:
        raise SitesFormatError(f"header announces {n} sites, found {len(rows) - 1}", lineno)
    recs = []
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise SitesFormatError("site line must be 'x y r'", lineno)
        try:
            x, y, r = (float(t) for t in toks)
        except ValueError:
            raise SitesFormatError("non-numeric site field", lineno) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise SitesFormatError("coordinates must be finite", lineno)
        if not (math.isfinite(r) and r > 0):
            raise SitesFormatError("radius must be positive", lineno)
        recs.append((x, y, r))
    return SiteSet.from_records(recs)


def write_sites(S: SiteSet, path: Union[str, "os.PathLike[str]"]) -> None:
    with open(path, "w") as fh:
        fh.write(format_sites(S))


def read_sites(source) -> SiteSet:
    if hasattr(source, "read"):
        return parse_sites(source.read())
    with open(source) as fh:
        return parse_sites(fh.read())
