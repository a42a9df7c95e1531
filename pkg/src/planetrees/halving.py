"""k-halving lines, h-labelings, and w-labelings.

A line through two points of a 2m-point set is k-halving when it splits
the remaining 2m-2 points into sizes m-1-k and m-1+k (0-halving lines
are called halving lines). Everything here is brute force over all point
pairs with an O(m) side count each: at desk scale the cubic enumeration
is its own oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (DegenerateInput, InvalidParameter, NoHLabeling,
                     NoWLabeling, OddPointCount)
from .geom_core import Orientation, PointSet, orientation


@dataclass(frozen=True)
class HalvingLine:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class HLabeling:
    """relabeling[new] = original index of v_new; pairs in original indices."""

    pairs: tuple[tuple[int, int], ...]
    relabeling: tuple[int, ...]


@dataclass(frozen=True)
class WLabeling:
    """w in original indices; order[new] = original index of v_new over P-{w}."""

    w: int
    order: tuple[int, ...]


@dataclass(frozen=True)
class HypothesisReport:
    ok: bool
    witness: tuple[int, int] | None = None  # (point index, k)
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _side_split(ps: PointSet, i: int, j: int) -> tuple[list[int], list[int]]:
    """Indices strictly left / strictly right of the directed line i -> j."""
    left: list[int] = []
    right: list[int] = []
    p, q = ps.points[i], ps.points[j]
    for t in range(len(ps)):
        if t in (i, j):
            continue
        o = orientation(p, q, ps.points[t])
        if o is Orientation.COLLINEAR:
            raise DegenerateInput(f"point {t} lies on the line through {i}, {j}")
        (left if o is Orientation.CCW else right).append(t)
    return left, right


def balance(ps: PointSet, i: int, j: int) -> int:
    """The k for which the line through i, j is k-halving."""
    left, right = _side_split(ps, i, j)
    return abs(len(left) - len(right)) // 2


def k_halving_lines(ps: PointSet, k: int) -> list[HalvingLine]:
    """All k-halving lines, lexicographic by (i, j)."""
    npts = len(ps)
    if npts % 2:
        raise OddPointCount(f"{npts} points; halving lines need an even count")
    m = npts // 2
    if not 0 <= k <= m - 1:
        raise InvalidParameter(f"k must be in 0..{m - 1}, got {k}")
    out = []
    for i in range(npts):
        for j in range(i + 1, npts):
            if balance(ps, i, j) == k:
                out.append(HalvingLine(i, j, k))
    return out


def _angle_about(pivot: tuple[float, float], pt: tuple[float, float]) -> float:
    a = math.atan2(pt[1] - pivot[1], pt[0] - pivot[0])
    return a if a >= 0 else a + 2 * math.pi


def _ccw_order(ps: PointSet, pivot: tuple[float, float], indices: list[int]) -> list[int]:
    """Anticlockwise about pivot, starting at minimal angle from the +x axis."""
    return sorted(indices, key=lambda i: _angle_about(pivot, ps.points[i]))


def h_labeling(ps: PointSet) -> HLabeling:
    """Labeling v_0..v_{2m-1} with halving lines exactly {v_i v_{i+m}}.

    Exists when the set has precisely m halving lines with every point on
    exactly one of them. The returned labeling additionally certifies that
    each side of h_i is the contiguous label range the constructions use.
    """
    npts = len(ps)
    if npts % 2:
        raise OddPointCount(f"{npts} points; h-labeling needs an even count")
    m = npts // 2
    lines = k_halving_lines(ps, 0)
    if len(lines) != m:
        raise NoHLabeling(f"expected {m} halving lines, found {len(lines)}")
    incidence = {i: 0 for i in range(npts)}
    for hl in lines:
        incidence[hl.i] += 1
        incidence[hl.j] += 1
    bad = [i for i, c in incidence.items() if c != 1]
    if bad:
        raise NoHLabeling(f"point {bad[0]} lies on {incidence[bad[0]]} halving lines")
    cx = sum(p[0] for p in ps.points) / npts
    cy = sum(p[1] for p in ps.points) / npts
    order = _ccw_order(ps, (cx, cy), list(range(npts)))
    pos = {orig: new for new, orig in enumerate(order)}
    line_set = {(hl.i, hl.j) for hl in lines}
    for i in range(m):
        a, b = order[i], order[i + m]
        if (min(a, b), max(a, b)) not in line_set:
            raise NoHLabeling(
                f"halving lines do not pair angular antipodes (v{i} vs v{i + m})")
    # each side of h_i must be exactly one contiguous label range
    for i in range(m):
        left, right = _side_split(ps, order[i], order[i + m])
        want_one = {(i + 1 + t) % npts for t in range(m - 1)}
        got_one = {pos[x] for x in left}
        if got_one != want_one:
            got_one = {pos[x] for x in right}
        if got_one != want_one:
            raise NoHLabeling(f"side of h_{i} is not the label range v{i + 1}..v{i + m - 1}")
    pairs = tuple((order[i], order[i + m]) for i in range(m))
    return HLabeling(pairs=pairs, relabeling=tuple(order))


def w_labeling(ps: PointSet) -> WLabeling:
    """Point w on all halving lines, others ordered anticlockwise about it."""
    npts = len(ps)
    if npts % 2:
        raise OddPointCount(f"{npts} points; w-labeling needs an even count")
    lines = k_halving_lines(ps, 0)
    if len(lines) != npts - 1:
        raise NoWLabeling(f"expected {npts - 1} halving lines, found {len(lines)}")
    incidence = {i: 0 for i in range(npts)}
    for hl in lines:
        incidence[hl.i] += 1
        incidence[hl.j] += 1
    candidates = [i for i, c in incidence.items() if c == npts - 1]
    if not candidates:
        raise NoWLabeling("no point is incident to all halving lines")
    w = candidates[0]
    order = _ccw_order(ps, ps.points[w], [i for i in range(npts) if i != w])
    return WLabeling(w=w, order=tuple(order))


def _incidence_by_k(ps: PointSet, r: int) -> list[dict[int, int]]:
    """counts[k][point] = number of k-halving lines through point, k = 0..r."""
    npts = len(ps)
    counts: list[dict[int, int]] = [{i: 0 for i in range(npts)} for _ in range(r + 1)]
    for i in range(npts):
        for j in range(i + 1, npts):
            k = balance(ps, i, j)
            if k <= r:
                counts[k][i] += 1
                counts[k][j] += 1
    return counts


def check_theorem3_hypothesis(ps: PointSet, r: int) -> HypothesisReport:
    """Each point on exactly one halving line and exactly two k-halving
    lines for every k = 1..r; witness is the first violating (point, k)."""
    npts = len(ps)
    if npts % 2:
        raise OddPointCount(f"{npts} points")
    n = npts // 2
    if not 1 <= r <= n - 1:
        raise InvalidParameter(f"r must be in 1..{n - 1}, got {r}")
    counts = _incidence_by_k(ps, r)
    for k in range(r + 1):
        want = 1 if k == 0 else 2
        for i in range(npts):
            if counts[k][i] != want:
                return HypothesisReport(
                    ok=False, witness=(i, k),
                    reason=f"point {i} on {counts[k][i]} {k}-halving lines, want {want}")
    return HypothesisReport(ok=True)


def check_theorem4_hypothesis(ps: PointSet, r: int) -> HypothesisReport:
    """A w on all 2n-1 halving lines; every other point on exactly two
    k-halving lines for k = 1..r, none of which pass through w."""
    npts = len(ps)
    if npts % 2:
        raise OddPointCount(f"{npts} points")
    n = npts // 2
    if not 1 <= r <= n - 1:
        raise InvalidParameter(f"r must be in 1..{n - 1}, got {r}")
    try:
        wl = w_labeling(ps)
    except NoWLabeling as exc:
        return HypothesisReport(ok=False, witness=None, reason=str(exc))
    counts = _incidence_by_k(ps, r)
    for k in range(1, r + 1):
        if counts[k][wl.w] != 0:
            return HypothesisReport(
                ok=False, witness=(wl.w, k),
                reason=f"w lies on {counts[k][wl.w]} {k}-halving lines, want 0")
        for i in range(npts):
            if i == wl.w:
                continue
            if counts[k][i] != 2:
                return HypothesisReport(
                    ok=False, witness=(i, k),
                    reason=f"point {i} on {counts[k][i]} {k}-halving lines, want 2")
    return HypothesisReport(ok=True)
