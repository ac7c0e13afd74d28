"""Exhaustive generation of small posets up to isomorphism.

Three generators live here:

* :func:`enumerate_posets` - every poset on up to six points, grown by
  repeatedly attaching a new maximal element above an order ideal.  It is
  deliberately simple and serves as the sanity oracle for the others.
* :func:`enumerate_height2_cores` - connected beat-point-free posets of
  height exactly two, stratified by element height.  Incidence rows between
  strata are generated as non-increasing bitmask multisets to prune label
  symmetry early; survivors are deduplicated by canonical code.
* :func:`enumerate_height1_cores` - connected beat-point-free bipartite
  posets (every maximal above at least two minimals and vice versa).

Cheap arithmetic facts prune the height-2 search hard: in a core every
height-1 element sits above at least two minimals, every height-1 element
lies below zero or at least two height-2 elements, and strata of size one
force beat points, so level shapes with any class smaller than two are
skipped outright.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple

from finspace.posets import Poset, _bits, _popcount

HEIGHT2_CAP = 10
HEIGHT1_CAP = 12
WORKERS_ENV = "FINSPACE_WORKERS"


class SizeTooLarge(ValueError):
    """Requested size exceeds the generator's cap."""


class LevelShape(NamedTuple):
    """Sizes of the height-2, height-1 and height-0 element classes."""

    m2: int
    m1: int
    m0: int

    @property
    def n(self) -> int:
        return self.m2 + self.m1 + self.m0


def _nonempty_masks(width: int, min_bits: int = 1) -> list[int]:
    return [m for m in range(1, 1 << width) if _popcount(m) >= min_bits]


# -- general small-n enumeration ---------------------------------------------


def _order_ideal_masks(p: Poset) -> list[int]:
    down = p._down
    out = []
    for mask in range(1 << p.n):
        ok = True
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            if down[i] & ~mask:
                ok = False
                break
            probe ^= low
        if ok:
            out.append(mask)
    return out


def _with_new_maximal(p: Poset, ideal: int) -> Poset:
    n = p.n
    new_bit = 1 << n
    up = [p._up[i] | (new_bit if ideal >> i & 1 else 0) for i in range(n)]
    up.append(new_bit)
    return Poset(up)


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on n points up to isomorphism, each exactly once.

    Grows size-(k+1) posets from size-k ones by attaching a maximal element
    above every order ideal, deduplicating by canonical code at each step.
    Every poset arises this way because deleting any maximal element leaves
    a poset whose class was already generated.
    """
    if not 1 <= n <= 6:
        raise SizeTooLarge("general enumeration is capped at 6 points")
    current = {Poset.antichain(1).canonical_code: Poset.antichain(1)}
    for _ in range(n - 1):
        grown: dict[bytes, Poset] = {}
        for p in current.values():
            for ideal in _order_ideal_masks(p):
                q = _with_new_maximal(p, ideal)
                grown.setdefault(q.canonical_code, q)
        current = grown
    return [current[c] for c in sorted(current)]


# -- height-2 cores ------------------------------------------------------------


def level_shapes(n: int) -> list[LevelShape]:
    """Shapes that can carry a height-2 core: every class has >= 2 elements.

    A singleton class forces a beat point: one minimal makes every height-1
    element a down beat point, one height-1 element makes some minimal an up
    beat point, and one height-2 element makes some height-1 element an up
    beat point.
    """
    out = []
    for m2 in range(2, n - 3):
        for m1 in range(2, n - m2 - 1):
            m0 = n - m2 - m1
            if m0 >= 2:
                out.append(LevelShape(m2, m1, m0))
    return out


def _shape_candidates(shape: LevelShape) -> Iterable[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Yield (middle_rows, top_rows) incidence assignments for one shape.

    middle_rows[i] is the minimal-set mask under height-1 element i (at
    least two bits).  top_rows[k] is a pair (middle mask, extra minimal
    mask); a height-2 element with a single middle predecessor must take at
    least one extra minimal cover, else that middle point would be the
    maximum of its punctured down-set.
    """
    m2, m1, m0 = shape
    middle_choices = sorted(_nonempty_masks(m0, 2), reverse=True)
    for middles in combinations_with_replacement(middle_choices, m1):
        union_cache: dict[int, int] = {}
        tops: list[tuple[int, int]] = []
        for smask in _nonempty_masks(m1):
            low_union = union_cache.get(smask)
            if low_union is None:
                low_union = 0
                for i in _bits(smask):
                    low_union |= middles[i]
                union_cache[smask] = low_union
            free = ((1 << m0) - 1) & ~low_union
            single = _popcount(smask) == 1
            extra = free
            emasks = []
            sub = extra
            while True:
                emasks.append(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & extra
            for emask in emasks:
                if single and emask == 0:
                    continue
                tops.append((smask, emask))
        tops.sort(reverse=True)
        for chosen in combinations_with_replacement(tops, m2):
            yield middles, chosen


def _assemble_masks(shape: LevelShape, middles, tops) -> list[int]:
    """Strict-down masks for the stratified poset (minimals first)."""
    m2, m1, m0 = shape
    down = [0] * shape.n
    for i, umask in enumerate(middles):
        down[m0 + i] = umask
    for k, (smask, emask) in enumerate(tops):
        acc = emask
        for i in _bits(smask):
            acc |= middles[i] | (1 << (m0 + i))
        down[m0 + m1 + k] = acc
    return down


def _masks_connected(down: list[int], n: int) -> bool:
    up = [0] * n
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        new = 0
        for i in _bits(frontier):
            new |= down[i] | up[i]
        frontier = new & ~seen
        seen |= new
    return seen == (1 << n) - 1


def _masks_are_core(down: list[int], n: int) -> bool:
    up = [0] * n
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    for x in range(n):
        hat = down[x]
        for m in _bits(hat):
            if hat & ~(down[m] | (1 << m)) == 0:
                return False
        hat = up[x]
        for m in _bits(hat):
            if hat & ~(up[m] | (1 << m)) == 0:
                return False
    return True


def _poset_from_down(down: list[int], labels) -> Poset:
    n = len(down)
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    return Poset(up, labels)


def _stratum_labels(shape: LevelShape) -> list[str]:
    m2, m1, m0 = shape
    return (
        [f"c{j + 1}" for j in range(m0)]
        + [f"b{i + 1}" for i in range(m1)]
        + [f"a{k + 1}" for k in range(m2)]
    )


def _cores_for_shape(shape: LevelShape) -> list[Poset]:
    n = shape.n
    labels = _stratum_labels(shape)
    found: dict[bytes, Poset] = {}
    for middles, tops in _shape_candidates(shape):
        # a middle point below exactly one top is an up beat point
        counts = [0] * shape.m1
        for smask, _ in tops:
            for i in _bits(smask):
                counts[i] += 1
        if any(c == 1 for c in counts):
            continue
        down = _assemble_masks(shape, middles, tops)
        if not _masks_connected(down, n):
            continue
        if not _masks_are_core(down, n):
            continue
        p = _poset_from_down(down, labels)
        found.setdefault(p.canonical_code, p)
    return [found[c] for c in sorted(found)]


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_height2_cores(
    n: int, workers: int | None = None, progress=None
) -> list[Poset]:
    """All connected height-2 beat-point-free posets on n points, up to
    isomorphism, sorted by canonical code.

    Generation shards independently by level shape; merging is deterministic,
    so any worker count produces the identical list.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > HEIGHT2_CAP:
        raise SizeTooLarge(f"height-2 core enumeration is capped at {HEIGHT2_CAP}")
    shapes = level_shapes(n)
    nworkers = _worker_count(workers)
    found: dict[bytes, Poset] = {}
    if nworkers > 1 and len(shapes) > 1:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            shards = list(pool.map(_cores_for_shape, shapes))
    else:
        shards = []
        for shape in shapes:
            shards.append(_cores_for_shape(shape))
            if progress is not None:
                progress(shape, len(shards[-1]))
    for shard in shards:
        for p in shard:
            found.setdefault(p.canonical_code, p)
    return [found[c] for c in sorted(found)]


# -- height-1 cores --------------------------------------------------------------


def enumerate_height1_cores(n: int) -> list[Poset]:
    """All connected height-1 beat-point-free posets on n points, up to
    isomorphism (bipartite incidences with both-side degrees >= 2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > HEIGHT1_CAP:
        raise SizeTooLarge(f"height-1 core enumeration is capped at {HEIGHT1_CAP}")
    found: dict[bytes, Poset] = {}
    for n_min in range(2, n - 1):
        n_max = n - n_min
        if n_max < 2:
            continue
        # rows run over the larger side so masks stay narrow
        if n_min <= n_max:
            width, nrows, transposed = n_min, n_max, False
        else:
            width, nrows, transposed = n_max, n_min, True
        choices = sorted(_nonempty_masks(width, 2), reverse=True)
        for rows in combinations_with_replacement(choices, nrows):
            colcount = [0] * width
            for r in rows:
                for j in _bits(r):
                    colcount[j] += 1
            if any(c < 2 for c in colcount):
                continue
            if transposed:
                # rows are minimals' up-sets over the maximals
                down = [0] * n
                for i, r in enumerate(rows):
                    for j in _bits(r):
                        down[n_min + j] |= 1 << i
            else:
                down = [0] * n
                for i, r in enumerate(rows):
                    down[n_min + i] = r
            if not _masks_connected(down, n):
                continue
            labels = [f"c{j + 1}" for j in range(n_min)] + [
                f"a{i + 1}" for i in range(n_max)
            ]
            p = _poset_from_down(down, labels)
            found.setdefault(p.canonical_code, p)
    return [found[c] for c in sorted(found)]
