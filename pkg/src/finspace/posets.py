"""Finite T0-spaces represented as posets.

A finite T0-space is the same thing as a finite poset under the
specialization order, so every topological question about such a space
(connectedness, homotopy type, minimality) becomes an order-theoretic one.
This module holds the immutable :class:`Poset` value type and the structural
operations everything else is built on: up/down sets, heights and levels,
duals, beat points and cores, the non-Hausdorff suspension, and canonical
codes for isomorphism testing.

Elements are indices ``0..n-1``; the order relation is stored as one bitmask
per element, which keeps every operation exact and fast for ``n <= 64``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ELEMENTS = 64


class PosetError(ValueError):
    """Base class for malformed poset data."""


class CycleDetected(PosetError):
    """The transitive closure of the given covers violates antisymmetry."""


class NotCover(PosetError):
    """A listed cover pair is already implied transitively."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class CoverRelations:
    """A Hasse diagram: ``pairs`` lists (lower, upper) cover edges."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        for lo, hi in self.pairs:
            if not (0 <= lo < self.n and 0 <= hi < self.n):
                raise PosetError(f"cover ({lo}, {hi}) out of range for n={self.n}")
            if lo == hi:
                raise CycleDetected(f"cover ({lo}, {hi}) relates an element to itself")


@dataclass(frozen=True)
class RolePartition:
    """Maximal / middle / minimal elements; isolated points appear in both
    mxl and mnl and are flagged separately."""

    mxl: frozenset[int]
    middle: frozenset[int]
    mnl: frozenset[int]
    isolated: frozenset[int]

    @property
    def is_partition(self) -> bool:
        return not self.isolated


class Poset:
    """An immutable finite poset on elements ``0..n-1``.

    ``up[i]`` is the bitmask of ``{j : i <= j}`` and ``down[i]`` the bitmask
    of ``{j : j <= i}``, both including ``i`` itself.  Instances are never
    mutated after construction, so they are safe to share across threads.
    """

    def __init__(self, up_masks: Sequence[int], labels: Sequence[str] | None = None):
        n = len(up_masks)
        if not 1 <= n <= MAX_ELEMENTS:
            raise PosetError(f"element count must be 1..{MAX_ELEMENTS}, got {n}")
        up = tuple(up_masks)
        full = (1 << n) - 1
        down = [0] * n
        for i in range(n):
            if up[i] & ~full:
                raise PosetError(f"relation row {i} references elements >= n")
            if not up[i] >> i & 1:
                raise PosetError(f"relation not reflexive at element {i}")
            for j in _bits(up[i]):
                down[j] |= 1 << i
        for i in range(n):
            if up[i] & down[i] != 1 << i:
                raise CycleDetected(f"antisymmetry fails at element {i}")
            for j in _bits(up[i]):
                if up[j] & ~up[i]:
                    raise PosetError(f"relation not transitive at ({i}, {j})")
        if labels is None:
            labels = tuple(f"x{i}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise PosetError("label count does not match element count")
            if len(set(labels)) != n:
                raise PosetError("element labels must be distinct")
        self.n = n
        self.labels = labels
        self._up = up
        self._down = tuple(down)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_cover_relations(cls, covers: CoverRelations) -> "Poset":
        """Build the poset whose order is the reflexive-transitive closure of
        the given Hasse diagram.

        Raises :class:`CycleDetected` if the closure is not antisymmetric and
        :class:`NotCover` if a listed pair is implied by the others.
        """
        n = covers.n
        above = [0] * n  # direct successors
        for lo, hi in covers.pairs:
            above[lo] |= 1 << hi
        up = [1 << i | above[i] for i in range(n)]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in _bits(up[i]):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in _bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleDetected(f"elements {i} and {j} lie on a cycle")
        poset = cls(up, covers.labels)
        strict = poset._strict_up
        for lo, hi in covers.pairs:
            between = strict[lo] & poset._strict_down[hi]
            if between:
                raise NotCover(
                    f"pair ({lo}, {hi}) is implied through element {next(_bits(between))}"
                )
        return poset

    @classmethod
    def from_covers(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Poset":
        lab = tuple(labels) if labels is not None else None
        return cls.from_cover_relations(CoverRelations(n, tuple(pairs), lab))

    @classmethod
    def antichain(cls, n: int, labels: Sequence[str] | None = None) -> "Poset":
        return cls([1 << i for i in range(n)], labels)

    @classmethod
    def chain(cls, n: int, labels: Sequence[str] | None = None) -> "Poset":
        full = (1 << n) - 1
        return cls([full & ~((1 << i) - 1) for i in range(n)], labels)

    # -- basic accessors -----------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    @cached_property
    def _strict_up(self) -> tuple[int, ...]:
        return tuple(self._up[i] & ~(1 << i) for i in range(self.n))

    @cached_property
    def _strict_down(self) -> tuple[int, ...]:
        return tuple(self._down[i] & ~(1 << i) for i in range(self.n))

    def up_set(self, x: int) -> frozenset[int]:
        """F_x: every element above or equal to x."""
        return frozenset(_bits(self._up[x]))

    def down_set(self, x: int) -> frozenset[int]:
        """U_x: every element below or equal to x (the minimal open set)."""
        return frozenset(_bits(self._down[x]))

    def hat_up_set(self, x: int) -> frozenset[int]:
        return frozenset(_bits(self._strict_up[x]))

    def hat_down_set(self, x: int) -> frozenset[int]:
        return frozenset(_bits(self._strict_down[x]))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """The Hasse diagram edge set, sorted."""
        out = []
        for i in range(self.n):
            for j in _bits(self._strict_up[i]):
                between = self._strict_up[i] & self._strict_down[j]
                if not between:
                    out.append((i, j))
        return tuple(sorted(out))

    def cover_relations(self) -> CoverRelations:
        return CoverRelations(self.n, self.covers, self.labels)

    # -- heights and roles ---------------------------------------------------

    @cached_property
    def element_heights(self) -> tuple[int, ...]:
        """Longest chain strictly below each element (minimal elements get 0)."""
        order = sorted(range(self.n), key=lambda i: _popcount(self._down[i]))
        h = [0] * self.n
        for i in order:
            below = self._strict_down[i]
            h[i] = 1 + max((h[j] for j in _bits(below)), default=-1)
        return tuple(h)

    @cached_property
    def _element_depths(self) -> tuple[int, ...]:
        """Longest chain strictly above each element."""
        order = sorted(range(self.n), key=lambda i: _popcount(self._up[i]))
        d = [0] * self.n
        for i in order:
            above = self._strict_up[i]
            d[i] = 1 + max((d[j] for j in _bits(above)), default=-1)
        return tuple(d)

    def element_height(self, x: int) -> int:
        return self.element_heights[x]

    @cached_property
    def height(self) -> int:
        return max(self.element_heights)

    @cached_property
    def maximal_elements(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self._strict_up[i])

    @cached_property
    def minimal_elements(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self._strict_down[i])

    def role_partition(self) -> RolePartition:
        mxl = self.maximal_elements
        mnl = self.minimal_elements
        isolated = mxl & mnl
        middle = frozenset(range(self.n)) - mxl - mnl
        return RolePartition(mxl=mxl, middle=middle, mnl=mnl, isolated=isolated)

    @cached_property
    def is_connected(self) -> bool:
        """True iff the comparability graph is connected."""
        seen = 1
        frontier = 1
        adj = tuple(
            (self._up[i] | self._down[i]) & ~(1 << i) for i in range(self.n)
        )
        while frontier:
            new = 0
            for i in _bits(frontier):
                new |= adj[i]
            frontier = new & ~seen
            seen |= new
        return seen == (1 << self.n) - 1

    @cached_property
    def is_homogeneous(self) -> bool:
        """True iff every maximal chain has the same length.

        Equivalent to: every cover step raises element height by exactly one
        and every maximal element sits at the top height.
        """
        h = self.element_heights
        top = self.height
        if any(h[m] != top for m in self.maximal_elements):
            return False
        return all(h[j] == h[i] + 1 for i, j in self.covers)

    # -- structural operations ------------------------------------------------

    def dual(self) -> "Poset":
        """The opposite poset: same elements, order reversed."""
        return Poset(self._down, self.labels)

    def permuted(self, sigma: Sequence[int]) -> "Poset":
        """Relabelled copy: element i of self becomes element sigma[i]."""
        n = self.n
        if sorted(sigma) != list(range(n)):
            raise PosetError("sigma is not a permutation")
        up = [0] * n
        labels = [""] * n
        for i in range(n):
            mask = 0
            for j in _bits(self._up[i]):
                mask |= 1 << sigma[j]
            up[sigma[i]] = mask
            labels[sigma[i]] = self.labels[i]
        return Poset(up, labels)

    def restricted(self, keep: Sequence[int]) -> "Poset":
        """Induced subposet on the given elements (in the given order)."""
        pos = {x: k for k, x in enumerate(keep)}
        up = []
        for x in keep:
            mask = 0
            for j in _bits(self._up[x]):
                if j in pos:
                    mask |= 1 << pos[j]
            up.append(mask)
        return Poset(up, [self.labels[x] for x in keep])

    def same_order_as(self, other: "Poset") -> bool:
        """Elementwise equality of the relations (labels ignored)."""
        return self.n == other.n and self._up == other._up

    # -- beat points and cores -------------------------------------------------

    def is_down_beat_point(self, x: int) -> bool:
        """x is a down beat point iff its punctured down-set has a maximum."""
        hat = self._strict_down[x]
        for m in _bits(hat):
            if hat & ~self._down[m] == 0:
                return True
        return False

    def is_up_beat_point(self, x: int) -> bool:
        """x is an up beat point iff its punctured up-set has a minimum."""
        hat = self._strict_up[x]
        for m in _bits(hat):
            if hat & ~self._up[m] == 0:
                return True
        return False

    def beat_points(self) -> frozenset[int]:
        return frozenset(
            x
            for x in range(self.n)
            if self.is_down_beat_point(x) or self.is_up_beat_point(x)
        )

    @cached_property
    def is_core(self) -> bool:
        return not self.beat_points()

    def core(self) -> "Poset":
        """Remove beat points (lowest index first, one at a time) until none
        remain.  The result is the same up to isomorphism whatever the order;
        the index rule makes this particular output deterministic."""
        p = self
        while True:
            beats = p.beat_points()
            if not beats:
                return p
            victim = min(beats)
            p = p.restricted([x for x in range(p.n) if x != victim])

    def nh_suspension(self, k: int = 1) -> "Poset":
        """Non-Hausdorff suspension, iterated ``k`` times.

        Each step adds two new incomparable points strictly above every
        existing point, so the size grows by 2k and the height by k.
        """
        if k < 0:
            raise PosetError("iteration count must be >= 0")
        p = self
        for _ in range(k):
            n = p.n
            top = (1 << n) | (1 << (n + 1))
            up = [p._up[i] | top for i in range(n)]
            up.append(1 << n)
            up.append(1 << (n + 1))
            existing = set(p.labels)
            fresh = []
            t = 0
            while len(fresh) < 2:
                name = f"s{t}"
                if name not in existing:
                    fresh.append(name)
                t += 1
            p = Poset(up, list(p.labels) + fresh)
        return p

    # -- isomorphism ------------------------------------------------------------

    @cached_property
    def _refined_cells(self) -> tuple[tuple[int, ...], ...]:
        """Equitable partition of the elements into isomorphism-invariant
        cells, ordered canonically."""
        n = self.n
        sd = self._strict_down
        su = self._strict_up
        colors = [
            (
                self.element_heights[i],
                self._element_depths[i],
                _popcount(sd[i]),
                _popcount(su[i]),
            )
            for i in range(n)
        ]
        while True:
            keys = [
                (
                    colors[i],
                    tuple(sorted(colors[j] for j in _bits(sd[i]))),
                    tuple(sorted(colors[j] for j in _bits(su[i]))),
                )
                for i in range(n)
            ]
            ranking = {key: rank for rank, key in enumerate(sorted(set(keys)))}
            new = [(ranking[keys[i]],) for i in range(n)]
            if len(set(new)) == len(set(colors)):
                colors = new
                break
            colors = new
        cells: dict[tuple, list[int]] = {}
        for i in range(n):
            cells.setdefault(colors[i], []).append(i)
        return tuple(tuple(cells[c]) for c in sorted(cells))

    @cached_property
    def canonical_code(self) -> bytes:
        """A byte string equal for two posets iff they are isomorphic.

        Cells from the equitable refinement fix the block structure of the
        allowed relabelings; within that structure the code is the
        lexicographically least position-by-position relation profile, found
        by branch-and-bound with interchangeable-twin pruning.
        """
        n = self.n
        sd = self._strict_down
        su = self._strict_up
        cell_of_pos: list[tuple[int, ...]] = []
        for cell in self._refined_cells:
            cell_of_pos.extend([cell] * len(cell))
        best: list[tuple[int, int]] | None = None

        def pair_for(x: int, placed: list[int]) -> tuple[int, int]:
            dmask = 0
            umask = 0
            for pos, y in enumerate(placed):
                if sd[x] >> y & 1:
                    dmask |= 1 << pos
                if su[x] >> y & 1:
                    umask |= 1 << pos
            return (dmask, umask)

        def dfs(pos: int, used: int, placed: list[int], prefix: list[tuple[int, int]]):
            nonlocal best
            if best is not None and prefix > best[: len(prefix)]:
                return
            if pos == n:
                if best is None or prefix < best:
                    best = list(prefix)
                return
            seen_twins = set()
            scored = []
            for x in cell_of_pos[pos]:
                if used >> x & 1:
                    continue
                twin = (sd[x], su[x])
                if twin in seen_twins:
                    continue
                seen_twins.add(twin)
                scored.append((pair_for(x, placed), x))
            scored.sort()
            for pv, x in scored:
                placed.append(x)
                prefix.append(pv)
                dfs(pos + 1, used | 1 << x, placed, prefix)
                placed.pop()
                prefix.pop()

        dfs(0, 0, [], [])
        assert best is not None
        body = ",".join(f"{d}.{u}" for d, u in best)
        return f"{n}:{body}".encode("ascii")

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.canonical_code == other.canonical_code

    # -- misc ---------------------------------------------------------------------

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        pairs = ", ".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.covers)
        return f"Poset(n={self.n}, covers=[{pairs}])"


def fence() -> Poset:
    """The four-point minimal model of the circle."""
    return Poset.from_covers(
        4, [(0, 2), (0, 3), (1, 2), (1, 3)], ["c1", "c2", "a1", "a2"]
    )


def two_point_discrete() -> Poset:
    """S^0: the two-point antichain."""
    return Poset.antichain(2, ["x1", "x2"])


def sphere_model(dim: int) -> Poset:
    """The minimal finite model of the dim-sphere: the iterated
    non-Hausdorff suspension of the two-point antichain, on 2*dim+2 points."""
    if dim < 0:
        raise PosetError("dimension must be >= 0")
    return two_point_discrete().nh_suspension(dim)
