"""Order complexes and exact simplicial homology.

The order complex of a poset has one simplex per nonempty chain and carries
the weak homotopy type of the corresponding finite space, so all invariants
here (f-vector, Betti numbers, torsion, Euler characteristic, boundary ranks
over GF(2)) are computed from it.  Everything is exact: boundary matrices
hold Python integers, ranks and torsion come from Smith normal form, and the
GF(2) ranks are computed by an independent bitmask elimination so the two
paths cross-check each other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from finspace.posets import Poset, _bits


class ComplexError(ValueError):
    """Malformed simplicial complex data."""


class SimplicialComplex:
    """Simplices stored per dimension as sorted tuples of vertex indices."""

    def __init__(self, n_vertices: int, simplices: list[list[tuple[int, ...]]]):
        if n_vertices < 0:
            raise ComplexError("vertex count must be >= 0")
        by_dim: list[tuple[tuple[int, ...], ...]] = []
        seen: set[tuple[int, ...]] = set()
        for dim, group in enumerate(simplices):
            cleaned = sorted(set(group))
            if len(cleaned) != len(group):
                raise ComplexError(f"duplicate simplices in dimension {dim}")
            for s in cleaned:
                if len(s) != dim + 1:
                    raise ComplexError(f"{s} is not {dim}-dimensional")
                if list(s) != sorted(set(s)):
                    raise ComplexError(f"simplex {s} is not strictly increasing")
                if s[-1] >= n_vertices or s[0] < 0:
                    raise ComplexError(f"simplex {s} references missing vertices")
                seen.add(s)
            by_dim.append(tuple(cleaned))
        while by_dim and not by_dim[-1]:
            by_dim.pop()
        for dim in range(1, len(by_dim)):
            for s in by_dim[dim]:
                for face in combinations(s, dim):
                    if face not in seen:
                        raise ComplexError(f"face {face} of {s} is missing")
        self.n_vertices = n_vertices
        self.simplices = tuple(by_dim)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self.simplices)

    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices[0])

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self.dimension < 1:
            return ()
        return self.simplices[1]  # type: ignore[return-value]

    def is_connected(self) -> bool:
        verts = self.vertices()
        if not verts:
            return True
        index = {v: k for k, v in enumerate(verts)}
        adj = [0] * len(verts)
        for u, v in self.edges():
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        seen = 1
        frontier = 1
        while frontier:
            new = 0
            for i in _bits(frontier):
                new |= adj[i]
            frontier = new & ~seen
            seen |= new
        return seen == (1 << len(verts)) - 1


def order_complex(p: Poset) -> SimplicialComplex:
    """All nonempty chains of ``p``; its dimension equals the poset height."""
    strict_up = p._strict_up
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(p.height + 1)]

    def grow(chain: list[int], last: int) -> None:
        by_dim[len(chain) - 1].append(tuple(sorted(chain)))
        for nxt in _bits(strict_up[last]):
            chain.append(nxt)
            grow(chain, nxt)
            chain.pop()

    for start in range(p.n):
        grow([start], start)
    return SimplicialComplex(p.n, by_dim)


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense exact-integer matrix; ``entries[i][j]`` is row i, column j."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ComplexError("matrix shape does not match entries")

    @classmethod
    def from_rows(cls, rows: list[list[int]], cols: int | None = None) -> "IntegerMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(tuple(r) for r in rows))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def multiply(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ComplexError("dimension mismatch in product")
        out = [
            [
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(out, other.cols)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)


def boundary_matrices(k: SimplicialComplex) -> list[IntegerMatrix]:
    """Boundary maps d_1..d_dim under the sorted-vertex orientation.

    d_i sends an i-simplex to the alternating sum of its facets; signs come
    from the position of the dropped vertex, so d_{i} . d_{i+1} = 0.
    """
    out: list[IntegerMatrix] = []
    for dim in range(1, k.dimension + 1):
        lower_index = {s: r for r, s in enumerate(k.simplices[dim - 1])}
        rows = len(k.simplices[dim - 1])
        cols = len(k.simplices[dim])
        entries = [[0] * cols for _ in range(rows)]
        for c, simplex in enumerate(k.simplices[dim]):
            for drop in range(dim + 1):
                face = simplex[:drop] + simplex[drop + 1 :]
                entries[lower_index[face]][c] = -1 if drop % 2 else 1
        out.append(IntegerMatrix.from_rows(entries, cols))
    return out


@dataclass(frozen=True)
class SmithNormalForm:
    """Invariant factors d_1 | d_2 | ... | d_r (all positive) and rank r."""

    invariant_factors: tuple[int, ...]
    rank: int


def smith_normal_form(m: IntegerMatrix) -> SmithNormalForm:
    """Diagonalize over the integers with min-|pivot| selection.

    Arbitrary-precision arithmetic throughout; the returned factors satisfy
    the divisibility chain and their count is the rational rank.
    """
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while t < min(rows, cols):
        pi = pj = -1
        bestval = 0
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (bestval == 0 or abs(v) < bestval):
                    bestval = abs(v)
                    pi, pj = i, j
        if bestval == 0:
            break
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // pivot
                    if q:
                        for j in range(t, cols):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // pivot
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if dirty:
                continue
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
        t += 1
    return SmithNormalForm(tuple(factors), len(factors))


def f2_rank(m: IntegerMatrix) -> int:
    """Rank over the two-element field by bitmask Gaussian elimination.

    Deliberately independent of the Smith normal form path.
    """
    rows = []
    for r in m.entries:
        mask = 0
        for j, v in enumerate(r):
            if v & 1:
                mask |= 1 << j
        if mask:
            rows.append(mask)
    rank = 0
    while rows:
        pivot_row = rows.pop()
        rank += 1
        pivot_bit = pivot_row & -pivot_row
        rows = [r ^ pivot_row if r & pivot_bit else r for r in rows]
        rows = [r for r in rows if r]
    return rank


@dataclass(frozen=True)
class HomologyProfile:
    """Unreduced integral homology data of a finite complex.

    ``betti[d]`` is the rank of H_d, ``torsion[d]`` its invariant factors
    (each > 1), ``f2_ranks[d]`` is the rank of d_{d+1} over GF(2); reduced
    Betti numbers are the same except one lower in degree zero.
    """

    f_vector: tuple[int, ...]
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    euler: int
    f2_ranks: tuple[int, ...]

    @property
    def reduced_betti(self) -> tuple[int, ...]:
        return (self.betti[0] - 1,) + self.betti[1:]

    @property
    def has_torsion(self) -> bool:
        return any(self.torsion)

    def to_json_dict(self) -> dict:
        return {
            "f_vector": list(self.f_vector),
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "euler": self.euler,
            "f2_ranks": list(self.f2_ranks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(", ", ": "))


def betti_signature(profile: "HomologyProfile") -> tuple[int, ...]:
    """Betti numbers with trailing zeros stripped: the right shape for
    comparing spaces whose complexes have different dimensions."""
    betti = list(profile.betti)
    while betti and betti[-1] == 0:
        betti.pop()
    return tuple(betti)


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** d * f for d, f in enumerate(k.f_vector))


def homology(k: SimplicialComplex) -> HomologyProfile:
    """Betti numbers and torsion per dimension from Smith normal forms.

    betti[d] = f_d - rank(d_d) - rank(d_{d+1}); the torsion of H_d is the
    set of invariant factors of d_{d+1} exceeding one.
    """
    dim = k.dimension
    f = k.f_vector
    boundaries = boundary_matrices(k)
    snfs = [smith_normal_form(b) for b in boundaries]
    ranks = [0] + [s.rank for s in snfs] + [0]  # ranks[d] = rank(d_d)
    betti = tuple(f[d] - ranks[d] - ranks[d + 1] for d in range(dim + 1))
    torsion = tuple(
        tuple(v for v in snfs[d].invariant_factors if v > 1) if d < dim else ()
        for d in range(dim + 1)
    )
    return HomologyProfile(
        f_vector=f,
        betti=betti,
        torsion=torsion,
        euler=euler_characteristic(k),
        f2_ranks=tuple(f2_rank(b) for b in boundaries),
    )


def poset_homology(p: Poset) -> HomologyProfile:
    """Homology of the order complex; the weak homotopy invariants of p."""
    return homology(order_complex(p))
