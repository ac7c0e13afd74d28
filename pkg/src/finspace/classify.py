"""Label enumerated cores by wedge-of-spheres type and verify the published
classification.

A record gets the label ``(p, q)`` (p circles, q spheres) exactly when its
order complex is at most 2-dimensional, connected in homology (beta_0 = 1),
torsion-free, with beta_1 = p and beta_2 = q; the label additionally carries
``pi1_verified`` when the edge-path presentation was certified free of rank
p.  Labelling is invariant-based evidence, not a weak-equivalence proof, and
asphericity is never checked; downstream consumers see exactly how much was
certified.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from collections import Counter

from finspace import figures
from finspace.complexes import HomologyProfile, order_complex, homology
from finspace.enumeration import enumerate_height1_cores, enumerate_height2_cores
from finspace.posets import Poset
from finspace.presentations import (
    SimplificationStatus,
    poset_presentation,
    tietze_simplify,
)


@dataclass(frozen=True)
class WedgeLabel:
    """Homotopy-type label: a wedge of ``circles`` copies of the circle and
    ``spheres`` copies of the 2-sphere; (0, 0) is the contractible label."""

    circles: int
    spheres: int
    pi1_verified: bool

    @property
    def key(self) -> tuple[int, int]:
        return (self.circles, self.spheres)

    def to_json_obj(self):
        return {
            "circles": self.circles,
            "spheres": self.spheres,
            "pi1_verified": self.pi1_verified,
        }


def label(
    profile: HomologyProfile, status: SimplificationStatus | None, dim: int
) -> WedgeLabel | None:
    """Wedge-type label from invariants; ``None`` means unrecognized."""
    if dim > 2 or profile.betti[0] != 1 or profile.has_torsion:
        return None
    betti = profile.betti + (0,) * (3 - len(profile.betti))
    p, q = betti[1], betti[2]
    verified = status is not None and status.certifies_free_rank(p)
    return WedgeLabel(circles=p, spheres=q, pi1_verified=verified)


@dataclass(frozen=True)
class ClassificationRecord:
    """One isomorphism class in an inventory, with all computed evidence."""

    code: bytes
    n: int
    height: int
    covers: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]
    profile: HomologyProfile
    wedge: WedgeLabel | None
    homogeneous: bool
    dual_code: bytes
    figure_matches: tuple[str, ...]

    @property
    def label_key(self) -> tuple[int, int] | None:
        return None if self.wedge is None else self.wedge.key

    def poset(self) -> Poset:
        return Poset.from_covers(self.n, self.covers, self.labels)

    def to_json_obj(self) -> dict:
        return {
            "code": self.code.decode("ascii"),
            "n": self.n,
            "height": self.height,
            "covers": [[self.labels[lo], self.labels[hi]] for lo, hi in self.covers],
            "elements": list(self.labels),
            "homology": self.profile.to_json_dict(),
            "label": None if self.wedge is None else self.wedge.to_json_obj(),
            "homogeneous": self.homogeneous,
            "dual_code": self.dual_code.decode("ascii"),
            "figures": list(self.figure_matches),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def classify_poset(p: Poset) -> ClassificationRecord:
    """Full record for one core: homology, pi1 certification, label, dual."""
    k = order_complex(p)
    profile = homology(k)
    status = None
    if p.is_connected and p.height <= 2:
        status = tietze_simplify(poset_presentation(p))
    return ClassificationRecord(
        code=p.canonical_code,
        n=p.n,
        height=p.height,
        covers=p.covers,
        labels=p.labels,
        profile=profile,
        wedge=label(profile, status, k.dimension),
        homogeneous=p.is_homogeneous,
        dual_code=p.dual().canonical_code,
        figure_matches=figures.matches(p),
    )


@dataclass(frozen=True)
class Inventory:
    """Classified cores for one (n, height), sorted by canonical code."""

    n: int
    height: int
    records: tuple[ClassificationRecord, ...]

    @property
    def counts(self) -> Counter:
        return Counter(r.label_key for r in self.records)

    def count_for(self, circles: int, spheres: int) -> int:
        return self.counts[(circles, spheres)]

    def records_for(self, circles: int, spheres: int) -> tuple[ClassificationRecord, ...]:
        return tuple(r for r in self.records if r.label_key == (circles, spheres))

    def to_json_lines(self) -> str:
        return "\n".join(r.to_json_line() for r in self.records)


def inventory(n: int, height: int, workers: int | None = None) -> Inventory:
    """Enumerate, classify and count the cores of the given size and height."""
    if height == 1:
        cores = enumerate_height1_cores(n)
    elif height == 2:
        cores = enumerate_height2_cores(n, workers=workers)
    else:
        raise ValueError("height must be 1 or 2")
    records = tuple(classify_poset(p) for p in cores)
    return Inventory(n=n, height=height, records=records)


@dataclass(frozen=True)
class MinModelResult:
    circles: int
    spheres: int
    n_min: int | None
    records: tuple[ClassificationRecord, ...]

    @property
    def found(self) -> bool:
        return self.n_min is not None


def min_model_search(p: int, q: int, n_max: int) -> MinModelResult:
    """Smallest point count carrying a core labelled (p, q), with all models.

    Wedges of circles only need height-1 cores; any type with a sphere needs
    height 2.  The contractible target (0, 0) is the one-point space.
    """
    if p < 0 or q < 0:
        raise ValueError("wedge components must be >= 0")
    if p == 0 and q == 0:
        if n_max < 1:
            return MinModelResult(p, q, None, ())
        return MinModelResult(p, q, 1, (classify_poset(Poset.antichain(1)),))
    for n in range(1, n_max + 1):
        if q == 0:
            cores = enumerate_height1_cores(n)
        else:
            cores = enumerate_height2_cores(n)
        hits = tuple(
            r
            for r in (classify_poset(c) for c in cores)
            if r.label_key == (p, q)
        )
        if hits:
            return MinModelResult(p, q, n, hits)
    return MinModelResult(p, q, None, ())


def circle_wedge_size(n: int) -> int:
    """Point count of a minimal model of a wedge of n circles:
    min{i + j : (i-1)(j-1) >= n} over i, j >= 2."""
    if n < 1:
        raise ValueError("circle count must be >= 1")
    best = None
    for i in range(2, n + 3):
        j = n // (i - 1) + (1 if n % (i - 1) else 0) + 1
        j = max(j, 2)
        total = i + j
        if best is None or total < best:
            best = total
    assert best is not None
    return best


def circle_wedge_size_closed_form(n: int, rounding: str = "ceil") -> int:
    """Closed-form candidate size: min of 2*[sqrt(n)+1] and 2*[root of
    a(a-1)=n] + 1.  The published bracket is ambiguous, so the rounding is a
    parameter; both brackets are evaluated exactly in integers."""
    if n < 1:
        raise ValueError("circle count must be >= 1")
    if rounding == "ceil":
        sq = math.isqrt(n - 1) + 1
        a = 1
        while a * (a - 1) < n:
            a += 1
    elif rounding == "floor":
        sq = math.isqrt(n)
        a = 1
        while (a + 1) * a <= n:
            a += 1
    else:
        raise ValueError("rounding must be 'ceil' or 'floor'")
    return min(2 * (sq + 1), 2 * a + 1)


def hasse_edge_count(p: Poset) -> int:
    return len(p.covers)
