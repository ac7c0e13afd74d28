import json

import pytest

from finspace import figures
from finspace.classify import (
    WedgeLabel,
    circle_wedge_size,
    circle_wedge_size_closed_form,
    classify_poset,
    hasse_edge_count,
    inventory,
    label,
    min_model_search,
)
from finspace.complexes import HomologyProfile
from finspace.posets import Poset, fence
from finspace.presentations import Presentation, SimplificationStatus


def profile(f_vector, betti, torsion=None, f2=None):
    dim = len(f_vector) - 1
    torsion = torsion or tuple(() for _ in range(dim + 1))
    euler = sum((-1) ** d * v for d, v in enumerate(f_vector))
    return HomologyProfile(
        f_vector=tuple(f_vector),
        betti=tuple(betti),
        torsion=tuple(tuple(t) for t in torsion),
        euler=euler,
        f2_ranks=tuple(f2 or ()),
    )


class TestLabel:
    def test_wedge_two_circles_one_sphere(self):
        prof = profile((8, 16, 8), (1, 2, 1))
        status = SimplificationStatus.free_of_rank(2)
        got = label(prof, status, 2)
        assert got == WedgeLabel(circles=2, spheres=1, pi1_verified=True)

    def test_contractible(self):
        prof = profile((1,), (1,))
        got = label(prof, SimplificationStatus.trivial(), 0)
        assert got == WedgeLabel(circles=0, spheres=0, pi1_verified=True)

    def test_inconclusive_pi1_left_unverified(self):
        prof = profile((8, 14, 4), (1, 3, 0))
        stuck = SimplificationStatus.inconclusive(Presentation(3, ((1, 2, -1, -2),)))
        got = label(prof, stuck, 2)
        assert got == WedgeLabel(circles=3, spheres=0, pi1_verified=False)

    def test_torsion_unrecognized(self):
        prof = profile((6, 15, 10), (1, 0, 0), torsion=((), (2,), ()))
        assert label(prof, None, 2) is None

    def test_disconnected_unrecognized(self):
        prof = profile((2,), (2,))
        assert label(prof, None, 0) is None

    def test_high_dimension_unrecognized(self):
        prof = profile((4, 6, 4, 1), (1, 0, 0, 0))
        assert label(prof, None, 3) is None


class TestClassifyPoset:
    def test_record_fields(self):
        p = figures.poset("fig14c")
        rec = classify_poset(p)
        assert rec.n == 8
        assert rec.height == 2
        assert rec.label_key == (2, 1)
        assert rec.wedge is not None and rec.wedge.pi1_verified
        assert not rec.homogeneous
        assert "fig14c" in rec.figure_matches
        assert rec.dual_code == figures.poset("fig14cstar").canonical_code

    def test_json_line_round_trips(self):
        rec = classify_poset(figures.poset("fig05b"))
        obj = json.loads(rec.to_json_line())
        assert obj["label"] == {"circles": 0, "spheres": 2, "pi1_verified": True}
        assert obj["homology"]["betti"] == [1, 0, 2]
        assert obj["n"] == 7
        rebuilt = Poset.from_covers(
            obj["n"],
            [
                (obj["elements"].index(lo), obj["elements"].index(hi))
                for lo, hi in obj["covers"]
            ],
            obj["elements"],
        )
        assert rebuilt.canonical_code.decode("ascii") == obj["code"]


class TestInventory:
    def test_inventory_6_2(self):
        inv = inventory(6, 2)
        assert len(inv.records) == 1
        assert inv.records[0].label_key == (0, 1)

    def test_inventory_7_2_counts(self):
        inv = inventory(7, 2)
        assert inv.count_for(1, 1) == 2
        assert inv.count_for(0, 2) == 3

    def test_records_sorted_and_unique(self):
        inv = inventory(7, 2)
        codes = [r.code for r in inv.records]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)

    def test_dual_codes_stay_inside(self):
        inv = inventory(7, 2)
        codes = {r.code for r in inv.records}
        assert all(r.dual_code in codes for r in inv.records)

    def test_label_dual_invariant(self):
        inv = inventory(7, 2)
        by_code = {r.code: r for r in inv.records}
        for rec in inv.records:
            assert by_code[rec.dual_code].label_key == rec.label_key

    def test_bad_height(self):
        with pytest.raises(ValueError):
            inventory(5, 3)

    def test_inventory_8_2_pinned_counts(self):
        inv = inventory(8, 2)
        assert len(inv.records) == 53
        assert inv.count_for(2, 1) == 7
        assert inv.count_for(3, 1) == 1
        assert inv.count_for(1, 2) == 6
        assert inv.count_for(0, 3) == 5
        assert inv.count_for(0, 4) == 3

    def test_homogeneity_rule_over_inventories(self):
        # mixed wedges admit only non-homogeneous models; sphere-only wedges
        # only homogeneous ones
        for n in (7, 8):
            for rec in inventory(n, 2).records:
                if rec.label_key is None:
                    continue
                p, q = rec.label_key
                if p >= 1 and q >= 1:
                    assert not rec.homogeneous, rec.code
                if p == 0 and q >= 1:
                    assert rec.homogeneous, rec.code

    def test_every_record_pi1_verified_at_paper_scale(self):
        # the budgeted simplifier succeeds on every core up to 8 points
        for n in (6, 7, 8):
            for rec in inventory(n, 2).records:
                assert rec.wedge is not None
                assert rec.wedge.pi1_verified, rec.code

    def test_jsonl_output(self):
        inv = inventory(6, 2)
        lines = inv.to_json_lines().splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["label"]["spheres"] == 1


class TestMinModelSearch:
    def test_single_circle(self):
        res = min_model_search(1, 0, 8)
        assert res.n_min == 4
        assert len(res.records) == 1
        assert res.records[0].poset().is_isomorphic(fence())

    def test_contractible(self):
        res = min_model_search(0, 0, 8)
        assert res.n_min == 1

    def test_sphere(self):
        res = min_model_search(0, 1, 8)
        assert res.n_min == 6

    def test_not_found(self):
        res = min_model_search(0, 9, 8)
        assert not res.found
        assert res.records == ()

    def test_circle_targets_match_size_law(self):
        for n_circles in range(1, 5):
            res = min_model_search(n_circles, 0, 8)
            assert res.n_min == circle_wedge_size(n_circles)


class TestCircleWedgeSize:
    def test_known_values(self):
        assert circle_wedge_size(1) == 4
        assert circle_wedge_size(2) == 5
        assert circle_wedge_size(3) == 6
        assert circle_wedge_size(4) == 6
        assert circle_wedge_size(5) == 7
        assert circle_wedge_size(6) == 7

    def test_matches_ceiling_closed_form(self):
        for n in range(1, 60):
            assert circle_wedge_size(n) == circle_wedge_size_closed_form(n, "ceil")

    def test_floor_reading_fails_somewhere(self):
        mismatches = [
            n
            for n in range(1, 10)
            if circle_wedge_size(n) != circle_wedge_size_closed_form(n, "floor")
        ]
        assert 2 in mismatches

    def test_brute_force_definition(self):
        for n in range(1, 20):
            best = min(
                i + j
                for i in range(2, n + 3)
                for j in range(2, n + 3)
                if (i - 1) * (j - 1) >= n
            )
            assert circle_wedge_size(n) == best


class TestEdgeLaw:
    def test_minimal_circle_models_edge_count(self):
        # every minimizer has exactly points + circles - 1 cover pairs
        for n_circles in (1, 2, 3, 4):
            res = min_model_search(n_circles, 0, 8)
            assert res.found
            for rec in res.records:
                assert hasse_edge_count(rec.poset()) == res.n_min + n_circles - 1
