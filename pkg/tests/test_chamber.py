import itertools
import json
import random

import numpy as np
import pytest

from lr3sym.chamber import (
    RAYS, ChamberComplex, box_points, chambers_containing, cross_validate, evaluate_C,
    evaluate_many, load_complex, nu3, save_complex,
)
from lr3sym.errors import DataCorrupt, InconsistentFormulas, ValidationFailure
from lr3sym.forms import AffineForm, parse_form
from lr3sym.oracle import oracle_C

B = (2, 1, 2, 1, 3, 2)
ALL = {f"k{i}" for i in range(1, 19)}


def combo(coeffs):
    return tuple(sum(c * RAYS[r][i] for r, c in coeffs.items()) for i in range(6))


def test_rays_match_table(cc):
    assert cc.rays["b"] == B
    assert cc.rays == RAYS
    assert len(cc.chambers) == 18


def test_k2_formula_at_nu2_2_nu3_1(cc):
    # 1 + n2 - n3 with n2 = 2, n3 = 1, realized at b
    assert nu3(B) == 1
    assert cc.by_id["k2"].formula(B) == 2


def test_block_decomposition(cc):
    for ch in cc.chambers:
        ids = set(ch.ray_ids)
        assert "b" in ids
        assert len(ids & {"c", "f"}) == 1
        assert len(ids & {"d1", "e2", "g1"}) == 2
        assert len(ids & {"d2", "e1", "g2"}) == 2


def test_formula_elimination():
    # k6 is 1 - l3 - m3 + n3 with l3 = m3 = 0 and n3 eliminated
    assert parse_form("1 - l3 - m3 + n3") == AffineForm(1, (1, 1, 1, 1, -1, -1))
    # k13 uses the corrected nu1
    assert load_complex().by_id["k13"].formula == AffineForm(1, (-1, 0, 0, 0, 1, 0))


def test_nu3():
    assert nu3(B) == 1
    assert nu3((0,) * 6) == 0
    assert nu3((1, 1, 1, 1, 2, 1)) == 1


def test_all_formulas_two_at_b(cc):
    assert {ch.formula(B) for ch in cc.chambers} == {2}


def test_chambers_containing_examples():
    assert chambers_containing(B) == ALL
    assert chambers_containing((-1, 0, 0, 0, 0, 0)) == set()
    p = combo({"d1": 2, "g2": 3, "b": 1, "c": 1, "e2": 1, "e1": 1})
    assert "k9" in chambers_containing(p)
    assert chambers_containing(p) == {"k9"}


def test_evaluate_examples():
    assert evaluate_C(B) == 2
    assert evaluate_C((0,) * 6) == 1
    assert evaluate_C((2, 0, 0, 0, 1, 1)) == 0
    assert chambers_containing((2, 0, 0, 0, 1, 1)) == set()
    assert evaluate_C((1, 1, 1, 1, 2, 1)) == 1


def test_interior_points_lie_in_one_chamber(cc):
    for ch in cc.chambers:
        p = combo({r: k + 1 for k, r in enumerate(ch.ray_ids)})
        assert chambers_containing(p) == {ch.id}
        assert evaluate_C(p) == ch.formula(p) == oracle_C(p)


def test_face_consistency_sampled(cc):
    for a, b in itertools.combinations(cc.chambers, 2):
        shared = sorted(set(a.ray_ids) & set(b.ray_ids))
        for coeffs in itertools.product(range(4), repeat=len(shared)):
            p = combo(dict(zip(shared, coeffs)))
            assert a.formula(p) == b.formula(p)
            assert {a.id, b.id} <= chambers_containing(p)


def test_positive_on_support(cc):
    rng = random.Random(3)
    for ch in cc.chambers:
        for _ in range(40):
            p = combo({r: rng.randint(0, 6) for r in ch.ray_ids})
            assert evaluate_C(p) >= 1


def test_zero_off_partition_region():
    rng = random.Random(5)
    hits = 0
    while hits < 2000:
        p = tuple(rng.randint(-4, 8) for _ in range(6))
        l1, l2, m1, m2, n1, n2 = p
        n3 = nu3(p)
        if l1 < l2 or l2 < 0 or m1 < m2 or m2 < 0 or n1 < n2 or n2 < n3 or n3 < 0:
            hits += 1
            assert evaluate_C(p) == 0
            assert chambers_containing(p) == set()


def test_evaluate_many_matches_scalar():
    rng = np.random.default_rng(11)
    pts = rng.integers(-2, 7, size=(3000, 6))
    assert evaluate_many(pts).tolist() == [evaluate_C(p) for p in pts.tolist()]


def test_inconsistent_formulas_detected(cc, monkeypatch):
    # Skip load-time validation to build a complex whose k9 disagrees with k1 at b.
    monkeypatch.setattr(ChamberComplex, "_validate", lambda self: None)
    chambers = [ch if ch.id != "k9" else type(ch)(ch.id, ch.ray_ids, AffineForm(1, (9, 0, 0, 0, 0, 0)))
                for ch in cc.chambers]
    bogus = ChamberComplex(cc.rays, chambers)
    with pytest.raises(InconsistentFormulas):
        bogus.evaluate(B)
    with pytest.raises(InconsistentFormulas):
        bogus.evaluate_many([B])


def test_box_points():
    assert box_points(0).tolist() == [[0] * 6]
    assert len(box_points(2)) == 3 ** 6


def test_cross_validate_small():
    r = cross_validate(0)
    assert (r.points_checked, r.mismatches) == (1, [])
    r = cross_validate(4)
    assert (r.points_checked, r.mismatches) == (15625, [])


def test_cross_validate_reports_first_mismatch(tmp_path, cc):
    data = cc.to_json()
    # Shift every constant: consistency still holds, values are all off by one.
    for ch in data["chambers"]:
        ch["formula"]["constant"] = 2
    broken = ChamberComplex.from_json(data)
    with pytest.raises(ValidationFailure) as info:
        cross_validate(1, cc=broken)
    assert info.value.point == (0, 0, 0, 0, 0, 0)
    assert len(cross_validate(1, strict=False, cc=broken).mismatches) > 0


def test_json_roundtrip(tmp_path, cc):
    path = tmp_path / "complex.json"
    save_complex(cc, path)
    again = load_complex(path)
    assert again.rays == cc.rays
    assert again.chambers == cc.chambers
    doc = json.loads(path.read_text())
    assert set(doc) == {"rays", "chambers"}
    assert doc["chambers"][0] == {"id": "k1", "rays": ["b", "c", "d1", "e2", "d2", "e1"],
                                  "formula": {"constant": 1, "coeffs": [0, -1, 0, -1, 1, 0]}}


def _corrupt(cc, mutate):
    data = json.loads(json.dumps(cc.to_json()))
    mutate(data)
    return data


@pytest.mark.parametrize("mutate", [
    lambda d: d["rays"].__setitem__("b", [2, 1, 2, 1, 3, 3]),
    lambda d: d["rays"].pop("g2"),
    lambda d: d["rays"].__setitem__("c", [1, 1, 1, 1, 2.5, 1]),
    lambda d: d["chambers"].pop(),
    lambda d: d["chambers"][0].__setitem__("rays", ["b", "c", "d1", "e2", "d2"]),
    lambda d: d["chambers"][0].__setitem__("rays", ["b", "c", "f", "e2", "d2", "e1"]),
    lambda d: d["chambers"][0].__setitem__("rays", ["b", "c", "d1", "e2", "d2", "zz"]),
    lambda d: d["chambers"][1].__setitem__("rays", d["chambers"][0]["rays"]),
    lambda d: d["chambers"][3]["formula"].__setitem__("coeffs", [0, 0, 0, 0, 1, 0]),
    lambda d: d["chambers"][3]["formula"].__setitem__("constant", 0),
    lambda d: d["chambers"][3].pop("formula"),
    lambda d: d["chambers"][3]["formula"].__setitem__("coeffs", [0, 0, 0, 1]),
], ids=["ray-value", "ray-missing", "ray-float", "17-chambers", "5-rays", "cf-pattern",
        "unknown-ray", "duplicate-chamber", "face-mismatch", "constant", "no-formula", "short-coeffs"])
def test_corrupt_data_rejected(tmp_path, cc, mutate):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(_corrupt(cc, mutate)))
    with pytest.raises(DataCorrupt):
        load_complex(path)


def test_malformed_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(DataCorrupt):
        load_complex(path)
