import _a3res


def test_trivial_bundle_sections():
    out = _a3res.cohomology(1, 2, 3, [], [])
    assert out["status"] == "exact"
    assert out["cohomology"] == {0: [([0, 0, 0], 1)]}


def test_one_degree_table():
    out = _a3res.cohomology(1, 2, 3, [4, 1], [4, 1])
    assert out["status"] == "exact"
    assert list(out["cohomology"].keys()) == [2]
    weights = [tuple(w) for w, _ in out["cohomology"][2]]
    assert weights == [(2, 0, -2), (1, 0, -1), (0, 0, 0)]


def test_method_selection():
    out = _a3res.cohomology(1, 3, 4, [3, 1], [3, 1], method="split-only")
    assert out["status"] == "ambiguous"
    out = _a3res.cohomology(1, 3, 4, [3, 1], [3, 1])
    assert out["status"] == "exact"
    assert sum(m for _, m in out["cohomology"][2]) == 7


def test_orbit_codimension():
    assert _a3res.orbit_codimension([3, 4, 3], [1, 1, 0]) == 13


def test_resolution_koszul():
    out = _a3res.resolution([1, 1, 1], [0, 0, 0])
    assert out["codim"] == 2
    assert [t["i"] for t in out["terms"]] == [0, 1, 2]
    assert len(out["terms"][1]["summands"]) == 2
    assert not any(t["ambiguous"] for t in out["terms"])


def test_generators():
    out = _a3res.generators([3, 4, 3], [1, 1, 0])
    assert out["f1_match"] is True
    assert [f["name"] for f in out["families"]] == ["X-minors", "Y-minors", "YX-minors"]
    assert [f["size"] for f in out["families"]] == [2, 2, 1]
