"""Smoke tests for the python bindings."""

import json

import pytest

import spherekit as sk


def test_octahedron_roundtrip():
    oct = sk.construct("octahedron")
    assert oct.dimension == 2
    assert oct.vertex_count == 6
    f, h = oct.f_vector()
    assert f == [1, 6, 12, 8]
    assert h == [1, 3, 3, 1]
    back = sk.Complex.from_json(oct.to_json())
    assert back.facets == oct.facets


def test_homology_profiles():
    assert sk.homology(sk.construct("cross4"))["betti"] == [0, 0, 0, 1]
    rp2 = sk.construct("rp2-6")
    prof = sk.homology(rp2)
    assert prof["torsion"] == {"1": [2]}
    assert sk.homology(rp2, coefficients=2)["betti"] == [0, 1, 1]
    lens = sk.construct("lens16")
    prof = sk.homology(lens)
    assert prof["betti"] == [0, 0, 0, 1]
    assert prof["torsion"] == {"1": [3]}


def test_predicates():
    g = sk.construct("gamma16")
    assert sk.is_homology_sphere(g)["pass"]
    assert sk.is_k_neighborly(g, 2)["pass"]
    assert sk.dehn_sommerville(g)["pass"]
    assert sk.automorphism_group(g)["order"] == 8
    assert not sk.is_homology_sphere(sk.construct("lens16"))["pass"]


def test_face_operations():
    g = sk.construct("gamma16")
    lk = sk.link(g, [12])
    assert lk.vertex_count == 12
    assert len(lk.facets) == 20
    g3 = sk.rank_selected(g, [1, 2, 3])
    f, _ = g3.f_vector()
    assert f == [1, 12, 48, 40]


def test_isomorphism():
    a = sk.construct("sigma2")
    b = sk.join(sk.construct("octahedron"), sk.Complex.from_facets([[0], [1]]))
    assert sk.are_isomorphic(a, b) is None
    assert sk.are_isomorphic(a, a) is not None


def test_decomposition_and_census():
    torus = sk.construct("torus7")
    assert sk.find_shelling(torus)["status"] == "none"
    assert sk.find_ear_decomposition(torus)["status"] == "none"

    spec = json.dumps({"dim": 2, "color_sizes": [3, 3, 3]})
    census = sk.enumerate_balanced_spheres(spec)
    assert census["exhaustive"]
    assert len(census["entries"]) == 1


def test_errors():
    with pytest.raises(ValueError):
        sk.construct("nope")
    with pytest.raises(ValueError):
        sk.Complex.from_facets([])
