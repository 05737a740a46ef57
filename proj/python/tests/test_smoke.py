import json

import pytest

import mvbraid


def test_catalog():
    assert "MkVB" in mvbraid.catalog_keys()
    p = mvbraid.build("MkVB", 3, 2)
    assert len(p.generators) == 6
    assert len(p.relators) == 9
    with pytest.raises(mvbraid.CatalogError):
        mvbraid.build("nope")


def test_words():
    assert mvbraid.free_reduce("s1 s1^-1 r1") == "r1"
    assert mvbraid.invert("s1 r1") == "r1^-1 s1^-1"
    assert mvbraid.canonical_relator("s2 s1 s2^-1 s1^-1 s2^-1 s1") == mvbraid.canonical_relator(
        "s1 s2 s1 s2^-1 s1^-1 s2^-1"
    )
    with pytest.raises(mvbraid.ParseError):
        mvbraid.free_reduce("l1")


def test_index_and_todd_coxeter():
    assert mvbraid.index("MkVB", 4, 2, "phi") == 24
    s3 = mvbraid.build("S", 3)
    assert mvbraid.todd_coxeter_index(s3) == 6
    with pytest.raises(mvbraid.ResourceLimit):
        mvbraid.todd_coxeter_index(s3, max_cosets=3)


def test_derive_and_compare():
    named = mvbraid.derive("MkVB", 3, 2, "phi")
    assert (len(named.generators), len(named.relators)) == (9, 7)
    equal, diff = mvbraid.compare(named, mvbraid.build("MkVP-corrected", 3, 2))
    assert equal and diff == "equal\n"
    equal, diff = mvbraid.compare(named, mvbraid.build("MkVP-claimed", 3, 2))
    assert not equal and diff.startswith("- ")
    raw = mvbraid.derive("MkVB", 2, 1, "phi", dictionary="", transversal="bfs", stage="raw")
    assert all(g.startswith("S[") for g in raw.generators)


def test_invariants():
    assert str(mvbraid.abelianization(mvbraid.build("Y"))) == "Z/2"
    a = mvbraid.abelianization(mvbraid.build("MkVB", 3, 3))
    assert a.rank == 1 and a.torsion == ["2", "2", "2"]
    assert len(mvbraid.components(mvbraid.build("MVQ3"))) == 3


def test_presentation_roundtrip():
    p = mvbraid.Presentation("C2", ["a"], ["a a"])
    q = mvbraid.Presentation.from_json(p.to_json())
    assert p == q
    assert json.loads(p.to_json()) == {"name": "C2", "generators": ["a"], "relators": ["a a"]}
    assert mvbraid.simplify(mvbraid.Presentation("P", ["a", "b"], ["a b"])).generators == ["a"]
    with pytest.raises(ValueError):
        mvbraid.Presentation("bad", ["a"], ["a b"])


def test_verification():
    assert mvbraid.verify_action("psi", 3, 2)["ok"]
    assert mvbraid.verify_hom("chi3", "MkVB", 3, 2)["ok"]
    results = {r["name"]: r["ok"] for r in mvbraid.verify_all(3, 2)}
    assert results["kernel MkVB(3,2) psi as VH3 * FVP3"]
    assert not results["kernel MkVB(3,2) phi vs MkVP-claimed(3,2)"]
