import qbundle


def test_catalog():
    doc = qbundle.builtins()
    assert doc["schema"] == qbundle.SCHEMA == 1
    facts = doc["reports"][0]["facts"]
    assert "z6z6" in facts["matched-pairs"].split()
    assert "circle-3" in facts["covers"].split()
    assert "suq2-QP-1-1" in facts["ideal-families"].split()


def test_hopf_axioms():
    assert qbundle.hopf_check("CG:s3")["ok"]
    assert qbundle.hopf_dump("C:z3")["dimension"] == 3


def test_cohomology():
    assert qbundle.h1("circle-3") == 1
    assert qbundle.h1("disk-3") == 0
    assert qbundle.h1({"sets": 4, "pairs": [[0, 1], [1, 2], [2, 3], [0, 3]]}) == 1
    doc = qbundle.moduli("circle-3", 3)
    assert doc["reports"][0]["facts"]["gauge classes"] == "3"


def test_bicross():
    assert qbundle.gamma_dim("z2z3") == 2
    doc = qbundle.bicross_example(2, "1/2")
    assert doc["reports"][1]["facts"]["calculus-dimension"] == "2"


def test_bundle_suite_deterministic():
    a = qbundle.bundle_suite(seed=5, count=3)
    assert a["ok"]
    assert a == qbundle.bundle_suite(seed=5, count=3)


def test_qmonopole_dims():
    doc = qbundle.qmonopole_dims("suq2-QP-1-1", degree=6)
    assert doc["ok"]
