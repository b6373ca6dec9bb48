import thoma2


def test_chain_poset_sizes():
    assert len(thoma2.chain_poset("1")["elements"]) == 3
    assert len(thoma2.chain_poset("2")["elements"]) == 7


def test_horn_and_collar():
    assert len(thoma2.horn_poset(2, 1)["elements"]) == 5
    sizes = thoma2.collar_sizes(2, 1)
    assert sizes == {"a": 9, "w": 22, "b": 25}


def test_nerve_and_homology():
    bd2 = thoma2.standard_complex("boundary", 2)
    h = thoma2.homology(bd2, 1)
    assert h[0]["betti"] == 1
    assert h[1]["betti"] == 1

    f2 = thoma2.chain_poset(thoma2.chain_poset("2"))
    nerve = thoma2.nerve(f2, 3)
    dims = [len(level) for level in nerve["simplices"]]
    assert dims[:3] == [25, 60, 36]


def test_sd_matches_chain_functor():
    d1 = thoma2.standard_complex("standard", 1)
    sd1 = thoma2.sd(d1)
    assert [len(level) for level in sd1["simplices"]] == [3, 2]


def test_n2_counts():
    counts = thoma2.n2_counts("1", 2)
    # the 2-nerve of the chain model of [1] is Delta[1]
    assert counts[1]["total"] == 3


def test_verify_collar():
    rep = thoma2.verify("collar", n=2, k=1)
    assert rep["status"] == "PASS"


def test_verify_eta_counterexample():
    rep = thoma2.verify("eta-iso", n=2, cap=2)
    assert rep["status"] == "FAIL"  # documented defect: height > 2


def test_quotient_counts():
    # B = chain model of [1], ideal {0}
    q = thoma2.quotient_counts("1", ["0"])
    assert q["objects"] == 2
