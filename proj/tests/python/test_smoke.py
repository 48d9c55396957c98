import freebraids as fb


def test_word_reduce():
    w = fb.Word("a{1,2} a{1,2}", n=2, k=2)
    assert str(w.reduce()) == "e"


def test_equal_bounded_tetrahedron():
    a = fb.Word("a{1,2} a{1,3} a{2,3}", n=3, k=2)
    b = fb.Word("a{2,3} a{1,3} a{1,2}", n=3, k=2)
    res = fb.equal_bounded(a, b)
    assert res["verdict"] == "Equal"
    assert res["path"][0] == str(a)


def test_gaussian_axioms():
    B = fb.gaussian(3)
    assert B.apply([0, 1, 0]) == [1, 0, 1]
    assert B.check_axioms()["all_pass"]


def test_enumeration_two_element_carrier():
    entries = fb.enumerate_biquandles(2, 3, nontrivial=True)
    assert len(entries) == 1
    assert entries[0]["biquandle"].is_isomorphic(fb.gaussian(3))


def test_coloring_counts():
    w = fb.Word("a{1,2}", n=4, k=2)
    B = fb.gaussian(2)
    assert fb.count_colorings(w, B) == 16
    assert fb.hom_count(w, B) == 16
    assert fb.binding_number(w, B, [0, 1, 0, 1], [1, 0, 0, 1]) == 1


def test_braid_word_projections():
    beta = fb.BraidWord("c1 a2 v3 C2 b1 C2", n=4)
    assert str(beta.phi().reduce()) == "a{1,2}"
    assert beta.rho() == "(1 2)(3 4)"
    assert not beta.is_pure()
    assert beta.invariant(fb.gaussian(2), [0, 1, 0, 1], [0, 0, 1, 1]) == 0


def test_relation_sweep():
    rep = fb.verify_relations(4, "AV")
    assert rep["pass"]
    assert rep["phi_failures"] == 0
