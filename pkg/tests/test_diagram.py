import pytest

from skeinkit.diagram import (Diagram, KauffmanState, add_kink, adequacy,
                              all_a_state, all_b_state, apply_state, cable,
                              connected_sum, is_adequate, linking_number,
                              mirror, parse_pd, turaev_genus, whitehead_double)
from skeinkit.errors import (ArcNotFound, BadArcMultiplicity, MalformedPD,
                             NonplanarSuspect, StateLengthMismatch)

TREFOIL = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"


def test_parse_forms_agree():
    a = parse_pd(TREFOIL)
    b = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]")
    c = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]")
    assert a == b == c
    assert a.c == 3


@pytest.mark.parametrize("text, err", [
    ("", MalformedPD),
    ("hello", MalformedPD),
    ("X(1,2,3)", MalformedPD),
    ("X(1,a,2,3)", MalformedPD),
    ("X(1,5,2,4) X(3,1,4,6) X(5,3,6,7)", BadArcMultiplicity),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_pd(text)


def test_nonplanar_rejected():
    # a kink whose second crossing closes up through a virtual crossing
    with pytest.raises(NonplanarSuspect):
        parse_pd("X(1,1,2,3) X(2,4,3,4)")


def test_trefoil_invariants(trefoil):
    assert trefoil.writhe in (3, -3)
    assert trefoil.n_components == 1
    ad = adequacy(trefoil)
    assert ad["a_adequate"] and ad["b_adequate"]
    assert ad["v_A"] + ad["v_B"] == trefoil.c + 2
    assert turaev_genus(trefoil) == 0


def test_signs_follow_convention():
    # positive crossing: over-strand runs from slot 3 to slot 1
    d = parse_pd(TREFOIL)
    assert d.signs == (1, 1, 1) or d.signs == (-1, -1, -1)


def test_mirror_swaps(figure8, trefoil):
    m = mirror(trefoil)
    assert m.writhe == -trefoil.writhe
    assert (m.v_A, m.v_B) == (trefoil.v_B, trefoil.v_A)
    assert mirror(m) == trefoil


def test_states(trefoil):
    ga = apply_state(trefoil, all_a_state(trefoil))
    gb = apply_state(trefoil, all_b_state(trefoil))
    assert ga.n_circles == trefoil.v_A
    assert gb.n_circles == trefoil.v_B
    assert not ga.has_loop()
    assert KauffmanState("AAB").sgn == 1
    with pytest.raises(StateLengthMismatch):
        apply_state(trefoil, "AB")


def test_kinks(trefoil):
    neg = add_kink(trefoil, -1)
    pos = add_kink(trefoil, 1)
    assert neg.c == pos.c == 4
    assert neg.writhe == trefoil.writhe - 1
    assert pos.writhe == trefoil.writhe + 1
    assert not adequacy(neg)["a_adequate"]
    assert not adequacy(pos)["b_adequate"]
    with pytest.raises(ArcNotFound):
        add_kink(trefoil, 1, arc=99)


def test_kinked_unknot():
    u = add_kink(Diagram.unknot(), -1)
    assert u.c == 1 and u.writhe == -1
    assert not adequacy(u)["a_adequate"]


def test_connected_sum(trefoil, figure8):
    s = connected_sum(trefoil, figure8)
    assert s.c == 7
    assert s.n_components == 1
    assert s.writhe == trefoil.writhe + figure8.writhe
    assert is_adequate(s)
    assert s.v_A == trefoil.v_A + figure8.v_A - 1


def test_cable_counts(trefoil):
    c2 = cable(trefoil, 2)
    assert c2.c == 4 * trefoil.c
    assert c2.n_components == 2
    assert linking_number(c2) == trefoil.writhe
    assert c2.v_A == 2 * trefoil.v_A


def test_whitehead_double_counts(figure8):
    w = whitehead_double(figure8, -1)
    assert w.c == 18
    assert (w.c_plus, w.c_minus) == (8, 10)
    ad = adequacy(w)
    assert ad["b_adequate"] and not ad["a_adequate"]
    assert ad["v_B"] == 7
    wp = whitehead_double(figure8, 1)
    assert wp.c == 18 and wp.writhe == 2


def test_double_untwisted_for_nonzero_writhe(trefoil):
    w = whitehead_double(trefoil, -1)
    assert w.c == 4 * 3 + 2 + 2 * abs(trefoil.writhe)
    assert w.n_components == 1


def test_summary_keys(trefoil):
    assert set(trefoil.summary()) >= {"crossings", "writhe", "v_A", "v_B"}
