from fractions import Fraction
from itertools import product

import pytest

from skeinkit.bounds import (DegreeQuadratic, adequate_degree_formulas,
                             bmt_double_predictor, connected_sum_degree,
                             crossing_number_criterion, double_counts,
                             double_crossing_bounds, envelope_for, fusion_degree,
                             gap_report, h_and_H, jones_diameter,
                             minimal_partition, span_envelope)
from skeinkit.diagram import Diagram, add_kink
from skeinkit.errors import (FitInconsistent, HypothesesViolated,
                             InadmissibleTriple, InconsistentInput, NotAdequate,
                             ZeroTwist)
from skeinkit.jones import compute


def test_quadratic_fit_exact():
    q = DegreeQuadratic(Fraction(1, 2), -3, 7)
    assert DegreeQuadratic.fit([(n, q(n)) for n in (2, 3, 4)]) == q
    assert (q + q).as_tuple() == q.scale(2).as_tuple()
    assert (q - q)(5) == 0
    assert q.to_json() == ["1/2", "-3", "7"]


def test_printed_envelope_is_refuted(trefoil):
    # the envelope 2cn^2 + (2 - 2g - 2c)n + 2g - 2 undershoots an adequate diagram
    printed = DegreeQuadratic(2 * trefoil.c, 2 - 2 * trefoil.c, -2)
    span = compute(trefoil, 2).span
    assert span == 16
    assert printed(2) == 14 < span
    assert span_envelope(trefoil.c, 0)(2) == span


def test_envelope_matches_formulas():
    for cp, cm, va, vb in product(range(4), range(4), range(1, 5), range(1, 5)):
        c = cp + cm
        g2 = c + 2 - va - vb
        if g2 < 0 or g2 % 2:
            continue
        f = adequate_degree_formulas(cp, cm, va, vb)
        assert (f["bottom"] - f["top"]).as_tuple() == span_envelope(c, g2 // 2).as_tuple()


def test_unknot_top_degree():
    # J_U(n) has -4 d_- = 2n - 2, i.e. top(n) = -2n + 2
    f = adequate_degree_formulas(0, 0, 1, 1)
    assert f["top"].as_tuple() == (0, -2, 2)
    assert f["bottom"].as_tuple() == (0, 2, -2)


def test_h_and_H(trefoil):
    out = h_and_H(trefoil, 2)
    assert out["H"] == 3 * 4 + 2 * trefoil.v_A * 2
    assert out["h"] == Fraction(-out["H"], 4) + Fraction(trefoil.writhe * 3, 4)


def test_fusion_degree_errors():
    with pytest.raises(InadmissibleTriple):
        fusion_degree(3, 1, 2)
    with pytest.raises(ZeroTwist):
        fusion_degree(2, 0, 2)


def test_predictor_values():
    fig8 = DegreeQuadratic(1, Fraction(-1, 2), Fraction(-1, 2))
    assert bmt_double_predictor(fig8, -1).as_tuple() == (4, Fraction(-11, 2), Fraction(3, 2))
    assert bmt_double_predictor(fig8, 1).as_tuple() == (Fraction(9, 2), -5, Fraction(1, 2))


def test_predictor_hypotheses():
    with pytest.raises(HypothesesViolated):
        bmt_double_predictor(DegreeQuadratic(1, 1, 0), -1)
    with pytest.raises(HypothesesViolated):
        bmt_double_predictor(DegreeQuadratic(0, 0, 0), -1)
    with pytest.raises(HypothesesViolated):
        bmt_double_predictor(DegreeQuadratic(Fraction(1, 10), -1, 0), 1)
    assert bmt_double_predictor(DegreeQuadratic(1, 1, 0), -1, check=False)


def test_double_counts_rule():
    assert double_counts(2, 2, 3, 3) == {"c_plus": 8, "c_minus": 10, "v_B": 7}
    assert double_crossing_bounds(4, 0) == {"lower": 17, "upper": 18, "exact": 18}
    assert double_crossing_bounds(3, 3)["exact"] is None


def test_diameter_closed_form_and_fit(trefoil, figure8):
    for d in (trefoil, figure8):
        closed = jones_diameter(d)
        fitted = jones_diameter(d, "fit")
        assert closed.diameter == fitted.diameter == 2 * d.c
        assert (closed.js, closed.js_star) == (fitted.js, fitted.js_star)
    assert jones_diameter(trefoil).provenance == "closed_form"


def test_diameter_errors(trefoil):
    with pytest.raises(NotAdequate):
        jones_diameter(add_kink(trefoil, -1))
    with pytest.raises(FitInconsistent):
        jones_diameter(trefoil, "fit", n_values=(1, 2, 3))
    with pytest.raises(ValueError):
        jones_diameter(trefoil, "guess")


def test_fit_on_kinked_diagram(trefoil):
    # the invariant does not see the kink
    assert jones_diameter(add_kink(trefoil, -1), "fit").diameter == 6


def test_criterion():
    assert crossing_number_criterion(3, 6, True) == {"determined": True, "c_K": 3}
    assert crossing_number_criterion(18, 34, False) == {"determined": True, "c_K": 18}
    out = crossing_number_criterion(18, 30, False)
    assert out["determined"] is False and out["c_K"] == ["15", 18]
    with pytest.raises(InconsistentInput):
        crossing_number_criterion(3, 8, True)
    with pytest.raises(InconsistentInput):
        crossing_number_criterion(3, 4, True)
    with pytest.raises(InconsistentInput):
        crossing_number_criterion(18, 36, False)


def test_connected_sum_degree():
    q1 = DegreeQuadratic(1, 2, 3)
    q2 = DegreeQuadratic(4, 5, 6)
    assert connected_sum_degree(q1, q2, "y").as_tuple() == (5, 5, 11)
    assert connected_sum_degree(q1, q2, "span").as_tuple() == (5, 6, 10)
    with pytest.raises(ValueError):
        connected_sum_degree(q1, q2, "z")


def test_minimal_partition_small():
    assert minimal_partition(5, 3) == [2, 2, 1]
    assert minimal_partition(0, 2) == [0, 0]
    with pytest.raises(ValueError):
        minimal_partition(3, 0)


def test_gap_of_kinked_unknot():
    rows = gap_report(add_kink(Diagram.unknot(), -1), 3)
    assert [r["gap"] for r in rows] == [2 * n * n + 2 * n for n in (1, 2, 3)]


def test_gap_vanishes_when_adequate(figure8):
    assert all(r["gap"] == 0 for r in gap_report(figure8, 3))


def test_envelope_for(figure8):
    assert envelope_for(figure8).as_tuple() == (8, -4, -4)
