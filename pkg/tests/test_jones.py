import pytest

from skeinkit.diagram import Diagram, add_kink, cable, connected_sum, mirror
from skeinkit.errors import InputError
from skeinkit.jones import (chebyshev_coefficients, colored_jones,
                            colored_jones_chebyshev, compute, framing_factor,
                            reduced, unknot_value)
from skeinkit.laurent import ONE, delta


def test_chebyshev_coefficients():
    assert chebyshev_coefficients(0) == (1,)
    assert chebyshev_coefficients(1) == (0, 1)
    assert chebyshev_coefficients(3) == (0, -2, 0, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_unknot(n):
    u = Diagram.unknot()
    assert compute(u, n).poly == unknot_value(n) == delta(n - 1)
    assert compute(add_kink(u, -1), n, "direct").poly == delta(n - 1)


def test_color_one_is_trivial(trefoil):
    assert compute(trefoil, 1).poly == ONE


def test_strategies_agree(records):
    for r in records:
        d = r.diagram()
        if d.c <= 7:
            for n in (2, 3):
                assert colored_jones(d, n).poly == colored_jones_chebyshev(d, n).poly


@pytest.mark.parametrize("sign", [1, -1])
def test_framing_invariance(trefoil, figure8, sign):
    for d in (trefoil, figure8):
        for n in (2, 3):
            assert compute(add_kink(d, sign), n).poly == compute(d, n).poly


def test_mirror_symmetry(trefoil):
    for n in (2, 3, 4):
        j = compute(trefoil, n)
        m = compute(mirror(trefoil), n)
        assert m.t_max_deg == -j.t_min_deg
        assert m.t_min_deg == -j.t_max_deg


def test_amphicheiral_symmetric(figure8):
    j = compute(figure8, 3)
    assert j.t_max_deg == -j.t_min_deg


def test_reduced_is_exact(trefoil, figure8):
    s = connected_sum(trefoil, figure8)
    for n in (2, 3):
        assert reduced(compute(s, n)) == reduced(compute(trefoil, n)) * reduced(compute(figure8, n))


def test_framing_factor_sign():
    assert dict(framing_factor(1, 2).items()) == {-3: -1}
    assert dict(framing_factor(2, 2).items()) == {-6: 1}


def test_rejects_links_and_bad_colors(trefoil):
    with pytest.raises(InputError):
        compute(cable(trefoil, 2), 2)
    with pytest.raises(InputError):
        compute(trefoil, 0)
    with pytest.raises(InputError):
        compute(trefoil, 2, strategy="magic")


def test_report_fields(figure8):
    j = compute(figure8, 2)
    out = j.to_json()
    assert out["strategy"] == "chebyshev"
    # unreduced: J_K(2) = -(t^(1/2) + t^(-1/2)) V_K(t)
    assert out["d_plus"] == "5/2" and out["d_minus"] == "-5/2"
    assert out["span"] == 20
    assert j.t_text().startswith("-t^(-5/2)")
