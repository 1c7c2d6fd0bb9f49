import json
from fractions import Fraction
from pathlib import Path

import pytest

from skeinkit.diagram import Diagram, add_kink, mirror
from skeinkit.errors import TooManyCrossings, WidthExceeded
from skeinkit.jones import compute, reduced
from skeinkit.laurent import DELTA, LaurentPoly, delta
from skeinkit.skein import (SliceProgram, bracket_state_sum, bracket_sweep,
                            bracket_sweep_fraction, cable_program,
                            to_slice_program, width_budget)

REFERENCE = json.loads((Path(__file__).parent / "data" / "jones_reference.json").read_text())


def test_unknot_values():
    assert bracket_state_sum(Diagram.unknot()) == DELTA
    assert bracket_state_sum(Diagram.unknot(loops=2)) == DELTA * DELTA
    assert bracket_sweep(SliceProgram([("cup", 0), ("cap", 0)])) == DELTA
    assert bracket_sweep(SliceProgram([])) == LaurentPoly.const(1)


def test_kink_factor():
    u = Diagram.unknot()
    assert bracket_state_sum(add_kink(u, 1)) == LaurentPoly({3: -1}) * DELTA
    assert bracket_state_sum(add_kink(u, -1)) == LaurentPoly({-3: -1}) * DELTA


def test_mirror_inverts_variable(figure8, trefoil):
    for d in (trefoil, figure8):
        b = bracket_state_sum(d)
        inv = LaurentPoly({-e: c for e, c in b.items()})
        assert bracket_state_sum(mirror(d)) == inv


def test_sweep_matches_state_sum(records):
    for r in records:
        d = r.diagram()
        if d.c <= 8:
            assert bracket_sweep(to_slice_program(d)) == bracket_state_sum(d), r.name


def test_decorated_unknot_cables():
    for n in range(1, 7):
        prog = cable_program(SliceProgram([("cup", 0), ("cap", 0)]), n, decorate=True)
        assert bracket_sweep(prog) == delta(n)


def test_fraction_result_for_open_projector_net():
    # theta(2, 2, 2) is not a Laurent polynomial
    p = SliceProgram([("cup", 0), ("cup", 1), ("cup", 3), ("jw", 2, 0), ("jw", 2, 2),
                      ("jw", 2, 4), ("cap", 3), ("cap", 1), ("cap", 0)])
    f = bracket_sweep_fraction(p)
    assert not f.is_polynomial()


def test_state_sum_cap():
    big = Diagram([(1, 1, 2, 2)])
    for _ in range(5):
        big = add_kink(big, 1)
    with pytest.raises(TooManyCrossings):
        bracket_state_sum(big, cap=4)


def test_width_budget(trefoil, monkeypatch):
    p = cable_program(to_slice_program(trefoil), 4)
    with pytest.raises(WidthExceeded):
        bracket_sweep(p, budget=2)
    monkeypatch.setenv("SKEINKIT_WIDTH_BUDGET", "3")
    assert width_budget() == 3


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_jones_matches_table(name):
    from skeinkit.fixtures import fixture
    v = reduced(compute(fixture(name), 2))
    got = {Fraction(e, -4): c for e, c in v.items()}
    expected = {Fraction(e): c for e, c in REFERENCE[name].items()}
    assert got == expected
