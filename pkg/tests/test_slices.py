import pytest

from skeinkit.diagram import Diagram, add_kink, connected_sum
from skeinkit.errors import MalformedPD, StrandMismatch
from skeinkit.skein import (SliceProgram, cable_program,
                            replace_projectors_with_identity, slice_with_origins,
                            to_slice_program)


def test_text_roundtrip(trefoil):
    p = to_slice_program(trefoil)
    assert SliceProgram.from_text(p.to_text()) == p


def test_text_errors():
    with pytest.raises(MalformedPD):
        SliceProgram.from_text("cup 0\nspin 1\n")
    with pytest.raises(MalformedPD):
        SliceProgram.from_text("jw 2\n")
    with pytest.raises(StrandMismatch):
        SliceProgram.from_text("cup 0\n")
    with pytest.raises(StrandMismatch):
        SliceProgram.from_text("cap 0\n")


def test_comments_and_blank_lines():
    p = SliceProgram.from_text("# unknot\ncup 0\n\ncap 0  # close\n")
    assert len(p) == 2


def test_program_shape(records):
    for r in records:
        d = r.diagram()
        p = to_slice_program(d)
        p.validate()
        assert p.n_crossings == d.c
        assert p.max_width <= 8


def test_origins_cover_crossings(figure8):
    p, origins = slice_with_origins(figure8)
    crossing_origins = [o for o, s in zip(origins, p.slices) if s[0] in ("x+", "x-")]
    assert sorted(crossing_origins) == list(range(figure8.c))


def test_cable_program(trefoil):
    p = to_slice_program(trefoil)
    c3 = cable_program(p, 3)
    assert c3.n_crossings == 9 * trefoil.c
    assert c3.max_width == 3 * p.max_width
    dec = cable_program(p, 3, decorate=True)
    assert sum(1 for s in dec if s[0] == "jw") == 1
    assert replace_projectors_with_identity(dec) == c3
    with pytest.raises(StrandMismatch):
        cable_program(dec, 2)


def test_unknots_and_sums(trefoil, figure8):
    assert to_slice_program(add_kink(Diagram.unknot(), 1)).n_crossings == 1
    s = connected_sum(trefoil, figure8)
    assert to_slice_program(s).n_crossings == 7
