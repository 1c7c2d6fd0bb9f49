import pytest

from skeinkit.errors import StrandMismatch
from skeinkit.laurent import DELTA, delta
from skeinkit.skein.tl import (TLElement, all_matchings, compose,
                               count_through_strands, e_matching,
                               fused_element, identity_matching, jones_wenzl,
                               jones_wenzl_two_sided, tl_multiply)

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def test_matching_counts():
    for n in range(7):
        assert len(all_matchings(n, n)) == CATALAN[n]
    assert all_matchings(1, 2) == []


def test_temperley_lieb_relations():
    n = 4
    for i in range(1, n):
        e = TLElement.generator(n, i)
        assert tl_multiply(e, e) == e * DELTA
        if i + 1 < n:
            f = TLElement.generator(n, i + 1)
            assert tl_multiply(tl_multiply(e, f), e) == e
            assert tl_multiply(tl_multiply(f, e), f) == f


def test_compose_loops():
    e = e_matching(3, 1)
    m, loops = compose(e, e, 3, 3)
    assert m == e and loops == 1
    m, loops = compose(identity_matching(3), e, 3, 3)
    assert m == e and loops == 0


def test_through_strands():
    assert count_through_strands(identity_matching(4)) == 4
    assert count_through_strands(e_matching(4, 2)) == 2


def test_shape_mismatch():
    with pytest.raises(StrandMismatch):
        tl_multiply(TLElement.identity(2), TLElement.identity(3))


@pytest.mark.parametrize("n", range(1, 6))
def test_projector_properties(n):
    f = jones_wenzl(n)
    assert f.closure() == delta(n)
    assert tl_multiply(f, f) == f
    for i in range(1, n):
        e = TLElement.generator(n, i)
        assert tl_multiply(e, f).is_zero()
        assert tl_multiply(f, e).is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_two_sided_recursion_agrees(n):
    assert jones_wenzl_two_sided(n) == jones_wenzl(n)


def test_projector_identity_coefficient():
    for n in range(1, 6):
        f = jones_wenzl(n)
        c = f.coefficient(identity_matching(n))
        assert c == 1


def test_fused_element_closure():
    # the trace closure of the fused element is the theta net
    from skeinkit.laurent import theta
    for n in range(1, 4):
        for a in range(0, 2 * n + 1, 2):
            assert fused_element(a, n).closure() == theta(n, n, a)
