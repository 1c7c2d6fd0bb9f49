import pytest

from skeinkit.bounds import fusion_degree
from skeinkit.errors import InputError, NotATwistRegion
from skeinkit.jones import decorated_cable_bracket
from skeinkit.laurent import LaurentFraction
from skeinkit.skein import bracket_sweep_fraction
from skeinkit.skein.fusion import (complement_through_strands,
                                   fusion_coefficient, fusion_expand, twist_run)

CASES = [("3_1", [0]), ("3_1", [0, 1]), ("3_1", [0, 1, 2]),
         ("4_1", [0]), ("4_1", [2, 3]), ("4_1", [0, 1])]


def _diagram(name):
    from skeinkit.fixtures import fixture
    return fixture(name)


def expansion_value(terms):
    total = LaurentFraction(0)
    for t in terms:
        total = total + t.coeff * bracket_sweep_fraction(t.program)
    return total


@pytest.mark.parametrize("name, region", CASES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_fusion_sum_equals_cable(name, region, n):
    d = _diagram(name)
    terms = fusion_expand(d, region, n)
    assert [t.a for t in terms] == list(range(0, 2 * n + 1, 2))
    assert expansion_value(terms) == decorated_cable_bracket(d, n)


def test_coefficient_degree_formula():
    for n in range(1, 5):
        for a in range(0, 2 * n + 1, 2):
            for r in (-3, -2, -1, 1, 2, 3, 4):
                assert fusion_coefficient(a, r, n).max_deg == fusion_degree(a, r, n)


def test_region_errors(trefoil, figure8):
    with pytest.raises(NotATwistRegion):
        twist_run(trefoil, [])
    with pytest.raises(NotATwistRegion):
        twist_run(trefoil, [7])
    with pytest.raises(NotATwistRegion):
        twist_run(figure8, [0, 2])
    with pytest.raises(InputError):
        fusion_expand(trefoil, [0], 2, direction="across")


def test_complement_counts_are_bounded(trefoil):
    terms = fusion_expand(trefoil, [0, 1], 2)
    t = terms[0]
    outside = t.program.n_crossings - sum(
        1 for s in t.program.slices[t.block[0]:t.block[1]] if s[0] in ("x+", "x-"))
    k_a = complement_through_strands(t.program, t.block, "A" * outside)
    k_b = complement_through_strands(t.program, t.block, "B" * outside)
    assert 0 <= k_a <= 4 and 0 <= k_b <= 4
