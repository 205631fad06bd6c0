"""Axioms and worked comparisons for the local and module orderings."""

from hypothesis import given, strategies as st

from germlab import LocalOrder, ModuleOrder, compare

from germs import R2, R3

ORDER2 = LocalOrder(R2)
ORDER3 = LocalOrder(R3)

monos3 = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


def test_compare_examples():
    assert compare(ORDER2, (0, 0), (1, 0)) == 1  # 1 beats x
    assert compare(ORDER2, (1, 0), (0, 2)) == 1  # degree 1 beats degree 2
    assert compare(ORDER2, (2, 1), (1, 2)) == 1  # x^2*y beats x*y^2
    assert compare(ORDER2, (1, 1), (1, 1)) == 0


@given(monos3, monos3)
def test_totality_and_antisymmetry(a, b):
    result = compare(ORDER3, a, b)
    assert result in (-1, 0, 1)
    assert (result == 0) == (a == b)
    assert compare(ORDER3, b, a) == -result


@given(monos3, monos3, monos3)
def test_transitivity(a, b, c):
    if compare(ORDER3, a, b) >= 0 and compare(ORDER3, b, c) >= 0:
        assert compare(ORDER3, a, c) >= 0


@given(monos3, monos3, monos3)
def test_multiplicativity(a, b, c):
    shifted = lambda m: tuple(x + y for x, y in zip(m, c))
    assert compare(ORDER3, a, b) == compare(ORDER3, shifted(a), shifted(b))


@given(monos3)
def test_one_is_maximal(mono):
    one = (0, 0, 0)
    if sum(mono) > 0:
        assert compare(ORDER3, one, mono) == 1


def test_module_order_top_breaks_ties_by_component():
    top = ModuleOrder.term_over_position(ORDER2)
    assert top.compare((0, (1, 0)), (1, (1, 0))) == 1  # smaller component wins
    assert top.compare((3, (0, 0)), (0, (1, 0))) == 1  # monomial part first


def test_block_order_dominates_trailing_block():
    block = ModuleOrder.block_eliminating(ORDER2, 2)
    # any term in components 0..1 beats any term in the rest
    assert block.compare((1, (5, 5)), (2, (0, 0))) == 1
    assert block.compare((4, (0, 0)), (0, (3, 0))) == -1
    # within a block: term over position
    assert block.compare((2, (1, 0)), (3, (0, 2))) == 1


@given(monos3, monos3)
def test_block_order_scalar_compatible(a, b):
    block = ModuleOrder.block_eliminating(ORDER3, 1)
    for comp in (0, 2):
        before = block.compare((comp, a), (comp, b))
        after = block.compare((comp, tuple(x + 1 for x in a)), (comp, tuple(x + 1 for x in b)))
        assert before == after
