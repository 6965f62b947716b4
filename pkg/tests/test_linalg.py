from fractions import Fraction

from src.algebra.linalg import IncrementalSpan
from src.algebra.qarith import Cyclotomic, root_power


def F(*xs):
    return [Fraction(x) for x in xs]


def test_incremental_span():
    span = IncrementalSpan()
    assert span.add(F(1, 1, 0))
    assert span.add(F(0, 1, 1))
    assert not span.add(F(1, 2, 1))
    assert span.contains(F(2, 3, 1))
    assert not span.contains(F(0, 0, 1))
    assert len(span) == 2


def test_zero_rows_do_not_grow_the_span():
    span = IncrementalSpan()
    assert not span.add(F(0, 0))
    assert len(span) == 0


def test_input_untouched():
    span = IncrementalSpan()
    v = F(0, 1)
    span.add(F(1, 1))
    span.reduce(v)
    assert v == F(0, 1)


def test_span_over_cyclotomic_field():
    e = root_power(5, 1)
    one = Cyclotomic.one(5)
    span = IncrementalSpan()
    # second row is e times the first
    assert span.add([one, e])
    assert not span.add([e, e * e])
    assert span.add([one, one])
    assert len(span) == 2
