from fractions import Fraction

import pytest

from supercatalan.numbers import (
    binomial,
    catalan,
    ctree_count,
    hidden_class_count,
    recurrence_rhs,
    recurrence_terms,
    super_catalan,
)


def product_binomial(n, k):
    num = den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den


def convolution_catalans(count):
    c = [1]
    for n in range(1, count):
        c.append(sum(c[i] * c[n - 1 - i] for i in range(n)))
    return c


def test_binomial_small():
    assert binomial(4, 2) == 6
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(10, 4) == product_binomial(10, 4) == 210


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_catalan_against_convolution():
    oracle = convolution_catalans(31)
    assert [catalan(n) for n in range(31)] == oracle
    assert oracle[9] == 4862 and oracle[12] == 208012
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_super_catalan_listed_values():
    assert [super_catalan(2, n) for n in range(6)] == [3, 2, 3, 6, 14, 36]
    assert [super_catalan(0, n) for n in range(1, 5)] == [1, 3, 10, 35]
    assert super_catalan(0, 0) == Fraction(1, 2)
    for n in range(13):
        assert super_catalan(1, n) == catalan(n)


def test_super_catalan_integral_off_origin():
    for m in range(31):
        for n in range(31):
            if (m, n) != (0, 0):
                assert super_catalan(m, n).denominator == 1


def test_recurrence_terms_decomposition():
    assert recurrence_terms(2, 4) == {0: 12, 1: 2}
    assert recurrence_terms(1, 3) == {0: 4, 1: 1}
    assert recurrence_terms(0, 2) == {0: 2, 1: 1}
    assert recurrence_terms(0, 2)[0] == 4 * Fraction(1, 2)


def test_recurrence_identity():
    for m in range(6):
        for n in range(m, 31):
            assert recurrence_rhs(m, n) == super_catalan(m, n)


def test_recurrence_domain():
    with pytest.raises(ValueError):
        recurrence_rhs(3, 2)


def test_hidden_class_count():
    assert hidden_class_count(4, 0) == 12
    assert hidden_class_count(4, 1) == 2
    assert hidden_class_count(12, 2) == 210 * 64 * 3 == 40320
    assert hidden_class_count(3, 1) == 0
    with pytest.raises(ValueError):
        hidden_class_count(1, 0)
    for n in range(2, 31):
        assert sum(hidden_class_count(n, k) for k in range(n)) == super_catalan(2, n)


def test_ctree_counts():
    assert ctree_count(2, rooted=True) == 12
    assert ctree_count(2, rooted=False) == 3
    assert ctree_count(0, rooted=False) == 3
    assert ctree_count(1, rooted=False) == 2
    for n in range(31):
        assert ctree_count(n, rooted=False) * (n + 2) == ctree_count(n, rooted=True)
        assert ctree_count(n, rooted=False).denominator == 1
    for n in range(13):
        assert ctree_count(n, rooted=False) == super_catalan(2, n)


def test_exact_beyond_64_bits():
    value = super_catalan(2, 45)
    assert value > 2 ** 64
    assert recurrence_rhs(2, 45) == value
    assert value == convolution_catalans(46)[45] * 6 // 47
