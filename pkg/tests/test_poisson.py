"""Free Poisson algebra: product, bracket, grading, dimension law, printing."""

import itertools
from fractions import Fraction

import pytest

from poissonhopf.linalg import unit_vec
from poissonhopf.lyndon import LyndonWord, lyndon_words
from poissonhopf.poisson import (
    FreePoissonAlgebra,
    PoissMonomial,
    graded_dimension,
    poiss_bracket,
    poiss_product,
    render,
)


@pytest.fixture
def P2():
    return FreePoissonAlgebra(("a", "b"), 5)


def w(*letters):
    return LyndonWord(tuple(letters))


def test_generator_product_is_sorted_monomial(P2):
    a, b = P2.gen("a"), P2.gen("b")
    ab = a * b
    assert ab.vec == unit_vec(PoissMonomial((w(0), w(1))))
    assert a * b == b * a


def test_unit_law_preserves_lossy(P2):
    a = P2.gen("a")
    assert P2.one() * a == a
    lossy = poiss_product(P2.gen("a"), P2.gen("b"))
    lossy.lossy = True
    out = P2.one() * lossy
    assert out == lossy and out.lossy


def test_product_associative_and_truncating():
    P = FreePoissonAlgebra(("a", "b"), 2)
    a, b = P.gen("a"), P.gen("b")
    cube = (a * a) * b
    assert cube.is_zero() and cube.lossy
    assert (a * b) * P.one() == a * b


def test_defining_brackets(P2):
    a, b = P2.gen("a"), P2.gen("b")
    assert poiss_bracket(a, b).vec == unit_vec(PoissMonomial((w(0, 1),)))
    # {a, a*b} = a*[a,b]
    assert poiss_bracket(a, a * b).vec == unit_vec(PoissMonomial((w(0), w(0, 1))))
    # {[a,b], a} = -[a,[a,b]]
    assert poiss_bracket(P2.elt(unit_vec(PoissMonomial((w(0, 1),)))), a).vec == unit_vec(
        PoissMonomial((w(0, 0, 1),)), -1
    )


def test_bracket_bilinear_antisymmetric(P2):
    a, b = P2.gen("a"), P2.gen("b")
    x = 2 * a + (a * b)
    y = b - 3 * (a * a)
    assert poiss_bracket(x, y) == -poiss_bracket(y, x)
    lhs = poiss_bracket(x + y, a)
    assert lhs == poiss_bracket(x, a) + poiss_bracket(y, a)


def sample_monomials(algebra, max_degree):
    out = []
    for d in range(1, max_degree + 1):
        out.extend(algebra.monomial_elt(m) for m in algebra.monomials(d))
    return out


def test_jacobi_identity_exhaustive_truncation_five():
    P = FreePoissonAlgebra(("a", "b"), 5)
    elts = sample_monomials(P, 3)
    for x, y, z in itertools.combinations_with_replacement(elts, 3):
        if x.top_degree() + y.top_degree() + z.top_degree() > 5:
            continue
        j = (
            poiss_bracket(x, poiss_bracket(y, z))
            + poiss_bracket(y, poiss_bracket(z, x))
            + poiss_bracket(z, poiss_bracket(x, y))
        )
        assert j.is_zero(), (x, y, z)


def test_leibniz_identity_exhaustive_truncation_five():
    P = FreePoissonAlgebra(("a", "b"), 5)
    elts = sample_monomials(P, 2)
    for p, q, r in itertools.product(elts, repeat=3):
        if p.top_degree() + q.top_degree() + r.top_degree() > 5:
            continue
        lhs = poiss_bracket(p, q * r)
        rhs = poiss_bracket(p, q) * r + q * poiss_bracket(p, r)
        assert lhs == rhs, (p, q, r)


def test_degree_additivity_and_losslessness():
    P = FreePoissonAlgebra(("a", "b"), 5)
    for d1 in range(1, 3):
        for d2 in range(1, 3):
            for m1 in P.monomials(d1):
                for m2 in P.monomials(d2):
                    u, v = P.monomial_elt(m1), P.monomial_elt(m2)
                    prod = u * v
                    br = poiss_bracket(u, v)
                    assert not prod.lossy and not br.lossy
                    for m in prod.vec:
                        assert m.degree == d1 + d2
                    for m in br.vec:
                        assert m.degree == d1 + d2


def test_single_generator_dimension_is_one():
    for d in range(1, 7):
        assert graded_dimension(1, d) == 1


def test_two_generators_degree_three_enumeration():
    # aaa, aab, abb, bbb, a[ab], b[ab], [a[ab]], [[ab]b]
    P = FreePoissonAlgebra(("a", "b"), 3)
    assert len(P.monomials(3)) == 8
    assert graded_dimension(2, 3) == 8


from oracles import generating_function_dims


def poisson_series(n, max_degree):
    counts = {d: len(ws) for d, ws in lyndon_words(n, max_degree).items()}
    return generating_function_dims(counts, max_degree)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dimension_law_matches_generating_function_and_closed_form(n):
    series = poisson_series(n, 6)
    for d in range(1, 7):
        dim = graded_dimension(n, d)
        assert dim == series[d]
        assert dim == n**d


def test_render_examples():
    P = FreePoissonAlgebra(("a", "b"), 4)
    a, b = P.gen("a"), P.gen("b")
    assert render(a) == "a"
    assert render(poiss_bracket(a, b)) == "[a,b]"
    assert render(a * poiss_bracket(a, b)) == "a*[a,b]"
    e = Fraction(2, 3) * a + b - P.one()
    assert render(e) == "-1 + 2/3*a + b"
    assert render(P.zero()) == "0"
    deep = poiss_bracket(a, poiss_bracket(a, b))
    assert render(deep) == "[a,[a,b]]"


def test_alphabet_mismatch_errors():
    P = FreePoissonAlgebra(("a", "b"), 3)
    Q = FreePoissonAlgebra(("x", "y"), 3)
    with pytest.raises(ValueError, match="alphabet mismatch"):
        P.gen("a") * Q.gen("x")
    R = FreePoissonAlgebra(("a", "b"), 4)
    with pytest.raises(ValueError, match="truncation mismatch"):
        poiss_bracket(P.gen("a"), R.gen("b"))
