"""Independent oracles shared by the unit and acceptance suites.

Each function here recomputes an expected value by a route disjoint from
the implementation under test: fraction-free integer elimination for ranks,
exhaustive rotation search for Lyndon words, the Mobius/Witt counting
formula, generating-function series for graded dimensions, and a naive
batch-closure loop for ideal saturation.
"""

from poissonhopf.colimits import quotient_key
from poissonhopf.linalg import row_reduce
from poissonhopf.poisson import PoissMonomial, poiss_bracket, poiss_product


def bareiss_rank(matrix):
    """Fraction-free Gaussian elimination over the integers."""
    m = [list(map(int, row)) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, rows):
            for c in range(col + 1, cols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
    return rank


def mobius(n):
    result, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def witt_number(n, d):
    """Dimension of the degree-d part of the free Lie algebra on n letters."""
    total = sum(mobius(d // e) * n**e for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def brute_force_lyndon(alphabet_size, degree):
    """All rotation-minimal words of one degree, by exhaustive search."""
    import itertools

    found = []
    for word in itertools.product(range(alphabet_size), repeat=degree):
        if all(word[i:] + word[:i] > word for i in range(1, degree)):
            found.append(word)
    return found


def generating_function_dims(lyndon_counts, max_degree):
    """Series coefficients of prod_d (1 - t^d)^(-l_d) up to max_degree."""
    series = [1] + [0] * max_degree
    for d, ell in lyndon_counts.items():
        for _ in range(ell):
            for i in range(d, max_degree + 1):
                series[i] += series[i - d]
    return series


def brute_force_saturation(ambient, generators, n):
    """Naive ideal closure: batch-reduce, apply every in-budget operation, repeat."""
    variables = [
        ambient.monomial_elt(PoissMonomial((w,)))
        for d in range(1, n)
        for w in ambient.lyndon_basis(d)
    ]
    letters = ambient.gens()
    current = [g.vec for g in generators]
    while True:
        basis = row_reduce(current, key=quotient_key)
        fresh = list(basis.rows)
        for row in basis.rows:
            elt = ambient.elt(row)
            top = elt.top_degree()
            for var in variables:
                if var.top_degree() + top <= n:
                    fresh.append(poiss_product(var, elt).vec)
            for x in letters:
                out = poiss_bracket(x, elt)
                if not out.lossy and out.top_degree() <= n:
                    fresh.append(out.vec)
        after = row_reduce(fresh, key=quotient_key)
        if after.rank == basis.rank:
            return after
        current = list(after.rows)
