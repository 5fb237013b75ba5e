"""The truncated free Poisson algebra S(L(V)).

Products merge monomials, brackets extend the free Lie bracket as a
biderivation, and the graded dimension collapses to n^d.  The printed form
of every element parses back to the same element.
"""

from fractions import Fraction

from poissonhopf import FreePoissonAlgebra, graded_dimension, parse, poiss_bracket, render

P = FreePoissonAlgebra(("a", "b"), 5)
a, b = P.gen("a"), P.gen("b")

print("Generators multiply commutatively and bracket into Lyndon classes:")
print("  a*b          =", render(a * b))
print("  {a, b}       =", render(poiss_bracket(a, b)))
print("  {a, a*b}     =", render(poiss_bracket(a, a * b)))
print("  {{a,b}, b}   =", render(poiss_bracket(poiss_bracket(a, b), b)))

print()
print("The Leibniz rule holds exactly:")
p, q, r = poiss_bracket(a, b), a, b * b
lhs = poiss_bracket(p, q * r)
rhs = poiss_bracket(p, q) * r + q * poiss_bracket(p, r)
print("  {p, q*r} == {p,q}*r + q*{p,r}:", lhs == rhs)

print()
print("Graded dimensions of the free Poisson algebra equal n^d:")
for n in (1, 2, 3):
    dims = [graded_dimension(n, d) for d in range(1, 7)]
    print(f"  n={n}: {dims}")

print()
print("Printing round-trips through the expression grammar:")
e = Fraction(2, 3) * a * poiss_bracket(a, b) - b + P.one()
text = render(e)
print("  canonical form:", text)
print("  parse(render(e)) == e:", parse(text, P) == e)

print()
print("Truncation is tracked, never silent:")
Q = FreePoissonAlgebra(("a", "b"), 2)
cube = Q.gen("a") * Q.gen("a") * Q.gen("b")
print("  (a*a)*b at cutoff 2 ->", render(cube), " lossy:", cube.lossy)
