"""Colimits and limits of truncated Poisson algebras.

Ideal saturation drives everything: quotients, coproducts of presented
algebras, coequalizers, plus the direct products and equalizers of the
underlying graded spaces.
"""

from poissonhopf import (
    FreePoissonAlgebra,
    MorphismTable,
    free_quotient,
    ideal_saturate,
    parse,
    poisson_coequalizer,
    poisson_coproduct,
    poisson_equalizer,
    poisson_product,
    quotient,
    render,
)

print("Saturating the Poisson ideal (a) inside P(a,b) at cutoff 2:")
P = FreePoissonAlgebra(("a", "b"), 2)
basis = ideal_saturate(P, [P.gen("a")])
for row in basis.rows:
    print("  row:", render(P.elt(row)))
print("  note {b,a} = -[a,b] pulls the bracket class in at the first pass")

print()
print("Quotients carry normal forms; identifying x = y leaves one line:")
Q = FreePoissonAlgebra(("x", "y"), 3)
identified = quotient(Q, [parse("x - y", Q)])
print("  graded dims of P(x,y)/(x - y):", identified.graded_dims())
print("  normal form of y*y - x*x:", render(identified.normal_form(parse("y*y - x*x", Q))))

print()
print("The coproduct of two polynomial lines is free on two letters,")
print("so its degree-2 part is 4-dimensional, not the 3 of k[x,y]:")
A = free_quotient(FreePoissonAlgebra(("x",), 2))
B = free_quotient(FreePoissonAlgebra(("y",), 2))
cp = poisson_coproduct([A, B])
print("  graded dims:", cp.quotient.graded_dims())

print()
print("Coequalizing x |-> x against x |-> y collapses back to one line:")
S = free_quotient(FreePoissonAlgebra(("x",), 3))
T = free_quotient(FreePoissonAlgebra(("x", "y"), 3))
f = MorphismTable(S, T, {"x": T.normal_form(T.ambient.gen("x"))})
g = MorphismTable(S, T, {"x": T.normal_form(T.ambient.gen("y"))})
coeq, proj = poisson_coequalizer(f, g)
print("  graded dims:", coeq.graded_dims())

print()
print("Limits are computed on the underlying graded spaces:")
prod = poisson_product(A, B)
print("  k[x] x k[y] graded dims:", prod.graded_dims())
C = free_quotient(FreePoissonAlgebra(("x",), 4))
idm = MorphismTable(C, C, {"x": C.normal_form(C.ambient.gen("x"))})
neg = MorphismTable(C, C, {"x": -C.normal_form(C.ambient.gen("x"))})
eq = poisson_equalizer(idm, neg)
print("  equalizer of x |-> x and x |-> -x:", [render(e) for e in eq.rows])
print("  closed under product and bracket:", eq.closure.lines()[0])
