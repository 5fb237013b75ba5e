"""Poisson-ideal saturation, truncated quotients, and (co)limits.

Every quotient object in sight is realized as a ``TruncatedQuotient``: a
truncated free Poisson ambient together with the reduced-echelon basis of
the degree-bounded part of a Poisson ideal, and the induced normal-form
projector.  Saturation closes the span of the generators under
multiplication by Lyndon-word variables and bracketing by letters, keeping
a result only when it is exact within the degree budget; both operations
are degree-additive, so the closure runs degree by degree and lower degrees
are final before higher ones begin.

Coproducts are computed on presentations: the coproduct of P(V)/I and
P(W)/J is P(V (+) W) over the union of the lifted relation sets, with the
generator inclusions as the canonical injections.  Coequalizers quotient
by the saturated difference ideal.  Products and equalizers are the
componentwise and kernel constructions on the underlying graded spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import EchelonBasis, SparseVec, SubspaceBasis, unit_vec
from .lyndon import LyndonWord, standard_factorization
from .poisson import (
    UNIT_MONOMIAL,
    FreePoissonAlgebra,
    PoissElt,
    PoissMonomial,
    monomial_str,
    poiss_bracket,
    poiss_product,
    render,
)
from .verify import Report, Violation


def op_sign(m: PoissMonomial) -> int:
    """Sign of the bracket-flip automorphism on a monomial.

    Each Lyndon factor of degree d carries d-1 brackets, so negating the
    bracket rescales the factor by (-1)^(d-1).
    """
    exponent = m.degree - len(m.factors)
    return -1 if exponent % 2 else 1


def quotient_key(m: PoissMonomial):
    """Pivot order for ideal bases: highest degree first, then lexicographic.

    With this order every echelon row's pivot is its top monomial, so the
    degree-t slice of the stored span is exactly the rows of pivot degree
    <= t.  Closing those rows under the in-budget operations therefore
    closes the whole subspace, and quotient basis classes (the non-pivot
    monomials) keep the lowest-degree representatives.
    """
    return (-m.degree, tuple(f.sort_key for f in m.factors))


def ideal_saturate(ambient: FreePoissonAlgebra, generators, max_degree=None) -> SubspaceBasis:
    """Degree-bounded part of the Poisson ideal generated by the inputs.

    Least fixpoint of closing under ``w -> u*w`` for Lyndon-word variables u
    and ``w -> {x, w}`` for letters x, admitting a result only when no term
    was truncated away (exactness within the budget).
    """
    n = ambient.truncation if max_degree is None else min(max_degree, ambient.truncation)
    acc = EchelonBasis(key=quotient_key)
    for g in generators:
        if g.algebra != ambient:
            raise ValueError("generators must live in the ambient algebra")
        if g.lossy:
            raise ValueError("generators must be exact within the truncation")
        if g.top_degree() > n:
            raise ValueError("generator degree exceeds the budget")
        acc.insert(g.vec)

    variables = []
    for d in range(1, n):
        for w in ambient.lyndon_basis(d):
            variables.append(ambient.monomial_elt(PoissMonomial((w,))))
    letters = ambient.gens()

    done = set()
    while True:
        rank_before = acc.rank
        rows = [r for _, r in acc.rows_by_pivot()]
        for row in rows:
            elt = ambient.elt(row)
            top = elt.top_degree()
            for k, var in enumerate(variables):
                vdeg = var.top_degree()
                if vdeg + top > n:
                    continue
                key = (row, "m", k)
                if key in done:
                    continue
                done.add(key)
                acc.insert(poiss_product(var, elt).vec)
            for k, x in enumerate(letters):
                key = (row, "b", k)
                if key in done:
                    continue
                done.add(key)
                out = poiss_bracket(x, elt)
                if out.lossy or out.top_degree() > n:
                    continue
                acc.insert(out.vec)
        if acc.rank == rank_before:
            break
    return acc.freeze()


class TruncatedQuotient:
    """Truncated ambient plus saturated ideal, with cached normal forms."""

    def __init__(self, ambient: FreePoissonAlgebra, ideal: SubspaceBasis, generators=()):
        self.ambient = ambient
        self.ideal = ideal
        self.generators = tuple(generators)
        self.degenerate = ideal.contains(unit_vec(UNIT_MONOMIAL))
        self._nf_cache: dict = {}
        self._pivots = ideal.pivot_set()

    def __repr__(self) -> str:
        return (
            f"TruncatedQuotient({self.ambient!r}, ideal rank {self.ideal.rank}"
            f"{', degenerate' if self.degenerate else ''})"
        )

    def nf_vec(self, vec: SparseVec) -> SparseVec:
        out = SparseVec()
        for m, c in vec.items():
            r = self._nf_cache.get(m)
            if r is None:
                r = self.ideal.reduce(unit_vec(m))
                self._nf_cache[m] = r
            out = out.axpy(c, r)
        return out

    def normal_form(self, elt: PoissElt) -> PoissElt:
        if elt.algebra != self.ambient:
            raise ValueError("element not in the ambient algebra")
        return self.ambient.elt(self.nf_vec(elt.vec), elt.lossy)

    def contains(self, elt: PoissElt) -> bool:
        return not self.nf_vec(elt.vec)

    def product(self, a: PoissElt, b: PoissElt) -> PoissElt:
        return self.normal_form(poiss_product(a, b))

    def bracket(self, a: PoissElt, b: PoissElt) -> PoissElt:
        return self.normal_form(poiss_bracket(a, b))

    def one(self) -> PoissElt:
        return self.normal_form(self.ambient.one())

    def basis_monomials(self, max_degree=None):
        """Classes of non-pivot monomials form a basis of the quotient."""
        n = self.ambient.truncation if max_degree is None else max_degree
        return [m for m in self.ambient.monomials_upto(n) if m not in self._pivots]

    def graded_dims(self):
        """Count of basis classes whose representative has exact degree d."""
        n = self.ambient.truncation
        dims = [0] * (n + 1)
        for m in self.basis_monomials():
            dims[m.degree] += 1
        return dims

    def filtration_dims(self):
        dims = self.graded_dims()
        out = []
        total = 0
        for d in dims:
            total += d
            out.append(total)
        return out

    # -- checker protocol (Poisson-algebra laws on the quotient) --

    @property
    def truncation(self) -> int:
        return self.ambient.truncation

    def labels_upto(self, max_degree=None):
        return [m for m in self.basis_monomials(max_degree) if m.degree >= 1]

    def label_degree(self, m) -> int:
        return m.degree

    def product_labels(self, a, b) -> SparseVec:
        return self.product(self.ambient.monomial_elt(a), self.ambient.monomial_elt(b)).vec

    def bracket_labels(self, a, b) -> SparseVec:
        return self.bracket(self.ambient.monomial_elt(a), self.ambient.monomial_elt(b)).vec

    def reduce_vec(self, v: SparseVec) -> SparseVec:
        return self.nf_vec(v)

    def render_label(self, m) -> str:
        return monomial_str(m, self.ambient.alphabet)


def quotient(ambient: FreePoissonAlgebra, generators, max_degree=None) -> TruncatedQuotient:
    """Quotient by the saturated ideal; a degenerate result is flagged, not fatal."""
    ideal = ideal_saturate(ambient, generators, max_degree)
    return TruncatedQuotient(ambient, ideal, generators)


def free_quotient(ambient: FreePoissonAlgebra) -> TruncatedQuotient:
    return TruncatedQuotient(ambient, ideal_saturate(ambient, ()), ())


def rename_letters(vec: SparseVec, letter_map) -> SparseVec:
    """Push a vector through an order-preserving letter renaming."""

    def rename(m: PoissMonomial, c):
        factors = tuple(
            LyndonWord(tuple(letter_map[i] for i in f.letters)) for f in m.factors
        )
        yield PoissMonomial(factors), c

    return vec.map_terms(rename)


class MorphismTable:
    """Poisson map determined by generator images, applied by extension.

    Images are elements of the target ambient; application rewrites each
    Lyndon factor through its standard factorization using the target's
    bracket, multiplies the factor images, and reduces by the target ideal.
    ``source_bracket_sign`` accommodates sources carrying the negated
    bracket: their elements are pushed through the bracket-flip sign first.
    """

    def __init__(self, source, target, images: dict, source_bracket_sign: int = 1):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.source_bracket_sign = source_bracket_sign
        self._word_cache: dict = {}

    def source_quotient(self) -> TruncatedQuotient:
        return self.source.quotient if hasattr(self.source, "quotient") else self.source

    def target_quotient(self) -> TruncatedQuotient:
        return self.target.quotient if hasattr(self.target, "quotient") else self.target

    def _word_image(self, w: LyndonWord) -> PoissElt:
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        tq = self.target_quotient()
        if w.degree == 1:
            name = self.source_quotient().ambient.alphabet[w.letters[0]]
            try:
                out = self.images[name]
            except KeyError:
                raise ValueError(f"no image for generator {name!r}") from None
            out = tq.normal_form(out)
        else:
            u, v = standard_factorization(w)
            out = tq.bracket(self._word_image(u), self._word_image(v))
        self._word_cache[w] = out
        return out

    def apply(self, elt: PoissElt) -> PoissElt:
        sq, tq = self.source_quotient(), self.target_quotient()
        if elt.algebra != sq.ambient:
            raise ValueError("element not in the morphism source")
        out = tq.ambient.zero()
        for m, c in elt.vec.items():
            if self.source_bracket_sign == -1:
                c = c * op_sign(m)
            acc = tq.one()
            for f in m.factors:
                acc = tq.product(acc, self._word_image(f))
            out = out + acc.scaled(c)
        out.lossy = out.lossy or elt.lossy
        return tq.normal_form(out)

    def well_defined_report(self) -> Report:
        """Every defining relation of the source must map into the target ideal."""
        report = Report()
        sq, tq = self.source_quotient(), self.target_quotient()
        for name in sq.ambient.alphabet:
            if name not in self.images:
                report.violations.append(
                    Violation("morphism-total", (name,), "missing generator image")
                )
        if not report.ok:
            return report
        for r in sq.generators:
            image = self.apply(r)
            report.checked += 1
            if image.lossy:
                report.violations.append(
                    Violation("morphism-exact", (render(r),), "image truncated")
                )
            elif not image.is_zero():
                report.violations.append(
                    Violation("morphism-relations", (render(r),), render(image))
                )
        return report

    def is_well_defined(self) -> bool:
        return self.well_defined_report().ok


def identity_table(q: TruncatedQuotient) -> MorphismTable:
    return MorphismTable(q, q, {n: q.normal_form(q.ambient.gen(n)) for n in q.ambient.alphabet})


@dataclass
class CoproductResult:
    quotient: TruncatedQuotient
    injections: list
    letter_maps: list  # per operand: source letter index -> coproduct letter index


def tagged_alphabet(operands):
    names = []
    maps = []
    for l, op in enumerate(operands):
        amb = op.ambient
        lm = {}
        for i, n in enumerate(amb.alphabet):
            lm[i] = len(names)
            names.append(f"{n}_{l}")
        maps.append(lm)
    if len(set(names)) != len(names):
        raise ValueError("tagged generator names collide")
    return tuple(names), maps


def poisson_coproduct(operands, signs=None) -> CoproductResult:
    """Coproduct of presented quotients: union of lifted relation sets.

    ``signs`` marks operands presented with the negated bracket; their
    relations and injections are routed through the bracket-flip sign.
    """
    operands = list(operands)
    if not operands:
        raise ValueError("need at least one operand")
    n = operands[0].ambient.truncation
    if any(op.ambient.truncation != n for op in operands):
        raise ValueError("truncation mismatch")
    signs = list(signs) if signs is not None else [1] * len(operands)
    names, maps = tagged_alphabet(operands)
    ambient = FreePoissonAlgebra(names, n)
    relations = []
    for op, sign, lm in zip(operands, signs, maps):
        for g in op.generators:
            vec = g.vec
            if sign == -1:
                vec = vec.map_terms(lambda m, c: ((m, c * op_sign(m)),))
            relations.append(ambient.elt(rename_letters(vec, lm)))
    result = quotient(ambient, relations)
    injections = []
    for op, sign, lm in zip(operands, signs, maps):
        images = {
            name: result.normal_form(ambient.gen(names[lm[i]]))
            for i, name in enumerate(op.ambient.alphabet)
        }
        injections.append(MorphismTable(op, result, images, source_bracket_sign=sign))
    return CoproductResult(result, injections, maps)


def factorize_coproduct(coproduct: CoproductResult, legs) -> MorphismTable:
    """The unique map out of the coproduct agreeing with the given legs."""
    legs = list(legs)
    if len(legs) != len(coproduct.injections):
        raise ValueError("one leg per operand required")
    target = legs[0].target
    if any(leg.target is not target for leg in legs[1:]):
        raise ValueError("legs must share a target")
    images = {}
    for leg, inj, lm in zip(legs, coproduct.injections, coproduct.letter_maps):
        src_names = inj.source.ambient.alphabet
        for i, name in enumerate(src_names):
            tagged = coproduct.quotient.ambient.alphabet[lm[i]]
            images[tagged] = leg.images[name]
    return MorphismTable(coproduct.quotient, target, images)


def poisson_coequalizer(f: MorphismTable, g: MorphismTable):
    """Quotient of the common target by the saturated difference ideal."""
    if f.source_quotient() is not g.source_quotient() and f.source_quotient().ambient != g.source_quotient().ambient:
        raise ValueError("coequalizer needs a common source")
    if f.target_quotient() is not g.target_quotient() and f.target_quotient().ambient != g.target_quotient().ambient:
        raise ValueError("coequalizer needs a common target")
    for name, table in (("first", f), ("second", g)):
        rep = table.well_defined_report()
        if not rep.ok:
            raise ValueError(f"{name} morphism ill-defined: " + "; ".join(rep.lines()))
    target = f.target_quotient()
    diffs = []
    for name in f.source_quotient().ambient.alphabet:
        gen = f.source_quotient().ambient.gen(name)
        diffs.append(f.apply(gen) - g.apply(gen))
    gens = list(target.generators) + [d for d in diffs if not d.is_zero()]
    coeq = quotient(target.ambient, gens)
    projection = MorphismTable(
        target,
        coeq,
        {n: coeq.normal_form(target.ambient.gen(n)) for n in target.ambient.alphabet},
    )
    return coeq, projection


# ---------------------------------------------------------------------------
# limits: direct products and equalizers of the underlying graded spaces


@dataclass(frozen=True)
class ProductElt:
    left: PoissElt
    right: PoissElt

    def __add__(self, other):
        return ProductElt(self.left + other.left, self.right + other.right)

    def __sub__(self, other):
        return ProductElt(self.left - other.left, self.right - other.right)

    def __rmul__(self, c):
        return ProductElt(c * self.left, c * self.right)


class PoissonDirectProduct:
    """Componentwise product and bracket on the direct sum of the factors."""

    def __init__(self, left: TruncatedQuotient, right: TruncatedQuotient):
        if left.ambient.truncation != right.ambient.truncation:
            raise ValueError("truncation mismatch")
        self.left = left
        self.right = right

    def pair(self, a: PoissElt, b: PoissElt) -> ProductElt:
        return ProductElt(self.left.normal_form(a), self.right.normal_form(b))

    def one(self) -> ProductElt:
        return ProductElt(self.left.one(), self.right.one())

    def product(self, u: ProductElt, v: ProductElt) -> ProductElt:
        return ProductElt(self.left.product(u.left, v.left), self.right.product(u.right, v.right))

    def bracket(self, u: ProductElt, v: ProductElt) -> ProductElt:
        return ProductElt(self.left.bracket(u.left, v.left), self.right.bracket(u.right, v.right))

    def project_left(self, u: ProductElt) -> PoissElt:
        return u.left

    def project_right(self, u: ProductElt) -> PoissElt:
        return u.right

    def graded_dims(self):
        dl, dr = self.left.graded_dims(), self.right.graded_dims()
        return [a + b for a, b in zip(dl, dr)]


def poisson_product(left: TruncatedQuotient, right: TruncatedQuotient) -> PoissonDirectProduct:
    """Direct product with componentwise structure and the two projections."""
    return PoissonDirectProduct(left, right)


@dataclass
class EqualizerResult:
    rows: tuple  # PoissElt kernel basis in the source quotient
    closure: Report


def poisson_equalizer(f: MorphismTable, g: MorphismTable) -> EqualizerResult:
    """Kernel of f - g on the source, verified closed under both operations."""
    source = f.source_quotient()
    if source.ambient != g.source_quotient().ambient:
        raise ValueError("equalizer needs a common source")
    if f.target_quotient().ambient != g.target_quotient().ambient:
        raise ValueError("equalizer needs a common target")

    def key(label):
        zone, inner = label
        from .linalg import label_key

        return (zone, label_key(inner))

    acc = EchelonBasis(key=key)
    for m in source.basis_monomials():
        elt = source.ambient.monomial_elt(m)
        diff = f.apply(elt) - g.apply(elt)
        row = SparseVec(
            {(0, lbl): c for lbl, c in diff.vec.items()}
        ) + SparseVec({(1, m): Fraction(1)})
        acc.insert(row)
    kernel = []
    for pivot, row in acc.rows_by_pivot():
        if pivot[0] == 1:
            vec = SparseVec({lbl: c for (zone, lbl), c in row.items() if zone == 1})
            kernel.append(source.ambient.elt(vec))

    closure = Report()
    for i, a in enumerate(kernel):
        for b in kernel[i:]:
            for law, op in (("equalizer-product", source.product), ("equalizer-bracket", source.bracket)):
                out = op(a, b)
                if out.lossy:
                    continue
                residual = f.apply(out) - g.apply(out)
                closure.checked += 1
                if not residual.is_zero():
                    closure.violations.append(
                        Violation(law, (render(a), render(b)), render(residual))
                    )
    return EqualizerResult(rows=tuple(kernel), closure=closure)
