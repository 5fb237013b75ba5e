"""Free Poisson Hopf algebras via the staged-coproduct antipode construction.

Starting from a Poisson bialgebra B, take the coproduct of M alternating
copies B, B-op-cop, B, ...; the generator-wise stage shift extends to a map
S' that is an algebra morphism, a bracket anti-morphism, and a coalgebra
anti-morphism.  Quotienting by the Poisson ideal generated by both
convolution relations

    (S' * Id - unit.counit)(x at stage n),   (Id * S' - unit.counit)(x at stage n)

for every base generator x and every stage n with headroom produces a
truncated Poisson Hopf algebra whose antipode is induced by S'.  Composing
with the free Poisson bialgebra on a coalgebra gives the free Poisson Hopf
algebra on that coalgebra.

The stage budget M replaces the countable tower: overflow past the last
stage is a hard error, and the induced antipode is a partial map defined on
classes whose representatives keep one stage of headroom.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import (
    PresentedPoissonBialgebra,
    bialgebra_coproduct,
    coideal_certificate,
    induce_bialgebra,
    op_cop,
)
from .coalgebra import CoalgebraSpec
from .colimits import TruncatedQuotient, op_sign, quotient
from .lyndon import LyndonWord
from .poisson import PoissElt, PoissMonomial, poiss_bracket, poiss_product, render
from .verify import Report, Violation, check_antipode_antimorphism


class StageOverflowError(ValueError):
    """An operation needed a stage beyond the configured budget."""


@dataclass(frozen=True)
class StagedGenerator:
    stage: int
    base: str


class StagedBialgebra:
    """Coproduct of M alternating twists of one bialgebra, plus the shift."""

    def __init__(self, bialgebra: PresentedPoissonBialgebra, base, stages: int, stage_of: dict):
        self.bialgebra = bialgebra
        self.base = base
        self.stages = stages
        self.stage_of = stage_of  # letter name -> StagedGenerator
        alphabet = bialgebra.ambient.alphabet
        index = {name: i for i, name in enumerate(alphabet)}
        self._shift_letter = {}
        for name, sg in stage_of.items():
            if sg.stage + 1 < stages:
                self._shift_letter[index[name]] = index[f"{sg.base}_{sg.stage + 1}"]

    @property
    def ambient(self):
        return self.bialgebra.ambient

    def generator_name(self, base: str, stage: int) -> str:
        return f"{base}_{stage}"

    def gen(self, base: str, stage: int) -> PoissElt:
        return self.ambient.gen(self.generator_name(base, stage))

    def max_stage_of(self, m: PoissMonomial) -> int:
        stages = [
            self.stage_of[self.ambient.alphabet[i]].stage
            for f in m.factors
            for i in f.letters
        ]
        return max(stages, default=0)

    def s_prime(self, elt: PoissElt) -> PoissElt:
        """Stage shift extended multiplicatively and bracket-antimorphically.

        Each Lyndon factor of degree d picks up (-1)^(d-1) from reversing
        its brackets; the letters move up one stage.
        """

        def shift(m: PoissMonomial, c):
            factors = []
            for f in m.factors:
                letters = []
                for i in f.letters:
                    j = self._shift_letter.get(i)
                    if j is None:
                        raise StageOverflowError(
                            f"stage overflow: {self.ambient.alphabet[i]} has no successor"
                        )
                    letters.append(j)
                factors.append(LyndonWord(tuple(letters)))
            yield PoissMonomial(tuple(factors)), c * op_sign(m)

        return self.ambient.elt(elt.vec.map_terms(shift), elt.lossy)

    def convolution_relation(self, base: str, stage: int, side: str) -> PoissElt:
        """(S' * Id - u.eps)(x at stage) for side 'left', (Id * S' - u.eps) for 'right'."""
        name = self.generator_name(base, stage)
        out = self.ambient.zero()
        for (a, b), c in self.bialgebra.delta_table[name].items():
            ea = self.ambient.monomial_elt(a)
            eb = self.ambient.monomial_elt(b)
            if side == "left":
                term = poiss_product(self.s_prime(ea), eb)
            else:
                term = poiss_product(ea, self.s_prime(eb))
            out = out + term.scaled(c)
        eps = self.base.epsilon_table[base]
        return out - self.ambient.scalar(eps)


def s_prime(staged: StagedBialgebra, elt: PoissElt) -> PoissElt:
    """Stage-shift map on the staged coproduct; see StagedBialgebra.s_prime."""
    return staged.s_prime(elt)


def staged_coproduct(B: PresentedPoissonBialgebra, stages: int, check: bool = True) -> StagedBialgebra:
    """Coproduct of `stages` copies of B, odd copies op-cop twisted."""
    if stages < 2:
        raise StageOverflowError("need at least 2 stages to define the shift")
    operands = [B if n % 2 == 0 else op_cop(B) for n in range(stages)]
    cp = bialgebra_coproduct(operands, check=check)
    stage_of = {}
    for n in range(stages):
        for base in B.ambient.alphabet:
            stage_of[f"{base}_{n}"] = StagedGenerator(n, base)
    return StagedBialgebra(cp.bialgebra, B, stages, stage_of)


def hopf_ideal_generators(staged: StagedBialgebra) -> list:
    """Both convolution relations for every base generator and shiftable stage."""
    out = []
    for n in range(staged.stages - 1):
        for base in staged.base.ambient.alphabet:
            out.append(staged.convolution_relation(base, n, "left"))
            out.append(staged.convolution_relation(base, n, "right"))
    return out


class TruncatedHopf:
    """Hopf quotient of the staged coproduct, with certified structure maps."""

    def __init__(self, staged: StagedBialgebra, bialgebra: PresentedPoissonBialgebra,
                 relations, certificates: dict, base_spec=None):
        self.staged = staged
        self.bialgebra = bialgebra
        self.relations = list(relations)
        self.certificates = certificates
        self.base_spec = base_spec

    @property
    def quotient(self) -> TruncatedQuotient:
        return self.bialgebra.quotient

    @property
    def ambient(self):
        return self.bialgebra.ambient

    @property
    def stages(self) -> int:
        return self.staged.stages

    @property
    def truncation(self) -> int:
        return self.bialgebra.truncation

    def __repr__(self) -> str:
        return (
            f"TruncatedHopf(base={self.staged.base.ambient.alphabet},"
            f" M={self.stages}, N={self.truncation})"
        )

    def certificates_ok(self) -> bool:
        return all(r.ok for r in self.certificates.values())

    def antipode(self, elt: PoissElt) -> PoissElt:
        """pi(S'(representative)); stage overflow where the shift runs out."""
        rep = self.quotient.normal_form(elt)
        return self.quotient.normal_form(self.staged.s_prime(rep))

    def antipode_table(self) -> dict:
        """Images of the shiftable staged generators in the quotient."""
        out = {}
        for name, sg in self.staged.stage_of.items():
            if sg.stage + 1 < self.stages:
                out[name] = self.quotient.normal_form(
                    self.staged.s_prime(self.ambient.gen(name))
                )
        return out

    # -- checker protocol: delegate to the quotient bialgebra, add S --

    def labels_upto(self, max_degree=None):
        return self.bialgebra.labels_upto(max_degree)

    def label_degree(self, m):
        return self.bialgebra.label_degree(m)

    def delta_label(self, m):
        return self.bialgebra.delta_label(m)

    def epsilon_label(self, m):
        return self.bialgebra.epsilon_label(m)

    def product_labels(self, a, b):
        return self.bialgebra.product_labels(a, b)

    def bracket_labels(self, a, b):
        return self.bialgebra.bracket_labels(a, b)

    def reduce_vec(self, v):
        return self.bialgebra.reduce_vec(v)

    def reduce_pair(self, t):
        return self.bialgebra.reduce_pair(t)

    def reduce_triple(self, t):
        return self.bialgebra.reduce_triple(t)

    def render_label(self, m):
        return self.bialgebra.render_label(m)

    def antipode_label(self, m):
        if self.staged.max_stage_of(m) + 1 >= self.stages:
            return None
        return self.antipode(self.ambient.monomial_elt(m)).vec


def fixpoint_certificate(q: TruncatedQuotient) -> Report:
    """The ideal is closed under letter products and letter brackets in budget."""
    report = Report()
    n = q.ambient.truncation
    letters = q.ambient.gens()
    for row in q.ideal.rows:
        elt = q.ambient.elt(row)
        for x in letters:
            prod = poiss_product(x, elt)
            if not prod.lossy and prod.top_degree() <= n:
                report.checked += 1
                if not q.ideal.contains(prod.vec):
                    report.violations.append(
                        Violation("ideal-product-closure", (render(x), render(elt)), render(prod))
                    )
            br = poiss_bracket(x, elt)
            if not br.lossy and br.top_degree() <= n:
                report.checked += 1
                if not q.ideal.contains(br.vec):
                    report.violations.append(
                        Violation("ideal-bracket-closure", (render(x), render(elt)), render(br))
                    )
    return report


def s_prime_stability_certificate(H: TruncatedHopf) -> Report:
    """S'(row) stays in the ideal for rows whose stages keep headroom."""
    report = Report()
    staged = H.staged
    for row in H.quotient.ideal.rows:
        elt = H.ambient.elt(row)
        if max(staged.max_stage_of(m) for m in row) + 1 >= H.stages:
            continue
        image = staged.s_prime(elt)
        report.checked += 1
        if not H.quotient.ideal.contains(image.vec):
            report.violations.append(
                Violation("sprime-stability", (render(elt),), render(image))
            )
    return report


def free_poisson_hopf(spec: CoalgebraSpec, stages: int, truncation: int,
                      check: bool = True) -> TruncatedHopf:
    """Free Poisson Hopf algebra on a coalgebra: induce, stage, quotient, certify."""
    B = induce_bialgebra(spec, truncation)
    return free_poisson_hopf_on_bialgebra(B, stages, check=check, base_spec=spec)


def free_poisson_hopf_on_bialgebra(B: PresentedPoissonBialgebra, stages: int,
                                   check: bool = True, base_spec=None) -> TruncatedHopf:
    """Free Poisson Hopf algebra on a Poisson bialgebra."""
    staged = staged_coproduct(B, stages, check=check)
    relations = hopf_ideal_generators(staged)
    q = quotient(staged.ambient, relations)
    hopf_bialgebra = PresentedPoissonBialgebra(
        q,
        staged.bialgebra.delta_table,
        staged.bialgebra.epsilon_table,
        staged.bialgebra.bracket_sign,
        None,
    )
    H = TruncatedHopf(staged, hopf_bialgebra, relations, {}, base_spec)
    certificates = {
        "poisson-ideal-fixpoint": fixpoint_certificate(q),
        "coideal": coideal_certificate(hopf_bialgebra),
        "sprime-stability": s_prime_stability_certificate(H),
    }
    H.certificates = certificates
    bad = {k: r for k, r in certificates.items() if not r.ok}
    if bad:
        lines = [line for r in bad.values() for line in r.lines()]
        raise RuntimeError("Hopf quotient certificates failed: " + "; ".join(lines))
    return H


def verify_antipode(H: TruncatedHopf, depth: int = 1) -> Report:
    """Convolution residuals in the quotient plus the anti-morphism laws.

    Checks n < M - depth so every shift stays inside the stage budget.
    """
    if depth < 1 or depth > H.stages - 1:
        raise StageOverflowError(f"depth {depth} exceeds the stage budget {H.stages}")
    report = Report()
    staged = H.staged
    q = H.quotient
    for n in range(H.stages - depth):
        for base in staged.base.ambient.alphabet:
            for side in ("left", "right"):
                residual = q.normal_form(staged.convolution_relation(base, n, side))
                report.checked += 1
                if not residual.is_zero():
                    report.violations.append(
                        Violation(
                            f"antipode-convolution-{side}",
                            (staged.generator_name(base, n),),
                            render(residual),
                        )
                    )
    report.merge(check_antipode_antimorphism(H))
    # the bracket anti-morphism rule straight on generator pairs
    shiftable = [
        name
        for name, sg in staged.stage_of.items()
        if sg.stage + depth < H.stages
    ]
    for a in shiftable:
        for b in shiftable:
            ea, eb = H.ambient.gen(a), H.ambient.gen(b)
            lhs = H.antipode(q.bracket(ea, eb))
            rhs = q.bracket(staged.s_prime(eb), staged.s_prime(ea))
            residual = lhs - q.normal_form(rhs)
            report.checked += 1
            if not residual.is_zero():
                report.violations.append(
                    Violation("antipode-bracket-shift", (a, b), render(residual))
                )
    return report


@dataclass
class HopfCoproduct:
    bialgebra: PresentedPoissonBialgebra
    injections: list
    antipode_images: dict  # coproduct letter name -> PoissElt class
    report: Report


def hopf_coproduct_antipode(operands, check: bool = True) -> HopfCoproduct:
    """Coproduct of Hopf quotients with the stage-wise transported antipode."""
    operands = list(operands)
    for H in operands:
        if not isinstance(H, TruncatedHopf):
            raise ValueError("missing antipode on an operand")
    cp = bialgebra_coproduct([H.bialgebra for H in operands], check=check)
    antipode_images = {}
    for i, (H, inj) in enumerate(zip(operands, cp.injections)):
        for name, image in H.antipode_table().items():
            antipode_images[f"{name}_{i}"] = inj.apply(image)
    report = Report()
    q = cp.bialgebra.quotient
    for name, s_image in sorted(antipode_images.items()):
        delta = cp.bialgebra.delta_table[name]
        residual = -cp.bialgebra.epsilon_table[name] * q.one()
        for (a, b), c in delta.items():
            sa = _apply_antipode_images(cp.bialgebra, antipode_images, a)
            if sa is None:
                residual = None
                break
            residual = residual + c * q.product(sa, q.ambient.monomial_elt(b))
        report.checked += 1
        if residual is not None and not q.normal_form(residual).is_zero():
            report.violations.append(
                Violation("coproduct-antipode", (name,), render(residual))
            )
    return HopfCoproduct(cp.bialgebra, cp.injections, antipode_images, report)


def _apply_antipode_images(B: PresentedPoissonBialgebra, images: dict, m: PoissMonomial):
    """S on a monomial through the letter table; None where undefined."""
    acc = B.quotient.one()
    for f in reversed(m.factors):
        if f.degree == 1:
            name = B.ambient.alphabet[f.letters[0]]
            img = images.get(name)
            if img is None:
                return None
        else:
            return None
        acc = B.quotient.product(acc, img)
    return acc
