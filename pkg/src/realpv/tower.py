"""Differential field towers presented by generators, derivatives, relations.

A tower starts from either Q (no base variable) or Q(t) with t' = 1 and
grows by adjoining generators, each carrying a declared derivative (a
rational function of the tower so far, possibly involving the generator
itself or others adjoined in the same batch) and optionally a polynomial
relation.  The relations are completed into a confluent rewrite system, so
every element has a canonical (numerator, denominator) normal form and
equality, derivation and conjugation are all decidable exactly.

Variable ranks: generators adjoined later sit above earlier ones, the base
variable sits below all generators, and parameter variables (used for group
matrix entries, derivative zero) sit at the very bottom.

The constants mode is a semantic marker: "real" towers present real fields
(all declared data must have zero imaginary part), "complexified" towers are
the same presentation read over Q(i), where conjugation acts on coefficients
and, when a conjugation table is declared, on generators too.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ContextError,
    DivisionByZero,
    IncompatibleDerivation,
    ModeError,
)
from .gauss import GaussRat
from .linsolve import kernel
from .poly import Context, Monomial, Poly, parse_fraction
from .rewrite import RewriteSystem, buchberger, DEFAULT_BUDGET

__all__ = ["Kind", "GeneratorSpec", "DiffTower", "FieldElement"]


class Kind(Enum):
    EXPONENTIAL = "exponential"
    ALGEBRAIC = "algebraic"
    ABSTRACT = "abstract"


@dataclass(frozen=True)
class GeneratorSpec:
    """One adjoined generator.  Polynomials live in the full tower context."""

    name: str
    kind: Kind
    deriv_num: Poly
    deriv_den: Poly
    relation: Poly | None = None


class FieldElement:
    """Element of a tower's fraction field in canonical form.

    Canonical means: numerator and denominator are normal forms and the
    denominator's leading coefficient is 1.  Equality is decided by
    cross-multiplication, since pairs are not reduced to lowest terms.
    """

    __slots__ = ("num", "den", "tower")

    def __init__(self, num: Poly, den: Poly, tower: "DiffTower"):
        nf = tower.rewrite.normal_form
        num = nf(num)
        den = nf(den)
        if den.is_zero():
            raise DivisionByZero("denominator is zero in the tower")
        if num.is_zero():
            den = Poly.const(tower.context, 1)
        else:
            lc = den.leading_coefficient()
            if not (lc.re == 1 and lc.im == 0):
                inv = lc.inverse()
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self.tower = tower

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_scalar(self) -> GaussRat | None:
        """The element's value if it is a scalar (num = v * den), else None."""
        if self.num.is_zero():
            return GaussRat.of(0)
        v = self.num.leading_coefficient() / self.den.leading_coefficient()
        if self.num == self.den.scale(v):
            return v
        return None

    def is_rational_constant(self) -> bool:
        return self.as_scalar() is not None

    def rational_value(self) -> GaussRat:
        v = self.as_scalar()
        if v is None:
            raise ValueError("element is not a scalar")
        return v

    # -- arithmetic ----------------------------------------------------------

    def _join(self, other: "FieldElement") -> "DiffTower":
        return self.tower.merge_with(other.tower)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        tw = self._join(other)
        return FieldElement(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            tw,
        )

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.num, self.den, self.tower)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        tw = self._join(other)
        return FieldElement(self.num * other.num, self.den * other.den, tw)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.den, self.num, self.tower)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "FieldElement":
        return FieldElement(self.num.scale(c), self.den, self.tower)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        tw = self._join(other)
        cross = self.num * other.den - other.num * self.den
        return tw.rewrite.normal_form(cross).is_zero()

    __hash__ = None  # equality is by cross-multiplication; no canonical hash

    # -- calculus ------------------------------------------------------------

    def derive(self) -> "FieldElement":
        return self.tower.derive(self)

    def conj(self) -> "FieldElement":
        return self.tower.conj(self)

    def is_constant(self) -> bool:
        return self.derive().is_zero()

    # -- text ----------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == GaussRat.of(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"FieldElement({self})"


class DiffTower:
    """Tower of differential field extensions in a fixed presentation."""

    def __init__(
        self,
        base_var: str | None = "t",
        specs: Sequence[GeneratorSpec] = (),
        mode: str = "real",
        params: Sequence[str] = (),
        conj_images: Mapping[str, tuple[Poly, Poly]] | None = None,
        budget: int = DEFAULT_BUDGET,
    ):
        if mode not in ("real", "complexified"):
            raise ModeError(f"unknown constants mode {mode!r}")
        names = list(params) + ([base_var] if base_var else []) + [s.name for s in specs]
        if len(set(names)) != len(names):
            raise ValueError(f"variable name clash in tower: {names}")
        self.base_var = base_var
        self.params = tuple(params)
        self.specs = tuple(specs)
        self.mode = mode
        self.budget = budget
        self.context = Context(names)
        relations = [s.relation for s in specs if s.relation is not None]
        self.rewrite = buchberger(relations, self.context, budget)
        self.conj_images = dict(conj_images) if conj_images else {}
        self._derivation = self._build_derivation()
        self._validate()

    # -- construction internals ----------------------------------------------

    def _build_derivation(self) -> dict[str, FieldElement]:
        table: dict[str, FieldElement] = {}
        if self.base_var:
            table[self.base_var] = FieldElement(
                Poly.const(self.context, 1), Poly.const(self.context, 1), self
            )
        for s in self.specs:
            table[s.name] = FieldElement(
                s.deriv_num.in_context(self.context),
                s.deriv_den.in_context(self.context),
                self,
            )
        return table

    def _validate(self) -> None:
        if self.mode == "real":
            for s in self.specs:
                data = [s.deriv_num, s.deriv_den] + (
                    [s.relation] if s.relation is not None else []
                )
                for p in data:
                    if any(c.im != 0 for c in p.terms.values()):
                        raise ModeError(
                            f"generator {s.name!r} uses complex coefficients in a real tower"
                        )
            if self.conj_images:
                raise ModeError("conjugation table only makes sense when complexified")
        for s in self.specs:
            if s.relation is not None:
                d = self.derive_poly(s.relation.in_context(self.context))
                if not d.is_zero():
                    raise IncompatibleDerivation(
                        f"relation for {s.name!r} is not differential: d({s.relation}) = {d}"
                    )
        for name, (cn, cd) in self.conj_images.items():
            if name not in self.generator_names():
                raise ValueError(f"conjugation image for unknown generator {name!r}")
            img = FieldElement(cn.in_context(self.context), cd.in_context(self.context), self)
            back = self.conj(img)
            if back != self.generator(name):
                raise ModeError(f"conjugation table is not an involution at {name!r}")
            if self.conj(self.generator(name).derive()) != img.derive():
                raise ModeError(f"conjugation does not commute with derivation at {name!r}")

    # -- identity ------------------------------------------------------------

    def signature(self):
        return (
            self.base_var,
            self.params,
            self.specs,
            self.mode,
            tuple(sorted((k, v[0], v[1]) for k, v in self.conj_images.items())),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffTower) and self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def merge_with(self, other: "DiffTower") -> "DiffTower":
        if self is other or self == other:
            return self
        if self.context != other.context or self.rewrite != other.rewrite:
            raise ContextError("elements belong to structurally different towers")
        # Same presentation, different mode: the complexified one absorbs.
        return self if self.mode == "complexified" else other

    def __repr__(self) -> str:
        gens = ",".join(s.name for s in self.specs)
        base = self.base_var or "Q"
        return f"DiffTower({base}; {gens}; {self.mode})"

    def describe(self) -> list[str]:
        """Stable human-readable summary lines for reports."""
        out = [f"base: {self.base_var or 'constants'} ({self.mode})"]
        for s in self.specs:
            d = FieldElement(s.deriv_num, s.deriv_den, self)
            line = f"generator {s.name} [{s.kind.value}]: {s.name}' = {d}"
            if s.relation is not None:
                line += f", relation {s.relation} = 0"
            out.append(line)
        return out

    # -- element constructors --------------------------------------------------

    def one(self) -> FieldElement:
        c = Poly.const(self.context, 1)
        return FieldElement(c, c, self)

    def zero(self) -> FieldElement:
        return FieldElement(Poly.zero(self.context), Poly.const(self.context, 1), self)

    def const(self, c) -> FieldElement:
        return FieldElement(
            Poly.const(self.context, c), Poly.const(self.context, 1), self
        )

    def var(self, name: str) -> FieldElement:
        return FieldElement(
            Poly.variable(self.context, name), Poly.const(self.context, 1), self
        )

    def generator(self, name: str) -> FieldElement:
        if name not in self.generator_names():
            raise ValueError(f"no generator {name!r}")
        return self.var(name)

    def elem(self, num: Poly, den: Poly | None = None) -> FieldElement:
        return FieldElement(
            num.in_context(self.context),
            Poly.const(self.context, 1) if den is None else den.in_context(self.context),
            self,
        )

    def parse(self, text: str) -> FieldElement:
        num, den = parse_fraction(text, self.context)
        return FieldElement(num, den, self)

    def generator_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.specs)

    def spec_of(self, name: str) -> GeneratorSpec:
        for s in self.specs:
            if s.name == name:
                return s
        raise ValueError(f"no generator {name!r}")

    # -- derivation ------------------------------------------------------------

    def derive_poly(self, p: Poly) -> FieldElement:
        """Derivative of a polynomial, via linearity and the Leibniz rule."""
        p = p.in_context(self.context)
        out = self.zero()
        for v in sorted(p.variables(), key=self.context.rank):
            dv = self._derivation.get(v)
            if dv is None or dv.is_zero():
                continue  # parameters differentiate to zero
            partial: dict[Monomial, GaussRat] = {}
            unit = Monomial.var(v)
            for m, c in p.terms.items():
                e = m.degree_in(v)
                if e:
                    partial[m / unit] = c * GaussRat.of(e)
            out = out + self.elem(Poly(self.context, partial)) * dv
        return out

    def lift(self, x: FieldElement) -> FieldElement:
        """Re-read an element of a smaller tower in this one."""
        return self.elem(x.num, x.den)

    def derive(self, x: FieldElement) -> FieldElement:
        if x.tower != self and x.tower.signature() != self.signature():
            x = self.lift(x)
        dn = self.derive_poly(x.num)
        dd = self.derive_poly(x.den)
        n = self.elem(x.num)
        d = self.elem(x.den)
        return (dn * d - n * dd) / (d * d)

    # -- conjugation and modes ---------------------------------------------------

    def complexify(self) -> "DiffTower":
        if self.mode == "complexified":
            raise ModeError("tower is already complexified")
        return DiffTower(
            self.base_var, self.specs, "complexified", self.params, None, self.budget
        )

    def real_part(self) -> "DiffTower":
        if self.mode == "real":
            raise ModeError("tower is already real")
        if self.conj_images:
            raise ModeError(
                "tower has conjugation-moved generators; no real presentation here"
            )
        return DiffTower(self.base_var, self.specs, "real", self.params, None, self.budget)

    def conj(self, x: FieldElement) -> FieldElement:
        if self.mode != "complexified":
            raise ModeError("conjugation lives on the complexified tower")
        if not self.conj_images:
            return FieldElement(x.num.conj(), x.den.conj(), self)
        mapping = {
            name: FieldElement(n, d, self) for name, (n, d) in self.conj_images.items()
        }
        return self.eval_poly(x.num.conj(), mapping) / self.eval_poly(
            x.den.conj(), mapping
        )

    # -- substitution ---------------------------------------------------------

    def eval_poly(
        self, p: Poly, mapping: Mapping[str, FieldElement]
    ) -> FieldElement:
        """Evaluate p with some variables replaced by field elements.

        Unmapped variables stay themselves.  Used for group actions and
        conjugation tables.
        """
        p = p.in_context(self.context)
        powers: dict[tuple[str, int], FieldElement] = {}

        def power(v: str, e: int) -> FieldElement:
            got = powers.get((v, e))
            if got is None:
                base = mapping.get(v)
                got = self.var(v) ** e if base is None else base**e
                powers[(v, e)] = got
            return got

        out = self.zero()
        for m in sorted(p.terms, key=self.context.key):
            term = self.const(p.terms[m])
            for v, e in sorted(m.exponents().items()):
                term = term * power(v, e)
            out = out + term
        return out

    def eval_element(
        self, x: FieldElement, mapping: Mapping[str, FieldElement]
    ) -> FieldElement:
        num = self.eval_poly(x.num, mapping)
        den = self.eval_poly(x.den, mapping)
        return num / den

    # -- tower growth ----------------------------------------------------------

    def _extended(
        self,
        new_specs: Sequence[GeneratorSpec],
        conj_images: Mapping[str, tuple[Poly, Poly]] | None = None,
    ) -> "DiffTower":
        ctx = self.context.extend_top([s.name for s in new_specs])
        lifted = [
            GeneratorSpec(
                s.name,
                s.kind,
                s.deriv_num.in_context(ctx),
                s.deriv_den.in_context(ctx),
                None if s.relation is None else s.relation.in_context(ctx),
            )
            for s in list(self.specs) + list(new_specs)
        ]
        images = dict(self.conj_images)
        if conj_images:
            images.update(conj_images)
        return DiffTower(
            self.base_var, lifted, self.mode, self.params, images or None, self.budget
        )

    def extended_context(self, names: Sequence[str]) -> Context:
        return self.context.extend_top(names)

    def adjoin_abstract(
        self,
        names: Sequence[str],
        derivatives: Sequence[str | tuple[Poly, Poly]],
        relations: Sequence[str | Poly] = (),
        kind: Kind = Kind.ABSTRACT,
    ) -> "DiffTower":
        """Adjoin a batch of generators with declared derivatives.

        Derivatives and relations may be given as text (parsed in the
        extended context, so they can mention the new names) or as
        polynomial data.  Relations are attached to the last new generator
        they mention; each must be differentially compatible.
        """
        ctx = self.extended_context(names)

        def coerce_deriv(d) -> tuple[Poly, Poly]:
            if isinstance(d, str):
                return parse_fraction(d, ctx)
            num, den = d
            return num.in_context(ctx), den.in_context(ctx)

        rels: list[Poly] = []
        for r in relations:
            rels.append(
                parse_fraction(r, ctx)[0] if isinstance(r, str) else r.in_context(ctx)
            )
        per_gen: dict[str, Poly] = {}
        for r in rels:
            owners = [n for n in names if n in r.variables()]
            if not owners:
                raise ValueError(f"relation {r} mentions no new generator")
            if per_gen.get(owners[-1]) is not None:
                raise ValueError(f"two relations attached to {owners[-1]!r}")
            per_gen[owners[-1]] = r
        specs = []
        for name, d in zip(names, derivatives):
            dn, dd = coerce_deriv(d)
            specs.append(GeneratorSpec(name, kind, dn, dd, per_gen.get(name)))
        return self._extended(specs)

    def adjoin_exponential(self, name: str, rate: FieldElement) -> "DiffTower":
        """Adjoin e with e' = rate * e (the rate lives in this tower)."""
        ctx = self.extended_context([name])
        e = Poly.variable(ctx, name)
        return self._extended(
            [
                GeneratorSpec(
                    name,
                    Kind.EXPONENTIAL,
                    rate.num.in_context(ctx) * e,
                    rate.den.in_context(ctx),
                    None,
                )
            ]
        )

    def adjoin_algebraic(
        self, name: str, relation: str | Poly, derivative: str | tuple[Poly, Poly]
    ) -> "DiffTower":
        """Adjoin one generator with a polynomial relation; the relation must
        be stable under the declared derivation or IncompatibleDerivation is
        raised."""
        tower = self.adjoin_abstract(
            [name], [derivative], [relation], kind=Kind.ALGEBRAIC
        )
        return tower

    def with_params(self, names: Sequence[str]) -> "DiffTower":
        """Same tower with constant parameter variables below everything."""
        ctx = self.context.extend_bottom(names)
        lifted = [
            GeneratorSpec(
                s.name,
                s.kind,
                s.deriv_num.in_context(ctx),
                s.deriv_den.in_context(ctx),
                None if s.relation is None else s.relation.in_context(ctx),
            )
            for s in self.specs
        ]
        images = {
            k: (n.in_context(ctx), d.in_context(ctx))
            for k, (n, d) in self.conj_images.items()
        }
        return DiffTower(
            self.base_var,
            lifted,
            self.mode,
            tuple(names) + self.params,
            images or None,
            self.budget,
        )

    # -- monomial windows and constants --------------------------------------

    def irreducible_monomials(self, max_degree: int) -> list[Monomial]:
        """Generator monomials of bounded degree in rewrite normal form."""
        gens = self.generator_names()
        lhss = [r.lhs for r in self.rewrite.rules]
        out: list[Monomial] = []

        def rec(idx: int, budget: int, acc: dict[str, int]):
            if idx == len(gens):
                m = Monomial(acc)
                if not any(l.divides(m) for l in lhss):
                    out.append(m)
                return
            for e in range(budget + 1):
                nxt = dict(acc)
                if e:
                    nxt[gens[idx]] = e
                rec(idx + 1, budget - e, nxt)

        rec(0, max_degree, {})
        out.sort(key=self.context.key)
        return out

    def scan_basis(
        self, degree_bound: int, coeff_degree_bound: int
    ) -> tuple[list[FieldElement], int]:
        """Finite scan window: generator monomials of degree <= degree_bound
        with Laurent powers of the base variable up to coeff_degree_bound.
        Returns the elements and the index of the constant element 1."""
        mons = self.irreducible_monomials(degree_bound)
        tpowers = (
            range(-coeff_degree_bound, coeff_degree_bound + 1)
            if self.base_var
            else range(0, 1)
        )
        elems: list[FieldElement] = []
        trivial = -1
        one = Poly.const(self.context, 1)
        for m in mons:
            for j in tpowers:
                num = Poly(self.context, {m: GaussRat.of(1)})
                den = one
                if j > 0:
                    num = num.mul_monomial(Monomial.var(self.base_var, j))
                elif j < 0:
                    den = Poly.variable(self.context, self.base_var, -j)
                if m.is_one() and j == 0:
                    trivial = len(elems)
                elems.append(FieldElement(num, den, self))
        return elems, trivial

    def linear_relations(self, elems: Sequence[FieldElement]) -> list[list[GaussRat]]:
        """Kernel of (a_k) -> sum a_k elems[k], exactly, over GaussRat."""
        if not elems:
            return []
        distinct: list[Poly] = []
        for e in elems:
            if not any(e.den == d for d in distinct):
                distinct.append(e.den)
        cleared: list[Poly] = []
        for e in elems:
            prod = e.num
            for d in distinct:
                if d != e.den:
                    prod = prod * d
            cleared.append(self.rewrite.normal_form(prod))
        rows: dict[Monomial, dict[int, GaussRat]] = {}
        for k, p in enumerate(cleared):
            for m, c in p.terms.items():
                rows.setdefault(m, {})[k] = c
        ordered = [rows[m] for m in sorted(rows, key=self.context.key)]
        return kernel(len(elems), ordered)

    def combine(
        self, coeffs: Sequence[GaussRat], elems: Sequence[FieldElement]
    ) -> FieldElement:
        out = self.zero()
        for c, e in zip(coeffs, elems):
            if c:
                out = out + e.scale(c)
        return out

    def constant_scan(
        self, degree_bound: int = 4, coeff_degree_bound: int = 3
    ) -> list[FieldElement]:
        """New constants in the scan window, excluding the scalars.

        Solves d(sum a_k b_k) = 0 exactly over the window basis b_k; kernel
        vectors are projected off the scalar direction, so an empty result
        certifies that the window contains no constant outside the base
        constants.
        """
        basis, trivial = self.scan_basis(degree_bound, coeff_degree_bound)
        derivs = [b.derive() for b in basis]
        found: list[FieldElement] = []
        for vec in self.linear_relations(derivs):
            coeffs = list(vec)
            if trivial >= 0:
                coeffs[trivial] = GaussRat.of(0)
            x = self.combine(coeffs, basis)
            if x.is_zero():
                continue
            lead = x.num.leading_coefficient()
            found.append(x.scale(lead.inverse()))
        return found
