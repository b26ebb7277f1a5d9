"""Differential Galois groups as polynomially-defined matrix groups.

The group of a certified PV extension acts on the solution system by
constant matrices.  Its defining polynomial set is computed from a
relation list with two kinds of generators:

  * derivation relations  Z_j' = sum_i d_ij Z_i  (the recorded first-order
    companion system of the solutions over the base), and
  * algebraic relations: each tower relation rewritten in the Z variables,
    plus Z_j = b for solutions that already lie in the base.

Substituting Z_j -> sum_i X_ij eta_i with constant indeterminates X_ij,
taking normal forms, and collecting coefficients of the resulting
expansion over the tower's monomial-by-t-power basis yields polynomials in
the X_ij alone; real and imaginary parts are collected separately, so the
defining set always has real coefficients.

Completeness of the relation list is documented per class: for EXP,
RADICAL and CIRCLE the listed relations generate all algebraic relations
of the solutions over the base (the solutions are transcendental apart
from the listed algebraic generator relations).  For CONSTCOEFF2 with a
conjugate root pair the circle relation of the auxiliary generators cannot
be written in the Z variables over the base; the group object records
`relations_complete = False` in that case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import BadIdeal, NotInGroup, Unsupported, WitnessNotFound
from .gauss import GaussRat
from .linsolve import det as mat_det
from .linsolve import inverse, mat_mul
from .poly import Context, Monomial, Poly, parse_fraction
from .pv import PVExtension
from .rewrite import buchberger
from .tower import DiffTower, FieldElement

__all__ = [
    "DerivationRelation",
    "AlgebraicRelation",
    "RelationIdeal",
    "MatrixGroup",
    "GroupElement",
    "relations_ideal",
    "defining_equations",
    "apply",
    "compose",
    "moved_element_witness",
    "sample_members",
    "invariance_conditions",
    "same_zero_set",
    "reduces_to_zero",
    "parse_scalar",
    "matrix_from_texts",
]


# -- relation ideal -------------------------------------------------------------


@dataclass(frozen=True)
class DerivationRelation:
    """Z_slot' = sum_i coeffs[i] * Z_i with coefficients over the base."""

    slot: int
    coeffs: tuple[FieldElement, ...]

    def render(self) -> str:
        rhs = [f"({a})*Z{i + 1}" for i, a in enumerate(self.coeffs) if not a.is_zero()]
        return f"Z{self.slot + 1}' = " + (" + ".join(rhs) if rhs else "0")


@dataclass(frozen=True)
class AlgebraicRelation:
    """A polynomial in Z1..Zn and base variables vanishing on the solutions."""

    poly: Poly

    def render(self) -> str:
        return str(self.poly)


@dataclass
class RelationIdeal:
    pv: PVExtension
    z_context: Context
    derivations: tuple[DerivationRelation, ...]
    algebraic: tuple[AlgebraicRelation, ...]
    complete: bool

    def render(self) -> list[str]:
        return [d.render() for d in self.derivations] + [
            a.render() + " = 0" for a in self.algebraic
        ]


def _solution_slot_of_generators(pv: PVExtension) -> dict[str, int | None]:
    """Map tower generator name -> solution index, when the generator is a
    solution itself (the supported situation for substitution actions)."""
    out: dict[str, int | None] = {}
    ext = pv.extension
    for name in ext.generator_names():
        if pv.base.base_var and name == pv.base.base_var:
            continue
        g = ext.var(name)
        slot = next((j for j, s in enumerate(pv.solutions) if ext.lift(s) == g), None)
        out[name] = slot
    return out


def relations_ideal(pv: PVExtension) -> RelationIdeal:
    """Relation generators of the solution tuple, verified to vanish on it."""
    ext = pv.extension
    n = pv.order
    z_names = [f"Z{j + 1}" for j in range(n)]
    z_ctx = pv.base.context.extend_top(z_names)

    derivations = []
    for j in range(n):
        col = tuple(pv.companion[i][j] for i in range(n))
        derivations.append(DerivationRelation(j, col))

    slot_of = _solution_slot_of_generators(pv)
    algebraic: list[AlgebraicRelation] = []
    complete = True
    for spec in ext.specs:
        if spec.relation is None:
            continue
        vars_used = spec.relation.variables() & set(ext.generator_names())
        if any(slot_of.get(v) is None for v in vars_used):
            complete = False
            continue
        rename = {v: z_names[slot_of[v]] for v in vars_used}  # type: ignore[index]
        moved: dict[Monomial, GaussRat] = {}
        for m, c in spec.relation.terms.items():
            new = Monomial({rename.get(v, v): e for v, e in m.exponents().items()})
            moved[new] = moved.get(new, GaussRat.of(0)) + c
        algebraic.append(AlgebraicRelation(Poly(z_ctx, moved)))
    # Solutions lying in the base get the relation Z_j = value.
    for j, s in enumerate(pv.solutions):
        if set(ext.lift(s).num.variables()) | set(ext.lift(s).den.variables()) <= (
            {pv.base.base_var} if pv.base.base_var else set()
        ):
            x = ext.lift(s)
            num = Poly(z_ctx, dict(x.num.terms))
            den = Poly(z_ctx, dict(x.den.terms))
            rel = Poly.variable(z_ctx, z_names[j]) * den - num
            algebraic.append(AlgebraicRelation(rel))

    ideal = RelationIdeal(pv, z_ctx, tuple(derivations), tuple(algebraic), complete)
    _verify_ideal(ideal)
    return ideal


def _eval_poly_with(tower: DiffTower, p: Poly, mapping: dict[str, FieldElement]) -> FieldElement:
    """Evaluate a polynomial whose context may mention foreign variables,
    sending mapped variables to elements and keeping the rest."""
    out = tower.zero()
    items = sorted(p.terms.items(), key=lambda mc: sorted(mc[0]._key))
    for m, c in items:
        term = tower.const(c)
        for v, e in sorted(m.exponents().items()):
            img = mapping.get(v)
            term = term * (img**e if img is not None else tower.var(v) ** e)
        out = out + term
    return out


def _verify_ideal(ideal: RelationIdeal) -> None:
    pv = ideal.pv
    ext = pv.extension
    sols = [ext.lift(s) for s in pv.solutions]
    for d in ideal.derivations:
        expect = ext.zero()
        for i, a in enumerate(d.coeffs):
            if not a.is_zero():
                expect = expect + ext.lift(a) * sols[i]
        if sols[d.slot].derive() != expect:
            raise BadIdeal(f"derivation relation fails at solutions: {d.render()}")
    z_map = {f"Z{j + 1}": sols[j] for j in range(len(sols))}
    for a in ideal.algebraic:
        if not _eval_poly_with(ext, a.poly, z_map).is_zero():
            raise BadIdeal(f"algebraic relation fails at solutions: {a.render()}")


# -- matrix groups ---------------------------------------------------------------


def _x_names(n: int) -> list[list[str]]:
    return [[f"X{i + 1}{j + 1}" for j in range(n)] for i in range(n)]


@dataclass
class MatrixGroup:
    """Zero set of `polys` inside GL_n, acting on the solution tuple."""

    pv: PVExtension
    size: int
    xnames: tuple[tuple[str, ...], ...]
    context: Context
    polys: tuple[Poly, ...]
    relations_complete: bool = True
    _param_tower: DiffTower | None = field(default=None, repr=False)
    _sym_images: tuple[FieldElement, ...] | None = field(default=None, repr=False)
    _gb_cache: object = field(default=None, repr=False)

    def serialized(self) -> list[str]:
        return [str(p) for p in self.polys]

    def flat_xnames(self) -> list[str]:
        return [x for row in self.xnames for x in row]

    def param_tower(self) -> DiffTower:
        if self._param_tower is None:
            self._param_tower = self.pv.extension.with_params(self.flat_xnames())
        return self._param_tower

    def sym_images(self) -> tuple[FieldElement, ...]:
        """Symbolic images sum_i X_ij eta_i of the solutions."""
        if self._sym_images is None:
            tw = self.param_tower()
            sols = [tw.elem(s.num, s.den) for s in self.pv.solutions]
            imgs = []
            for j in range(self.size):
                acc = tw.zero()
                for i in range(self.size):
                    acc = acc + tw.var(self.xnames[i][j]) * sols[i]
                imgs.append(acc)
            self._sym_images = tuple(imgs)
        return self._sym_images

    def groebner(self):
        if self._gb_cache is None:
            self._gb_cache = buchberger(self.polys, self.context)
        return self._gb_cache

    def evaluate(self, p: Poly, matrix: Sequence[Sequence[GaussRat]]) -> GaussRat:
        values = {
            self.xnames[i][j]: GaussRat.of(matrix[i][j])
            for i in range(self.size)
            for j in range(self.size)
        }
        total = GaussRat.of(0)
        for m, c in p.terms.items():
            term = c
            for v, e in m.exponents().items():
                base = values[v]
                for _ in range(e):
                    term = term * base
            total = total + term
        return total

    def is_member(self, matrix: Sequence[Sequence[GaussRat]]) -> bool:
        rows = [[GaussRat.of(v) for v in row] for row in matrix]
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            return False
        if not mat_det(rows):
            return False
        return all(not self.evaluate(p, rows) for p in self.polys)

    def element(self, matrix: Sequence[Sequence[GaussRat]]) -> "GroupElement":
        rows = tuple(tuple(GaussRat.of(v) for v in row) for row in matrix)
        if not self.is_member(rows):
            raise NotInGroup(f"matrix {rows} is not in the group's zero set")
        return GroupElement(self, rows)

    def identity(self) -> "GroupElement":
        one, zero = GaussRat.of(1), GaussRat.of(0)
        return self.element(
            [[one if i == j else zero for j in range(self.size)] for i in range(self.size)]
        )

    def extended(self, extra: Iterable[Poly]) -> "MatrixGroup":
        polys = _normalize_polys(list(self.polys) + list(extra), self.context)
        g = MatrixGroup(
            self.pv,
            self.size,
            self.xnames,
            self.context,
            polys,
            self.relations_complete,
        )
        g._param_tower = self._param_tower
        g._sym_images = self._sym_images
        return g


@dataclass(frozen=True)
class GroupElement:
    group: MatrixGroup
    matrix: tuple[tuple[GaussRat, ...], ...]

    def is_real(self) -> bool:
        return all(v.im == 0 for row in self.matrix for v in row)

    def inverse(self) -> "GroupElement":
        inv = inverse(self.matrix)
        assert inv is not None  # members are invertible by construction
        return self.group.element(inv)

    def render(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.matrix]


def _normalize_polys(polys: Iterable[Poly], ctx: Context) -> tuple[Poly, ...]:
    seen: list[Poly] = []
    for p in polys:
        if p.is_zero():
            continue
        p = p.in_context(ctx).monic()
        if not any(p == q for q in seen):
            seen.append(p)
    seen.sort(key=lambda p: (p.total_degree(), str(p)))
    return tuple(seen)


def _collect_coefficients(
    num: Poly, xvars: set[str], x_ctx: Context
) -> list[Poly]:
    """Split a polynomial in (X, tower) variables into its X-coefficient
    polynomials along the tower-monomial basis, real and imaginary parts
    collected separately."""
    groups: dict[Monomial, dict[Monomial, GaussRat]] = {}
    for m, c in num.terms.items():
        exps = m.exponents()
        xpart = Monomial({v: e for v, e in exps.items() if v in xvars})
        rest = Monomial({v: e for v, e in exps.items() if v not in xvars})
        bucket = groups.setdefault(rest, {})
        bucket[xpart] = bucket.get(xpart, GaussRat.of(0)) + c
    out: list[Poly] = []
    for rest in sorted(groups, key=lambda m: sorted(m._key)):
        p = Poly(x_ctx, groups[rest])
        re, im = p.real_imag()
        if not re.is_zero():
            out.append(re)
        if not im.is_zero():
            out.append(im)
    return out


def defining_equations(
    pv: PVExtension, ideal: RelationIdeal | None = None
) -> MatrixGroup:
    """Compute the defining polynomial set of the Galois group of pv."""
    if ideal is None:
        ideal = relations_ideal(pv)
    else:
        _verify_ideal(ideal)
    n = pv.order
    xnames = _x_names(n)
    flat = [x for row in xnames for x in row]
    x_ctx = Context(flat)
    group = MatrixGroup(
        pv,
        n,
        tuple(tuple(row) for row in xnames),
        x_ctx,
        (),
        ideal.complete,
    )
    tw = group.param_tower()
    imgs = group.sym_images()
    xset = set(flat)

    collected: list[Poly] = []
    for d in ideal.derivations:
        residue = imgs[d.slot].derive()
        for i, a in enumerate(d.coeffs):
            if not a.is_zero():
                residue = residue - tw.elem(a.num, a.den) * imgs[i]
        collected += _collect_coefficients(residue.num, xset, x_ctx)
    z_map = {f"Z{j + 1}": imgs[j] for j in range(n)}
    for a in ideal.algebraic:
        residue = _eval_poly_with(tw, a.poly, z_map)
        collected += _collect_coefficients(residue.num, xset, x_ctx)

    group.polys = _normalize_polys(collected, x_ctx)
    return group


# -- group actions ----------------------------------------------------------------


def _substitution_map(
    sigma: GroupElement, target: DiffTower
) -> dict[str, FieldElement]:
    pv = sigma.group.pv
    ext = pv.extension
    slot_of = _solution_slot_of_generators(pv)
    mapping: dict[str, FieldElement] = {}
    for name, slot in slot_of.items():
        if slot is None:
            raise Unsupported(
                f"generator {name!r} is not one of the listed solutions; "
                "substitution action unavailable for this presentation"
            )
        acc = target.zero()
        for i in range(sigma.group.size):
            c = sigma.matrix[i][slot]
            if c:
                s = pv.solutions[i]
                acc = acc + target.elem(s.num, s.den).scale(c)
        mapping[name] = acc
    return mapping


def apply(sigma: GroupElement, x: FieldElement) -> FieldElement:
    """Apply the differential morphism induced by sigma to a tower element."""
    pv = sigma.group.pv
    ext = pv.extension
    target = ext
    if not sigma.is_real() and ext.mode == "real":
        target = ext.complexify()
    mapping = _substitution_map(sigma, target)
    x = target.elem(x.num, x.den)
    num = target.eval_poly(x.num, mapping)
    den = target.eval_poly(x.den, mapping)
    if den.is_zero():
        raise NotInGroup("substitution sends a denominator to zero")
    return num / den


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group element acting as 'first b, then a' on the tower."""
    if a.group is not b.group and a.group.polys != b.group.polys:
        raise NotInGroup("elements of different groups")
    return a.group.element(mat_mul(a.matrix, b.matrix))


def sample_members(group: MatrixGroup) -> list[GroupElement]:
    """A deterministic list of rational sample members, filtered by the
    defining set.  Used for witness searches and pointwise checks."""
    n = group.size
    cands: list[list[list[GaussRat]]] = []
    q = GaussRat.of
    if n == 1:
        for v in (2, -1, 3, Fraction(1, 3), -2, Fraction(1, 2), 5, 1):
            cands.append([[q(Fraction(v))]])
        cands.append([[GaussRat(Fraction(0), Fraction(1))]])  # i, for complex tests
    elif n == 2:
        rot = [
            (Fraction(1), Fraction(0)),
            (Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(1)),
            (Fraction(3, 5), Fraction(4, 5)),
            (Fraction(5, 13), Fraction(12, 13)),
            (Fraction(-3, 5), Fraction(4, 5)),
        ]
        for a, b in rot:
            cands.append([[q(a), q(-b)], [q(b), q(a)]])
        for d1, d2 in ((2, 3), (2, 1), (1, 2), (-1, 1), (Fraction(1, 2), 5)):
            cands.append([[q(Fraction(d1)), q(0)], [q(0), q(Fraction(d2))]])
        for a, b in ((1, 1), (2, 3), (1, -2)):
            cands.append([[q(Fraction(a)), q(Fraction(b))], [q(0), q(Fraction(a))]])
    out: list[GroupElement] = []
    seen: list = []
    for m in cands:
        if group.is_member(m) and m not in seen:
            seen.append(m)
            out.append(group.element(m))
    return out


def moved_element_witness(
    group: MatrixGroup,
    a: FieldElement,
    candidates: Sequence[GroupElement] | None = None,
) -> GroupElement:
    """A group element moving `a`, from a bounded deterministic search."""
    pool = list(candidates) if candidates is not None else sample_members(group)
    target = group.pv.extension
    for sigma in pool:
        image = apply(sigma, a)
        lifted = image.tower.elem(a.num, a.den)
        if image != lifted:
            return sigma
    raise WitnessNotFound(
        f"no sampled group element moves {a} (searched {len(pool)} members)"
    )


def invariance_conditions(group: MatrixGroup, x: FieldElement) -> list[Poly]:
    """Polynomials in the X variables expressing sigma(x) = x."""
    tw = group.param_tower()
    imgs = group.sym_images()
    pv = group.pv
    slot_of = _solution_slot_of_generators(pv)
    mapping: dict[str, FieldElement] = {}
    for name, slot in slot_of.items():
        if slot is None:
            raise Unsupported(
                f"generator {name!r} is not a listed solution; cannot form "
                "symbolic invariance conditions"
            )
        mapping[name] = imgs[slot]
    x = tw.elem(x.num, x.den)
    num_s = tw.eval_poly(x.num, mapping)
    den_s = tw.eval_poly(x.den, mapping)
    residue = num_s * tw.elem(x.den) - tw.elem(x.num) * den_s
    flat = set(group.flat_xnames())
    nf = tw.rewrite.normal_form(residue.num)
    return _collect_coefficients(nf, flat, group.context)


# -- ideal comparison ---------------------------------------------------------------


def reduces_to_zero(polys: Sequence[Poly], others: Sequence[Poly], ctx: Context) -> bool:
    """Whether every polynomial in `polys` reduces to zero modulo the ideal
    generated by `others` (sufficient condition for zero-set inclusion)."""
    system = buchberger(others, ctx)
    return all(system.is_zero_mod(p.in_context(ctx)) for p in polys)


def same_zero_set(a: Sequence[Poly], b: Sequence[Poly], ctx: Context) -> bool:
    """Mutual reduction: the two sets generate the same ideal up to the
    reductions witnessed by each other's Groebner bases."""
    return reduces_to_zero(a, b, ctx) and reduces_to_zero(b, a, ctx)


# -- small parsing helpers ----------------------------------------------------------


_EMPTY = Context([])


def parse_scalar(text: str) -> GaussRat:
    num, den = parse_fraction(text, _EMPTY)
    return num.constant_value() / den.constant_value()


def matrix_from_texts(rows: Sequence[Sequence[str]]) -> list[list[GaussRat]]:
    return [[parse_scalar(v) for v in row] for row in rows]
