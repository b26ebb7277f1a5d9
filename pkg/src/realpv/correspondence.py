"""The group-field correspondence for certified PV extensions.

Downward: a subgroup descriptor turns into the subfield of window elements
it fixes.  Upward: an intermediate field turns into the subgroup cut out
by symbolic invariance conditions on its generators.  Both directions are
exact; sampling is only ever used to propose a fixed space, which is then
certified symbolically before it is returned.

Subgroups are described by small named shapes rather than arbitrary
ideals: the full group, the trivial group, roots of unity inside GL1,
diagonal matrices, the rotation group, or an explicit finite list of
matrices.  That covers every group arising from the supported equation
classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadField, Unsupported, WitnessNotFound
from .galois import (
    GroupElement,
    MatrixGroup,
    apply,
    compose,
    invariance_conditions,
    parse_scalar,
    reduces_to_zero,
    same_zero_set,
    sample_members,
)
from .gauss import GaussRat
from .linsolve import mat_mul
from .poly import Poly, parse_poly
from .pv import LinearODE, PVExtension, build_pv
from .tower import DiffTower, FieldElement

__all__ = [
    "SubgroupDescriptor",
    "FULL",
    "TRIVIAL",
    "DIAGONAL",
    "SO2",
    "mu_n",
    "finite_list",
    "IntermediateField",
    "descriptor_polys",
    "descriptor_samples",
    "subgroup_of",
    "descriptor_of",
    "window_products",
    "member_of_field",
    "fixed_field",
    "group_over",
    "check_correspondence",
    "NormalityReport",
    "normality_check",
    "weak_normality_demo",
    "DEFAULT_FIELD_BOUNDS",
]

DEFAULT_FIELD_BOUNDS = (4, 2)


# -- descriptors -----------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupDescriptor:
    kind: str
    order: int | None = None
    elements: tuple[tuple[tuple[GaussRat, ...], ...], ...] | None = None

    def label(self) -> str:
        if self.kind == "MU_N":
            return f"MU_N({self.order})"
        if self.kind == "FINITE_LIST":
            return f"FINITE_LIST[{len(self.elements or ())} elements]"
        return self.kind


FULL = SubgroupDescriptor("FULL")
TRIVIAL = SubgroupDescriptor("TRIVIAL")
DIAGONAL = SubgroupDescriptor("DIAGONAL")
SO2 = SubgroupDescriptor("SO2")


def mu_n(q: int) -> SubgroupDescriptor:
    if q < 1:
        raise ValueError("root-of-unity order must be positive")
    return SubgroupDescriptor("MU_N", order=q)


def finite_list(matrices: Sequence[Sequence[Sequence]]) -> SubgroupDescriptor:
    def coerce(v):
        return parse_scalar(v) if isinstance(v, str) else GaussRat.of(v)

    rows = tuple(
        tuple(tuple(coerce(v) for v in row) for row in m) for m in matrices
    )
    return SubgroupDescriptor("FINITE_LIST", elements=rows)


def _pm_identity(n: int) -> SubgroupDescriptor:
    one, zero = GaussRat.of(1), GaussRat.of(0)
    eye = [[one if i == j else zero for j in range(n)] for i in range(n)]
    neg = [[-v for v in row] for row in eye]
    return finite_list([eye, neg])


def descriptor_polys(group: MatrixGroup, desc: SubgroupDescriptor) -> list[Poly]:
    """Defining polynomials of the descriptor inside the ambient group's
    coordinate ring (ambient equations included)."""
    ctx = group.context
    n = group.size
    base = list(group.polys)
    p = lambda s: parse_poly(s, ctx)
    if desc.kind == "FULL":
        return base
    if desc.kind == "TRIVIAL":
        extra = []
        for i in range(n):
            for j in range(n):
                name = group.xnames[i][j]
                extra.append(p(f"{name} - 1") if i == j else p(name))
        return base + extra
    if desc.kind == "MU_N":
        if n != 1:
            raise Unsupported("roots of unity are a GL1 descriptor")
        return base + [p(f"X11^{desc.order} - 1")]
    if desc.kind == "DIAGONAL":
        if n != 2:
            raise Unsupported("the diagonal descriptor is for 2x2 groups here")
        return base + [p("X12"), p("X21")]
    if desc.kind == "SO2":
        if n != 2:
            raise Unsupported("the rotation descriptor is for 2x2 groups")
        return base + [p("X11 - X22"), p("X12 + X21"), p("X11^2 + X21^2 - 1")]
    if desc.kind == "FINITE_LIST":
        elems = desc.elements or ()
        if len(elems) == 2 and elems[1] == tuple(
            tuple(-v for v in row) for row in elems[0]
        ) and _is_identity(elems[0]):
            extra = [p(f"{group.xnames[0][0]}^2 - 1")]
            for i in range(n):
                for j in range(n):
                    if i == j and i > 0:
                        extra.append(p(f"{group.xnames[i][j]} - {group.xnames[0][0]}"))
                    elif i != j:
                        extra.append(p(group.xnames[i][j]))
            return base + extra
        if len(elems) == 1 and _is_identity(elems[0]):
            return descriptor_polys(group, TRIVIAL)
        raise Unsupported(
            "only {I}, {I, -I} finite lists have a polynomial description here"
        )
    raise Unsupported(f"unknown descriptor kind {desc.kind!r}")


def _is_identity(m: tuple[tuple[GaussRat, ...], ...]) -> bool:
    return all(
        v == GaussRat.of(1 if i == j else 0)
        for i, row in enumerate(m)
        for j, v in enumerate(row)
    )


def descriptor_samples(
    group: MatrixGroup, desc: SubgroupDescriptor
) -> list[GroupElement]:
    """Deterministic members of the descriptor, as elements of the ambient
    group, for proposing fixed spaces and pointwise checks."""
    n = group.size
    q = GaussRat.of
    mats: list[list[list[GaussRat]]] = []
    if desc.kind == "TRIVIAL":
        mats = [[[q(1 if i == j else 0) for j in range(n)] for i in range(n)]]
    elif desc.kind == "MU_N":
        for lam in (1, -1):
            if lam**desc.order == 1:  # type: ignore[operator]
                mats.append([[q(lam)]])
    elif desc.kind == "FINITE_LIST":
        mats = [[list(row) for row in m] for m in desc.elements or ()]
    elif desc.kind == "DIAGONAL":
        for d1, d2 in ((2, 3), (Fraction(1, 2), 5), (-1, 1)):
            mats.append([[q(Fraction(d1)), q(0)], [q(0), q(Fraction(d2))]])
    elif desc.kind == "SO2":
        for a, b in (
            (Fraction(3, 5), Fraction(4, 5)),
            (Fraction(5, 13), Fraction(12, 13)),
        ):
            mats.append([[q(a), q(-b)], [q(b), q(a)]])
    elif desc.kind == "FULL":
        return sample_members(group)
    out = []
    for m in mats:
        if group.is_member(m):
            out.append(group.element(m))
    return out


def subgroup_of(group: MatrixGroup, desc: SubgroupDescriptor) -> MatrixGroup:
    return group.extended(descriptor_polys(group, desc))


def _candidate_descriptors(group: MatrixGroup) -> list[SubgroupDescriptor]:
    if group.size == 1:
        return [TRIVIAL, *(mu_n(k) for k in range(2, 9)), FULL]
    return [TRIVIAL, _pm_identity(group.size), SO2, DIAGONAL, FULL]


def descriptor_of(
    group: MatrixGroup, subgroup: MatrixGroup
) -> SubgroupDescriptor | None:
    """Recognize a computed subgroup against the named shapes, by mutual
    ideal reduction inside the ambient coordinate ring."""
    for desc in _candidate_descriptors(group):
        try:
            polys = descriptor_polys(group, desc)
        except Unsupported:
            continue
        if same_zero_set(list(subgroup.polys), polys, group.context):
            return desc
    return None


# -- bounded field membership -------------------------------------------------------


def window_products(
    tower: DiffTower,
    gens: Sequence[FieldElement],
    degree_bound: int,
    t_power_bound: int,
) -> list[FieldElement]:
    """Products of generator powers (total degree bounded) times powers of
    the base variable, the search window for field membership."""
    combos: list[FieldElement] = [tower.one()]
    for g in gens:
        g = tower.lift(g)
        grown: list[FieldElement] = []
        for c in combos:
            grown.append(c)
            acc = c
            for _ in range(degree_bound):
                acc = acc * g
                grown.append(acc)
        combos = grown
    if tower.base_var and t_power_bound:
        t = tower.var(tower.base_var)
        spread = []
        for c in combos:
            for k in range(-t_power_bound, t_power_bound + 1):
                spread.append(c * t**k)
        combos = spread
    out: list[FieldElement] = []
    for c in combos:
        if not any(c == d for d in out):
            out.append(c)
    return out


def _generator_degree(tower: DiffTower, x: FieldElement) -> int:
    names = set(tower.generator_names())
    deg = 0
    for p in (x.num, x.den):
        for m in p.terms:
            deg = max(
                deg, sum(e for v, e in m.exponents().items() if v in names)
            )
    return deg


def member_of_field(
    tower: DiffTower,
    x: FieldElement,
    gens: Sequence[FieldElement],
    bounds: tuple[int, int] = DEFAULT_FIELD_BOUNDS,
) -> bool:
    """Whether x = N/D for window polynomials N, D over the generators.

    The test is a single exact kernel computation: unknown coefficients of
    D multiply x, unknown coefficients of N enter negated, and any kernel
    vector with a nonzero D part exhibits the representation.  The window
    degree grows with the queried element so that plain monomial relations
    always fit.  A False answer means no representation within the window
    bounds, so callers treat False as 'not found', not as a proof of
    non-membership, except where the window provably spans the subfield's
    relevant piece.
    """
    deg = max(bounds[0], _generator_degree(tower, tower.lift(x)))
    x = tower.lift(x)
    tpow = bounds[1]
    if tower.base_var:
        involved = set(x.num.variables()) | set(x.den.variables())
        for g in gens:
            g = tower.lift(g)
            involved |= set(g.num.variables()) | set(g.den.variables())
        if tower.base_var not in involved:
            # t-free data: comparing t-homogeneous components of x*D = N
            # shows a t-free representation exists whenever any does
            tpow = 0
    window = window_products(tower, gens, deg, tpow)
    elems = [x * w for w in window] + list(window)
    half = len(window)
    for vec in tower.linear_relations(elems):
        if any(vec[:half]):
            d = tower.combine(vec[:half], window)
            if not d.is_zero():
                return True
    return False


# -- fixed fields ---------------------------------------------------------------------


@dataclass
class IntermediateField:
    pv: PVExtension
    generators: tuple[FieldElement, ...]
    bounds: tuple[int, int] = DEFAULT_FIELD_BOUNDS

    def describe(self) -> str:
        if not self.generators:
            return "K"
        inner = ", ".join(str(g) for g in self.generators)
        return f"K({inner})"

    def contains(self, x: FieldElement) -> bool:
        return member_of_field(self.pv.extension, x, self.generators, self.bounds)

    def same_field(self, other: "IntermediateField") -> bool:
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    def subfield_of(self, other: "IntermediateField") -> bool:
        return all(other.contains(g) for g in self.generators)


def _weighted_exponent(tower: DiffTower, elem: FieldElement) -> int | None:
    """Total generator degree of a monomial element, None if mixed."""
    degs = set()
    for m in elem.num.terms:
        d = sum(
            e
            for v, e in m.exponents().items()
            if v in tower.generator_names()
        )
        degs.add(d)
    if len(degs) != 1:
        return None
    return degs.pop()


def fixed_field(
    group: MatrixGroup,
    desc: SubgroupDescriptor,
    window_bounds: tuple[int, int] = (4, 0),
    membership_bounds: tuple[int, int] = DEFAULT_FIELD_BOUNDS,
) -> IntermediateField:
    """The subfield of the extension fixed by the descriptor's subgroup.

    A window of irreducible generator monomials (times bounded powers of
    the base variable) is intersected against the fixed space of the
    subgroup.  Roots of unity act by exponent weight, so their fixed
    monomials are filtered exactly; positive-dimensional descriptors use
    exact fixed-space intersections over sample members and the result is
    certified symbolically afterwards.
    """
    pv = group.pv
    ext = pv.extension
    deg, tpow = window_bounds
    if desc.kind == "MU_N" and desc.order:
        deg = max(deg, desc.order)
    window, _trivial = ext.scan_basis(deg, tpow)

    if desc.kind == "FULL" and pv.eq_class == "EXP":
        # exact shortcut: only generator weight 0 survives scaling
        fixed = [w for w in window if _weighted_exponent(ext, w) == 0]
    elif desc.kind == "MU_N":
        fixed = []
        for w in window:
            k = _weighted_exponent(ext, w)
            if k is not None and k % desc.order == 0:  # type: ignore[operator]
                fixed.append(w)
    else:
        samples = descriptor_samples(group, desc)
        if not samples and desc.kind != "TRIVIAL":
            raise Unsupported(f"no sample members for {desc.label()}")
        basis = [
            tuple(GaussRat.of(1 if i == j else 0) for j in range(len(window)))
            for i in range(len(window))
        ]
        for sigma in samples:
            combos = [ext.combine(b, window) for b in basis]
            diffs = []
            for x in combos:
                diffs.append(apply(sigma, x) - ext.lift(x))
            ker = ext.linear_relations(diffs)
            basis = [
                tuple(
                    sum((k[i] * basis[i][j] for i in range(len(basis))), GaussRat.of(0))
                    for j in range(len(window))
                )
                for k in ker
            ]
            if not basis:
                break
        fixed = [ext.combine(b, window) for b in basis]

    base_vars = {pv.base.base_var} if pv.base.base_var else set()
    candidates = []
    for x in fixed:
        if x.is_zero():
            continue
        if set(x.num.variables()) | set(x.den.variables()) <= base_vars:
            continue
        candidates.append(x.scale(x.num.leading_coefficient().inverse()))
    candidates.sort(key=lambda x: (x.num.total_degree(), str(x)))

    kept: list[FieldElement] = []
    for cand in candidates:
        if kept and member_of_field(ext, cand, kept, membership_bounds):
            continue
        kept.append(cand)

    fname = IntermediateField(pv, tuple(kept), membership_bounds)
    _certify_field(group, desc, fname)
    return fname


def _certify_field(
    group: MatrixGroup, desc: SubgroupDescriptor, F: IntermediateField
) -> None:
    """Exact checks: generators are fixed by the subgroup (symbolically for
    polynomial descriptors, pointwise for finite lists) and the field is
    closed under the derivation."""
    ext = F.pv.extension
    try:
        sub_polys = descriptor_polys(group, desc)
        symbolic = True
    except Unsupported:
        sub_polys = []
        symbolic = False
    for g in F.generators:
        if symbolic:
            conds = invariance_conditions(group, g)
            if not reduces_to_zero(conds, sub_polys, group.context):
                raise BadField(
                    f"{g} is not fixed by {desc.label()} (symbolic check)"
                )
        else:
            for sigma in descriptor_samples(group, desc):
                if apply(sigma, g) != ext.lift(g):
                    raise BadField(f"{g} moved by a sampled member of {desc.label()}")
    for g in F.generators:
        if not member_of_field(ext, g.derive(), F.generators, F.bounds):
            raise BadField(f"derivative of {g} escapes the candidate field")


def group_over(
    group: MatrixGroup, F: IntermediateField
) -> tuple[MatrixGroup, SubgroupDescriptor | None]:
    """The subgroup fixing F pointwise, with its recognized shape."""
    extra: list[Poly] = []
    for g in F.generators:
        extra += invariance_conditions(group, g)
    sub = group.extended(extra)
    return sub, descriptor_of(group, sub)


@dataclass
class CorrespondenceReport:
    lines: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.lines.append((name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.lines)


def check_correspondence(
    group: MatrixGroup, desc: SubgroupDescriptor
) -> tuple[CorrespondenceReport, IntermediateField, MatrixGroup]:
    """Both round trips for one descriptor: H -> fix(H) -> stab(fix(H)) = H,
    and the fixed field reproduces itself through its stabilizer."""
    report = CorrespondenceReport()
    F = fixed_field(group, desc)
    sub, recognized = group_over(group, F)
    want = descriptor_polys(group, desc)
    back = same_zero_set(list(sub.polys), want, group.context)
    report.add(
        "group round trip",
        back,
        f"{desc.label()} -> {F.describe()} -> {recognized.label() if recognized else 'unrecognized'}",
    )
    F2 = fixed_field(group, recognized) if recognized else None
    report.add(
        "field round trip",
        F2 is not None and F.same_field(F2),
        f"{F.describe()} vs {F2.describe() if F2 else '?'}",
    )
    return report, F, sub


def check_inclusion_reversal(
    group: MatrixGroup, chain: Sequence[SubgroupDescriptor]
) -> CorrespondenceReport:
    """Fixed fields of an ascending subgroup chain must descend."""
    report = CorrespondenceReport()
    fields = [fixed_field(group, d) for d in chain]
    for i in range(len(chain) - 1):
        small, big = chain[i], chain[i + 1]
        ok_groups = reduces_to_zero(
            descriptor_polys(group, big),
            descriptor_polys(group, small),
            group.context,
        )
        ok_fields = fields[i + 1].subfield_of(fields[i])
        report.add(
            f"{small.label()} <= {big.label()}",
            ok_groups and ok_fields,
            f"fields {fields[i + 1].describe()} <= {fields[i].describe()}",
        )
    return report


# -- normality -------------------------------------------------------------------------


@dataclass
class NormalityReport:
    normal: bool
    details: list[tuple[str, bool, str]]
    quotient_ode: LinearODE | None = None
    quotient_solutions: tuple[FieldElement, ...] = ()

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.details)


def _conjugation_stable(
    group: MatrixGroup, desc: SubgroupDescriptor
) -> tuple[bool, str]:
    sub = subgroup_of(group, desc)
    ambient = sample_members(group)
    inner = descriptor_samples(group, desc)
    for sigma in ambient:
        for h in inner:
            conj = compose(compose(sigma, h), sigma.inverse())
            if not sub.is_member(conj.matrix):
                return False, f"conjugate of {h.render()} by {sigma.render()} escapes"
    return True, f"checked {len(ambient)}x{len(inner)} conjugations"


def normality_check(
    group: MatrixGroup, desc: SubgroupDescriptor
) -> NormalityReport:
    """Sampled conjugation stability plus, for the named normal cases, an
    exhibited quotient: the fixed field is itself PV with explicit new
    solutions, and the quotient map is checked on sample members."""
    details: list[tuple[str, bool, str]] = []
    stable, note = _conjugation_stable(group, desc)
    details.append(("conjugation stability (sampled)", stable, note))

    pv = group.pv
    quotient_ode = None
    quotient_solutions: tuple[FieldElement, ...] = ()

    if desc.kind == "MU_N" and pv.eq_class in ("EXP", "RADICAL"):
        q = desc.order or 1
        ext = pv.extension
        gen = ext.lift(pv.solutions[0])
        power = gen**q
        rate = _into_base(pv.base, power.derive() / power)
        ode = LinearODE(pv.base, (-rate,))
        residue = ode.apply(power)
        details.append(
            (
                "fixed field generator solves a first-order equation over K",
                residue.is_zero(),
                f"Y' = ({rate})*Y at {power}",
            )
        )
        quotient_ode = ode
        quotient_solutions = (power,)
        hom_ok = True
        for a in sample_members(group):
            img = a.matrix[0][0] ** q
            if not _scalar_in_gl1(img):
                hom_ok = False
        details.append(
            ("quotient map lambda -> lambda^q lands in GL1", hom_ok, f"q = {q}")
        )

    if (
        desc.kind == "FINITE_LIST"
        and group.size == 2
        and pv.eq_class == "CIRCLE"
        and desc.elements is not None
        and len(desc.elements) == 2
    ):
        ext = pv.extension
        s = ext.lift(pv.solutions[0])
        c = ext.lift(pv.solutions[1])
        two = ext.const(2)
        y1 = two * s * c
        y2 = c * c - s * s
        omega = pv.base.parse(pv.meta["omega"])
        coeff = pv.base.const(4) * omega * omega
        ode = LinearODE(pv.base, (coeff, pv.base.zero()))
        ok1 = ode.apply(y1).is_zero()
        ok2 = ode.apply(y2).is_zero()
        details.append(
            (
                "double-angle pair solves Y'' + 4*omega^2*Y = 0 over K",
                ok1 and ok2,
                f"solutions {y1} and {y2}",
            )
        )
        quotient_ode = ode
        quotient_solutions = (y1, y2)
        hom_ok = True
        samples = sample_members(group)
        for g in samples:
            (a, mb), (b, a2) = g.matrix
            if a != a2 or mb != -b:
                continue
            da, db = a * a - b * b, GaussRat.of(2) * a * b
            image = [[da, -db], [db, da]]
            if not group.is_member(image):
                hom_ok = False
        for g in samples:
            for h in samples:
                gh = compose(g, h)
                im_g = _double_angle(g.matrix)
                im_h = _double_angle(h.matrix)
                im_gh = _double_angle(gh.matrix)
                if [list(r) for r in im_gh] != mat_mul(im_g, im_h):
                    hom_ok = False
        details.append(
            ("double-angle map is a sampled homomorphism with kernel {I, -I}", hom_ok, "")
        )

    return NormalityReport(stable, details, quotient_ode, quotient_solutions)


def _double_angle(m) -> list[list[GaussRat]]:
    a, b = m[0][0], m[1][0]
    return [
        [a * a - b * b, -(GaussRat.of(2) * a * b)],
        [GaussRat.of(2) * a * b, a * a - b * b],
    ]


def _scalar_in_gl1(v: GaussRat) -> bool:
    return bool(v)


def _into_base(base: DiffTower, x: FieldElement) -> FieldElement:
    """Re-read an element of the extension in the base tower; requires its
    value to be a scalar or its variables to be base variables only."""
    scalar = x.as_scalar()
    if scalar is not None:
        return base.const(scalar)
    allowed = {base.base_var} if base.base_var else set()
    if set(x.num.variables()) | set(x.den.variables()) <= allowed:
        from .poly import Poly as _P

        num = _P(base.context, dict(x.num.terms))
        den = _P(base.context, dict(x.den.terms))
        return base.elem(num, den)
    raise BadField(f"{x} does not lie in the base field")


# -- weak normality ----------------------------------------------------------------------


@dataclass
class WeakNormalityReport:
    q: int
    real_member_count: int
    complex_member_count: int
    intermediate: IntermediateField
    intermediate_is_pv: bool
    witness_element: FieldElement
    witness_in_intermediate: bool
    moved_by_real_member: bool
    details: list[tuple[str, bool, str]]


def weak_normality_demo(q: int = 3) -> WeakNormalityReport:
    """The classical failure K(exp) over K with intermediate K(exp^q).

    The intermediate field is PV over the base (it satisfies Y' = qY), and
    the subgroup fixing it consists of the q-th roots of unity.  Over the
    reals only the rational ones survive, so for odd q > 1 no real group
    element moves the generator even though it lies outside the
    intermediate field: the downward correspondence cannot see the field.
    """
    if q < 2:
        raise ValueError("the demonstration needs q >= 2")
    base = DiffTower(base_var="t")
    ode = LinearODE.from_texts(base, ["-1"])
    pv = build_pv(base, ode, "EXP")
    from .galois import defining_equations

    group = defining_equations(pv)
    ext = pv.extension
    e = ext.lift(pv.solutions[0])
    eq = e**q

    real_members = [lam for lam in (1, -1) if lam**q == 1]
    complex_count = q  # X^q - 1 is separable over the complexified constants

    F = IntermediateField(pv, (eq,))
    pv_sub = build_pv(base, LinearODE.from_texts(base, [f"-{q}"]), "EXP")
    sub_ok = pv_sub.certificates.ok

    in_F = member_of_field(ext, e, [eq], (max(4, q), 2))

    moved = False
    sub = subgroup_of(group, mu_n(q))
    for lam in real_members:
        sigma = sub.element([[GaussRat.of(lam)]])
        if apply(sigma, e) != e:
            moved = True

    details = [
        (
            f"intermediate field K(e^{q}) is PV over K",
            sub_ok,
            f"Y' = {q}*Y with solution e^{q}",
        ),
        (
            "generator e lies outside the intermediate field",
            not in_F,
            "bounded membership search is empty, and exponents of window "
            f"products are multiples of {q}",
        ),
        (
            f"real members of MU_N({q})",
            len(real_members) == (1 if q % 2 else 2),
            f"{real_members}",
        ),
        (
            "complexified member count equals q",
            complex_count == q,
            f"X^{q} - 1 has {q} roots over the complexified constants",
        ),
        (
            "no real subgroup member moves e" if q % 2 else "a real member moves e",
            (not moved) if q % 2 else moved,
            "the fixed field of the real points is all of L, strictly "
            "larger than the intermediate field"
            if q % 2
            else "",
        ),
    ]
    return WeakNormalityReport(
        q,
        len(real_members),
        complex_count,
        F,
        sub_ok,
        e,
        in_F,
        moved,
        details,
    )
