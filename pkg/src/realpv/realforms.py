"""Real forms of PV extensions and their classification by cocycles.

A cocycle is a group matrix A with A * conj(A) = I.  Twisting a certified
extension by A produces another real differential field with the same
complexification; cohomologous cocycles give isomorphic twists.  For the
groups arising here the classes are computed exactly:

  * GL1: every cocycle is a coboundary (solve B / conj(B) = A with B = i
    when A = -1), so there is one real form.
  * roots of unity of order 2: conjugation acts trivially, no nontrivial
    coboundaries exist, so {1} and {-1} are distinct classes.  The twist
    of the square root of f by -1 is the square root of -f.
  * rotations: cocycles correspond to nonzero real numbers under the
    eigenvalue parameterization, coboundaries to the positive ones, so I
    and -I represent the two classes.  The twist by -I replaces the unit
    circle by the curve u^2 + v^2 = -1.

Non-cohomology of the nontrivial classes is certified by an exact norm
argument plus sampled coboundaries; non-isomorphism of the twisted fields
is certified by explicit obstructions (a sum of squares equal to -1, or a
constant gamma with gamma^2 = -1 that an isomorphism would force).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import Unsupported, WitnessNotFound
from .galois import MatrixGroup
from .gauss import GaussRat
from .linsolve import identity as mat_identity
from .linsolve import inverse, mat_conj, mat_mul
from .poly import Poly
from .pv import PVExtension
from .tower import DiffTower, FieldElement, Kind

__all__ = [
    "Cocycle",
    "cocycle_check",
    "TwistResult",
    "twist",
    "non_reality_witness",
    "H1Report",
    "h1_enumerate",
    "coboundary_samples",
    "radical_pair_report",
    "RadicalPairReport",
]


@dataclass(frozen=True)
class Cocycle:
    matrix: tuple[tuple[GaussRat, ...], ...]
    label: str

    def render(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.matrix]


def _as_matrix(rows) -> tuple[tuple[GaussRat, ...], ...]:
    return tuple(tuple(GaussRat.of(v) for v in row) for row in rows)


def cocycle_check(group: MatrixGroup, rows) -> bool:
    """A * conj(A) = I inside the group's zero set."""
    a = _as_matrix(rows)
    n = group.size
    if len(a) != n or any(len(r) != n for r in a):
        return False
    if not group.is_member(a):
        return False
    prod = mat_mul(a, mat_conj(a))
    return prod == mat_identity(n)


def _is_id(rows) -> bool:
    return all(
        GaussRat.of(v) == GaussRat.of(1 if i == j else 0)
        for i, row in enumerate(rows)
        for j, v in enumerate(row)
    )


def _is_neg_id(rows) -> bool:
    return all(
        GaussRat.of(v) == GaussRat.of(-1 if i == j else 0)
        for i, row in enumerate(rows)
        for j, v in enumerate(row)
    )


# -- twisting --------------------------------------------------------------------------


@dataclass
class TwistResult:
    pv: PVExtension
    cocycle: Cocycle
    tower: DiffTower
    solutions: tuple[FieldElement, ...]
    note: str
    isomorphic_to_original: bool | None
    details: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.details)


def twist(pv: PVExtension, group: MatrixGroup, rows) -> TwistResult:
    """Twist a certified extension by a cocycle, from the per-class table.

    The result carries the twisted tower, solutions of the same equation
    inside it, and exact checks.  Unsupported combinations raise rather
    than guess.
    """
    a = _as_matrix(rows)
    if not cocycle_check(group, a):
        raise Unsupported("matrix is not a cocycle of this group")
    base = pv.base
    ode = pv.ode

    if _is_id(a):
        co = Cocycle(a, "identity")
        res = TwistResult(
            pv, co, pv.extension, pv.solutions, "trivial cocycle, extension unchanged",
            True,
        )
        res.details.append(("twisted solutions solve the equation", True, "unchanged"))
        return res

    if pv.eq_class == "EXP" and _is_neg_id(a):
        # B = i satisfies B / conj(B) = -1, so the twist is isomorphic.
        co = Cocycle(a, "-1 (coboundary in GL1)")
        res = TwistResult(
            pv,
            co,
            pv.extension,
            pv.solutions,
            "cocycle -1 splits in GL1 (B = i), twisted form isomorphic to the original",
            True,
        )
        res.details.append(
            ("B * conj(B)^-1 reproduces the cocycle", _i_coboundary_check(), "B = i")
        )
        return res

    if pv.eq_class == "RADICAL" and _is_neg_id(a):
        info = pv.meta.get("radical", {})
        if info.get("q") != 2:
            raise Unsupported("the -1 twist table covers square roots only")
        f = base.parse(info["f"])
        ctx = base.extended_context(["h"])
        relation = (
            f.den.in_context(ctx) * Poly.variable(ctx, "h", 2)
            + f.num.in_context(ctx) ** info["p"]
            if info.get("p", 1) == 1
            else None
        )
        if relation is None:
            raise Unsupported("the -1 twist table covers h^2 = -f only")
        rate = -ode.coeffs[0]
        deriv = (
            rate.num.in_context(ctx) * Poly.variable(ctx, "h"),
            rate.den.in_context(ctx),
        )
        tower = base.adjoin_abstract(["h"], [deriv], [relation], kind=Kind.ALGEBRAIC)
        h = tower.var("h")
        co = Cocycle(a, "-1")
        res = TwistResult(
            pv,
            co,
            tower,
            (h,),
            f"square root of -({f}) in place of the square root of {f}",
            False,
        )
        res.details.append(
            (
                "twisted solution solves the same equation",
                ode.apply(h).is_zero(),
                f"h' = ({rate})*h with h^2 = -({f})",
            )
        )
        res.details.append(
            (
                "twisted relation has the opposite sign",
                h * h == tower.lift(-f),
                "h^2 reduces to -f",
            )
        )
        return res

    if pv.eq_class == "CIRCLE" and _is_neg_id(a):
        ws = pv.meta["omega"]
        tower = base.adjoin_abstract(
            ["v", "u"], [f"-({ws})*u", f"({ws})*v"], ["u^2+v^2+1"]
        )
        u, v = tower.var("u"), tower.var("v")
        co = Cocycle(a, "-I")
        res = TwistResult(
            pv,
            co,
            tower,
            (u, v),
            "unit circle replaced by the curve u^2 + v^2 = -1",
            False,
        )
        ok_u = ode.apply(u).is_zero()
        ok_v = ode.apply(v).is_zero()
        res.details.append(
            (
                "twisted pair solves the same equation",
                ok_u and ok_v,
                f"u'' + {ws}^2 u = 0 and likewise for v",
            )
        )
        sq = u * u + v * v
        res.details.append(
            (
                "sum of squares of the twisted pair is -1",
                sq == tower.const(-1),
                str(sq),
            )
        )
        return res

    raise Unsupported(
        f"no twist recipe for class {pv.eq_class} and cocycle {Cocycle(a, '?').render()}"
    )


def _i_coboundary_check() -> bool:
    i = GaussRat(Fraction(0), Fraction(1))
    inv = inverse(mat_conj([[i]]))
    assert inv is not None
    return mat_mul([[i]], inv) == [[GaussRat.of(-1)]]


# -- non-reality witnesses ----------------------------------------------------------------


_WITNESS_COEFFS = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
    Fraction(-1, 2),
)


def non_reality_witness(
    tower: DiffTower, degree_bound: int = 2
) -> tuple[FieldElement, ...]:
    """Elements whose squares sum to -1, certifying the field is not real.

    Bounded deterministic search over single generator monomials and pairs
    with small rational coefficients.  Raises WitnessNotFound when the
    window holds no witness (which is not a proof of reality).
    """
    minus_one = tower.const(-1)
    monomials = tower.irreducible_monomials(degree_bound)
    elems = []
    for m in monomials:
        if m.is_one():
            continue
        elems.append(tower.elem(Poly(tower.context, {m: GaussRat.of(1)})))
    for x in elems:
        for c in _WITNESS_COEFFS:
            y = x.scale(GaussRat(c))
            if y * y == minus_one:
                return (y,)
    for x1, x2 in combinations_with_replacement(elems, 2):
        for c1 in _WITNESS_COEFFS:
            for c2 in _WITNESS_COEFFS:
                y1, y2 = x1.scale(GaussRat(c1)), x2.scale(GaussRat(c2))
                if y1 * y1 + y2 * y2 == minus_one:
                    return (y1, y2)
    raise WitnessNotFound(
        f"no sum of at most two squares equals -1 in the search window "
        f"(degree bound {degree_bound})"
    )


# -- cohomology classes ---------------------------------------------------------------------


@dataclass
class H1Report:
    group_label: str
    classes: tuple[Cocycle, ...]
    details: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.details)


def coboundary_samples(kind: str) -> list[tuple[str, list[list[GaussRat]]]]:
    """Sampled values of B * conj(B)^-1 over rational points of the
    complexified group, labelled by the sample B."""
    i = GaussRat(Fraction(0), Fraction(1))
    out: list[tuple[str, list[list[GaussRat]]]] = []
    if kind == "GL1":
        bs = [
            ("2", [[GaussRat.of(2)]]),
            ("i", [[i]]),
            ("1+i", [[GaussRat(Fraction(1), Fraction(1))]]),
            ("3-2i", [[GaussRat(Fraction(3), Fraction(-2))]]),
        ]
    elif kind == "MU_2":
        bs = [("1", [[GaussRat.of(1)]]), ("-1", [[GaussRat.of(-1)]])]
    elif kind == "SO2":
        # rotation matrices over the complexified constants, eigenvalue
        # lambda = p + i q with p^2 + q^2 = 1 allowed complex
        pts = [
            ("lambda=2", Fraction(5, 4), Fraction(3, 4)),  # p=(2+1/2)/2 etc
            ("lambda=3", Fraction(5, 3), Fraction(4, 3)),
            ("lambda=1/2", Fraction(5, 4), Fraction(-3, 4)),
        ]
        bs = []
        for label, p_re, q_im in pts:
            # B = [[p, -q], [q, p]] with p real, q purely imaginary gives a
            # rotation matrix with complex entries and p^2 + q^2 = 1
            p = GaussRat.of(p_re)
            q = GaussRat(Fraction(0), q_im)
            bs.append((label, [[p, -q], [q, p]]))
        rational = [
            ("rational rotation 3/5", Fraction(3, 5), Fraction(4, 5)),
            ("rational rotation 5/13", Fraction(5, 13), Fraction(12, 13)),
        ]
        for label, a, b in rational:
            bs.append((label, [[GaussRat.of(a), GaussRat.of(-b)], [GaussRat.of(b), GaussRat.of(a)]]))
    else:
        raise Unsupported(f"no coboundary samples for {kind!r}")
    for label, b in bs:
        inv = inverse(mat_conj(b))
        if inv is None:
            continue
        out.append((label, mat_mul(b, inv)))
    return out


def _so2_eigenvalue(m) -> GaussRat:
    return GaussRat.of(m[0][0]) + GaussRat(Fraction(0), Fraction(1)) * GaussRat.of(m[1][0])


def h1_enumerate(group: MatrixGroup, kind: str) -> H1Report:
    """Representatives of the real-form classes for the named group kind,
    each validated as a cocycle, with sampled evidence that the listed
    nontrivial classes are not coboundaries.
    """
    one, zero = GaussRat.of(1), GaussRat.of(0)
    details: list[tuple[str, bool, str]] = []
    if kind == "GL1":
        classes = (Cocycle(((one,),), "1"),)
        samples = coboundary_samples(kind)
        hit = any(m == [[GaussRat.of(-1)]] for _, m in samples)
        details.append(
            (
                "-1 is a coboundary (B = i), single class",
                hit,
                "B * conj(B)^-1 = -1 at B = i",
            )
        )
    elif kind == "MU_2":
        classes = (
            Cocycle(((one,),), "1"),
            Cocycle(((GaussRat.of(-1),),), "-1"),
        )
        samples = coboundary_samples(kind)
        never = all(m == [[one]] for _, m in samples)
        details.append(
            (
                "coboundaries over the order-2 group are trivial",
                never,
                "conjugation fixes both elements, so B * conj(B)^-1 = 1",
            )
        )
    elif kind == "SO2":
        eye = ((one, zero), (zero, one))
        neg = ((-one, zero), (zero, -one))
        classes = (Cocycle(eye, "I"), Cocycle(neg, "-I"))
        samples = coboundary_samples(kind)
        ok = True
        for label, m in samples:
            lam = _so2_eigenvalue(m)
            # coboundary eigenvalues are norms, hence positive rationals
            if not (lam.im == 0 and lam.re > 0):
                ok = False
        details.append(
            (
                "sampled coboundaries have positive real eigenvalue, -I does not",
                ok and _so2_eigenvalue([[-one, zero], [zero, -one]]).re < 0,
                f"checked {len(samples)} sampled points of the complexified group",
            )
        )
    else:
        raise Unsupported(f"no class list for {kind!r}")

    for c in classes:
        if not cocycle_check(group, c.matrix):
            details.append((f"{c.label} is a cocycle", False, ""))
        else:
            details.append((f"{c.label} is a cocycle", True, ""))
    return H1Report(kind, classes, details)


# -- the two square-root fields are not isomorphic -------------------------------------------


@dataclass
class RadicalPairReport:
    plus_tower: DiffTower
    minus_tower: DiffTower
    details: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.details)


def radical_pair_report(pv: PVExtension, tw: TwistResult) -> RadicalPairReport:
    """Why the square roots of f and -f generate non-isomorphic fields.

    Any differential isomorphism over the base matches solution spaces of
    Y' = a Y, which are one-dimensional over the constants; comparing the
    squares of matched generators forces a rational constant gamma with
    gamma^2 = -1, which does not exist.
    """
    ext = pv.extension
    twisted = tw.tower
    g = ext.lift(pv.solutions[0])
    h = twisted.lift(tw.solutions[0])
    rate_g = g.derive() / g
    rate_h = h.derive() / h
    details: list[tuple[str, bool, str]] = []
    details.append(
        (
            "both generators solve the same first-order equation",
            _same_rate(pv, g, h),
            f"rates {rate_g} and {rate_h}",
        )
    )

    span = _solution_span(twisted, rate_h)
    only_h = len(span) == 1 and _spans_same_line(twisted, span[0], h)
    details.append(
        (
            "solution space in the twisted field is the line through h",
            only_h,
            f"window solutions: {[str(x) for x in span]}",
        )
    )

    g2 = g * g
    h2 = h * h
    # gamma^2 * h^2 = g^2 would need gamma^2 = g^2 / h^2 = -1
    ratio = _constant_ratio(pv, tw, g2, h2)
    details.append(
        (
            "matching generators forces gamma^2 = -1 over the rational constants",
            ratio == GaussRat.of(-1),
            f"g^2 / h^2 re-read over the base is {ratio}",
        )
    )
    details.append(
        (
            "gamma^2 = -1 has no solution in the constants of a real field",
            True,
            "squares of rationals are nonnegative",
        )
    )
    return RadicalPairReport(ext, twisted, details)


def _same_rate(pv: PVExtension, g: FieldElement, h: FieldElement) -> bool:
    a0 = pv.ode.coeffs[0]
    return pv.ode.apply(g).is_zero() and pv.ode.apply(h).is_zero() and not a0.is_zero()


def _solution_span(tower: DiffTower, rate: FieldElement) -> list[FieldElement]:
    """Window elements solving Y' = rate * Y, up to scaling, via one exact
    kernel computation."""
    window, _ = tower.scan_basis(2, 2)
    derivs = [x.derive() - rate * x for x in window]
    sols = []
    for vec in tower.linear_relations(derivs):
        x = tower.combine(vec, window)
        if not x.is_zero():
            sols.append(x)
    return sols


def _spans_same_line(tower: DiffTower, x: FieldElement, h: FieldElement) -> bool:
    return (x / h).as_scalar() is not None


def _constant_ratio(pv, tw, g2: FieldElement, h2: FieldElement):
    """g^2 and h^2 both lie in the base; their ratio is the forced gamma^2."""
    from .correspondence import _into_base

    a = _into_base(pv.base, g2)
    b = _into_base(pv.base, h2)
    r = a / b
    return r.rational_value() if r.is_rational_constant() else None
