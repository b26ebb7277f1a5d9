"""Picard-Vessiot extensions for a closed list of equation classes.

A PV extension of the base field is presented as a tower carrying a full
system of solutions of a monic linear ODE, certified by three exact checks:

  * every listed solution satisfies the equation (normal form zero),
  * the wronskian of the solution system is invertible,
  * a bounded constant scan of the tower finds no new constants.

The supported construction classes:

  EXP         Y' = f Y            one exponential generator
  RADICAL     Y' = (p/q)(f'/f) Y  one algebraic generator, g^q = f^p
  CIRCLE      Y'' + w^2 Y = 0     sine/cosine pair, s^2 + c^2 = 1
  CONSTCOEFF2 Y'' + aY' + bY = 0  rational constants; split by root type

Each construction also records the first-order companion matrix of the
solution system over the base, which is what the Galois-group module turns
into relation generators.

Realification computes the conjugation-fixed part of a solution space over
the complexified tower by exact linear algebra and re-reads the result over
the real presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    ModeError,
    NotPV,
    StabilizationError,
    Unsupported,
    UnsupportedEquation,
)
from .gauss import GaussRat, is_square, rational_sqrt
from .linsolve import inverse, kernel
from .poly import Monomial, Poly
from .tower import DiffTower, FieldElement, Kind
from .wronskian import wronskian_det, wronskian_matrix

__all__ = [
    "LinearODE",
    "Check",
    "CertificateReport",
    "SolutionSpace",
    "PVExtension",
    "build_pv",
    "verify_pv",
    "complexify_pv",
    "realify",
    "EQUATION_CLASSES",
]

EQUATION_CLASSES = ("EXP", "RADICAL", "CIRCLE", "CONSTCOEFF2")

DEFAULT_SCAN_BOUNDS = (4, 3)


@dataclass(frozen=True)
class LinearODE:
    """Monic linear ODE  y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0
    with coefficients in a base tower, listed from a_0 upward."""

    base: DiffTower
    coeffs: tuple[FieldElement, ...]

    @staticmethod
    def from_texts(base: DiffTower, texts: Sequence[str]) -> "LinearODE":
        return LinearODE(base, tuple(base.parse(s) for s in texts))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def apply(self, y: FieldElement) -> FieldElement:
        """Evaluate the differential operator at y (in y's tower)."""
        tower = y.tower
        derivs = [y]
        for _ in range(self.order):
            derivs.append(derivs[-1].derive())
        acc = derivs[self.order]
        for k, a in enumerate(self.coeffs):
            acc = acc + tower.lift(a) * derivs[k]
        return acc

    def describe(self) -> str:
        n = self.order
        parts = [f"Y^({n})" if n > 2 else ("Y''" if n == 2 else "Y'")]
        for k in range(n - 1, -1, -1):
            a = self.coeffs[k]
            if a.is_zero():
                continue
            dk = "Y" + ("'" * k if k <= 2 else f"^({k})")
            parts.append(f"({a})*{dk}")
        return " + ".join(parts) + " = 0"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CertificateReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass
class SolutionSpace:
    """A constants-span of solutions inside a tower."""

    tower: DiffTower
    basis: tuple[FieldElement, ...]
    constants: str  # "real" or "complexified"


@dataclass
class PVExtension:
    base: DiffTower
    extension: DiffTower
    ode: LinearODE
    eq_class: str
    solutions: tuple[FieldElement, ...]
    companion: tuple[tuple[FieldElement, ...], ...]
    scan_bounds: tuple[int, int]
    certificates: CertificateReport
    meta: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.ode.order

    def solution_space(self) -> SolutionSpace:
        return SolutionSpace(self.extension, self.solutions, self.extension.mode)

    def describe(self) -> list[str]:
        lines = [f"class {self.eq_class}: {self.ode.describe()}"]
        lines += self.extension.describe()
        lines.append(
            "solutions: " + ", ".join(str(s) for s in self.solutions)
        )
        return lines


# -- construction -------------------------------------------------------------


def _rational_const(x: FieldElement) -> Fraction | None:
    if not x.is_rational_constant():
        return None
    v = x.rational_value()
    if v.im != 0:
        return None
    return v.re


def _certify(pv: PVExtension) -> CertificateReport:
    rep = CertificateReport()
    tower = pv.extension
    bad = [
        (i, r)
        for i, s in enumerate(pv.solutions)
        if not (r := pv.ode.apply(tower.lift(s))).is_zero()
    ]
    rep.add(
        "solutions_satisfy_equation",
        not bad,
        "all normal forms zero"
        if not bad
        else f"solution {bad[0][0] + 1} leaves residue {bad[0][1]}",
    )
    det = wronskian_det(wronskian_matrix(tower, pv.solutions))
    rep.add(
        "wronskian_invertible",
        not det.is_zero(),
        f"wronskian determinant = {det}",
    )
    news = tower.constant_scan(*pv.scan_bounds)
    rep.add(
        "no_new_constants_in_window",
        not news,
        f"scan bounds {pv.scan_bounds}: "
        + ("no new constants" if not news else "found " + ", ".join(str(x) for x in news)),
    )
    companion_ok = True
    for j, s in enumerate(pv.solutions):
        expect = tower.zero()
        for i, row in enumerate(pv.companion):
            a = row[j]
            if not a.is_zero():
                expect = expect + tower.lift(a) * tower.lift(pv.solutions[i])
        if tower.lift(s).derive() != expect:
            companion_ok = False
            break
    rep.add(
        "companion_matrix_consistent",
        companion_ok,
        "solution derivatives match the recorded first-order system",
    )
    return rep


def _finish(pv: PVExtension) -> PVExtension:
    rep = _certify(pv)
    pv.certificates = rep
    if not rep.ok:
        names = ", ".join(c.name for c in rep.failures())
        raise NotPV(f"certificate failed: {names}", rep)
    return pv


def verify_pv(pv: PVExtension) -> CertificateReport:
    """Re-run all certificates; returns the report instead of raising."""
    return _certify(pv)


def _build_exp(base: DiffTower, ode: LinearODE, bounds) -> PVExtension:
    if ode.order != 1:
        raise UnsupportedEquation("EXP expects a first-order equation")
    rate = -ode.coeffs[0]
    ext = base.adjoin_exponential("e", rate)
    return PVExtension(
        base, ext, ode, "EXP", (ext.var("e"),), ((rate,),), bounds, CertificateReport()
    )


def _build_radical(
    base: DiffTower, ode: LinearODE, bounds, radical_base: FieldElement | None
) -> PVExtension:
    if ode.order != 1:
        raise UnsupportedEquation("RADICAL expects a first-order equation")
    f = radical_base if radical_base is not None else (
        base.var(base.base_var) if base.base_var else None
    )
    if f is None:
        raise UnsupportedEquation("RADICAL needs a base element f with a0 = -(p/q) f'/f")
    df = f.derive()
    if df.is_zero():
        raise UnsupportedEquation("radical base element is constant")
    ratio = -ode.coeffs[0] * f / df
    r = _rational_const(ratio)
    if r is None:
        raise UnsupportedEquation(
            f"a0 is not a rational multiple of f'/f for f = {f}"
        )
    p, q = r.numerator, r.denominator
    if p <= 0:
        raise UnsupportedEquation(
            f"radical exponent {r} not supported (need p/q with p >= 1)"
        )
    ctx = base.extended_context(["g"])
    gq = Poly.variable(ctx, "g", q)
    relation = f.den.in_context(ctx) ** p * gq - f.num.in_context(ctx) ** p
    rate = -ode.coeffs[0]
    deriv = (rate.num.in_context(ctx) * Poly.variable(ctx, "g"), rate.den.in_context(ctx))
    ext = base.adjoin_abstract(["g"], [deriv], [relation], kind=Kind.ALGEBRAIC)
    g = ext.var("g")
    pv = PVExtension(
        base, ext, ode, "RADICAL", (g,), ((rate,),), bounds, CertificateReport()
    )
    pv.meta["radical"] = {"p": p, "q": q, "f": str(f)}
    return pv


def _build_circle(base: DiffTower, ode: LinearODE, bounds) -> PVExtension:
    if ode.order != 2 or not ode.coeffs[1].is_zero():
        raise UnsupportedEquation("CIRCLE expects Y'' + w^2 Y = 0")
    a0 = _rational_const(ode.coeffs[0])
    if a0 is None or a0 <= 0 or not is_square(a0):
        raise UnsupportedEquation("CIRCLE needs a0 = w^2 with w rational nonzero")
    w = rational_sqrt(a0)
    ws = str(GaussRat(w))
    ext = base.adjoin_abstract(
        ["c", "s"], [f"-({ws})*s", f"({ws})*c"], ["s^2+c^2-1"]
    )
    s, c = ext.var("s"), ext.var("c")
    zero, omega = base.zero(), base.const(GaussRat(w))
    companion = ((zero, -omega), (omega, zero))
    pv = PVExtension(
        base, ext, ode, "CIRCLE", (s, c), companion, bounds, CertificateReport()
    )
    pv.meta["omega"] = str(w)
    return pv


def _build_constcoeff2(base: DiffTower, ode: LinearODE, bounds) -> PVExtension:
    if ode.order != 2:
        raise UnsupportedEquation("CONSTCOEFF2 expects a second-order equation")
    b = _rational_const(ode.coeffs[0])
    a = _rational_const(ode.coeffs[1])
    if a is None or b is None:
        raise UnsupportedEquation("CONSTCOEFF2 needs rational constant coefficients")
    disc = a * a - 4 * b
    zero = base.zero()
    if disc > 0 and is_square(disc):
        root = rational_sqrt(disc)
        l1, l2 = (-a + root) / 2, (-a - root) / 2
        if l2 == 0:
            l1, l2 = l2, l1  # put the zero root first for a stable layout
        sols: list[FieldElement]
        if l1 == 0:
            ext = base.adjoin_exponential("e", base.const(GaussRat(l2)))
            sols = [ext.one(), ext.var("e")]
            companion = ((zero, zero), (zero, base.const(GaussRat(l2))))
        else:
            ext = base.adjoin_exponential("e1", base.const(GaussRat(l1)))
            ext = ext.adjoin_exponential("e2", ext.const(GaussRat(l2)))
            sols = [ext.var("e1"), ext.var("e2")]
            companion = (
                (base.const(GaussRat(l1)), zero),
                (zero, base.const(GaussRat(l2))),
            )
        pv = PVExtension(
            base, ext, ode, "CONSTCOEFF2", tuple(sols), companion, bounds,
            CertificateReport(),
        )
        pv.meta["roots"] = f"distinct rational {l1}, {l2}"
        return pv
    if disc == 0:
        lam = Fraction(-a, 2)
        if lam == 0:
            if not base.base_var:
                raise UnsupportedEquation("Y''=0 needs the base variable t")
            sols2 = (base.one(), base.var(base.base_var))
            companion = ((zero, base.one()), (zero, zero))
            pv = PVExtension(
                base, base, ode, "CONSTCOEFF2", sols2, companion, bounds,
                CertificateReport(),
            )
            pv.meta["roots"] = "double root 0"
            return pv
        ext = base.adjoin_exponential("e", base.const(GaussRat(lam)))
        ls = str(GaussRat(lam))
        ext = ext.adjoin_abstract(["u"], [f"({ls})*u + e"], [])
        sols3 = (ext.var("e"), ext.var("u"))
        companion = (
            (base.const(GaussRat(lam)), base.one()),
            (zero, base.const(GaussRat(lam))),
        )
        pv = PVExtension(
            base, ext, ode, "CONSTCOEFF2", sols3, companion, bounds,
            CertificateReport(),
        )
        pv.meta["roots"] = f"double root {lam}"
        return pv
    if disc < 0 and is_square(-disc):
        lam = Fraction(-a, 2)
        mu = rational_sqrt(-disc) / 2
        ms = str(GaussRat(mu))
        tower = base
        if lam != 0:
            tower = tower.adjoin_exponential("e", base.const(GaussRat(lam)))
        tower = tower.adjoin_abstract(
            ["c", "s"], [f"-({ms})*s", f"({ms})*c"], ["s^2+c^2-1"]
        )
        c, s = tower.var("c"), tower.var("s")
        if lam != 0:
            e = tower.var("e")
            sols4 = (e * c, e * s)
        else:
            sols4 = (c, s)
        companion = (
            (base.const(GaussRat(lam)), base.const(GaussRat(mu))),
            (base.const(GaussRat(-mu)), base.const(GaussRat(lam))),
        )
        pv = PVExtension(
            base, tower, ode, "CONSTCOEFF2", sols4, companion, bounds,
            CertificateReport(),
        )
        pv.meta["roots"] = f"conjugate pair {lam} +/- {mu} i"
        return pv
    raise UnsupportedEquation(
        f"characteristic roots are irrational (discriminant {disc})"
    )


def build_pv(
    base: DiffTower,
    ode: LinearODE,
    eq_class: str,
    scan_bounds: tuple[int, int] = DEFAULT_SCAN_BOUNDS,
    radical_base: FieldElement | None = None,
) -> PVExtension:
    """Construct and certify a PV extension for the given equation class.

    Raises UnsupportedEquation when the equation does not match the class
    and NotPV (with the certificate report attached) when a certificate
    fails.
    """
    if eq_class not in EQUATION_CLASSES:
        raise UnsupportedEquation(f"unknown equation class {eq_class!r}")
    if ode.base != base:
        raise UnsupportedEquation("equation coefficients live over a different base")
    if eq_class == "EXP":
        pv = _build_exp(base, ode, scan_bounds)
    elif eq_class == "RADICAL":
        pv = _build_radical(base, ode, scan_bounds, radical_base)
    elif eq_class == "CIRCLE":
        pv = _build_circle(base, ode, scan_bounds)
    else:
        pv = _build_constcoeff2(base, ode, scan_bounds)
    return _finish(pv)


# -- complexification and realification ---------------------------------------


def _reread(x: FieldElement, tower: DiffTower) -> FieldElement:
    return tower.elem(x.num, x.den)


def _scaled_sum(
    tower: DiffTower, elements: Sequence[FieldElement], scalars: Sequence[GaussRat]
) -> FieldElement:
    total = tower.zero()
    for x, c in zip(elements, scalars):
        if c:
            total = total + x.scale(c)
    return total


def _to_base(x: FieldElement, base: DiffTower) -> FieldElement:
    allowed = set(base.context.variables)
    if not (set(x.num.variables()) | set(x.den.variables())) <= allowed:
        raise StabilizationError(f"companion entry {x} left the base field")
    return base.elem(
        Poly(base.context, dict(x.num.terms)), Poly(base.context, dict(x.den.terms))
    )


def complexify_pv(pv: PVExtension) -> PVExtension:
    base = pv.base.complexify()
    ext = pv.extension.complexify() if pv.extension != pv.base else base
    out = PVExtension(
        base,
        ext,
        LinearODE(base, tuple(_reread(a, base) for a in pv.ode.coeffs)),
        pv.eq_class,
        tuple(_reread(s, ext) for s in pv.solutions),
        tuple(tuple(_reread(a, base) for a in row) for row in pv.companion),
        pv.scan_bounds,
        CertificateReport(),
        dict(pv.meta),
    )
    return _finish(out)


def realify(pv: PVExtension, space: SolutionSpace | None = None) -> PVExtension:
    """Extract the real PV extension from a complexified one.

    Takes the conjugation-fixed part of the solution span (over the
    complexified constants), checks it is full, and re-reads everything
    over the real presentation of the tower.
    """
    ext = pv.extension
    if ext.mode != "complexified":
        raise ModeError("realify expects a complexified extension")
    if ext.conj_images:
        raise Unsupported(
            "solution tower has conjugation-moved generators; "
            "no real presentation available in this fragment"
        )
    basis = list(space.basis if space is not None else pv.solutions)
    basis = [ext.lift(b) for b in basis]
    n = pv.order

    # Close the span under conjugation (at most doubles, then stabilizes).
    def coords_in(x: FieldElement, fam: list[FieldElement]) -> list[GaussRat] | None:
        rels = ext.linear_relations(list(fam) + [x])
        for vec in rels:
            if vec[-1]:
                inv = vec[-1].inverse()
                return [-(v * inv) for v in vec[:-1]]
        return None

    for _ in range(2):
        images = [b.conj() for b in basis]
        missing = [im for im in images if coords_in(im, basis) is None]
        if not missing:
            break
        basis.extend(missing)
    else:
        raise StabilizationError("span not conjugation-stable after one closure step")
    if len(basis) > n:
        raise StabilizationError(
            f"conjugation closure has dimension {len(basis)} > equation order {n}"
        )

    m = len(basis)
    cols: list[list[GaussRat]] = []
    for b in basis:
        co = coords_in(b.conj(), basis)
        if co is None:
            raise StabilizationError("conjugation matrix could not be solved")
        cols.append(co)
    # conj(sum x_j b_j) = sum_j conj(x_j) * cols[j]; fixed points satisfy
    # M conj(x) = x.  Split x = a + i b into a real linear system.
    eqs: list[dict[int, GaussRat]] = []
    one = GaussRat.of(1)
    for i in range(m):
        re_eq: dict[int, GaussRat] = {}
        im_eq: dict[int, GaussRat] = {}
        for j in range(m):
            mij = cols[j][i]
            # coefficient of a_j and b_j in row i of (M conj(x) - x)
            re_a = GaussRat(mij.re) - (one if i == j else GaussRat.of(0))
            re_b = GaussRat(mij.im)
            im_a = GaussRat(mij.im)
            im_b = -GaussRat(mij.re) - (one if i == j else GaussRat.of(0))
            if re_a:
                re_eq[j] = re_a
            if re_b:
                re_eq[m + j] = re_b
            if im_a:
                im_eq[j] = im_a
            if im_b:
                im_eq[m + j] = im_b
        eqs.append(re_eq)
        eqs.append(im_eq)
    fixed: list[FieldElement] = []
    for vec in kernel(2 * m, eqs):
        coeffs = [
            GaussRat(vec[j].re, vec[m + j].re) for j in range(m)
        ]
        x = ext.combine(coeffs, basis)
        if not x.is_zero():
            fixed.append(x)
    # Deduplicate linear dependencies among the fixed vectors.
    independent: list[FieldElement] = []
    for x in fixed:
        if coords_in(x, independent) is None:
            independent.append(x)
    if len(independent) != n:
        raise StabilizationError(
            f"fixed part has dimension {len(independent)}, expected {n}"
        )
    normalized = [
        x.scale(x.num.leading_coefficient().inverse()) for x in independent
    ]
    normalized.sort(
        key=lambda x: ext.context.key(x.num.leading_monomial()), reverse=True
    )

    # The realified basis may differ from the recorded one by a constant
    # change of basis C; the first-order system transforms as C^-1 A C.
    orig = [ext.lift(s) for s in pv.solutions]
    cols = []
    for x in normalized:
        co = coords_in(x, orig)
        if co is None:
            raise StabilizationError("realified basis left the solution span")
        cols.append(co)
    change = [[cols[j][i] for j in range(n)] for i in range(n)]
    change_inv = inverse(change)
    if change_inv is None:
        raise StabilizationError("realified basis is degenerate")
    lifted = [[ext.lift(a) for a in row] for row in pv.companion]
    half = [
        [
            _scaled_sum(ext, [lifted[i][k] for k in range(n)], [r[j] for r in change])
            for j in range(n)
        ]
        for i in range(n)
    ]
    companion = tuple(
        tuple(
            _scaled_sum(ext, [half[k][j] for k in range(n)], change_inv[i])
            for j in range(n)
        )
        for i in range(n)
    )

    real_ext = ext.real_part()
    real_base = pv.base.real_part() if pv.base.mode == "complexified" else pv.base
    out = PVExtension(
        real_base,
        real_ext if real_ext != real_base else real_base,
        LinearODE(real_base, tuple(_reread(a, real_base) for a in pv.ode.coeffs)),
        pv.eq_class,
        tuple(_reread(x, real_ext) for x in normalized),
        tuple(tuple(_to_base(a, real_base) for a in row) for row in companion),
        pv.scan_bounds,
        CertificateReport(),
        dict(pv.meta),
    )
    return _finish(out)
