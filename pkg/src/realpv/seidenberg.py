"""A real differential field that is not formally real, and what breaks.

The field adjoins a, b over the rational constants with

    a' = b,   b' = -4a,   4a^2 + b^2 + 1 = 0.

Its constants are still the rationals (certified by an exact window scan),
yet -1 is a sum of squares: (2a)^2 + b^2 = -1.  The generator a solves
Y'' + 4Y = 0 over the field, and adjoining an honest solution pair of that
same equation inevitably creates new constants, so the equation admits no
PV extension of this field without constant growth.  Both phenomena are
exhibited exactly: the witness by normal-form arithmetic, the obstruction
by running the usual certified construction and capturing its failure,
together with the explicit new constants the scan finds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotPV
from .pv import LinearODE, build_pv
from .realforms import non_reality_witness
from .tower import DiffTower, FieldElement

__all__ = [
    "build_seidenberg",
    "SeidenbergReport",
    "seidenberg_demo",
    "new_constant_demo",
]


def new_constant_demo() -> tuple[DiffTower, list[FieldElement]]:
    """Adjoin two abstract solution pairs of Y' = Z, Z' = -Y and scan.

    With no algebraic relations imposed, the window scan must discover the
    circle first integrals y_i^2 + z_i^2 and the cross determinant
    y1*z2 - y2*z1 as new constants.  This is why the certified circle
    construction fixes the relation s^2 + c^2 = 1 up front: the free
    adjunction is never constant-free.
    """
    base = DiffTower(base_var=None)
    ext = base.adjoin_abstract(
        ["y1", "z1", "y2", "z2"], ["z1", "-y1", "z2", "-y2"]
    )
    return ext, ext.constant_scan(2, 0)


def build_seidenberg() -> DiffTower:
    """The non-real field: constants base, generators a and b as above."""
    base = DiffTower(base_var=None)
    return base.adjoin_abstract(
        ["a", "b"], ["b", "-4*a"], ["4*a^2+b^2+1"]
    )


@dataclass
class SeidenbergReport:
    tower: DiffTower
    witness: tuple[FieldElement, ...]
    new_constants: tuple[FieldElement, ...]
    pv_failure: str
    details: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.details)


def seidenberg_demo() -> SeidenbergReport:
    F = build_seidenberg()
    a, b = F.var("a"), F.var("b")
    details: list[tuple[str, bool, str]] = []

    # the defining relation holds and differentiates consistently
    rel = F.const(4) * a * a + b * b + F.one()
    details.append(("4a^2 + b^2 + 1 = 0 in the field", rel.is_zero(), str(rel)))

    # constants of the field itself are just the rationals
    own = F.constant_scan(3, 0)
    details.append(
        (
            "window scan finds no new constants in the field itself",
            not own,
            f"{len(own)} kernel directions",
        )
    )

    # -1 is a sum of two squares: the field is not formally real
    wit = non_reality_witness(F)
    sq = F.zero()
    for x in wit:
        sq = sq + x * x
    details.append(
        (
            "sum of squares equal to -1",
            sq == F.const(-1),
            " , ".join(str(x) for x in wit),
        )
    )

    # a solves Y'' + 4Y = 0 over the field
    ode = LinearODE(F, (F.const(4), F.zero()))
    details.append(
        ("generator a solves Y'' + 4Y = 0", ode.apply(a).is_zero(), "a'' = -4a")
    )

    # the certified circle construction refuses: new constants appear
    failure = ""
    try:
        build_pv(F, ode, "CIRCLE")
        details.append(
            ("certified construction must fail over this field", False, "it succeeded")
        )
    except NotPV as e:
        failure = str(e)
        report = getattr(e, "report", None)
        names = [c.name for c in report.failures()] if report else []
        details.append(
            (
                "certified construction fails on the constant check",
                "no_new_constants_in_window" in names,
                f"failing checks: {names}",
            )
        )

    # exhibit the new constants directly on the adjoined tower
    ext = F.adjoin_abstract(["c", "s"], ["-2*s", "2*c"], ["s^2+c^2-1"])
    found = ext.constant_scan(2, 0)
    consts = tuple(found)
    all_const = all(x.derive().is_zero() for x in consts)
    none_scalar = all(x.as_scalar() is None for x in consts)
    details.append(
        (
            "adjoined solution pair creates nonscalar constants",
            bool(consts) and all_const and none_scalar,
            " ; ".join(str(x) for x in consts),
        )
    )

    return SeidenbergReport(F, wit, consts, failure, details)
