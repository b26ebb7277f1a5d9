"""Confluent rewriting modulo polynomial relations.

Relations are completed to a reduced Groebner basis under the context's
graded-lex order (Buchberger's algorithm with a step budget), then oriented
into rules  leading monomial -> tail.  Normal forms are computed by total
multivariate division: always reduce the largest remaining term with the
first applicable rule, so the result is canonical and the map is
GaussRat-linear and idempotent.

Rules may be applied to polynomials living in a wider context (extra
variables of lower or higher rank), which stays confluent because a rule's
left-hand side dominates its tail in any context that preserves relative
ranks, and no new critical pairs appear between rules and fresh variables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BudgetExceeded, ContextError
from .gauss import GaussRat
from .poly import Context, Monomial, Poly

__all__ = ["Rule", "RewriteSystem", "buchberger"]

DEFAULT_BUDGET = 10_000


class Rule:
    """Oriented relation lhs -> rhs with every rhs monomial below lhs."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Monomial, rhs: Poly):
        self.lhs = lhs
        self.rhs = rhs

    @staticmethod
    def orient(p: Poly) -> "Rule":
        """Turn a nonzero polynomial relation p = 0 into a rule lm -> tail."""
        if p.is_zero():
            raise ValueError("cannot orient the zero relation")
        p = p.monic()
        lm = p.leading_monomial()
        tail = Poly(p.context, {m: -c for m, c in p.terms.items() if m != lm})
        return Rule(lm, tail)

    def as_poly(self) -> Poly:
        return Poly(self.rhs.context, {self.lhs: GaussRat.of(1)}) - self.rhs

    def __eq__(self, other) -> bool:
        return isinstance(other, Rule) and self.lhs == other.lhs and self.rhs == other.rhs

    def __hash__(self) -> int:
        return hash((self.lhs, self.rhs))

    def __repr__(self) -> str:
        return f"Rule({self.lhs.render(self.rhs.context)} -> {self.rhs})"


class RewriteSystem:
    """A confluent set of rules sharing one context."""

    __slots__ = ("context", "rules", "_lifted")

    def __init__(self, context: Context, rules: Sequence[Rule] = ()):
        self.context = context
        self.rules: tuple[Rule, ...] = tuple(
            sorted(rules, key=lambda r: context.key(r.lhs), reverse=True)
        )
        self._lifted: dict[Context, tuple[Rule, ...]] = {}

    def _rules_for(self, ctx: Context) -> tuple[Rule, ...]:
        if ctx == self.context:
            return self.rules
        cached = self._lifted.get(ctx)
        if cached is None:
            cached = tuple(Rule(r.lhs, r.rhs.in_context(ctx)) for r in self.rules)
            self._lifted[ctx] = cached
        return cached

    def normal_form(self, p: Poly) -> Poly:
        """Canonical representative of p modulo the rules."""
        ctx = p.context
        if ctx != self.context and not ctx.covers(self.context):
            raise ContextError(
                f"cannot rewrite {ctx.variables} modulo rules over {self.context.variables}"
            )
        rules = self._rules_for(ctx)
        if not rules:
            return p
        key = ctx.key
        work = dict(p.terms)
        done: dict[Monomial, GaussRat] = {}
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            hit = None
            for r in rules:
                if r.lhs.divides(m):
                    hit = r
                    break
            if hit is None:
                done[m] = c
                continue
            quot = m / hit.lhs
            for rm, rc in hit.rhs.terms.items():
                k = rm * quot
                cur = work.get(k)
                val = c * rc if cur is None else cur + c * rc
                if val:
                    work[k] = val
                elif cur is not None:
                    del work[k]
        return Poly(ctx, done)

    def is_zero_mod(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RewriteSystem)
            and self.context == other.context
            and self.rules == other.rules
        )

    def __hash__(self) -> int:
        return hash((self.context, self.rules))

    def __repr__(self) -> str:
        body = "; ".join(
            f"{r.lhs.render(self.context)} -> {r.rhs}" for r in self.rules
        )
        return f"RewriteSystem[{body}]"


def _spoly(f: Poly, g: Poly) -> Poly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = lf.lcm(lg)
    a = f.mul_monomial(l / lf, f.leading_coefficient().inverse())
    b = g.mul_monomial(l / lg, g.leading_coefficient().inverse())
    return a - b


def buchberger(
    relations: Iterable[Poly],
    context: Context,
    budget: int = DEFAULT_BUDGET,
) -> RewriteSystem:
    """Complete `relations` to the reduced Groebner basis and orient it.

    `budget` bounds the number of S-polynomial reductions; exceeding it
    raises BudgetExceeded rather than looping on a hostile input.
    """
    basis: list[Poly] = []
    pending = sorted(
        (p.in_context(context).monic() for p in relations if not p.is_zero()),
        key=lambda p: (context.key(p.leading_monomial()), str(p)),
    )

    def reduce_by(p: Poly, others: Sequence[Poly]) -> Poly:
        system = RewriteSystem(context, [Rule.orient(q) for q in others])
        return system.normal_form(p)

    steps = 0
    for p in pending:
        r = reduce_by(p, basis)
        if not r.is_zero():
            basis.append(r.monic())

    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        if f.leading_monomial().coprime(g.leading_monomial()):
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(
                f"completion exceeded {budget} S-polynomial reductions"
            )
        r = reduce_by(_spoly(f, g), basis)
        if not r.is_zero():
            basis.append(r.monic())
            k = len(basis) - 1
            pairs.extend((idx, k) for idx in range(k))

    # Inter-reduce to the unique reduced basis.
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            others = [q for k, q in enumerate(basis) if k != idx and not q.is_zero()]
            r = reduce_by(basis[idx], others)
            r = r.monic() if not r.is_zero() else r
            if r != basis[idx]:
                basis[idx] = r
                changed = True
        basis = [q for q in basis if not q.is_zero()]

    basis.sort(key=lambda p: context.key(p.leading_monomial()), reverse=True)
    return RewriteSystem(context, [Rule.orient(p) for p in basis])
