"""Shared recursion driver for the two skein evaluators."""

from __future__ import annotations

from dataclasses import dataclass, field

from .descend import (
    AFFINE_BASE,
    SELF_CROSS_BASE,
    SIMPLE,
    canonical_basepoint,
    classify,
    dashed_part,
    oriented_view,
    strip_trivial_components,
)
from .diagram import AffinePoint, BasedDiagram, DiagramError, PrimaryPair, SelfCrossing, canonical_form


@dataclass
class EvalStats:
    nodes: int = 0
    memo_hits: int = 0
    max_depth: int = 0
    cases: dict = field(default_factory=dict)

    def as_dict(self):
        return {"nodes": self.nodes, "memo_hits": self.memo_hits,
                "max_depth": self.max_depth, "cases": dict(self.cases)}


@dataclass
class InvariantResult:
    """An invariant value together with how it was obtained."""

    value: object
    crossings: int
    affinity_bound: int
    stats: dict


class SkeinEvaluator:
    """Evaluate an invariant by induction on crossings.

    Subclasses supply the ring operations and the base cases.  Values are
    memoized on the canonical code of the diagram, so isomorphic diagrams
    are computed once.  Recursion depth is at most a few frames per
    crossing, far below the interpreter limit for any diagram this
    algorithm can finish on.
    """

    unoriented = False

    def __init__(self, memo=True):
        self.memo = {} if memo else None
        self.stats = EvalStats()
        self._depth = 0

    # ring hooks

    def unknot(self):
        raise NotImplementedError

    def line_power(self, m):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    # entry points

    def __call__(self, d):
        return self.value(d)

    def value(self, d):
        """Invariant of a diagram (any basepoint; the result does not depend on it)."""
        d, p = strip_trivial_components(d)
        factor = self.unknot() ** p if p else None
        if not d.signs:
            v = self.line_power(d.n_components)
        else:
            key, cd = canonical_form(d, unoriented=self.unoriented)
            v = self.memo.get(key) if self.memo is not None else None
            if v is None:
                v = self._based(canonical_basepoint(cd), None)
                if self.memo is not None:
                    self.memo[key] = v
            else:
                self.stats.memo_hits += 1
        return v * factor if factor is not None else v

    def evaluate_based(self, bd, order=None):
        """Value computed from the given basepoint and switching order.

        ``order`` must be a permutation of the crossings that the basepoint
        requires to be switched.
        """
        return self._based(bd, order)

    def plan_for(self, bd):
        """``(case name, crossings to switch)`` the evaluator uses for ``bd``."""
        case, plan, _ = self._plan(self._prepare(oriented_view(bd)))
        return case, plan

    # recursion

    def _based(self, bd, order):
        self.stats.nodes += 1
        self._depth += 1
        self.stats.max_depth = max(self.stats.max_depth, self._depth)
        try:
            bd = self._prepare(oriented_view(bd))
            d = bd.diagram
            case, plan, terminal = self._plan(bd)
            self.stats.cases[case] = self.stats.cases.get(case, 0) + 1
            if order is None:
                order = plan
            elif sorted(order) != sorted(plan):
                raise DiagramError("switching order must permute the switch plan")
            return self._chain(d, list(order), lambda alpha: terminal(BasedDiagram(alpha, bd.base)))
        finally:
            self._depth -= 1

    def _prepare(self, bd):
        """Hook to normalise a based diagram before planning."""
        return bd

    def _plan(self, bd):
        """``(case name, crossings to switch, terminal evaluator)``."""
        raise NotImplementedError

    def _chain(self, d, order, terminal):
        raise NotImplementedError

    # helpers for the terminal cases

    @staticmethod
    def _affine_terminal_parts(bd):
        d = bd.diagram
        c = bd.base.comp
        return d.writhe(c), d.delete_component(c)

    @staticmethod
    def _dashed_terminal_parts(bd):
        d = bd.diagram
        x = bd.base.crossing
        c, start, inner = dashed_part(d, x)
        members = {}
        for i in inner:
            t = d.words[c][i]
            members[t[0]] = members.get(t[0], 0) + 1
        # crossings with both passes on the dashed part, plus x itself
        w = d.signs[x] + sum(s for y, s in d.signs.items() if members.get(y) == 2)
        other = next(i for _, i, _ in d.passes()[x] if i != start)
        return w, d.delete_tokens(c, list(inner) + [start, other])


def check_basepoint(bd):
    """Raise unless the basepoint type is the one the diagram calls for."""
    kind = classify(bd.diagram)
    want = {SIMPLE: PrimaryPair, AFFINE_BASE: AffinePoint, SELF_CROSS_BASE: SelfCrossing}.get(kind)
    if want is None or not isinstance(bd.base, want):
        raise DiagramError(f"basepoint {bd.base!r} is not admissible for a {kind} diagram")
    return kind


__all__ = ["SkeinEvaluator", "EvalStats", "InvariantResult", "check_basepoint"]
