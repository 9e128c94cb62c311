"""Kauffman invariant of framed unoriented links in RP^3.

Values lie in Z[a^+-1, z^+-1, y].  The relations are

* ``K(D u unknot) = d * K(D)`` with ``d = (a + a^-1)/z - 1``;
* ``K(D) + K(D') = z (K(A) + K(B))`` where ``D'`` switches a crossing and
  ``A``, ``B`` are its two smoothings;
* a positive kink multiplies by ``a``;
* ``K(L_n) = y^n``.

Every descending simple diagram evaluates to ``d^p y^m`` directly, so there
is no separate standard-diagram step.
"""

from __future__ import annotations

from .descend import (
    AFFINE_BASE,
    SELF_CROSS_BASE,
    SIMPLE,
    canonically_oriented,
    strip_trivial_components,
    switch_plan,
)
from .diagram import DiagramError, PrimaryPair
from .ring import KauffmanValue, delta
from ._skein import InvariantResult, SkeinEvaluator, check_basepoint

__all__ = ["KauffmanEvaluator", "kauffman", "compute_kauffman", "affinity_bound"]


class KauffmanEvaluator(SkeinEvaluator):
    """Memoizing Kauffman evaluator; orientations of the input are ignored."""

    unoriented = True

    def unknot(self):
        return delta()

    def line_power(self, m):
        return KauffmanValue.monomial(y=m)

    def _prepare(self, bd):
        if not isinstance(bd.base, PrimaryPair):
            return bd
        return canonically_oriented(bd)

    def _plan(self, bd):
        kind = check_basepoint(bd)
        d = bd.diagram
        if kind == SIMPLE:
            _, p = strip_trivial_components(d)
            m = sum(1 for c in range(d.n_components) if d.homology(c) == 1)
            unit = delta() ** p if p else KauffmanValue.one()
            leaf = unit.shift(y=m)
            return ("simple", switch_plan(bd), lambda alpha: leaf)
        if kind == AFFINE_BASE:
            def affine_terminal(alpha):
                w, rest = self._affine_terminal_parts(alpha)
                return (delta() * self.value(rest)).shift(a=w)

            return ("affine", switch_plan(bd), affine_terminal)
        if kind == SELF_CROSS_BASE:
            def dashed_terminal(alpha):
                w, rest = self._dashed_terminal_parts(alpha)
                return self.value(rest).shift(a=w)

            return ("self-crossing", switch_plan(bd), dashed_terminal)
        raise DiagramError("no basepoint case applies")

    def _chain(self, d, order, terminal):
        total = KauffmanValue.zero()
        sign = 1
        for x in order:
            pair = self.value(d.smooth_oriented(x)) + self.value(d.smooth_unoriented(x))
            total = total + pair.shift(sign, z=1)
            sign = -sign
            d = d.switch(x)
        return total + terminal(d).shift(sign)


def kauffman(d, memo=True):
    """Kauffman value of a diagram."""
    return KauffmanEvaluator(memo)(d)


def affinity_bound(value):
    """Top power of ``y`` in a value."""
    deg = value.deg_in("y")
    return 0 if deg is None else deg


def compute_kauffman(d, memo=True):
    ev = KauffmanEvaluator(memo)
    v = ev(d)
    return InvariantResult(v, d.crossing_count, affinity_bound(v), ev.stats.as_dict())
