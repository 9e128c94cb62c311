"""Executable property suites for the two invariants.

Each suite returns a ``CheckReport`` that counts cases per label and keeps
the failing diagrams.  Labels separate the invariants and, for K, affine
from projective diagrams, because the two behave differently there.
The CLI ``check`` command and the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .descend import ArcPoint, admissible_basepoints, canonical_basepoint, is_descending
from .diagram import BND, Diagram, is_valid, standard_unlink, trace_faces, validation_errors
from .homfly import HomflyEvaluator
from .kauffman import KauffmanEvaluator
from .moves import apply_move, find_sites, graft_kink, kink_factor_exponent, random_diagram
from .oracle import classical_homfly, classical_kauffman, figure_eight, hopf_link, trefoil
from .ring import HomflyValue, KauffmanValue, delta, mu, sigma

__all__ = ["CheckReport", "Failure", "SUITES", "run_suite", "corpus", "affine_corpus",
           "shortening_instances"]

HOMFLY = "homfly"
KAUFFMAN = "kauffman"
BOTH = "both"


@dataclass
class Failure:
    label: str
    message: str
    diagram: object


@dataclass
class CheckReport:
    suite: str
    cases: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    def record(self, label, ok, message="", diagram=None):
        self.cases[label] += 1
        if not ok:
            self.failures.append(Failure(label, message, diagram))

    @property
    def ok(self):
        return not self.failures

    def failed_labels(self):
        return Counter(f.label for f in self.failures)

    def labels_ok(self, prefix):
        """Whether every case whose label starts with ``prefix`` passed."""
        return not any(f.label.startswith(prefix) for f in self.failures)

    def summary(self):
        bad = self.failed_labels()
        parts = [f"{lab}: {self.cases[lab] - bad[lab]}/{self.cases[lab]}"
                 for lab in sorted(self.cases)]
        return f"{self.suite}: " + ", ".join(parts)


def _k_label(d):
    return "K/projective" if d.nb else "K/affine"


def corpus(seed, count, max_crossings, oriented=True):
    """Reproducible mixed corpus of random diagrams."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        proj = rng.randrange(4)
        aff = rng.randrange(3) if proj else 1 + rng.randrange(2)
        d = random_diagram(rng.randrange(1 << 30), max_crossings, proj, aff, oriented)
        if d.signs:
            out.append(d)
    return out


def affine_corpus(seed, count, max_crossings):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = random_diagram(rng.randrange(1 << 30), max_crossings, 0, 1 + rng.randrange(3),
                           max_boundary=0)
        if d.signs:
            out.append(d)
    return out


class _Evaluators:
    def __init__(self, which=BOTH, memo=True):
        self.which = which
        self.H = HomflyEvaluator(memo)
        self.K = KauffmanEvaluator(memo)

    @property
    def homfly(self):
        return self.which in (HOMFLY, BOTH)

    @property
    def kauffman(self):
        return self.which in (KAUFFMAN, BOTH)


# suites


def check_golden(seed=0, iters=None, max_crossings=None, which=BOTH):
    """H(L_n) = z^n, K(L_n) = y^n for n <= 6, the unknot values and the empty diagram."""
    ev = _Evaluators(which)
    rep = CheckReport("golden")
    empty = Diagram(0, [], {})
    if ev.homfly:
        rep.record("H", ev.H(empty) == HomflyValue.one(), "H(empty) != 1", empty)
        rep.record("H", ev.H(standard_unlink(0)) == mu(), "H(L0) != mu", standard_unlink(0))
    if ev.kauffman:
        rep.record("K", ev.K(empty.as_unoriented()) == KauffmanValue.one(), "K(empty) != 1", empty)
        rep.record("K", ev.K(standard_unlink(0, False)) == delta(), "K(L0) != d", standard_unlink(0))
    for n in range(1, 7):
        if ev.homfly:
            d = standard_unlink(n)
            rep.record("H", ev.H(d) == HomflyValue.monomial(z=n), f"H(L{n}) != z^{n}", d)
        if ev.kauffman:
            d = standard_unlink(n, False)
            rep.record("K", ev.K(d) == KauffmanValue.monomial(y=n), f"K(L{n}) != y^{n}", d)
    return rep


def check_skein(seed=7, iters=200, max_crossings=6, which=BOTH):
    """Both skein relations at every crossing."""
    ev = _Evaluators(which)
    rep = CheckReport("skein")
    for d in corpus(seed, iters, max_crossings):
        u = d.as_unoriented()
        for x, e in sorted(d.signs.items()):
            if ev.homfly:
                dp, dm = (d, d.switch(x)) if e > 0 else (d.switch(x), d)
                lhs = ev.H(dp).shift(x=-1) - ev.H(dm).shift(x=1)
                rhs = sigma() * ev.H(d.smooth_oriented(x))
                rep.record("H", lhs == rhs, f"HOMFLY skein relation fails at crossing {x}", d)
            if ev.kauffman:
                lhs = ev.K(u) + ev.K(u.switch(x))
                rhs = (ev.K(u.smooth_oriented(x)) + ev.K(u.smooth_unoriented(x))).shift(z=1)
                rep.record(_k_label(d), lhs == rhs, f"Kauffman skein relation fails at crossing {x}", u)
    return rep


def check_kink(seed=11, iters=50, max_crossings=5, which=BOTH):
    """A grafted kink scales H by (x v^-1)^sign and K by a^sign."""
    ev = _Evaluators(which)
    rng = random.Random(seed)
    rep = CheckReport("kink")
    for d in corpus(seed, iters, max_crossings):
        c = rng.randrange(d.n_components)
        i = rng.randrange(max(1, len(d.words[c])))
        sign = rng.choice((1, -1))
        k = graft_kink(d, c, i, sign, rng.choice((0, 1)))
        if ev.homfly:
            rep.record("H", ev.H(k) == ev.H(d).shift(x=sign, v=-sign), "HOMFLY kink factor fails", d)
        if ev.kauffman:
            ok = ev.K(k.as_unoriented()) == ev.K(d.as_unoriented()).shift(a=sign)
            rep.record(_k_label(d), ok, "Kauffman kink factor fails", d)
    return rep


def check_moves(seed=3, iters=200, max_crossings=6, which=BOTH):
    """Invariance under O2-O5 and the kink factor under O1.

    Draws ``iters`` (diagram, move) pairs, choosing the move kind uniformly
    among those available so rare moves are represented.
    """
    ev = _Evaluators(which)
    rng = random.Random(seed)
    rep = CheckReport("moves")
    pool = corpus(seed, iters, max_crossings)
    for d in pool:
        sites = find_sites(d)
        groups = {}
        for s in sites:
            if s.crossing_delta > 0 and d.crossing_count + s.crossing_delta > max_crossings + 2:
                continue
            groups.setdefault((s.kind, s.direction), []).append(s)
        if not groups:
            continue
        key = rng.choice(sorted(groups))
        site = rng.choice(groups[key])
        d2 = apply_move(d, site)
        if validation_errors(d2):
            rep.record("valid", False, f"{site} produced an invalid diagram", d)
            continue
        w = kink_factor_exponent(site, d)
        tag = f"{site.kind}-{site.direction}"
        if ev.homfly:
            ok = ev.H(d2) == ev.H(d).shift(x=w, v=-w)
            rep.record(f"H/{tag}", ok, f"H changes under {site}", d)
        if ev.kauffman:
            ok = ev.K(d2.as_unoriented()) == ev.K(d.as_unoriented()).shift(a=w)
            rep.record(f"{_k_label(d)}/{tag}", ok, f"K changes under {site}", d)
    return rep


def _choices(rep, ev, d, all_basepoints, all_orders, name, label, limit=720):
    ref = ev(d)
    bases = (admissible_basepoints(d, directed=not d.oriented) if all_basepoints
             else [canonical_basepoint(d)])
    for bd in bases:
        _, plan = ev.plan_for(bd)
        orders = itertools.permutations(plan) if all_orders else [plan]
        for order in itertools.islice(orders, limit):
            ok = ev.evaluate_based(bd, order) == ref
            rep.record(label, ok, f"{name} depends on basepoint {bd.base} / order {order}", d)


def check_basepoints(seed=5, iters=150, max_crossings=5, which=BOTH, all_orders=True):
    """Every admissible basepoint and switching order gives the same value."""
    ev = _Evaluators(which)
    rep = CheckReport("basepoints")
    for d in corpus(seed, iters, max_crossings):
        if ev.homfly:
            _choices(rep, ev.H, d, True, all_orders, "H", "H")
        if ev.kauffman:
            _choices(rep, ev.K, d.as_unoriented(), True, all_orders, "K", _k_label(d))
    return rep


def check_orderings(seed=5, iters=150, max_crossings=5, which=BOTH):
    """Every order of the canonical switch plan gives the same value."""
    ev = _Evaluators(which)
    rep = CheckReport("orderings")
    for d in corpus(seed, iters, max_crossings):
        if ev.homfly:
            _choices(rep, ev.H, d, False, True, "H", "H")
        if ev.kauffman:
            _choices(rep, ev.K, d.as_unoriented(), False, True, "K", _k_label(d))
    return rep


def check_affine_oracle(seed=13, iters=100, max_crossings=7, which=BOTH):
    """On affine diagrams H = mu * classical and K = d * classical."""
    ev = _Evaluators(which)
    rep = CheckReport("affine-oracle")
    named = [trefoil(), trefoil(False), figure_eight(), hopf_link(), hopf_link(-1)]
    for d in named + affine_corpus(seed, iters, max_crossings):
        if ev.homfly:
            rep.record("H", ev.H(d) == mu() * classical_homfly(d), "H != mu * classical", d)
        if ev.kauffman:
            ok = ev.K(d.as_unoriented()) == delta() * classical_kauffman(d)
            rep.record("K/affine", ok, "K != d * classical", d)
    return rep


def check_degree_bound(seed=17, iters=200, max_crossings=6, which=BOTH):
    """Affinity bound is n on L_n; degrees never exceed the antipodal pair count."""
    from .homfly import affinity_bound as hbound
    from .kauffman import affinity_bound as kbound

    ev = _Evaluators(which)
    rep = CheckReport("degree-bound")
    for n in range(7):
        if ev.homfly:
            rep.record("H", hbound(ev.H(standard_unlink(n))) == n, f"bound on L{n}", standard_unlink(n))
        if ev.kauffman:
            rep.record("K", kbound(ev.K(standard_unlink(n, False))) == n, f"bound on L{n}",
                       standard_unlink(n))
    for d in corpus(seed, iters, max_crossings):
        pairs = d.nb // 2
        if ev.homfly:
            deg = ev.H(d).deg_in("z")
            rep.record("H", deg is None or deg <= pairs, f"deg_z {deg} > {pairs}", d)
        if ev.kauffman:
            deg = ev.K(d.as_unoriented()).deg_in("y")
            rep.record("K", deg is None or deg <= pairs, f"deg_y {deg} > {pairs}", d)
    return rep


def shortening_instances(seed, count, max_crossings=6, per_diagram=2):
    """Diagrams with a descending part of even arc distance whose ends share a face.

    Yields ``(d, comp, indices, w, d_short)``: ``indices`` are the tokens
    of the part, ``w`` the sum of signs of crossings with both passes in
    it, and ``d_short`` the diagram with the part replaced by a segment.
    """
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        d = random_diagram(rng.randrange(1 << 30), max_crossings, rng.randrange(3), 1)
        if not d.signs:
            continue
        face_of = {}
        for k, f in enumerate(trace_faces(d)):
            for dart in f:
                face_of[dart] = k
        here = []
        for c, w in enumerate(d.words):
            L = len(w)
            for a in range(L):
                for n in range(1, L):
                    idx = [(a + k) % L for k in range(n)]
                    if sum(1 for i in idx if w[i][0] == BND) % 2:
                        continue
                    inner = Counter(w[i][0] for i in idx if w[i][0] != BND)
                    if not inner:
                        continue
                    if not is_descending(d, ArcPoint(c, a), ArcPoint(c, (a + n) % L)):
                        continue
                    p_seg, q_seg = (c, (a - 1) % L), (c, (a + n - 1) % L)
                    if not any(face_of.get(("s",) + p_seg + (di,)) == face_of.get(("s",) + q_seg + (di,))
                               for di in (1, -1)):
                        continue
                    short = d.delete_tokens(c, idx)
                    if not is_valid(short):
                        continue
                    wsum = sum(d.signs[x] for x, m in inner.items() if m == 2)
                    here.append((d, c, tuple(idx), wsum, short))
        rng.shuffle(here)
        found.extend(here[:per_diagram])
    return found[:count]


def check_shortening(seed=19, iters=20, max_crossings=6, which=BOTH):
    """Deleting a descending even part divides H by (x v^-1)^w and K by a^w."""
    ev = _Evaluators(which)
    rep = CheckReport("shortening")
    for d, c, idx, w, short in shortening_instances(seed, iters, max_crossings):
        if ev.homfly:
            rep.record("H", ev.H(d) == ev.H(short).shift(x=w, v=-w),
                       f"shortening component {c} tokens {idx}", d)
        if ev.kauffman:
            ok = ev.K(d.as_unoriented()) == ev.K(short.as_unoriented()).shift(a=w)
            rep.record(_k_label(d), ok, f"shortening component {c} tokens {idx}", d)
    return rep


def check_memo(seed=23, iters=60, max_crossings=5, which=BOTH):
    """Values agree with and without the memo table."""
    on = _Evaluators(which, memo=True)
    rep = CheckReport("memo")
    for d in corpus(seed, iters, max_crossings):
        off = _Evaluators(which, memo=False)
        if on.homfly:
            rep.record("H", on.H(d) == off.H(d), "memo changes H", d)
        if on.kauffman:
            u = d.as_unoriented()
            rep.record(_k_label(d), on.K(u) == off.K(u), "memo changes K", d)
    return rep


SUITES = {
    "golden": check_golden,
    "skein": check_skein,
    "kink": check_kink,
    "moves": check_moves,
    "basepoints": check_basepoints,
    "orderings": check_orderings,
    "affine-oracle": check_affine_oracle,
    "degree-bound": check_degree_bound,
    "shortening": check_shortening,
    "memo": check_memo,
}


def run_suite(name, seed=None, iters=None, max_crossings=None, which=BOTH):
    fn = SUITES[name]
    kwargs = {"which": which}
    if seed is not None:
        kwargs["seed"] = seed
    if iters is not None:
        kwargs["iters"] = iters
    if max_crossings is not None:
        kwargs["max_crossings"] = max_crossings
    return fn(**kwargs)
