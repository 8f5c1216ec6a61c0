"""Executable theorem registry, exhaustive law runner, and counterexample search.

Each :class:`Law` is a universally quantified statement over one space:
over the space itself, over its points, over its subsets, or over ordered
pairs of subsets.  :func:`verify_law` walks the whole quantifier domain in
canonical order and keeps the first refuting instance as witness.

A failing law is reported verbatim.  Before reading a failure as a
refutation of the underlying theorem, compare the predicate implementations
in :mod:`sigma_lab.classes` against their alternative formulations.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from . import classes as cl
from . import ops
from .axioms import (
    AxiomReport,
    _is_countable,
    _is_finite,
    _any,
    classify,
    compute_C_Cstar,
    lambda_refutation,
    separation_refutation,
    t0_refutation,
    t0_singleton_refutation,
    t1_refutation,
    t1_singleton_refutation,
)
from .enumeration import iter_spaces, worker_count
from .errors import LawFailed, ParseError, SpaceValidationError, UnknownLaw
from .setfam import (
    CanonicalForm,
    GroundSet,
    SpaceStructure,
    Subset,
    bits,
    canonicalize,
    subsets_in_order,
    validate_space,
)

# -- per-space tables -------------------------------------------------------


class SpaceTables:
    """Every operator and predicate of one space, tabulated by mask."""

    def __init__(self, space: SpaceStructure):
        self.space = space
        self.n = space.n
        self.full = space.full
        rng = range(self.full + 1)
        self.order = subsets_in_order(self.n)
        self.points = list(range(self.n))
        self.ker = [ops.kernel_wedge(space, m) for m in rng]
        self.hull = [ops.vee(space, m) for m in rng]
        self.cl = [ops.closure(space, m) for m in rng]
        self.int = [ops.interior(space, m) for m in rng]
        self.der = [ops.derived_set(space, m) for m in rng]
        self.open = [space.is_open(m) for m in rng]
        self.closed = [space.is_closed(m) for m in rng]
        self.gsc = [cl.is_gstar_closed(space, m) for m in rng]
        self.gso = [cl.is_gstar_open(space, m) for m in rng]
        self.wedge = [cl.is_wedge_set(space, m) for m in rng]
        self.veeset = [cl.is_vee_set(space, m) for m in rng]
        self.gwedge = [cl.is_g_wedge_set(space, m) for m in rng]
        self.gvee = [cl.is_g_vee_set(space, m) for m in rng]
        self.lsc = [cl.is_lambda_star_closed(space, m) for m in rng]
        self.lso = [cl.is_lambda_star_open(space, m) for m in rng]

    def comp(self, m: int) -> int:
        return self.full & ~m

    @cached_property
    def report(self) -> AxiomReport:
        return classify(self.space, cross_check=False)

    @cached_property
    def cstar(self):
        return compute_C_Cstar(self.space)

    @cached_property
    def ceq(self) -> bool:
        return self.report.C_eq_Cstar


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _implies(p: bool, q: bool) -> bool:
    return q or not p


# -- registry ---------------------------------------------------------------

SHAPES = ("space", "point", "set", "pair")


@dataclass(frozen=True)
class Law:
    id: str
    statement: str
    shape: str
    check: Callable = field(repr=False, compare=False)


REGISTRY: dict[str, Law] = {}


def law(law_id: str, statement: str, shape: str):
    if shape not in SHAPES:
        raise ValueError(shape)

    def deco(fn):
        if law_id in REGISTRY:
            raise ValueError(f"duplicate law id {law_id}")
        REGISTRY[law_id] = Law(law_id, statement, shape, fn)
        return fn

    return deco


def get_law(law_id: str) -> Law:
    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLaw(f"no law registered under {law_id!r}") from None


# ---- operators

@law("L-closure", "adherence closure = ∩ closed supersets = A ∪ A'", "set")
def _(t, a):
    hull = t.full
    for f in t.space.closed_masks:
        if _sub(a, f):
            hull &= f
    return t.cl[a] == hull == a | t.der[a] and t.closed[t.cl[a]]


@law("L-2.8", "X - cl(X - A) = Int(A)", "set")
def _(t, a):
    return t.comp(t.cl[t.comp(a)]) == t.int[a]


@law("L-3.18", "kernel/hull identities (1)-(6)", "pair")
def _(t, a, b):
    k, h, f = t.ker, t.hull, t.full
    c1 = k[0] == 0 and h[0] == 0 and k[f] == f and h[f] == f
    c2 = _sub(a, k[a]) and _sub(h[a], a)
    c3 = k[k[a]] == k[a] and h[h[a]] == h[a]
    c4 = _implies(_sub(a, b), _sub(k[a], k[b]))
    c5 = _implies(_sub(a, b), _sub(h[a], h[b]))
    c6 = k[t.comp(a)] == t.comp(h[a]) and h[t.comp(a)] == t.comp(k[a])
    return c1 and c2 and c3 and c4 and c5 and c6


@law("L-3.27", "(A ∪ B)^∧ = A^∧ ∪ B^∧", "pair")
def _(t, a, b):
    return t.ker[a | b] == t.ker[a] | t.ker[b]


# ---- g*-closed / g*-open

@law("L-3.3", "g*-closed (closed F inside every open superset) ⇔ closed F ⊆ ker(A)", "set")
def _(t, a):
    return cl.is_gstar_closed_def(t.space, a) == t.gsc[a]


@law("L-3.5", "g*-closed ⇔ closed F ⊇ A with no non-void closed set in F - A", "set")
def _(t, a):
    return cl.is_gstar_closed_alt(t.space, a) == t.gsc[a]


@law("L-3.4", "{x} is closed or X - {x} is g*-closed", "point")
def _(t, x):
    s = 1 << x
    return t.closed[s] or t.gsc[t.comp(s)]


@law("L-3.13", "A, B g*-open ⇒ A ∩ B g*-open", "pair")
def _(t, a, b):
    return _implies(t.gso[a] and t.gso[b], t.gso[a & b])


@law("L-3.14", "g*-open ⇔ open V ⊆ A with A^∨ ⊆ V (⇔ open V ⊆ A covering closed subsets)", "set")
def _(t, a):
    alt = cl.is_gstar_open_alt(t.space, a)
    cover = cl.is_gstar_open_cover(t.space, a)
    return t.gso[a] == alt == cover


@law("L-3.16-dual", "g∨τ (open U ⊆ A ⇒ U ⊆ A^∨) ⇔ X - A is g∧τ", "set")
def _(t, a):
    return t.gvee[a] == t.gwedge[t.comp(a)]


@law("L-3.23ii", "for a ∧τ-set: g*-closed ⇔ closed", "set")
def _(t, a):
    return _implies(t.wedge[a], t.gsc[a] == t.closed[a])


@law("L-3.24", "A^∧ g*-closed ⇒ A g*-closed", "set")
def _(t, a):
    return _implies(t.gsc[t.ker[a]], t.gsc[a])


@law("L-3.25", "A^∨ g*-open ⇒ A g*-open", "set")
def _(t, a):
    return _implies(t.gso[t.hull[a]], t.gso[a])


@law("L-3.40", "for a ∨τ-set: g*-open ⇔ open", "set")
def _(t, a):
    return _implies(t.veeset[a], t.gso[a] == t.open[a])


# ---- ∧τ / ∨τ families
# Arbitrary unions/intersections of a finite family are iterated pairwise
# ones, plus the empty and the total combination.

def _family(flags, full):
    return [m for m in range(full + 1) if flags[m]]


@law("L-3.19", "any union of ∨τ-sets is a ∨τ-set", "space")
def _(t):
    fam = _family(t.veeset, t.full)
    total = 0
    for m in fam:
        total |= m
    return t.veeset[0] and t.veeset[total] and all(t.veeset[a | b] for a in fam for b in fam)


@law("L-3.20", "any intersection of ∧τ-sets is a ∧τ-set", "space")
def _(t):
    fam = _family(t.wedge, t.full)
    total = t.full
    for m in fam:
        total &= m
    return t.wedge[t.full] and t.wedge[total] and all(t.wedge[a & b] for a in fam for b in fam)


@law("L-3.21", "A, B ∨τ-sets ⇒ A ∩ B ∨τ-set", "pair")
def _(t, a, b):
    return _implies(t.veeset[a] and t.veeset[b], t.veeset[a & b])


@law("L-3.22", "the ∨τ-sets form a topology", "space")
def _(t):
    try:
        validate_space(t.space.ground, _family(t.veeset, t.full))
    except SpaceValidationError:
        return False
    return True


@law("L-3.28", "A, B ∧τ-sets ⇒ A ∪ B ∧τ-set", "pair")
def _(t, a, b):
    return _implies(t.wedge[a] and t.wedge[b], t.wedge[a | b])


@law("L-3.30", "A, B g∧τ-sets ⇒ A ∪ B g∧τ-set", "pair")
def _(t, a, b):
    return _implies(t.gwedge[a] and t.gwedge[b], t.gwedge[a | b])


@law("L-3.31", "A, B g∨τ-sets ⇒ A ∩ B g∨τ-set", "pair")
def _(t, a, b):
    return _implies(t.gvee[a] and t.gvee[b], t.gvee[a & b])


@law("L-3.36", "{x} is open or a g∨τ-set", "point")
def _(t, x):
    return t.open[1 << x] or t.gvee[1 << x]


@law("L-3.38", "A g∨τ, F closed ⊇ A^∨ ∪ (X - A) ⇒ F = X", "set")
def _(t, a):
    if not t.gvee[a]:
        return True
    low = t.hull[a] | t.comp(a)
    return all(f == t.full for f in t.space.closed_masks if _sub(low, f))


@law("L-3.39", "A g∨τ: A^∨ ∪ (X - A) closed ⇔ A is ∨τ", "set")
def _(t, a):
    return _implies(t.gvee[a], t.closed[t.hull[a] | t.comp(a)] == t.veeset[a])


# ---- Tω and C = C*

@law("L-4.3", "Tω ⇔ every {x} open or closed, and C = C*", "space")
def _(t):
    a = all(t.open[1 << x] or t.closed[1 << x] for x in t.points)
    return t.report.T_w == (a and t.ceq)


@law("L-4.4", "Tω ⇔ (g∧τ ⇒ ∧τ, C = C*) ⇔ (g∨τ ⇒ ∨τ, C = C*)", "space")
def _(t):
    rng = range(t.full + 1)
    two = all(_implies(t.gwedge[m], t.wedge[m]) for m in rng) and t.ceq
    three = all(_implies(t.gvee[m], t.veeset[m]) for m in rng) and t.ceq
    return t.report.T_w == two == three


# ---- λ*-closed / λ*-open

@law("L-5.3", "λ*-closed: L ∩ cl(F) ⇔ A^∧ ∩ cl(F) ⇔ L ∩ cl(A) ⇔ A^∧ ∩ cl(A)", "set")
def _(t, a):
    closures = set(t.cl)
    wedges = _family(t.wedge, t.full)
    ii = any(t.ker[a] & c == a for c in closures)
    iii = any(lo & t.cl[a] == a for lo in wedges)
    i = cl.is_lambda_star_closed_decomp(t.space, a)
    return i == ii == iii == t.lsc[a]


@law("L-5.4", "λ*-closed, g∧τ and cl(A) closed ⇒ ∧τ", "set")
def _(t, a):
    return _implies(t.lsc[a] and t.gwedge[a] and t.closed[t.cl[a]], t.wedge[a])


@law("L-5.6", "Tω ⇔ every subset λ*-closed and C = C*", "space")
def _(t):
    return t.report.T_w == (all(t.lsc) and t.ceq)


@law("L-5.8", "g*-closed, λ*-closed and C = C* ⇒ closed", "set")
def _(t, a):
    return _implies(t.gsc[a] and t.lsc[a] and t.ceq, t.closed[a])


@law("L-5.14", "λ*-open ⇔ A = M ∪ Int(V), M ∨τ-set", "set")
def _(t, a):
    return cl.is_lambda_star_open_decomp(t.space, a) == t.lso[a]


@law("L-5.16", "A = A^∨ ∪ Int(A) ⇔ X - A λ*-closed", "set")
def _(t, a):
    return t.lso[a] == t.lsc[t.comp(a)]


# ---- axioms

@law("L-6.2", "Tω/4 ⇒ T0", "space")
def _(t):
    return _implies(t.report.T_w4, t.report.T0)


@law("L-6.3", "Tω/4 ⇔ every finite subset λ*-closed", "space")
def _(t):
    a = separation_refutation(t.space, _is_finite) is None
    return a == (lambda_refutation(t.space, _is_finite) is None)


@law("L-6.4", "T0 ⇔ every singleton λ*-closed", "space")
def _(t):
    return (t0_refutation(t.space) is None) == (t0_singleton_refutation(t.space) is None)


@law("L-6.7", "T3ω/8 ⇔ every countable subset λ*-closed", "space")
def _(t):
    a = separation_refutation(t.space, _is_countable) is None
    return a == (lambda_refutation(t.space, _is_countable) is None)


@law("L-6.9", "T5ω/8 ⇔ every subset λ*-closed", "space")
def _(t):
    a = separation_refutation(t.space, _any) is None
    return a == (lambda_refutation(t.space, _any) is None)


@law("L-6.10", "Tω ⇒ T5ω/8 ⇒ T3ω/8 ⇒ Tω/4", "space")
def _(t):
    r = t.report
    return _implies(r.T_w, r.T_5w8) and _implies(r.T_5w8, r.T_3w8) and _implies(r.T_3w8, r.T_w4)


@law("L-6.14", "T1 ⇔ T0 ∧ R0", "space")
def _(t):
    r = t.report
    return r.T1 == (r.T0 and r.R0)


@law("L-6.15", "T1 ⇔ every singleton ∧τ", "space")
def _(t):
    return (t1_refutation(t.space) is None) == (t1_singleton_refutation(t.space) is None)


@law("L-6.17", "R0 ⇒ weak R0", "space")
def _(t):
    return _implies(t.report.R0, t.report.weak_R0)


@law("L-6.19", "every subset ∧τ ⇒ T1", "space")
def _(t):
    return _implies(all(t.wedge), t.report.T1)


@law("L-6.23", "strongly symmetric, T1, C = C* ⇒ every subset ∧τ", "space")
def _(t):
    r = t.report
    return _implies(r.strongly_symmetric and r.T1 and r.C_eq_Cstar, all(t.wedge))


@law("L-6.25", "T1 ⇔ T0 ∧ R0 ⇔ T0 ∧ weak R0", "space")
def _(t):
    r = t.report
    return r.T1 == (r.T0 and r.R0) == (r.T0 and r.weak_R0)


@law("L-6.26", "strongly symmetric, T1, C = C* ⇒ Tω", "space")
def _(t):
    r = t.report
    return _implies(r.strongly_symmetric and r.T1 and r.C_eq_Cstar, r.T_w)


@law("L-6.27", "strongly symmetric, weak R0, C = C* ⇒ T0 ⇔ T1 ⇔ Tω ⇔ T5ω/8 ⇔ T3ω/8 ⇔ Tω/4", "space")
def _(t):
    r = t.report
    if not (r.strongly_symmetric and r.weak_R0 and r.C_eq_Cstar):
        return True
    return len({r.T0, r.T1, r.T_w, r.T_5w8, r.T_3w8, r.T_w4}) == 1


@law("L-finite-collapse", "on a finite space Tω/4 = T3ω/8 = T5ω/8", "space")
def _(t):
    r = t.report
    return r.T_w4 == r.T_3w8 == r.T_5w8


# -- running laws -------------------------------------------------------------


@dataclass(frozen=True)
class LawWitness:
    space: SpaceStructure
    subsets: tuple[tuple[str, ...], ...] = ()
    points: tuple[str, ...] = ()

    def describe(self) -> str:
        parts = [self.space.describe()]
        if self.points:
            parts.append(f"points {list(self.points)}")
        if self.subsets:
            parts.append("subsets " + ", ".join("{" + ",".join(s) + "}" for s in self.subsets))
        return "; ".join(parts)

    def as_dict(self) -> dict:
        return {
            "points": list(self.space.ground.labels),
            "opens": [list(o) for o in self.space.opens],
            "witness_points": list(self.points),
            "witness_subsets": [list(s) for s in self.subsets],
        }


@dataclass(frozen=True)
class Verdict:
    law_id: str
    spaces_checked: int
    sets_checked: int
    holds: bool
    witness: Optional[LawWitness] = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when the law fails")


def _labels(space: SpaceStructure, m: int) -> tuple[str, ...]:
    return tuple(Subset(space.ground, m))


def _run(lw: Law, t: SpaceTables) -> tuple[int, Optional[LawWitness]]:
    sp = t.space
    if lw.shape == "space":
        return 0, None if lw.check(t) else LawWitness(sp)
    count, wit = 0, None
    if lw.shape == "point":
        for x in t.points:
            count += 1
            if wit is None and not lw.check(t, x):
                wit = LawWitness(sp, points=(sp.ground.labels[x],))
    elif lw.shape == "set":
        for a in t.order:
            count += 1
            if wit is None and not lw.check(t, a):
                wit = LawWitness(sp, subsets=(_labels(sp, a),))
    else:
        for a in t.order:
            for b in t.order:
                count += 1
                if wit is None and not lw.check(t, a, b):
                    wit = LawWitness(sp, subsets=(_labels(sp, a), _labels(sp, b)))
    return count, wit


def verify_law(law_or_id, space: SpaceStructure, tables: Optional[SpaceTables] = None) -> Verdict:
    lw = law_or_id if isinstance(law_or_id, Law) else get_law(law_or_id)
    t = tables or SpaceTables(space)
    count, wit = _run(lw, t)
    return Verdict(lw.id, 1, count, wit is None, wit)


def _space_verdicts(args) -> list[tuple[int, Optional[dict]]]:
    n, masks, law_ids = args
    space = SpaceStructure(GroundSet.range(n), masks)
    t = SpaceTables(space)
    out = []
    for lid in law_ids:
        count, wit = _run(REGISTRY[lid], t)
        out.append((count, wit))
    return out


@dataclass
class LawTotals:
    law_id: str
    statement: str
    spaces_checked: int = 0
    sets_checked: int = 0
    failures: int = 0
    first_witness: Optional[LawWitness] = None

    @property
    def holds(self) -> bool:
        return self.failures == 0


@dataclass
class VerificationReport:
    max_n: int
    spaces_per_n: dict[int, int]
    totals: list[LawTotals]

    @property
    def ok(self) -> bool:
        return all(t.holds for t in self.totals)

    @property
    def failures(self) -> list[LawTotals]:
        return [t for t in self.totals if not t.holds]

    def as_dict(self) -> dict:
        return {
            "max_points": self.max_n,
            "spaces_per_n": {str(k): v for k, v in self.spaces_per_n.items()},
            "all_hold": self.ok,
            "laws": [
                {
                    "id": t.law_id,
                    "statement": t.statement,
                    "spaces_checked": t.spaces_checked,
                    "sets_checked": t.sets_checked,
                    "failures": t.failures,
                    "witness": t.first_witness.as_dict() if t.first_witness else None,
                }
                for t in self.totals
            ],
        }


def verify_all(
    max_n: int,
    law_ids: Optional[list[str]] = None,
    workers: Optional[int] = None,
    strict: bool = True,
) -> VerificationReport:
    """Check every selected law over every labelled space with ``1..max_n`` points.

    Spaces are visited in increasing size, so the first recorded witness of
    a failing law lives on a smallest possible space.  With ``strict`` a
    failure raises :class:`LawFailed` carrying the full report.
    """
    ids = list(REGISTRY) if law_ids is None else [get_law(i).id for i in law_ids]
    totals = [LawTotals(i, REGISTRY[i].statement) for i in ids]
    per_n: dict[int, int] = {}
    w = worker_count(workers)
    pool = ProcessPoolExecutor(max_workers=w) if w > 1 else None
    try:
        for n in range(1, max_n + 1):
            jobs = [(n, sp.open_masks, ids) for sp in iter_spaces(n)]
            per_n[n] = len(jobs)
            if pool is None:
                results = map(_space_verdicts, jobs)
            else:
                results = pool.map(_space_verdicts, jobs, chunksize=max(1, len(jobs) // (8 * w)))
            for res in results:
                for tot, (count, wit) in zip(totals, res):
                    tot.spaces_checked += 1
                    tot.sets_checked += count
                    if wit is not None:
                        tot.failures += 1
                        if tot.first_witness is None:
                            tot.first_witness = wit
    finally:
        if pool is not None:
            pool.shutdown()
    report = VerificationReport(max_n, per_n, totals)
    if strict and not report.ok:
        lines = [
            f"{t.law_id} failed on {t.failures} space(s); first witness: {t.first_witness.describe()}"
            for t in report.failures
        ]
        raise LawFailed(
            "\n".join(lines)
            + "\ncompare the predicate implementations against their alternative"
            " formulations before reading this as a refutation",
            report,
        )
    return report


# -- property expressions --------------------------------------------------------

ATOMS = {
    "T0": "T0",
    "T1": "T1",
    "R0": "R0",
    "WR0": "weak_R0",
    "SS": "strongly_symmetric",
    "TW": "T_w",
    "TW4": "T_w4",
    "T3W8": "T_3w8",
    "T5W8": "T_5w8",
    "CEQ": "C_eq_Cstar",
}

_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_]+)|([!&|()]))")


@dataclass(frozen=True)
class PropertyExpr:
    """Parsed boolean expression over axiom atoms.

    ``node`` is a nested tuple: ``("atom", name)``, ``("not", e)``,
    ``("and", e1, e2, ...)`` or ``("or", e1, e2, ...)``.
    """

    source: str
    node: tuple

    def evaluate(self, report: AxiomReport) -> bool:
        return _eval(self.node, report)


def _eval(node, report) -> bool:
    kind = node[0]
    if kind == "atom":
        return getattr(report, ATOMS[node[1]])
    if kind == "not":
        return not _eval(node[1], report)
    if kind == "and":
        return all(_eval(c, report) for c in node[1:])
    return any(_eval(c, report) for c in node[1:])


def _tokenize(src: str) -> list[str]:
    pos, out = 0, []
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos:].lstrip()[:1]!r} at offset {pos}")
        tok = m.group(1) or m.group(2)
        if m.group(1) and tok not in ATOMS:
            raise ParseError(f"unknown atom {tok!r}; expected one of {sorted(ATOMS)}")
        out.append(tok)
        pos = m.end()
    return out


def parse_property(src: str) -> PropertyExpr:
    """Parse ``expr := term ('|' term)*; term := factor ('&' factor)*;
    factor := '!' factor | '(' expr ')' | atom``."""
    toks = _tokenize(src)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        pos += 1
        return tok

    def expr():
        terms = [term()]
        while peek() == "|":
            take()
            terms.append(term())
        return terms[0] if len(terms) == 1 else ("or", *terms)

    def term():
        factors = [factor()]
        while peek() == "&":
            take()
            factors.append(factor())
        return factors[0] if len(factors) == 1 else ("and", *factors)

    def factor():
        tok = peek()
        if tok == "!":
            take()
            return ("not", factor())
        if tok == "(":
            take()
            e = expr()
            take(")")
            return e
        if tok in ATOMS:
            take()
            return ("atom", tok)
        if tok is None:
            raise ParseError("unexpected end of expression")
        raise ParseError(f"unexpected token {tok!r}")

    if not toks:
        raise ParseError("empty expression")
    node = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input starting at {toks[pos]!r}")
    return PropertyExpr(src, node)


def _search_chunk(args) -> Optional[CanonicalForm]:
    n, masks_list, node = args
    ground = GroundSet.range(n)
    best = None
    for masks in masks_list:
        sp = SpaceStructure(ground, masks)
        if _eval(node, classify(sp)):
            f = canonicalize(sp)
            if best is None or f < best:
                best = f
    return best


def search(expr, max_n: int, workers: Optional[int] = None) -> Optional[SpaceStructure]:
    """Smallest, canonically first space whose axiom report satisfies ``expr``.

    The answer is returned in canonical labelling on points ``0..n-1``.
    """
    pe = expr if isinstance(expr, PropertyExpr) else parse_property(expr)
    w = worker_count(workers)
    for n in range(1, max_n + 1):
        masks = [sp.open_masks for sp in iter_spaces(n)]
        if w > 1 and len(masks) > 1:
            size = max(1, len(masks) // (4 * w))
            chunks = [(n, masks[i:i + size], pe.node) for i in range(0, len(masks), size)]
            with ProcessPoolExecutor(max_workers=w) as pool:
                found = [f for f in pool.map(_search_chunk, chunks) if f is not None]
            best = min(found) if found else None
        else:
            best = _search_chunk((n, masks, pe.node))
        if best is not None:
            return best.to_space()
    return None
