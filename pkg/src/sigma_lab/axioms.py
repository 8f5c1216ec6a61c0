"""Space-level separation axioms and the C / C* families.

Axioms with two known characterisations (T0, T1, Tω/4, T3ω/8, T5ω/8) are
computed both ways; :func:`classify` refuses to answer when the two
disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable, Optional

from .classes import is_gstar_closed, is_lambda_star_closed, is_wedge_set
from .errors import FormulationMismatch
from .ops import closure, gstar_closure
from .setfam import SpaceStructure, Subset, bits, subsets_in_order


@dataclass(frozen=True)
class Witness:
    """A concrete refuting configuration, in point labels."""

    description: str
    points: tuple[str, ...] = ()
    subsets: tuple[tuple[str, ...], ...] = ()

    def as_dict(self) -> dict:
        return {
            "description": self.description,
            "points": list(self.points),
            "subsets": [list(s) for s in self.subsets],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(d["description"], tuple(d["points"]), tuple(tuple(s) for s in d["subsets"]))


def _labels(space: SpaceStructure, m: int) -> tuple[str, ...]:
    return tuple(Subset(space.ground, m))


def _pt(space: SpaceStructure, i: int) -> str:
    return space.ground.labels[i]


# -- T0 ------------------------------------------------------------------


def t0_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        for y in range(x + 1, space.n):
            bx, by = 1 << x, 1 << y
            if not any(bool(u & bx) != bool(u & by) for u in space.open_masks):
                return Witness(
                    "no open set contains exactly one of the points",
                    (_pt(space, x), _pt(space, y)),
                )
    return None


def t0_singleton_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        if not is_lambda_star_closed(space, 1 << x):
            return Witness("singleton is not λ*-closed", (_pt(space, x),))
    return None


def _agree(name: str, space: SpaceStructure, a: Optional[Witness], b: Optional[Witness]):
    if (a is None) != (b is None):
        raise FormulationMismatch(
            f"{name}: definitional check says {a is None}, characterisation says {b is None} "
            f"on {space.describe()}"
        )


def is_T0(space: SpaceStructure) -> bool:
    a, b = t0_refutation(space), t0_singleton_refutation(space)
    _agree("T0", space, a, b)
    return a is None


# -- T1 ------------------------------------------------------------------


def t1_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        for y in range(space.n):
            if x == y:
                continue
            bx, by = 1 << x, 1 << y
            if not any(u & bx and not u & by for u in space.open_masks):
                return Witness(
                    "no open set contains the first point but not the second",
                    (_pt(space, x), _pt(space, y)),
                )
    return None


def t1_singleton_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        if not is_wedge_set(space, 1 << x):
            return Witness("singleton is not a ∧τ-set", (_pt(space, x),))
    return None


def is_T1(space: SpaceStructure) -> bool:
    a, b = t1_refutation(space), t1_singleton_refutation(space)
    _agree("T1", space, a, b)
    return a is None


# -- R0 family -----------------------------------------------------------


def r0_refutation(space: SpaceStructure) -> Optional[Witness]:
    for u in space.open_masks:
        for x in bits(u):
            if closure(space, 1 << x) & ~u:
                return Witness(
                    "open set misses part of the closure of one of its points",
                    (_pt(space, x),),
                    (_labels(space, u),),
                )
    return None


def is_R0(space: SpaceStructure) -> bool:
    return r0_refutation(space) is None


def weak_r0_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        s = 1 << x
        if is_lambda_star_closed(space, s) and not is_wedge_set(space, s):
            return Witness("λ*-closed singleton that is not a ∧τ-set", (_pt(space, x),))
    return None


def is_weak_R0(space: SpaceStructure) -> bool:
    return weak_r0_refutation(space) is None


def strongly_symmetric_refutation(space: SpaceStructure) -> Optional[Witness]:
    for x in range(space.n):
        if not is_gstar_closed(space, 1 << x):
            return Witness("singleton is not g*-closed", (_pt(space, x),))
    return None


def is_strongly_symmetric(space: SpaceStructure) -> bool:
    return strongly_symmetric_refutation(space) is None


# -- C and C* ------------------------------------------------------------


@dataclass(frozen=True)
class CStarFamilies:
    C: tuple[int, ...]
    Cstar: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.C == self.Cstar


def compute_C_Cstar(space: SpaceStructure) -> CStarFamilies:
    full = space.full
    c, cs = [], []
    for a in subsets_in_order(space.n):
        comp = full & ~a
        if space.is_closed(closure(space, comp)):
            c.append(a)
        if gstar_closure(space, comp).is_gstar_closed:
            cs.append(a)
    return CStarFamilies(tuple(c), tuple(cs))


def c_cstar_refutation(space: SpaceStructure) -> Optional[Witness]:
    fam = compute_C_Cstar(space)
    cs = set(fam.Cstar)
    for a in fam.C:
        if a not in cs:
            return Witness("subset in C but not in C*", (), (_labels(space, a),))
    c = set(fam.C)
    for a in fam.Cstar:
        if a not in c:
            return Witness("subset in C* but not in C", (), (_labels(space, a),))
    return None


# -- Tω ------------------------------------------------------------------


def tw_refutation(space: SpaceStructure) -> Optional[Witness]:
    for a in subsets_in_order(space.n):
        if is_gstar_closed(space, a) and not space.is_closed(a):
            return Witness("g*-closed set that is not closed", (), (_labels(space, a),))
    return None


def is_Tw(space: SpaceStructure) -> bool:
    return tw_refutation(space) is None


# -- Tω/4, T3ω/8, T5ω/8 ---------------------------------------------------

# Every subset of a finite ground set is finite, hence countable; the three
# admissibility filters are spelled out anyway so that each axiom is checked
# against its own definition.


def _is_finite(m: int) -> bool:
    return True


def _is_countable(m: int) -> bool:
    return True


def _any(m: int) -> bool:
    return True


def separation_refutation(
    space: SpaceStructure, admissible: Callable[[int], bool]
) -> Optional[Witness]:
    """First ``(P, y)`` with no open-or-closed set containing ``P`` and missing ``y``."""
    cands = space.open_masks + space.closed_masks
    for p in subsets_in_order(space.n):
        if not admissible(p):
            continue
        outside = space.full & ~p
        sups = [a for a in cands if p & ~a == 0]
        for y in bits(outside):
            by = 1 << y
            if not any(not a & by for a in sups):
                return Witness(
                    "no open-or-closed superset of P excludes y",
                    (_pt(space, y),),
                    (_labels(space, p),),
                )
    return None


def lambda_refutation(
    space: SpaceStructure, admissible: Callable[[int], bool]
) -> Optional[Witness]:
    for p in subsets_in_order(space.n):
        if admissible(p) and not is_lambda_star_closed(space, p):
            return Witness("subset is not λ*-closed", (), (_labels(space, p),))
    return None


def is_Tw4(space: SpaceStructure) -> bool:
    a = separation_refutation(space, _is_finite)
    _agree("Tω/4", space, a, lambda_refutation(space, _is_finite))
    return a is None


def is_T3w8(space: SpaceStructure) -> bool:
    a = separation_refutation(space, _is_countable)
    _agree("T3ω/8", space, a, lambda_refutation(space, _is_countable))
    return a is None


def is_T5w8(space: SpaceStructure) -> bool:
    a = separation_refutation(space, _any)
    _agree("T5ω/8", space, a, lambda_refutation(space, _any))
    return a is None


def is_bicompact(space: SpaceStructure) -> bool:
    """Always true here: a finite space has finitely many open sets, so every cover is finite."""
    return True


# -- report --------------------------------------------------------------

# The order is the implication chain Tω → T5ω/8 → T3ω/8 → Tω/4 → T0 followed
# by the remaining flags; reports print in this order.
FLAG_ORDER = (
    "T_w",
    "T_5w8",
    "T_3w8",
    "T_w4",
    "T0",
    "T1",
    "R0",
    "weak_R0",
    "strongly_symmetric",
    "C_eq_Cstar",
    "bicompact",
)

FLAG_TITLES = {
    "T_w": "Tω",
    "T_5w8": "T5ω/8",
    "T_3w8": "T3ω/8",
    "T_w4": "Tω/4",
    "T0": "T0",
    "T1": "T1",
    "R0": "R0",
    "weak_R0": "weak R0",
    "strongly_symmetric": "strongly symmetric",
    "C_eq_Cstar": "C = C*",
    "bicompact": "bicompact",
}


@dataclass(frozen=True)
class AxiomReport:
    T0: bool
    T1: bool
    R0: bool
    weak_R0: bool
    strongly_symmetric: bool
    C_eq_Cstar: bool
    T_w: bool
    T_w4: bool
    T_3w8: bool
    T_5w8: bool
    bicompact: bool
    witnesses: dict = field(default_factory=dict, compare=True, hash=False)

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in FLAG_ORDER}

    def chain_holds(self) -> bool:
        imp = [
            (self.T_w, self.T_5w8),
            (self.T_5w8, self.T_3w8),
            (self.T_3w8, self.T_w4),
            (self.T_w4, self.T0),
            (self.T1, self.T0),
            (self.R0, self.weak_R0),
        ]
        return all(q for p, q in imp if p) and self.T1 == (self.T0 and self.R0)


def classify(space: SpaceStructure, cross_check: bool = True) -> AxiomReport:
    """All axiom flags with a witness for each false one.

    With ``cross_check`` the alternative characterisations are evaluated too
    and a disagreement raises :class:`FormulationMismatch`.
    """
    refs = {
        "T0": t0_refutation(space),
        "T1": t1_refutation(space),
        "R0": r0_refutation(space),
        "weak_R0": weak_r0_refutation(space),
        "strongly_symmetric": strongly_symmetric_refutation(space),
        "C_eq_Cstar": c_cstar_refutation(space),
        "T_w": tw_refutation(space),
        "T_w4": separation_refutation(space, _is_finite),
        "T_3w8": separation_refutation(space, _is_countable),
        "T_5w8": separation_refutation(space, _any),
        "bicompact": None,
    }
    if cross_check:
        _agree("T0", space, refs["T0"], t0_singleton_refutation(space))
        _agree("T1", space, refs["T1"], t1_singleton_refutation(space))
        _agree("Tω/4", space, refs["T_w4"], lambda_refutation(space, _is_finite))
        _agree("T3ω/8", space, refs["T_3w8"], lambda_refutation(space, _is_countable))
        _agree("T5ω/8", space, refs["T_5w8"], lambda_refutation(space, _any))
    values = {k: v is None for k, v in refs.items()}
    witnesses = {k: refs[k] for k in FLAG_ORDER if refs[k] is not None}
    return AxiomReport(witnesses=witnesses, **values)


AXIOM_FIELDS = tuple(f.name for f in fields(AxiomReport) if f.name != "witnesses")
