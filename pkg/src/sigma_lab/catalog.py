"""Symbolic checks of the infinite example spaces.

Infinite sets are modelled over a *universe*: a handful of named points
("atoms", e.g. ``s2`` for √2) plus a few anonymous bulk *cells*, each tagged
finite, countably infinite or uncountable, and each belonging to a kind
(irrationals, rationals, ...).  A :class:`SymbolicSet` is a union of atoms
and whole cells, so union, intersection and complement are exact, and the
cardinality descriptor of any set follows from the cells it holds or misses.

A :class:`Schema` fixes an open-set rule together with hand-derived rules for
kernel, closure, interior and ∨τ-hull.  The rules are only valid because
points inside a cell are interchangeable; a specific point that matters is
always promoted to an atom.  Closure is adherence closure, which in any
space equals the intersection of all closed supersets (both are
``X - ∪{U open : U ∩ A = ∅}``); it just need not be closed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import SchemaMismatch, UnknownClaim, UnsupportedQuery

FINITE = "finite"
COUNTABLE = "countably-infinite"
UNCOUNTABLE = "uncountable"
_SMALL = (FINITE, COUNTABLE)

# Set-level descriptors, ordered by size.  SPLIT is an uncountable set with
# uncountable complement (e.g. the positive irrationals).
EMPTY = "empty"
FINITE_NONEMPTY = "finite-nonempty"
COUNTABLY_INFINITE = "countably-infinite"
SPLIT = "uncountable-co-uncountable"
COCOUNTABLE = "co-countable"
ALL = "all"


@dataclass(frozen=True)
class Universe:
    atoms: tuple[tuple[str, str], ...]
    cells: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        names = [a for a, _ in self.atoms] + [c for c, _, _ in self.cells]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate piece names in {names}")
        for name, _, size in self.cells:
            if size not in (FINITE, COUNTABLE, UNCOUNTABLE):
                raise ValueError(f"cell {name}: unknown size {size!r}")

    @classmethod
    def build(cls, atoms: dict[str, str] | None = None, cells: dict[str, tuple[str, str]] | None = None):
        atoms = atoms or {}
        cells = cells or {}
        return cls(
            tuple(sorted(atoms.items())),
            tuple(sorted((n, k, s) for n, (k, s) in cells.items())),
        )

    @property
    def names(self) -> frozenset[str]:
        return frozenset(a for a, _ in self.atoms) | frozenset(c for c, _, _ in self.cells)

    def kind_of(self, name: str) -> str:
        for a, k in self.atoms:
            if a == name:
                return k
        for c, k, _ in self.cells:
            if c == name:
                return k
        raise KeyError(name)

    def size_of(self, name: str) -> Optional[str]:
        """Cell size, or ``None`` for an atom (a single point)."""
        for c, _, s in self.cells:
            if c == name:
                return s
        return None

    def is_atom(self, name: str) -> bool:
        return any(a == name for a, _ in self.atoms)

    def of(self, *names: str) -> "SymbolicSet":
        for n in names:
            if n not in self.names:
                raise KeyError(f"{n!r} is not a piece of this universe")
        return SymbolicSet(self, frozenset(names))

    @property
    def full(self) -> "SymbolicSet":
        return SymbolicSet(self, self.names)

    @property
    def empty(self) -> "SymbolicSet":
        return SymbolicSet(self, frozenset())

    def kind(self, kind: str) -> "SymbolicSet":
        return SymbolicSet(self, frozenset(n for n in self.names if self.kind_of(n) == kind))

    def all_sets(self) -> Iterator["SymbolicSet"]:
        names = sorted(self.names)
        for m in range(1 << len(names)):
            yield SymbolicSet(self, frozenset(n for i, n in enumerate(names) if m >> i & 1))


@dataclass(frozen=True)
class SymbolicSet:
    universe: Universe
    members: frozenset[str]

    def _check(self, other: "SymbolicSet"):
        if other.universe != self.universe:
            raise SchemaMismatch("symbolic sets over different universes")

    def __or__(self, other):
        self._check(other)
        return SymbolicSet(self.universe, self.members | other.members)

    def __and__(self, other):
        self._check(other)
        return SymbolicSet(self.universe, self.members & other.members)

    def __sub__(self, other):
        self._check(other)
        return SymbolicSet(self.universe, self.members - other.members)

    def __le__(self, other):
        self._check(other)
        return self.members <= other.members

    def complement(self) -> "SymbolicSet":
        return SymbolicSet(self.universe, self.universe.names - self.members)

    def has(self, atom: str) -> bool:
        if not self.universe.is_atom(atom):
            raise KeyError(f"{atom!r} is not an atom")
        return atom in self.members

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return self.members == self.universe.names

    def _sizes(self, names) -> list[Optional[str]]:
        return [self.universe.size_of(n) for n in names]

    def countable(self) -> bool:
        return all(s is None or s in _SMALL for s in self._sizes(self.members))

    def finite(self) -> bool:
        return all(s is None or s == FINITE for s in self._sizes(self.members))

    def infinite(self) -> bool:
        return not self.finite()

    def cocountable(self) -> bool:
        return self.complement().countable()

    def cofinite(self) -> bool:
        return self.complement().finite()

    def at_least_two(self) -> bool:
        sizes = self._sizes(self.members)
        if len(sizes) >= 2 or any(s in (COUNTABLE, UNCOUNTABLE) for s in sizes):
            return True
        if sizes == [FINITE]:
            raise UnsupportedQuery("a lone finite cell may be a single point")
        return False

    def part(self, kind: str) -> "SymbolicSet":
        return self & self.universe.kind(kind)

    def descriptor(self, kind: Optional[str] = None) -> str:
        """Cardinality class of the set, or of its part of one kind relative to that kind."""
        whole = self.universe.full if kind is None else self.universe.kind(kind)
        mine = self.members & whole.members
        rest = whole.members - mine
        if not mine:
            return EMPTY
        if not rest:
            return ALL
        small = all(s is None or s in _SMALL for s in self._sizes(mine))
        if small:
            return FINITE_NONEMPTY if all(s is None or s == FINITE for s in self._sizes(mine)) else COUNTABLY_INFINITE
        if all(s is None or s in _SMALL for s in self._sizes(rest)):
            return COCOUNTABLE
        return SPLIT

    def __repr__(self):
        if self.is_full:
            return "X"
        if self.is_empty:
            return "∅"
        return "{" + ",".join(sorted(self.members)) + "}"


def sym_algebra(a: SymbolicSet, b: Optional[SymbolicSet], op: str) -> SymbolicSet:
    if op == "complement":
        return a.complement()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.universe != b.universe:
        raise SchemaMismatch("operands live in different universes")
    if op == "union":
        return a | b
    if op == "intersect":
        return a & b
    raise ValueError(f"unknown operation {op!r}")


# -- schemas -------------------------------------------------------------------

IRR, RAT, TWO = "irrational", "rational", "two"

Rule = Callable[[SymbolicSet], SymbolicSet]


@dataclass(frozen=True)
class Schema:
    name: str
    ground: str
    opens: str
    kinds: tuple[str, ...]
    atoms: dict[str, str]
    is_open: Callable[[SymbolicSet], bool]
    kernel: Rule
    closure: Rule
    interior: Rule
    hull: Rule
    topology: bool = False
    intersection_closed: bool = True
    # The non-topology witness: every set {x} ∪ core (x in an uncountable cell)
    # is open, but the union over the whole cell is not.
    witness_core: tuple[str, ...] = ()
    notes: str = ""
    battery_cells: dict = field(default_factory=dict)

    def universe(self, extra_atoms: dict[str, str] | None = None, cells: dict | None = None) -> Universe:
        atoms = dict(self.atoms)
        atoms.update(extra_atoms or {})
        return Universe.build(atoms, cells if cells is not None else self.battery_cells)

    def _own(self, a: SymbolicSet):
        missing = set(self.atoms) - {n for n, _ in a.universe.atoms}
        if missing:
            raise SchemaMismatch(f"universe lacks the atoms {sorted(missing)} of schema {self.name}")


def _irr_cells(finite=True):
    cells = {"c": (IRR, COUNTABLE), "u1": (IRR, UNCOUNTABLE), "u2": (IRR, UNCOUNTABLE)}
    if finite:
        cells["f"] = (IRR, FINITE)
    return cells


def _rat_cells():
    return {"qf": (RAT, FINITE), "qc": (RAT, COUNTABLE)}


def _u(a: SymbolicSet, *names: str) -> SymbolicSet:
    return a.universe.of(*names)


# X = R - Q; opens: X, ∅ and every countable set.
COUNTABLE_OPENS = Schema(
    name="countable",
    ground="R - Q",
    opens="X, ∅ and all countable subsets",
    kinds=(IRR,),
    atoms={"r": IRR},
    is_open=lambda a: a.is_full or a.countable(),
    kernel=lambda a: a if a.countable() else a.universe.full,
    closure=lambda a: a,
    interior=lambda a: a,
    hull=lambda a: a if a.cocountable() else a.universe.empty,
    battery_cells=_irr_cells(),
)

# X = R; opens: X, ∅ and every countable set of irrationals.
IRRATIONAL_COUNTABLE_OPENS = Schema(
    name="irrational-countable",
    ground="R",
    opens="X, ∅ and all countable sets of irrationals",
    kinds=(IRR, RAT),
    atoms={"r": IRR, "q": RAT},
    is_open=lambda a: a.is_full or (a.part(RAT).is_empty and a.countable()),
    kernel=lambda a: a if a.part(RAT).is_empty and a.countable() else a.universe.full,
    closure=lambda a: a if a.is_empty else a | a.universe.kind(RAT),
    interior=lambda a: a if a.is_full else a - a.universe.kind(RAT),
    hull=lambda a: a
    if a.is_full or (a.universe.kind(RAT) <= a and a.cocountable())
    else a.universe.empty,
    battery_cells={**_irr_cells(), **_rat_cells()},
)


def _s(a: SymbolicSet, atom: str) -> SymbolicSet:
    return a.universe.of(atom)


# X = R - Q; opens: X, ∅, countable and co-countable sets containing √2.
SQRT2_COUNTABLE_COCOUNTABLE = Schema(
    name="sqrt2-countable-cocountable",
    ground="R - Q",
    opens="X, ∅ and all countable or co-countable sets containing √2",
    kinds=(IRR,),
    atoms={"s2": IRR, "r": IRR},
    is_open=lambda a: a.is_empty or a.is_full or (a.has("s2") and (a.countable() or a.cocountable())),
    kernel=lambda a: a if a.is_empty else a | _s(a, "s2"),
    closure=lambda a: a.universe.full if a.has("s2") else a,
    interior=lambda a: a if a.has("s2") else a.universe.empty,
    hull=lambda a: a if a.is_full else a - _s(a, "s2"),
    witness_core=("s2",),
    battery_cells=_irr_cells(),
)


def _332_closure(a: SymbolicSet) -> SymbolicSet:
    full = a.universe.full
    if a.has("s3") or a == full - _s(a, "s3"):
        return full
    return a


def _332_interior(a: SymbolicSet) -> SymbolicSet:
    if a.is_full:
        return a
    if a.has("s3") and a.at_least_two():
        return a
    return a.universe.empty


# X = R - Q; opens: X, ∅ and G ∪ {√3} for G a non-empty countable subset of X - {√3}.
SQRT3_PAIRS = Schema(
    name="sqrt3-pairs",
    ground="R - Q",
    opens="X, ∅ and G ∪ {√3}, G a non-empty countable subset of X - {√3}",
    kinds=(IRR,),
    atoms={"s3": IRR, "s5": IRR, "r": IRR},
    is_open=lambda a: a.is_empty
    or a.is_full
    or (a.has("s3") and a.countable() and a.at_least_two()),
    kernel=lambda a: a
    if a.is_empty
    else (a | _s(a, "s3") if a.countable() else a.universe.full),
    closure=_332_closure,
    interior=_332_interior,
    hull=lambda a: a
    if a.is_full
    else (a - _s(a, "s3") if a.cocountable() else a.universe.empty),
    intersection_closed=False,
    witness_core=("s3",),
    notes=(
        "{√3, x} ∩ {√3, y} = {√3} is not in the listed family, so the family is not closed "
        "under finite intersection; the claims are checked against the family "
        "exactly as listed"
    ),
    battery_cells=_irr_cells(finite=False),
)


def _510_kernel(a: SymbolicSet) -> SymbolicSet:
    if a.is_empty:
        return a
    if a.has("s2") or not a.countable():
        return a.universe.full
    return a | _s(a, "s3")


def _510_closure(a: SymbolicSet) -> SymbolicSet:
    if a.is_empty:
        return a
    if a.has("s3"):
        return a.universe.full
    return a | _s(a, "s2")


# X = R - Q; opens: X, ∅, {√3} and G ∪ {√3} for G a countable subset of X - {√2}.
SQRT3_AVOID_SQRT2 = Schema(
    name="sqrt3-avoid-sqrt2",
    ground="R - Q",
    opens="X, ∅, {√3} and G ∪ {√3}, G a countable subset of X - {√2}",
    kinds=(IRR,),
    atoms={"s2": IRR, "s3": IRR, "r": IRR},
    is_open=lambda a: a.is_empty
    or a.is_full
    or (a.has("s3") and not a.has("s2") and a.countable()),
    kernel=_510_kernel,
    closure=_510_closure,
    interior=lambda a: a
    if a.is_full
    else (a - _s(a, "s2") if a.has("s3") else a.universe.empty),
    hull=lambda a: a
    if a.is_full
    else (a - _s(a, "s3") if a.cocountable() and a.has("s2") else a.universe.empty),
    witness_core=("s3",),
    battery_cells=_irr_cells(),
)

# X = R - Q; opens: X, ∅, countable subsets of X - {√2}, cofinite sets.
COUNTABLE_OR_COFINITE = Schema(
    name="countable-or-cofinite",
    ground="R - Q",
    opens="X, ∅, all countable subsets of X - {√2} and all cofinite subsets",
    kinds=(IRR,),
    atoms={"s2": IRR, "r": IRR},
    is_open=lambda a: a.is_empty
    or a.is_full
    or (a.countable() and not a.has("s2"))
    or a.cofinite(),
    kernel=lambda a: a,
    closure=lambda a: a | _s(a, "s2") if a.infinite() else a,
    interior=lambda a: a if a.cofinite() else a - _s(a, "s2"),
    hull=lambda a: a,
    notes="X is bicompact while the set of irrationals in (0, 1) is not (recorded, not machine-checked)",
    battery_cells=_irr_cells(),
)

# X = R - Q; opens: X, ∅ and countable sets containing √2.
SQRT2_COUNTABLE = Schema(
    name="sqrt2-countable",
    ground="R - Q",
    opens="X, ∅ and all countable sets containing √2",
    kinds=(IRR,),
    atoms={"s2": IRR, "r": IRR},
    is_open=lambda a: a.is_empty or a.is_full or (a.has("s2") and a.countable()),
    kernel=lambda a: a
    if a.is_empty
    else (a | _s(a, "s2") if a.countable() else a.universe.full),
    closure=lambda a: a.universe.full if a.has("s2") else a,
    interior=lambda a: a if a.has("s2") else a.universe.empty,
    hull=lambda a: a
    if a.is_full
    else (a - _s(a, "s2") if a.cocountable() else a.universe.empty),
    witness_core=("s2",),
    battery_cells=_irr_cells(),
)

# X* = {2} ∪ (R - Q); opens: ∅ and {2} ∪ (X - A) for finite A ⊆ R - Q.
TWO_COFINITE = Schema(
    name="two-cofinite",
    ground="{2} ∪ (R - Q)",
    opens="∅ and {2} ∪ (X - A) for every finite A ⊆ R - Q",
    kinds=(IRR, TWO),
    atoms={"two": TWO, "r": IRR},
    is_open=lambda a: a.is_empty or (a.has("two") and a.cofinite()),
    kernel=lambda a: a if a.is_empty else a | _s(a, "two"),
    closure=lambda a: a.universe.full if a.has("two") or a.infinite() else a,
    interior=lambda a: a if a.has("two") and a.cofinite() else a.universe.empty,
    hull=lambda a: a if a.is_full else a - _s(a, "two"),
    topology=True,
    battery_cells=_irr_cells(),
)


def _618_open_core(a: SymbolicSet) -> bool:
    return a.part(RAT).is_empty and not a.has("s2") and a.countable()


def _618_hull(a: SymbolicSet) -> SymbolicSet:
    low = a.universe.kind(RAT) | _s(a, "s2")
    if a.is_full or (low <= a and a.cocountable()):
        return a
    return a.universe.empty


# X = R; opens: X, ∅ and countable subsets of X - Q - {√2}.
IRRATIONAL_AVOID_SQRT2 = Schema(
    name="irrational-avoid-sqrt2",
    ground="R",
    opens="X, ∅ and all countable subsets of X - Q - {√2}",
    kinds=(IRR, RAT),
    atoms={"s2": IRR, "s5": IRR, "half": RAT, "r": IRR},
    is_open=lambda a: a.is_full or _618_open_core(a),
    kernel=lambda a: a if _618_open_core(a) else a.universe.full,
    closure=lambda a: a if a.is_empty else a | a.universe.kind(RAT) | _s(a, "s2"),
    interior=lambda a: a if a.is_full else a - a.universe.kind(RAT) - _s(a, "s2"),
    hull=_618_hull,
    battery_cells={**_irr_cells(), **_rat_cells()},
)

SCHEMAS: dict[str, Schema] = {
    s.name: s
    for s in (
        COUNTABLE_OPENS,
        IRRATIONAL_COUNTABLE_OPENS,
        SQRT2_COUNTABLE_COCOUNTABLE,
        SQRT3_PAIRS,
        SQRT3_AVOID_SQRT2,
        COUNTABLE_OR_COFINITE,
        SQRT2_COUNTABLE,
        TWO_COFINITE,
        IRRATIONAL_AVOID_SQRT2,
    )
}


# -- symbolic operators and predicates ---------------------------------------------


def sym_kernel(schema: Schema, a: SymbolicSet) -> SymbolicSet:
    schema._own(a)
    return schema.kernel(a)


def sym_closure(schema: Schema, a: SymbolicSet) -> SymbolicSet:
    schema._own(a)
    return schema.closure(a)


def sym_interior(schema: Schema, a: SymbolicSet) -> SymbolicSet:
    schema._own(a)
    return schema.interior(a)


def sym_vee(schema: Schema, a: SymbolicSet) -> SymbolicSet:
    schema._own(a)
    return schema.hull(a)


def sym_is_open(schema: Schema, a: SymbolicSet) -> bool:
    schema._own(a)
    return schema.is_open(a)


def sym_is_closed(schema: Schema, a: SymbolicSet) -> bool:
    return sym_is_open(schema, a.complement())


def sym_is_wedge_set(schema, a) -> bool:
    return sym_kernel(schema, a) == a


def sym_is_vee_set(schema, a) -> bool:
    return sym_vee(schema, a) == a


def sym_is_g_wedge_set(schema, a) -> bool:
    # every closed superset contains the kernel ⇔ the kernel lies in their intersection, cl(a)
    return sym_kernel(schema, a) <= sym_closure(schema, a)


def sym_is_g_vee_set(schema, a) -> bool:
    # every open subset lies in the hull ⇔ their union, Int(a), does
    return sym_interior(schema, a) <= sym_vee(schema, a)


def sym_is_lambda_star_closed(schema, a) -> bool:
    return a == sym_kernel(schema, a) & sym_closure(schema, a)


def sym_is_lambda_star_open(schema, a) -> bool:
    by_def = sym_is_lambda_star_closed(schema, a.complement())
    by_hull = a == sym_vee(schema, a) | sym_interior(schema, a)
    if by_def != by_hull:
        raise UnsupportedQuery(
            f"λ*-open formulations disagree on {a!r} in schema {schema.name}; the rules are inconsistent"
        )
    return by_def


def sym_is_gstar_closed(schema, a) -> bool:
    """Decided whenever ``a`` is closed, has kernel ``X``, or is a ∧τ-set.

    A closed ``F`` with ``a ⊆ F ⊆ ker(a)`` is ``a`` itself in the first case,
    ``X`` in the second, and can only be ``a`` in the third.
    """
    if sym_is_closed(schema, a):
        return True
    ker = sym_kernel(schema, a)
    if ker.is_full:
        return True
    if ker == a:
        return False
    raise UnsupportedQuery(f"g*-closedness of {a!r} is outside the decidable fragment")


def sym_is_gstar_open(schema, a) -> bool:
    return sym_is_gstar_closed(schema, a.complement())


# -- schema self-checks ---------------------------------------------------------


def duality_failures(schema: Schema, universe: Optional[Universe] = None) -> list[str]:
    """Kernel/hull identities that every schema's rules must satisfy, over a full battery."""
    u = universe or schema.universe()
    out = []
    full = u.full
    for a in u.all_sets():
        k, h, c, i = schema.kernel(a), schema.hull(a), schema.closure(a), schema.interior(a)
        ca = a.complement()
        checks = {
            "A ⊆ ker A": a <= k,
            "vee A ⊆ A": h <= a,
            "ker ker A = ker A": schema.kernel(k) == k,
            "vee vee A = vee A": schema.hull(h) == h,
            "ker(X-A) = X - vee A": schema.kernel(ca) == full - h,
            "vee(X-A) = X - ker A": schema.hull(ca) == full - k,
            "Int A = X - cl(X-A)": i == full - schema.closure(ca),
            "A ⊆ cl A": a <= c,
            "Int A ⊆ A": i <= a,
        }
        for name, ok in checks.items():
            if not ok:
                out.append(f"{name} fails for {a!r}")
    for a in u.all_sets():
        for b in u.all_sets():
            if a <= b:
                if not schema.kernel(a) <= schema.kernel(b):
                    out.append(f"ker not monotone on {a!r} ⊆ {b!r}")
                if not schema.hull(a) <= schema.hull(b):
                    out.append(f"vee not monotone on {a!r} ⊆ {b!r}")
    for name, ok in (
        ("ker ∅ = ∅", schema.kernel(u.empty).is_empty),
        ("vee ∅ = ∅", schema.hull(u.empty).is_empty),
        ("ker X = X", schema.kernel(full).is_full),
        ("vee X = X", schema.hull(full).is_full),
        ("∅ open", schema.is_open(u.empty)),
        ("X open", schema.is_open(full)),
    ):
        if not ok:
            out.append(name)
    return out


def closure_failures(schema: Schema, universe: Optional[Universe] = None) -> list[str]:
    """Pairs of battery opens whose union or intersection leaves the open family."""
    u = universe or schema.universe()
    opens = [a for a in u.all_sets() if schema.is_open(a)]
    out = []
    for a in opens:
        for b in opens:
            if not schema.is_open(a | b):
                out.append(f"union {a!r} ∪ {b!r}")
            if not schema.is_open(a & b):
                out.append(f"intersection {a!r} ∩ {b!r}")
    return out


def kernel_is_open_intersection(schema: Schema, universe: Optional[Universe] = None) -> list[str]:
    """The kernel rule never drops below a battery open superset, and open sets are their own kernel."""
    u = universe or schema.universe()
    opens = [a for a in u.all_sets() if schema.is_open(a)]
    out = []
    for a in u.all_sets():
        k = schema.kernel(a)
        for o in opens:
            if a <= o and not k <= o:
                out.append(f"ker {a!r} = {k!r} escapes open superset {o!r}")
        if schema.is_open(a) and k != a:
            out.append(f"open {a!r} has kernel {k!r}")
    return out


def non_topology_witness(schema: Schema) -> Optional[tuple[SymbolicSet, SymbolicSet]]:
    """``({x} ∪ core, cell ∪ core)``: each member open, their union over the cell not.

    ``x`` is the generic atom ``r``; it stands for every point of the cell.
    """
    if schema.topology:
        return None
    u = schema.universe(cells={"u1": (IRR, UNCOUNTABLE), "u2": (IRR, UNCOUNTABLE)})
    core = u.of(*schema.witness_core)
    member = u.of("r") | core
    union = u.of("u1") | core
    if schema.is_open(member) and not schema.is_open(union):
        return member, union
    return None


# -- claims ---------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimVerdict:
    id: str
    holds: bool
    checks: tuple[tuple[str, bool], ...]

    def as_dict(self) -> dict:
        return {"id": self.id, "holds": self.holds, "checks": [[d, ok] for d, ok in self.checks]}


@dataclass(frozen=True)
class ClaimCheck:
    id: str
    description: str
    schema: Schema
    run: Callable[[], Iterator[tuple[str, bool]]] = field(repr=False)
    expected: str = "pass"


CLAIMS: dict[str, ClaimCheck] = {}


def claim(cid: str, description: str, schema: Schema):
    def deco(fn):
        CLAIMS[cid] = ClaimCheck(cid, description, schema, fn)
        return fn

    return deco


def _eq(label: str, got: SymbolicSet, want: SymbolicSet) -> tuple[str, bool]:
    return (f"{label} = {want!r} (got {got!r})", got == want)


S = COUNTABLE_OPENS


@claim("EX-3.12", "g*-open set that is not open", COUNTABLE_OPENS)
def _ex_3_12():
    u = S.universe(cells={"pos": (IRR, UNCOUNTABLE), "neg": (IRR, UNCOUNTABLE)})
    b = u.of("pos")
    yield "B (positive irrationals) is uncountable with uncountable complement", b.descriptor() == SPLIT
    yield _eq("ker(B)", sym_kernel(S, b), u.full)
    yield "X is the only open set containing B", not S.is_open(b) and not b.countable()
    yield "B is g*-closed", sym_is_gstar_closed(S, b)
    yield "X - B is g*-open", sym_is_gstar_open(S, b.complement())
    yield "X - B is not open", not sym_is_open(S, b.complement())


@claim("EX-3.17", "g∧τ-set that is not a ∧τ-set", IRRATIONAL_COUNTABLE_OPENS)
def _ex_3_17():
    s = IRRATIONAL_COUNTABLE_OPENS
    u = s.universe(cells={"u": (IRR, UNCOUNTABLE), "qc": (RAT, COUNTABLE)})
    a = u.kind(IRR)
    yield _eq("ker(R - Q)", sym_kernel(s, a), u.full)
    yield _eq("cl(R - Q)", sym_closure(s, a), u.full)
    yield "R - Q is a g∧τ-set", sym_is_g_wedge_set(s, a)
    yield "R - Q is not a ∧τ-set", not sym_is_wedge_set(s, a)


@claim("EX-3.26", "converse of ker/hull g*-closure transfer fails", SQRT2_COUNTABLE_COCOUNTABLE)
def _ex_3_26():
    s = SQRT2_COUNTABLE_COCOUNTABLE
    u = s.universe(cells={"a": (IRR, COUNTABLE), "rest": (IRR, UNCOUNTABLE)})
    a = u.of("a")
    ker = sym_kernel(s, a)
    yield "A is countably infinite and avoids √2", a.descriptor() == COUNTABLY_INFINITE and not a.has("s2")
    yield "A is closed", sym_is_closed(s, a)
    yield "A is g*-closed", sym_is_gstar_closed(s, a)
    yield _eq("ker(A)", ker, a | u.of("s2"))
    yield "ker(A) is open", sym_is_open(s, ker)
    yield "ker(A) is not closed", not sym_is_closed(s, ker)
    yield "ker(A) is a ∧τ-set", sym_is_wedge_set(s, ker)
    yield "ker(A) is not g*-closed", not sym_is_gstar_closed(s, ker)
    xa = a.complement()
    yield "X - A is g*-open", sym_is_gstar_open(s, xa)
    yield _eq("vee(X - A)", sym_vee(s, xa), u.full - ker)
    yield "vee(X - A) is not g*-open", not sym_is_gstar_open(s, sym_vee(s, xa))


@claim("EX-3.29", "union of ∧τ-sets that is not a ∧τ-set", COUNTABLE_OPENS)
def _ex_3_29():
    u = S.universe(
        extra_atoms={"r2": IRR},
        cells={"in12": (IRR, UNCOUNTABLE), "out12": (IRR, UNCOUNTABLE)},
    )
    a = u.of("in12", "r", "r2")
    yield "A = [1,2] - Q is not open", not sym_is_open(S, a)
    yield _eq("ker(A)", sym_kernel(S, a), u.full)
    yield "A is not a ∧τ-set", not sym_is_wedge_set(S, a)
    yield "each singleton {r} ⊆ A is open", sym_is_open(S, u.of("r")) and sym_is_open(S, u.of("r2"))
    yield "each singleton {r} is a ∧τ-set", sym_is_wedge_set(S, u.of("r"))
    yield "a finite union of these singletons is still a ∧τ-set", sym_is_wedge_set(S, u.of("r", "r2"))


def _sqrt3_universe():
    return SQRT3_PAIRS.universe(cells={"c": (IRR, COUNTABLE), "u": (IRR, UNCOUNTABLE)})


@claim("EX-3.32", "union of two g∨τ-sets that is not g∨τ", SQRT3_PAIRS)
def _ex_3_32():
    s = SQRT3_PAIRS
    u = _sqrt3_universe()
    a, b = u.of("s3"), u.of("s5")
    c = a | b
    yield _eq("vee({√3})", sym_vee(s, a), u.empty)
    yield "{√3} is a g∨τ-set", sym_is_g_vee_set(s, a)
    yield _eq("vee({√5})", sym_vee(s, b), u.empty)
    yield "{√5} is a g∨τ-set", sym_is_g_vee_set(s, b)
    yield _eq("vee({√3,√5})", sym_vee(s, c), u.empty)
    yield "{√3,√5} is open", sym_is_open(s, c)
    yield "{√3,√5} is not a g∨τ-set", not sym_is_g_vee_set(s, c)


@claim("EX-3.33", "intersection of two g∧τ-sets that is not g∧τ", SQRT3_PAIRS)
def _ex_3_33():
    s = SQRT3_PAIRS
    u = _sqrt3_universe()
    xa, xb = u.of("s3").complement(), u.of("s5").complement()
    yield "X - {√3} is a g∧τ-set", sym_is_g_wedge_set(s, xa)
    yield "X - {√5} is a g∧τ-set", sym_is_g_wedge_set(s, xb)
    yield "(X - {√3}) ∩ (X - {√5}) is not a g∧τ-set", not sym_is_g_wedge_set(s, xa & xb)


@claim("EX-3.35", "g∨τ-set that is not a ∨τ-set", IRRATIONAL_COUNTABLE_OPENS)
def _ex_3_35():
    s = IRRATIONAL_COUNTABLE_OPENS
    u = s.universe(cells={"u": (IRR, UNCOUNTABLE), "qc": (RAT, COUNTABLE)})
    a = u.kind(RAT)
    xa = a.complement()
    yield _eq("ker(X - Q)", sym_kernel(s, xa), u.full)
    yield _eq("cl(X - Q)", sym_closure(s, xa), u.full)
    yield "X - Q is a g∧τ-set", sym_is_g_wedge_set(s, xa)
    yield "Q is a g∨τ-set", sym_is_g_vee_set(s, a)
    yield "X - Q is not a ∧τ-set", not sym_is_wedge_set(s, xa)
    yield "Q is not a ∨τ-set", not sym_is_vee_set(s, a)


@claim("EX-5.2", "g*-closed, λ*-closed set that is neither closed nor ∧τ", COUNTABLE_OPENS)
def _ex_5_2():
    u = S.universe(cells={"pos": (IRR, UNCOUNTABLE), "neg": (IRR, UNCOUNTABLE)})
    a = u.of("pos")
    yield "A is g*-closed", sym_is_gstar_closed(S, a)
    yield "A is not closed", not sym_is_closed(S, a)
    yield _eq("ker(A)", sym_kernel(S, a), u.full)
    yield _eq("cl(A)", sym_closure(S, a), a)
    yield "A is λ*-closed", sym_is_lambda_star_closed(S, a)
    yield "A is not a ∧τ-set", not sym_is_wedge_set(S, a)


def _510_universe():
    return SQRT3_AVOID_SQRT2.universe(cells={"c": (IRR, COUNTABLE), "u": (IRR, UNCOUNTABLE)})


@claim("EX-5.10", "union of two λ*-closed sets that is not λ*-closed", SQRT3_AVOID_SQRT2)
def _ex_5_10():
    s = SQRT3_AVOID_SQRT2
    u = _510_universe()
    a, b = u.of("s2"), u.of("s3")
    c = a | b
    yield _eq("ker({√2})", sym_kernel(s, a), u.full)
    yield _eq("cl({√2})", sym_closure(s, a), a)
    yield "{√2} is λ*-closed", sym_is_lambda_star_closed(s, a)
    yield _eq("ker({√3})", sym_kernel(s, b), b)
    yield _eq("cl({√3})", sym_closure(s, b), u.full)
    yield "{√3} is λ*-closed", sym_is_lambda_star_closed(s, b)
    yield _eq("ker(C)", sym_kernel(s, c), u.full)
    yield _eq("cl(C)", sym_closure(s, c), u.full)
    yield "ker(C) ∩ cl(C) = X ≠ C", (sym_kernel(s, c) & sym_closure(s, c)).is_full and not c.is_full
    yield "C is not λ*-closed", not sym_is_lambda_star_closed(s, c)


@claim("EX-5.12", "∧τ-set, hence λ*-closed, in a bicompact space", COUNTABLE_OR_COFINITE)
def _ex_5_12():
    s = COUNTABLE_OR_COFINITE
    u = s.universe(cells={"in01": (IRR, UNCOUNTABLE), "out01": (IRR, UNCOUNTABLE)})
    a = u.of("in01", "r")
    yield "A (irrationals in (0,1)) avoids √2", not a.has("s2")
    yield "no countable open set contains A", not a.countable()
    yield _eq("ker(A)", sym_kernel(s, a), a)
    yield "A is a ∧τ-set", sym_is_wedge_set(s, a)
    yield "A is λ*-closed", sym_is_lambda_star_closed(s, a)
    yield "each {r}, r ∈ A, is open (the cover without finite subcover)", sym_is_open(s, u.of("r"))


@claim("EX-5.17", "intersection of two λ*-open sets that is not λ*-open", SQRT3_AVOID_SQRT2)
def _ex_5_17():
    s = SQRT3_AVOID_SQRT2
    u = _510_universe()
    xa, xb = u.of("s2").complement(), u.of("s3").complement()
    yield "X - {√2} is λ*-open", sym_is_lambda_star_open(s, xa)
    yield "X - {√3} is λ*-open", sym_is_lambda_star_open(s, xb)
    yield "(X - {√2}) ∩ (X - {√3}) is not λ*-open", not sym_is_lambda_star_open(s, xa & xb)


@claim("EX-6.5", "T0-space that is not Tω/4", SQRT3_AVOID_SQRT2)
def _ex_6_5():
    s = SQRT3_AVOID_SQRT2
    u = _510_universe()
    r = u.of("r")
    yield _eq("ker({r})", sym_kernel(s, r), u.of("s3", "r"))
    yield _eq("cl({r})", sym_closure(s, r), u.of("s2", "r"))
    for p in ("s2", "s3", "r"):
        yield f"{{{p}}} is λ*-closed", sym_is_lambda_star_closed(s, u.of(p))
    c = u.of("s2", "s3")
    yield "the finite set {√2,√3} is not λ*-closed", c.finite() and not sym_is_lambda_star_closed(s, c)


@claim("EX-6.11", "T5ω/8-space that is not Tω", COUNTABLE_OPENS)
def _ex_6_11():
    u = S.universe(
        cells={
            "in01": (IRR, UNCOUNTABLE),
            "out01": (IRR, UNCOUNTABLE),
            "c": (IRR, COUNTABLE),
            "f": (IRR, FINITE),
        }
    )
    bad = [a for a in u.all_sets() if not sym_is_lambda_star_closed(S, a)]
    yield f"every one of the {2 ** len(u.names)} battery sets is λ*-closed", not bad
    b = u.of("in01")
    yield "irrationals in (0,1) are g*-closed", sym_is_gstar_closed(S, b)
    yield "irrationals in (0,1) are not closed", not sym_is_closed(S, b)


@claim("EX-6.12", "T3ω/8-space that is not T5ω/8", SQRT2_COUNTABLE)
def _ex_6_12():
    s = SQRT2_COUNTABLE
    u = s.universe(cells={"f": (IRR, FINITE), "c": (IRR, COUNTABLE), "u": (IRR, UNCOUNTABLE), "v": (IRR, UNCOUNTABLE)})
    bad = [a for a in u.all_sets() if a.countable() and not sym_is_lambda_star_closed(s, a)]
    yield "every countable battery set is λ*-closed", not bad
    b = u.of("s2", "u")
    yield "B is uncountable and contains √2", not b.countable() and b.has("s2")
    yield _eq("ker(B)", sym_kernel(s, b), u.full)
    yield _eq("cl(B)", sym_closure(s, b), u.full)
    yield "B is not λ*-closed", not sym_is_lambda_star_closed(s, b)


@claim("EX-6.13", "Tω/4-space that is not T3ω/8", TWO_COFINITE)
def _ex_6_13():
    s = TWO_COFINITE
    u = s.universe(cells={"f": (IRR, FINITE), "y": (IRR, COUNTABLE), "u": (IRR, UNCOUNTABLE)})
    bad = [a for a in u.all_sets() if a.finite() and not sym_is_lambda_star_closed(s, a)]
    yield "every finite battery set is λ*-closed", not bad
    y = u.of("y")
    yield _eq("cl(Y)", sym_closure(s, y), u.full)
    yield _eq("ker(Y)", sym_kernel(s, y), y | u.of("two"))
    yield "Y is not λ*-closed", not sym_is_lambda_star_closed(s, y)
    yield "the open family is closed under finite union and intersection", not closure_failures(s, u)


@claim("EX-6.18", "weak R0-space that is not R0", IRRATIONAL_AVOID_SQRT2)
def _ex_6_18():
    s = IRRATIONAL_AVOID_SQRT2
    u = s.universe(cells={"u": (IRR, UNCOUNTABLE), "qc": (RAT, COUNTABLE)})
    q = u.kind(RAT)
    root2, half, root5 = u.of("s2"), u.of("half"), u.of("s5")
    yield _eq("ker({√2})", sym_kernel(s, root2), u.full)
    yield _eq("cl({√2})", sym_closure(s, root2), root2 | q)
    yield "{√2} is not λ*-closed", not sym_is_lambda_star_closed(s, root2)
    yield _eq("ker({1/2})", sym_kernel(s, half), u.full)
    yield _eq("cl({1/2})", sym_closure(s, half), root2 | q)
    yield "{1/2} is not λ*-closed", not sym_is_lambda_star_closed(s, half)
    yield "irrational singletons other than √2 are λ*-closed", all(
        sym_is_lambda_star_closed(s, u.of(p)) for p in ("s5", "r")
    )
    weak = all(
        sym_is_wedge_set(s, u.of(p))
        for p, _ in u.atoms
        if sym_is_lambda_star_closed(s, u.of(p))
    )
    yield "every λ*-closed singleton is a ∧τ-set (weak R0)", weak
    yield "{√5} is open", sym_is_open(s, root5)
    yield _eq("cl({√5})", sym_closure(s, root5), root5 | q | root2)
    yield "{√5} does not contain its closure (not R0)", not sym_closure(s, root5) <= root5


@claim("EX-6.21", "T1-space with a subset that is not a ∧τ-set", COUNTABLE_OPENS)
def _ex_6_21():
    u = S.universe(extra_atoms={"r2": IRR}, cells={"in01": (IRR, UNCOUNTABLE), "out01": (IRR, UNCOUNTABLE)})
    yield "every singleton is a ∧τ-set (T1)", all(sym_is_wedge_set(S, u.of(p)) for p, _ in u.atoms)
    b = u.of("in01")
    yield _eq("ker(B)", sym_kernel(S, b), u.full)
    yield "B ≠ ker(B), so B is not a ∧τ-set", not sym_is_wedge_set(S, b)


def run_claim(cid: str) -> ClaimVerdict:
    try:
        c = CLAIMS[cid]
    except KeyError:
        raise UnknownClaim(f"no catalog claim {cid!r}") from None
    checks = tuple(c.run())
    return ClaimVerdict(cid, all(ok for _, ok in checks), checks)


def run_all() -> list[ClaimVerdict]:
    return [run_claim(cid) for cid in CLAIMS]
