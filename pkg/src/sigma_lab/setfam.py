"""Finite ground sets, subsets as bitmasks, and validated space structures.

A subset of an ``n``-point ground set is a membership mask: bit ``i`` is set
iff the point with label ``labels[i]`` is a member.  On a finite ground set
a countable union of open sets is a finite union, so a family that contains
``∅`` and ``X`` and is closed under pairwise union and intersection is both
a sigma-space and an ordinary topology.  The validator therefore only checks
pairwise closure; the distinction between the two notions only shows up in
:mod:`sigma_lab.catalog`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    GroundMismatch,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    SpaceValidationError,
    TooLarge,
)

MAX_POINTS = 64
CANONICAL_GUARD = 7


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_key(mask: int) -> tuple[int, int]:
    """Sort key for masks: cardinality first, then the mask read as an integer."""
    return (popcount(mask), mask)


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def subsets_in_order(n: int) -> list[int]:
    """All masks over ``n`` points in canonical order."""
    return sorted(range(1 << n), key=mask_key)


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise SpaceValidationError("ground set must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise SpaceValidationError(f"duplicate point labels in {self.labels!r}")
        if len(self.labels) > MAX_POINTS:
            raise TooLarge(f"{len(self.labels)} points exceeds the {MAX_POINTS}-bit mask width")

    @classmethod
    def of(cls, labels: Iterable) -> "GroundSet":
        return cls(tuple(str(x) for x in labels))

    @classmethod
    def range(cls, n: int) -> "GroundSet":
        return cls(tuple(str(i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise GroundMismatch(f"{label!r} is not a point of {self.labels!r}") from None

    def subset(self, labels: Iterable = ()) -> "Subset":
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return Subset(self, m)

    def from_mask(self, mask: int) -> "Subset":
        return Subset(self, mask)

    def all_subsets(self) -> list["Subset"]:
        return [Subset(self, m) for m in subsets_in_order(self.n)]


@dataclass(frozen=True)
class Subset:
    ground: GroundSet
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.ground.full:
            raise GroundMismatch(f"mask {self.mask:#x} does not fit {self.ground.n} points")

    def _other(self, other: "Subset") -> int:
        if other.ground != self.ground:
            raise GroundMismatch("subsets over different ground sets")
        return other.mask

    def __or__(self, other):
        return Subset(self.ground, self.mask | self._other(other))

    def __and__(self, other):
        return Subset(self.ground, self.mask & self._other(other))

    def __sub__(self, other):
        return Subset(self.ground, self.mask & ~self._other(other))

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other):
        return other <= self

    def complement(self) -> "Subset":
        return Subset(self.ground, self.ground.full & ~self.mask)

    def __contains__(self, label) -> bool:
        return bool(self.mask >> self.ground.index(label) & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self):
        return (self.ground.labels[i] for i in bits(self.mask))

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(self)

    @property
    def vector(self) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> i & 1) for i in range(self.ground.n))

    def __repr__(self):
        return "{" + ",".join(self) + "}"


@dataclass(frozen=True)
class SpaceStructure:
    """A validated finite space.  Build through :func:`validate_space`."""

    ground: GroundSet
    open_masks: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    @property
    def opens(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.ground, m) for m in self.open_masks)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.ground.full
        return tuple(sorted((full & ~m for m in self.open_masks), key=mask_key))

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.open_masks)

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed_masks)

    def is_open(self, a) -> bool:
        return _as_mask(self, a) in self.open_set

    def is_closed(self, a) -> bool:
        return _as_mask(self, a) in self.closed_set

    def subset(self, labels: Iterable = ()) -> Subset:
        return self.ground.subset(labels)

    def describe(self) -> str:
        fam = ", ".join(repr(o) for o in self.opens)
        return f"points {list(self.ground.labels)}; opens [{fam}]"


def _as_mask(space: SpaceStructure, a) -> int:
    if isinstance(a, Subset):
        if a.ground != space.ground:
            raise GroundMismatch("subset and space have different ground sets")
        return a.mask
    return a


def _check_family(ground: GroundSet, masks: Sequence[int]) -> tuple[int, ...]:
    full = ground.full
    fam = sorted(set(masks), key=mask_key)
    for m in fam:
        if m < 0 or m > full:
            raise GroundMismatch(f"mask {m:#x} does not fit {ground.n} points")
    present = set(fam)
    if 0 not in present or full not in present:
        missing = "∅" if 0 not in present else "X"
        raise MissingEmptyOrFull(f"open family lacks {missing}")
    for i, a in enumerate(fam):
        for b in fam[i + 1:]:
            if a | b not in present:
                raise NotClosedUnderUnion(
                    f"union of {_fmt(ground, a)} and {_fmt(ground, b)} is not open",
                    (Subset(ground, a), Subset(ground, b)),
                )
            if a & b not in present:
                raise NotClosedUnderIntersection(
                    f"intersection of {_fmt(ground, a)} and {_fmt(ground, b)} is not open",
                    (Subset(ground, a), Subset(ground, b)),
                )
    return tuple(fam)


def _fmt(ground: GroundSet, m: int) -> str:
    return repr(Subset(ground, m))


def validate_space(ground: GroundSet, opens: Iterable) -> SpaceStructure:
    """Check the open family and return the canonical :class:`SpaceStructure`.

    ``opens`` may hold :class:`Subset` values or raw masks.
    """
    masks = []
    for o in opens:
        if isinstance(o, Subset):
            if o.ground != ground:
                raise GroundMismatch("open set over a different ground set")
            masks.append(o.mask)
        else:
            masks.append(int(o))
    return SpaceStructure(ground, _check_family(ground, masks))


def space_from_labels(points: Sequence, opens: Iterable[Iterable]) -> SpaceStructure:
    ground = GroundSet.of(points)
    return validate_space(ground, [ground.subset(o) for o in opens])


def closed_sets(space: SpaceStructure) -> tuple[Subset, ...]:
    return tuple(Subset(space.ground, m) for m in space.closed_masks)


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << perm[i]
    return out


def relabel(space: SpaceStructure, perm: Sequence[int]) -> SpaceStructure:
    """Move point ``i`` to position ``perm[i]``; labels stay where they are."""
    if sorted(perm) != list(range(space.n)):
        raise ValueError(f"{perm!r} is not a permutation of range({space.n})")
    return SpaceStructure(
        space.ground,
        tuple(sorted((permute_mask(m, perm) for m in space.open_masks), key=mask_key)),
    )


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    opens: tuple[int, ...]

    def to_space(self, ground: GroundSet | None = None) -> SpaceStructure:
        ground = ground or GroundSet.range(self.n)
        if ground.n != self.n:
            raise GroundMismatch("ground size differs from canonical form")
        return SpaceStructure(ground, self.opens)


def _perm_tables(n: int) -> list[list[int]]:
    """For every permutation, the image of each mask (list indexed by mask)."""
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append([permute_mask(m, perm) for m in range(1 << n)])
    return tables


_TABLE_CACHE: dict[int, list[list[int]]] = {}


def canonicalize(space: SpaceStructure) -> CanonicalForm:
    n = space.n
    if n > CANONICAL_GUARD:
        raise TooLarge(f"canonicalize is guarded at n <= {CANONICAL_GUARD} (got {n})")
    tables = _TABLE_CACHE.get(n)
    if tables is None:
        tables = _TABLE_CACHE[n] = _perm_tables(n)
    best = None
    masks = space.open_masks
    for table in tables:
        cand = tuple(sorted((table[m] for m in masks), key=mask_key))
        if best is None or cand < best:
            best = cand
    return CanonicalForm(n, best)


def canonical_representative(space: SpaceStructure) -> SpaceStructure:
    """The canonical relabeling of ``space`` (labels kept in their positions)."""
    return canonicalize(space).to_space(space.ground)


# reference spaces used throughout the test-suite and docs


def sierpinski() -> SpaceStructure:
    return space_from_labels(["0", "1"], [[], ["0"], ["0", "1"]])


def witness_w() -> SpaceStructure:
    return space_from_labels(["a", "b", "c"], [[], ["b"], ["b", "c"], ["a", "b", "c"]])


def discrete(n: int) -> SpaceStructure:
    g = GroundSet.range(n)
    return validate_space(g, range(1 << n))


def indiscrete(n: int) -> SpaceStructure:
    g = GroundSet.range(n)
    return validate_space(g, [0, g.full])
