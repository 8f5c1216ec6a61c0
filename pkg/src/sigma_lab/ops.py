"""Set operators on a finite space.

Every operator accepts either a :class:`~sigma_lab.setfam.Subset` or a raw
mask and answers in the same kind, so hot loops can stay on integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setfam import SpaceStructure, Subset, _as_mask, bits


def _wrap(space: SpaceStructure, a, mask: int):
    return Subset(space.ground, mask) if isinstance(a, Subset) else mask


def closure(space: SpaceStructure, a):
    """Adherent points: ``x`` such that every open neighbourhood of ``x`` meets ``a``."""
    m = _as_mask(space, a)
    out = 0
    for x in range(space.n):
        bit = 1 << x
        if all(u & m for u in space.open_masks if u & bit):
            out |= bit
    return _wrap(space, a, out)


def interior(space: SpaceStructure, a):
    m = _as_mask(space, a)
    out = 0
    for u in space.open_masks:
        if u & ~m == 0:
            out |= u
    return _wrap(space, a, out)


def derived_set(space: SpaceStructure, a):
    """Limit points of ``a``."""
    m = _as_mask(space, a)
    out = 0
    for x in range(space.n):
        bit = 1 << x
        rest = m & ~bit
        if all(u & rest for u in space.open_masks if u & bit):
            out |= bit
    return _wrap(space, a, out)


def kernel_wedge(space: SpaceStructure, a):
    """Intersection of all open supersets (``X`` is always one of them)."""
    m = _as_mask(space, a)
    out = space.full
    for u in space.open_masks:
        if m & ~u == 0:
            out &= u
    return _wrap(space, a, out)


def vee(space: SpaceStructure, a):
    """Union of all closed subsets (``∅`` is always one of them)."""
    m = _as_mask(space, a)
    out = 0
    for f in space.closed_masks:
        if f & ~m == 0:
            out |= f
    return _wrap(space, a, out)


@dataclass(frozen=True)
class GStarClosureResult:
    closure_set: object
    is_gstar_closed: bool


def gstar_closed_masks(space: SpaceStructure) -> list[int]:
    from .classes import is_gstar_closed

    return [m for m in range(space.full + 1) if is_gstar_closed(space, m)]


def gstar_closure(space: SpaceStructure, e) -> GStarClosureResult:
    """Intersection of all g*-closed supersets of ``e`` plus whether it is itself g*-closed.

    Intersections of g*-closed sets need not be g*-closed, so the flag is
    part of the answer rather than something callers re-derive.
    """
    from .classes import is_gstar_closed

    m = _as_mask(space, e)
    out = space.full
    for g in gstar_closed_masks(space):
        if m & ~g == 0:
            out &= g
    return GStarClosureResult(_wrap(space, e, out), is_gstar_closed(space, out))


def minimal_open(space: SpaceStructure, x: int) -> int:
    """Smallest open set containing point index ``x``."""
    return kernel_wedge(space, 1 << x)


def singletons(space: SpaceStructure) -> list[int]:
    return [1 << i for i in range(space.n)]


__all__ = [
    "closure",
    "interior",
    "derived_set",
    "kernel_wedge",
    "vee",
    "gstar_closure",
    "GStarClosureResult",
    "gstar_closed_masks",
    "minimal_open",
    "singletons",
    "bits",
]
