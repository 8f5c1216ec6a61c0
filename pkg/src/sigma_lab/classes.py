"""Per-set predicates: g*-closed/open, ∧τ/∨τ-sets and their generalised
versions, λ*-closed/open sets, weak separation.

Wherever two characterisations of a class are known, both are implemented
(the ``*_alt``/``*_decomp`` variants) so that the law runner can check them
against each other instead of trusting either one.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .ops import closure, interior, kernel_wedge, vee
from .setfam import SpaceStructure, _as_mask


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def is_g_closed(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return _sub(closure(space, m), kernel_wedge(space, m))


def is_gstar_closed(space: SpaceStructure, a) -> bool:
    """Some closed ``F`` sits between ``a`` and its kernel."""
    m = _as_mask(space, a)
    ker = kernel_wedge(space, m)
    return any(_sub(m, f) and _sub(f, ker) for f in space.closed_masks)


def is_gstar_closed_def(space: SpaceStructure, a) -> bool:
    """Literal form: a closed ``F ⊇ a`` lying inside every open superset of ``a``."""
    m = _as_mask(space, a)
    ups = [u for u in space.open_masks if _sub(m, u)]
    return any(
        _sub(m, f) and all(_sub(f, u) for u in ups) for f in space.closed_masks
    )


def is_gstar_closed_alt(space: SpaceStructure, a) -> bool:
    """Some closed ``F ⊇ a`` such that ``F - a`` holds no non-empty closed set."""
    m = _as_mask(space, a)
    for f in space.closed_masks:
        if not _sub(m, f):
            continue
        gap = f & ~m
        if not any(g and _sub(g, gap) for g in space.closed_masks):
            return True
    return False


def is_gstar_open(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return is_gstar_closed(space, space.full & ~m)


def is_gstar_open_alt(space: SpaceStructure, a) -> bool:
    """An open ``V ⊆ a`` containing the ∨τ-hull of ``a``."""
    m = _as_mask(space, a)
    hull = vee(space, m)
    return any(_sub(v, m) and _sub(hull, v) for v in space.open_masks)


def is_gstar_open_cover(space: SpaceStructure, a) -> bool:
    """An open ``V ⊆ a`` containing every closed subset of ``a``."""
    m = _as_mask(space, a)
    inner = [f for f in space.closed_masks if _sub(f, m)]
    return any(
        _sub(v, m) and all(_sub(f, v) for f in inner) for v in space.open_masks
    )


def is_wedge_set(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return kernel_wedge(space, m) == m


def is_vee_set(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return vee(space, m) == m


def is_g_wedge_set(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    ker = kernel_wedge(space, m)
    return all(_sub(ker, f) for f in space.closed_masks if _sub(m, f))


def is_g_vee_set(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    hull = vee(space, m)
    return all(_sub(u, hull) for u in space.open_masks if _sub(u, m))


def is_lambda_star_closed(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return m == kernel_wedge(space, m) & closure(space, m)


def wedge_sets(space: SpaceStructure) -> list[int]:
    return [m for m in range(space.full + 1) if is_wedge_set(space, m)]


def vee_sets(space: SpaceStructure) -> list[int]:
    return [m for m in range(space.full + 1) if is_vee_set(space, m)]


def _closures(space: SpaceStructure) -> set[int]:
    return {closure(space, f) for f in range(space.full + 1)}


def lambda_star_closed_witness(space: SpaceStructure, a):
    """A pair ``(L, cl F)`` with ``L`` a ∧τ-set and ``a = L ∩ cl F``, or ``None``.

    Searches every ∧τ-set against every distinct closure; it never consults
    the kernel of ``a`` itself.
    """
    m = _as_mask(space, a)
    cls = sorted(_closures(space))
    for lo in wedge_sets(space):
        if not _sub(m, lo):
            continue
        for c in cls:
            if lo & c == m:
                return lo, c
    return None


def is_lambda_star_closed_decomp(space: SpaceStructure, a) -> bool:
    return lambda_star_closed_witness(space, a) is not None


def is_lambda_star_open(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return m == vee(space, m) | interior(space, m)


def is_lambda_star_open_def(space: SpaceStructure, a) -> bool:
    m = _as_mask(space, a)
    return is_lambda_star_closed(space, space.full & ~m)


def is_lambda_star_open_decomp(space: SpaceStructure, a) -> bool:
    """``a = M ∪ Int(V)`` for some ∨τ-set ``M`` and subset ``V``.

    Only ``Int(V)`` matters, so ``V`` ranges over the distinct interiors.
    """
    m = _as_mask(space, a)
    interiors = {interior(space, v) for v in range(space.full + 1)}
    return any(
        mm | iv == m
        for mm in vee_sets(space)
        if _sub(mm, m)
        for iv in interiors
    )


def weakly_separated(space: SpaceStructure, a, b) -> bool:
    ma, mb = _as_mask(space, a), _as_mask(space, b)
    us = [u for u in space.open_masks if _sub(ma, u) and u & mb == 0]
    vs = [v for v in space.open_masks if _sub(mb, v) and v & ma == 0]
    return bool(us) and bool(vs)


@dataclass(frozen=True)
class SetClassification:
    open: bool
    closed: bool
    g_closed: bool
    gstar_closed: bool
    gstar_open: bool
    wedge_set: bool
    vee_set: bool
    g_wedge_set: bool
    g_vee_set: bool
    lambda_star_closed: bool
    lambda_star_open: bool

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)

    def implications_hold(self) -> bool:
        pairs = [
            (self.closed, self.gstar_closed),
            (self.closed, self.g_closed),
            (self.wedge_set, self.lambda_star_closed),
            (self.closed, self.lambda_star_closed),
            (self.wedge_set, self.g_wedge_set),
            (self.vee_set, self.g_vee_set),
            (self.open, self.gstar_open),
            (self.vee_set, self.lambda_star_open),
            (self.open, self.lambda_star_open),
        ]
        return all(q for p, q in pairs if p)


def classify_set(space: SpaceStructure, a) -> SetClassification:
    m = _as_mask(space, a)
    return SetClassification(
        open=space.is_open(m),
        closed=space.is_closed(m),
        g_closed=is_g_closed(space, m),
        gstar_closed=is_gstar_closed(space, m),
        gstar_open=is_gstar_open(space, m),
        wedge_set=is_wedge_set(space, m),
        vee_set=is_vee_set(space, m),
        g_wedge_set=is_g_wedge_set(space, m),
        g_vee_set=is_g_vee_set(space, m),
        lambda_star_closed=is_lambda_star_closed(space, m),
        lambda_star_open=is_lambda_star_open(space, m),
    )
