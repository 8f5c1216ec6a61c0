"""Enumeration of all finite spaces on ``n`` labelled points.

A finite space is determined by the map sending each point ``x`` to its
smallest open neighbourhood ``m(x)``; the only constraint is
``y ∈ m(x) ⇒ m(y) ⊆ m(x)``.  :func:`enum_fast` grows such assignments one
point at a time.  Adding point ``k`` to a space on ``{0..k-1}`` amounts to
choosing

* ``U = m(k) - {k}``: an open set of the smaller space, and
* ``L = {x : k ∈ m(x)}``: a closed set of the smaller space with
  ``U ⊆ m(x)`` for every ``x ∈ L``,

and every valid pair gives exactly one new space.  :func:`enum_brute` is the
slow oracle: it filters every family of subsets by the axioms directly.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .errors import TooLarge
from .setfam import (
    CanonicalForm,
    GroundSet,
    SpaceStructure,
    bits,
    canonicalize,
    mask_key,
)

BRUTE_LIMIT = 4
FAST_LIMIT = 6


@dataclass
class EnumerationResult:
    """Spaces on ``n`` points.

    ``spaces`` is re-iterable and produces the spaces lazily, so large ``n``
    never has to be materialised.
    """

    n: int
    labeled_count: int
    unlabeled_count: Optional[int] = None
    _source: Callable[[], Iterable[SpaceStructure]] = field(repr=False, default=tuple)

    @property
    def spaces(self) -> Iterable[SpaceStructure]:
        return self._source()

    def __iter__(self) -> Iterator[SpaceStructure]:
        return iter(self._source())


# -- brute-force oracle ----------------------------------------------------


def _brute_families(n: int) -> list[tuple[int, ...]]:
    size = 1 << n
    full = size - 1
    found = []
    for fam in range(1 << size):
        if not fam & 1 or not fam >> full & 1:
            continue
        members = [m for m in range(size) if fam >> m & 1]
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not fam >> (a | b) & 1 or not fam >> (a & b) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(sorted(members, key=mask_key)))
    return found


def enum_brute(n: int) -> EnumerationResult:
    """Every family of subsets of ``n`` points that satisfies the open-set axioms."""
    if n > BRUTE_LIMIT:
        raise TooLarge(f"enum_brute is an oracle for n <= {BRUTE_LIMIT} (got {n})")
    if n < 1:
        raise ValueError("need at least one point")
    fams = _brute_families(n)
    ground = GroundSet.range(n)
    return EnumerationResult(
        n, len(fams), None, lambda: (SpaceStructure(ground, f) for f in fams)
    )


# -- fast enumerator ---------------------------------------------------------


def _opens_of(mins: tuple[int, ...]) -> list[int]:
    """All open sets of the space with minimal neighbourhoods ``mins``."""
    k = len(mins)
    return [
        s
        for s in range(1 << k)
        if all(mins[x] & ~s == 0 for x in bits(s))
    ]


def _extensions(mins: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    k = len(mins)
    full = (1 << k) - 1
    opens = _opens_of(mins)
    newbit = 1 << k
    for u in opens:
        for c in opens:
            low = full & ~c
            if all(u & ~mins[x] == 0 for x in bits(low)):
                yield tuple(
                    (mins[x] | newbit) if low >> x & 1 else mins[x] for x in range(k)
                ) + (u | newbit,)


def _grow(mins: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    if len(mins) == n:
        yield mins
        return
    for ext in _extensions(mins):
        yield from _grow(ext, n)


def _seeds(n: int) -> list[tuple[int, ...]]:
    """Work partitions: all minimal-neighbourhood maps on the first ``n-1`` points."""
    if n == 1:
        return [()]
    return list(_grow((1,), n - 1))


def _space_masks(mins: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(_opens_of(mins), key=mask_key))


def _partition(args: tuple[tuple[int, ...], int]) -> list[tuple[int, ...]]:
    seed, n = args
    return [_space_masks(m) for m in _grow(seed, n)]


def _count_partition(args: tuple[tuple[int, ...], int]) -> int:
    seed, n = args
    return sum(1 for _ in _grow(seed, n))


def worker_count(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SIGMA_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def iter_space_masks(n: int, workers: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Open families (as sorted mask tuples) of all labelled spaces on ``n`` points.

    Order is fixed by the seed order, independent of ``workers``.
    """
    if n < 1:
        raise ValueError("need at least one point")
    if n > FAST_LIMIT:
        raise TooLarge(f"enum_fast supports n <= {FAST_LIMIT} (got {n})")
    seeds = [(s, n) for s in _seeds(n)]
    w = worker_count(workers)
    if w == 1 or len(seeds) < 2:
        for s in seeds:
            yield from _partition(s)
        return
    with ProcessPoolExecutor(max_workers=w) as pool:
        for chunk in pool.map(_partition, seeds, chunksize=max(1, len(seeds) // (4 * w))):
            yield from chunk


def count_labeled(n: int, workers: Optional[int] = None) -> int:
    if n > FAST_LIMIT:
        raise TooLarge(f"enum_fast supports n <= {FAST_LIMIT} (got {n})")
    seeds = [(s, n) for s in _seeds(n)]
    w = worker_count(workers)
    if w == 1 or len(seeds) < 2:
        return sum(_count_partition(s) for s in seeds)
    with ProcessPoolExecutor(max_workers=w) as pool:
        return sum(pool.map(_count_partition, seeds))


def iter_spaces(n: int, workers: Optional[int] = None) -> Iterator[SpaceStructure]:
    ground = GroundSet.range(n)
    for masks in iter_space_masks(n, workers):
        yield SpaceStructure(ground, masks)


def enum_fast(n: int, workers: Optional[int] = None) -> EnumerationResult:
    count = count_labeled(n, workers)
    return EnumerationResult(n, count, None, lambda: iter_spaces(n, workers))


def dedupe(result: EnumerationResult) -> EnumerationResult:
    """One canonical representative per homeomorphism class, in canonical order."""
    forms: set[CanonicalForm] = set()
    ground = None
    for sp in result.spaces:
        ground = sp.ground
        forms.add(canonicalize(sp))
    reps = tuple(f.to_space(ground) for f in sorted(forms))
    return EnumerationResult(result.n, result.labeled_count, len(reps), lambda: reps)


def canonical_multiset(result: EnumerationResult) -> dict[CanonicalForm, int]:
    counts: dict[CanonicalForm, int] = {}
    for sp in result.spaces:
        f = canonicalize(sp)
        counts[f] = counts.get(f, 0) + 1
    return counts
