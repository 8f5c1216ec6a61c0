import pytest

from oracle import all_topologies, canonical_key
from sigma_lab.enumeration import (
    canonical_multiset,
    count_labeled,
    dedupe,
    enum_brute,
    enum_fast,
    iter_space_masks,
    worker_count,
)
from sigma_lab.errors import TooLarge
from sigma_lab.setfam import canonicalize


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_brute_counts(n, count):
    assert enum_brute(n).labeled_count == count


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 29), (4, 355), (5, 6942)])
def test_fast_counts(n, count):
    assert count_labeled(n) == count


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 9), (4, 33)])
def test_unlabeled_counts(n, count):
    assert dedupe(enum_fast(n)).unlabeled_count == count


def test_brute_guard():
    with pytest.raises(TooLarge):
        enum_brute(5)
    with pytest.raises(TooLarge):
        enum_fast(7)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fast_equals_brute_exactly(n):
    fast = sorted(iter_space_masks(n))
    brute = sorted(sp.open_masks for sp in enum_brute(n))
    assert fast == brute
    assert len(set(fast)) == len(fast)
    assert canonical_multiset(enum_fast(n)) == canonical_multiset(enum_brute(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_frozenset_oracle(n):
    labels = [str(i) for i in range(n)]
    ours = {frozenset(frozenset(o.members) for o in sp.opens) for sp in enum_fast(n)}
    assert ours == set(all_topologies(labels))


@pytest.mark.parametrize("n", [2, 3])
def test_canonical_classes_match_oracle(n):
    ours = {canonicalize(sp) for sp in enum_fast(n)}
    theirs = {canonical_key(sp.ground.labels, [o.members for o in sp.opens]) for sp in enum_fast(n)}
    assert len(ours) == len(theirs)


def test_spaces_reiterable():
    r = enum_fast(3)
    assert len(list(r.spaces)) == len(list(r)) == 29


def test_dedupe_sorted():
    reps = list(dedupe(enum_fast(3)).spaces)
    forms = [canonicalize(sp) for sp in reps]
    assert forms == sorted(forms)


def test_worker_count(monkeypatch):
    monkeypatch.setenv("SIGMA_LAB_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(2) == 2
    monkeypatch.setenv("SIGMA_LAB_THREADS", "junk")
    assert worker_count() == 1


def test_parallel_order_is_stable():
    assert list(iter_space_masks(4, workers=2)) == list(iter_space_masks(4, workers=1))
    assert count_labeled(4, workers=2) == 355
