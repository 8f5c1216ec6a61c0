import pytest

from sigma_lab.errors import (
    GroundMismatch,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    SpaceValidationError,
    TooLarge,
)
from sigma_lab.setfam import (
    GroundSet,
    Subset,
    canonicalize,
    closed_sets,
    discrete,
    indiscrete,
    relabel,
    space_from_labels,
    subsets_in_order,
    validate_space,
)


def sets(fam):
    return {frozenset(s) for s in fam}


def fs(*groups):
    return {frozenset(g) for g in groups}


def test_validate_sierpinski(S):
    sp = space_from_labels(["0", "1"], [[], ["0"], ["0", "1"]])
    assert sp == S


def test_validate_w(W):
    sp = space_from_labels(["a", "b", "c"], [[], ["b"], ["b", "c"], ["a", "b", "c"]])
    assert sp == W
    assert sets(sp.opens) == fs((), "b", "bc", "abc")


def test_missing_full_rejected():
    with pytest.raises(MissingEmptyOrFull):
        space_from_labels(["0", "1"], [[], ["0"], ["1"]])


def test_union_witness():
    with pytest.raises(NotClosedUnderUnion) as e:
        space_from_labels(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])
    assert len(e.value.pair) == 2


def test_intersection_witness():
    with pytest.raises(NotClosedUnderIntersection):
        space_from_labels(["a", "b", "c"], [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]])


def test_ground_set_guards():
    with pytest.raises(SpaceValidationError):
        GroundSet.of([])
    with pytest.raises(SpaceValidationError):
        GroundSet.of(["a", "a"])
    with pytest.raises(TooLarge):
        GroundSet.of([str(i) for i in range(65)])


def test_subset_algebra():
    g = GroundSet.of("abc")
    a, b = g.subset("ab"), g.subset("bc")
    assert (a | b).members == ("a", "b", "c")
    assert (a & b).members == ("b",)
    assert (a - b).members == ("a",)
    assert a.complement().members == ("c",)
    assert "a" in a and "c" not in a
    assert len(a) == 2
    assert g.subset("b") <= a
    assert repr(a) == "{a,b}"
    with pytest.raises(GroundMismatch):
        a | GroundSet.of("xyz").subset("x")


def test_opens_stored_in_canonical_order():
    sp = validate_space(GroundSet.of("ab"), [3, 1, 0])
    assert sp.open_masks == (0, 1, 3)


def test_closed_sets(S, D2, W):
    assert sets(closed_sets(S)) == fs((), "1", "01")
    assert len(closed_sets(D2)) == 4
    assert sets(closed_sets(W)) == fs((), "a", "ac", "abc")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_open_closed_same_count(n):
    from sigma_lab.enumeration import iter_spaces

    for sp in iter_spaces(n):
        assert len(sp.closed_masks) == len(sp.open_masks)
        assert {sp.full & ~u for u in sp.closed_masks} == set(sp.open_masks)


def test_canonicalize_relabel(S, W, I2):
    assert canonicalize(relabel(S, [1, 0])) == canonicalize(S)
    assert canonicalize(S) != canonicalize(I2)
    for perm in ([1, 2, 0], [2, 0, 1], [0, 2, 1]):
        assert canonicalize(relabel(W, perm)) == canonicalize(W)


def test_canonical_guard():
    with pytest.raises(TooLarge):
        canonicalize(discrete(8))


def test_canonical_form_round_trip(W):
    f = canonicalize(W)
    assert canonicalize(f.to_space()) == f


def test_subsets_in_order():
    assert subsets_in_order(2) == [0, 1, 2, 3]
    assert subsets_in_order(3)[:4] == [0, 1, 2, 4]


def test_describe(S):
    assert S.describe() == "points ['0', '1']; opens [{}, {0}, {0,1}]"


def test_reference_spaces():
    assert len(indiscrete(3).open_masks) == 2
    assert len(discrete(3).open_masks) == 8
    assert isinstance(discrete(2).subset(["0"]), Subset)
