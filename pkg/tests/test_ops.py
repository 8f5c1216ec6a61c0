import pytest

from oracle import Naive, powerset
from sigma_lab.enumeration import iter_spaces
from sigma_lab.ops import (
    closure,
    derived_set,
    gstar_closure,
    interior,
    kernel_wedge,
    minimal_open,
    vee,
)


def sub(space, labels):
    return space.subset(labels)


def m(r):
    return set(r.members)


def test_closure(S, W, D2):
    assert m(closure(S, sub(S, ["0"]))) == {"0", "1"}
    assert m(closure(D2, sub(D2, []))) == set()
    assert m(closure(W, sub(W, ["c"]))) == {"a", "c"}


def test_interior(S, W):
    assert m(interior(S, sub(S, ["1"]))) == set()
    assert m(interior(S, sub(S, ["0", "1"]))) == {"0", "1"}
    assert m(interior(W, sub(W, ["b", "c"]))) == {"b", "c"}


def test_derived_set(S, D2, I2):
    assert m(derived_set(S, sub(S, ["0"]))) == {"1"}
    assert m(derived_set(D2, sub(D2, ["0"]))) == set()
    assert m(derived_set(I2, sub(I2, ["0"]))) == {"1"}


def test_kernel(S, W):
    assert m(kernel_wedge(S, sub(S, ["1"]))) == {"0", "1"}
    assert m(kernel_wedge(W, sub(W, ["a", "b", "c"]))) == {"a", "b", "c"}
    assert m(kernel_wedge(W, sub(W, ["c"]))) == {"b", "c"}


def test_vee(S):
    assert m(vee(S, sub(S, ["0"]))) == set()
    assert m(vee(S, sub(S, []))) == set()
    assert m(vee(S, sub(S, ["1"]))) == {"1"}


def test_int_masks_pass_through(S):
    assert closure(S, 1) == 3
    assert kernel_wedge(S, 2) == 3


def test_gstar_closure(S, W):
    r = gstar_closure(S, sub(S, ["0"]))
    assert m(r.closure_set) == {"0", "1"} and r.is_gstar_closed
    r = gstar_closure(S, sub(S, ["0", "1"]))
    assert m(r.closure_set) == {"0", "1"} and r.is_gstar_closed
    r = gstar_closure(S, sub(S, ["1"]))
    assert m(r.closure_set) == {"1"} and r.is_gstar_closed


def test_minimal_open(W):
    assert minimal_open(W, 2) == W.ground.subset(["b", "c"]).mask


@pytest.mark.parametrize("n", [1, 2, 3])
def test_against_naive_oracle(n):
    for sp in iter_spaces(n):
        nv = Naive(sp.ground.labels, [o.members for o in sp.opens])
        for a in powerset(sp.ground.labels):
            s = sp.subset(a)
            assert set(kernel_wedge(sp, s).members) == nv.kernel(a)
            assert set(vee(sp, s).members) == nv.vee(a)
            assert set(closure(sp, s).members) == nv.closure(a)
            assert set(interior(sp, s).members) == nv.interior(a)
