import pytest

from oracle import Naive, powerset
from sigma_lab.classes import (
    classify_set,
    is_g_closed,
    is_g_vee_set,
    is_g_wedge_set,
    is_gstar_closed,
    is_gstar_closed_alt,
    is_gstar_closed_def,
    is_gstar_open,
    is_gstar_open_alt,
    is_gstar_open_cover,
    is_lambda_star_closed,
    is_lambda_star_closed_decomp,
    is_lambda_star_open,
    is_lambda_star_open_decomp,
    is_lambda_star_open_def,
    is_vee_set,
    is_wedge_set,
    lambda_star_closed_witness,
    weakly_separated,
)
from sigma_lab.enumeration import iter_spaces


def s(space, labels):
    return space.subset(labels)


def test_g_closed(S):
    assert is_g_closed(S, s(S, ["1"]))
    assert not is_g_closed(S, s(S, ["0"]))
    assert is_g_closed(S, s(S, ["0", "1"]))


def test_gstar_closed(S, W):
    assert is_gstar_closed(S, s(S, ["1"]))
    assert not is_gstar_closed(S, s(S, ["0"]))
    assert not is_gstar_closed(W, s(W, ["c"]))


def test_gstar_closed_alt(S, W):
    assert is_gstar_closed_alt(S, s(S, ["1"]))
    assert not is_gstar_closed_alt(S, s(S, ["0"]))
    assert is_gstar_closed_alt(W, s(W, []))


def test_gstar_open(S):
    assert is_gstar_open(S, s(S, ["0"]))
    assert not is_gstar_open(S, s(S, ["1"]))
    assert is_gstar_open(S, s(S, ["0", "1"]))


def test_wedge_and_vee(S, W):
    assert is_wedge_set(S, s(S, ["0"]))
    assert not is_wedge_set(S, s(S, ["1"]))
    assert is_wedge_set(W, s(W, ["a", "b", "c"]))
    assert is_vee_set(S, s(S, ["1"]))
    assert not is_vee_set(S, s(S, ["0"]))
    assert is_vee_set(W, s(W, []))


def test_g_wedge_and_g_vee(S, W):
    assert is_g_wedge_set(S, s(S, ["0"]))
    assert not is_g_wedge_set(S, s(S, ["1"]))
    assert is_g_wedge_set(W, s(W, ["a", "b", "c"]))
    assert is_g_vee_set(S, s(S, ["1"]))
    assert not is_g_vee_set(S, s(S, ["0"]))
    assert is_g_vee_set(W, s(W, []))


def test_lambda_star_closed(W):
    assert is_lambda_star_closed(W, s(W, ["c"]))
    assert not is_lambda_star_closed(W, s(W, ["a", "b"]))
    assert is_lambda_star_closed(W, s(W, ["a", "b", "c"]))


def test_lambda_star_closed_decomp(W):
    lo, c = lambda_star_closed_witness(W, s(W, ["c"]))
    assert lo & c == s(W, ["c"]).mask
    assert not is_lambda_star_closed_decomp(W, s(W, ["a", "b"]))
    assert is_lambda_star_closed_decomp(W, s(W, []))


def test_lambda_star_open(S, W):
    assert is_lambda_star_open(S, s(S, ["1"]))
    assert not is_lambda_star_open(W, s(W, ["c"]))
    assert is_lambda_star_open(W, s(W, ["a", "b", "c"]))


def test_weakly_separated(S, D2):
    assert not weakly_separated(S, s(S, ["0"]), s(S, ["1"]))
    assert weakly_separated(D2, s(D2, ["0"]), s(D2, ["1"]))
    assert weakly_separated(S, s(S, []), s(S, []))


def test_classify_set_sierpinski_open_point(S):
    c = classify_set(S, s(S, ["0"]))
    assert c.open and c.gstar_open and c.wedge_set and c.g_wedge_set
    assert c.lambda_star_closed and c.lambda_star_open
    assert not (c.closed or c.gstar_closed or c.vee_set or c.g_vee_set)


def test_classify_set_full(S):
    c = classify_set(S, s(S, ["0", "1"]))
    assert all(c.as_dict().values())


def test_classify_set_w_pair(W):
    c = classify_set(W, s(W, ["a", "b"]))
    assert c.gstar_closed
    assert not c.lambda_star_closed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_formulations_agree(n):
    for sp in iter_spaces(n):
        for a in range(sp.full + 1):
            g = is_gstar_closed(sp, a)
            assert g == is_gstar_closed_def(sp, a) == is_gstar_closed_alt(sp, a)
            o = is_gstar_open(sp, a)
            assert o == is_gstar_open_alt(sp, a) == is_gstar_open_cover(sp, a)
            assert is_lambda_star_closed(sp, a) == is_lambda_star_closed_decomp(sp, a)
            lo = is_lambda_star_open(sp, a)
            assert lo == is_lambda_star_open_def(sp, a) == is_lambda_star_open_decomp(sp, a)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_against_naive_oracle(n):
    for sp in iter_spaces(n):
        nv = Naive(sp.ground.labels, [o.members for o in sp.opens])
        for a in powerset(sp.ground.labels):
            assert is_gstar_closed(sp, sp.subset(a)) == nv.gstar_closed(a)
            assert is_lambda_star_closed(sp, sp.subset(a)) == nv.lambda_closed(a)
