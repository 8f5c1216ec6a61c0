import pytest

from sigma_lab.catalog import (
    ALL,
    CLAIMS,
    COCOUNTABLE,
    COUNTABLE,
    COUNTABLY_INFINITE,
    EMPTY,
    FINITE,
    FINITE_NONEMPTY,
    IRR,
    RAT,
    SCHEMAS,
    SPLIT,
    UNCOUNTABLE,
    Universe,
    closure_failures,
    duality_failures,
    kernel_is_open_intersection,
    non_topology_witness,
    run_all,
    run_claim,
    sym_algebra,
    sym_closure,
    sym_is_gstar_closed,
    sym_is_lambda_star_open,
    sym_kernel,
)
from sigma_lab.errors import SchemaMismatch, UnknownClaim, UnsupportedQuery


@pytest.fixture
def U():
    return Universe.build(
        {"p": IRR},
        {"f": (IRR, FINITE), "c": (IRR, COUNTABLE), "u": (IRR, UNCOUNTABLE), "v": (IRR, UNCOUNTABLE)},
    )


def test_complement_involution(U):
    for a in U.all_sets():
        assert sym_algebra(sym_algebra(a, None, "complement"), None, "complement") == a


def test_descriptor_tables(U):
    assert sym_algebra(U.of("c"), U.of("f"), "union").descriptor() == COUNTABLY_INFINITE
    a, b = U.of("c").complement(), U.of("f").complement()
    assert sym_algebra(a, b, "intersect").descriptor() == COCOUNTABLE
    assert U.empty.descriptor() == EMPTY
    assert U.full.descriptor() == ALL
    assert U.of("p", "f").descriptor() == FINITE_NONEMPTY
    assert U.of("u").descriptor() == SPLIT


def test_descriptor_per_kind():
    u = Universe.build({"q": RAT}, {"r": (IRR, UNCOUNTABLE), "qc": (RAT, COUNTABLE)})
    assert u.of("q", "qc").descriptor(RAT) == ALL
    assert u.of("qc").descriptor(RAT) == COUNTABLY_INFINITE
    assert u.of("qc").descriptor(IRR) == EMPTY


def test_mismatch(U):
    other = Universe.build({"z": IRR}, {})
    with pytest.raises(SchemaMismatch):
        sym_algebra(U.full, other.full, "union")
    with pytest.raises(SchemaMismatch):
        sym_kernel(SCHEMAS["sqrt2-countable"], other.full)


def test_size_query_ambiguity(U):
    with pytest.raises(UnsupportedQuery):
        U.of("f").at_least_two()
    assert U.of("p", "f").at_least_two()
    assert not U.of("p").at_least_two()


def test_kernel_examples():
    s = SCHEMAS["irrational-countable"]
    u = s.universe()
    assert sym_kernel(s, u.kind(IRR)).is_full
    s = SCHEMAS["sqrt2-countable-cocountable"]
    u = s.universe()
    a = u.of("c")
    assert sym_kernel(s, a) == a | u.of("s2")
    for s in SCHEMAS.values():
        u = s.universe()
        assert sym_kernel(s, u.full) == u.full


def test_closure_examples():
    s = SCHEMAS["irrational-countable"]
    u = s.universe()
    assert sym_closure(s, u.kind(IRR)).is_full
    s = SCHEMAS["sqrt3-avoid-sqrt2"]
    u = s.universe()
    assert sym_closure(s, u.of("s2")) == u.of("s2")
    for s in SCHEMAS.values():
        u = s.universe()
        assert sym_closure(s, u.full).is_full


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_schema_dualities(name):
    assert duality_failures(SCHEMAS[name]) == []


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_schema_kernel_rule_is_sound(name):
    assert kernel_is_open_intersection(SCHEMAS[name]) == []


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_schema_open_family_closure(name):
    s = SCHEMAS[name]
    bad = closure_failures(s)
    if s.intersection_closed:
        assert bad == []
    else:
        assert bad and all(b.startswith("intersection") for b in bad)


def test_sqrt3_pairs_intersection_defect():
    s = SCHEMAS["sqrt3-pairs"]
    u = s.universe()
    a, b = u.of("s3", "s5"), u.of("s3", "r")
    assert s.is_open(a) and s.is_open(b) and not s.is_open(a & b)


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_non_topology_witness(name):
    s = SCHEMAS[name]
    w = non_topology_witness(s)
    if s.topology:
        assert w is None
    else:
        member, union = w
        assert s.is_open(member) and not s.is_open(union)


@pytest.mark.parametrize("name", sorted(SCHEMAS))
def test_lambda_open_routes_agree(name):
    s = SCHEMAS[name]
    for a in s.universe().all_sets():
        sym_is_lambda_star_open(s, a)


def test_gstar_decidable_fragment():
    s = SCHEMAS["sqrt2-countable-cocountable"]
    u = s.universe()
    a = u.of("u1")
    # neither closed, of kernel X, nor a ∧τ-set
    assert not s.is_open(a.complement()) and not sym_kernel(s, a).is_full
    with pytest.raises(UnsupportedQuery):
        sym_is_gstar_closed(s, a)


def test_claim_registry():
    assert len(CLAIMS) == 17
    assert all(c.expected == "pass" for c in CLAIMS.values())


@pytest.mark.parametrize("cid", sorted(CLAIMS))
def test_claim_passes(cid):
    v = run_claim(cid)
    assert v.holds, [d for d, ok in v.checks if not ok]


def test_ex_5_10_values():
    checks = dict(run_claim("EX-5.10").checks)
    assert checks["ker(C) = X (got X)"] and checks["cl(C) = X (got X)"]


def test_ex_6_12_values():
    checks = dict(run_claim("EX-6.12").checks)
    assert checks["ker(B) = X (got X)"] and checks["cl(B) = X (got X)"]


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        run_claim("EX-9.99")


def test_run_all():
    assert all(v.holds for v in run_all())
