"""Normal forms, isomorphism verification, certificates, products."""

import itertools

import pytest

from nearvec.canonical import (
    IsoMap,
    basis_transport_check,
    is_multiplicative,
    normal_form_rho,
    normal_form_sigma,
    product_hypotheses,
    product_regroup,
    verify_iso,
)
from nearvec.mult_auto import FinitePower, enumerate_mult_autos, identity_auto
from nearvec.nearfield import COMPLEXES, REALS, Dickson9, GaloisField, induced_add
from nearvec.nvspace import (
    SpaceSpec,
    anchored_add,
    exponent_space,
    materialize_quasi_kernel,
    nvs_axiom_check,
    quasi_kernel_bruteforce,
)


@pytest.fixture(scope="module")
def gf5():
    return GaloisField.of(5, 1)


@pytest.fixture(scope="module")
def d9():
    return Dickson9()


def test_normal_form_sigma_merges_exponents(gf5):
    spec = exponent_space(gf5, [3], [3])
    target, m = normal_form_sigma(spec)
    assert target.sigma["1"] == FinitePower(gf5, 1)  # 3*3 = 9 = 1 mod 4
    assert target.rho["1"].is_identity()
    spec2 = exponent_space(gf5, [1, 3], [3, 1])
    target2, _ = normal_form_sigma(spec2)
    assert [target2.sigma[k].alpha for k in target2.index] == [3, 3]
    ident_spec = exponent_space(gf5, [1], [1])
    t3, _ = normal_form_sigma(ident_spec)
    assert t3.sigma["1"].is_identity() and t3.rho["1"].is_identity()


def test_normal_form_rho_merges_exponents(gf5):
    spec = exponent_space(gf5, [3], [1])
    target, _ = normal_form_rho(spec)
    assert target.sigma["1"].is_identity()
    assert target.rho["1"] == FinitePower(gf5, 3)
    gf8 = GaloisField.of(2, 3)
    spec8 = exponent_space(gf8, [2], [3])
    target8, _ = normal_form_rho(spec8)
    assert target8.rho["1"] == FinitePower(gf8, 6)  # 2*3 mod 7


def test_verify_iso_passes_for_normal_forms(gf5):
    gf4 = GaloisField.of(2, 2)
    for base in (gf5, gf4):
        units = [a.alpha for a in enumerate_mult_autos(base)]
        for se in itertools.product(units, repeat=2):
            for re_ in itertools.product(units, repeat=2):
                spec = exponent_space(base, se, re_)
                for maker in (normal_form_sigma, normal_form_rho):
                    target, m = maker(spec)
                    rep = verify_iso(m)
                    assert rep.passed, (se, re_, maker.__name__)
                    assert rep.details["mode"] == "exhaustive-by-component"


def test_verify_iso_detects_corrupted_map(gf5):
    spec = exponent_space(gf5, [1, 3])
    target, m = normal_form_sigma(spec)
    # swap the two basis images across addition classes
    corrupted = IsoMap(
        spec,
        target,
        {
            "1": m.basis_images["2"],
            "2": m.basis_images["1"],
        },
    )
    rep = verify_iso(corrupted)
    assert not rep.passed
    assert any(v["law"] == "additive" for v in rep.violations)


def test_verify_iso_identity_map_full_loop(gf5):
    spec = exponent_space(gf5, [1, 3])
    two = gf5.table.from_int(2)
    # non-unit image value forces the all-pairs path
    images = {
        "1": spec.scale(two, spec.basis_vector("1")),
        "2": spec.basis_vector("2"),
    }
    m = IsoMap(spec, spec, images)
    rep = verify_iso(m)
    assert rep.details["mode"] == "exhaustive"
    assert rep.passed  # scaling a basis vector inside its own axis is fine


def test_verify_iso_sampled_real():
    spec = exponent_space(REALS, [2.0, 1.0])
    target, m = normal_form_sigma(spec)
    rep = verify_iso(m, trials=150, seed=3)
    assert rep.passed
    assert rep.details["mode"] == "sampled"


def test_is_multiplicative_with_certificates(gf5):
    spec = exponent_space(gf5, [1, 3])
    ok, certs = is_multiplicative(spec)
    assert ok
    assert len(certs) == 8  # nonzero members of a 9-element quasi-kernel
    for u, sigma in certs.items():
        assert sigma is not None
        for a in gf5.elements():
            for b in gf5.elements():
                assert anchored_add(spec, u, a, b) == induced_add(gf5, sigma, a, b)


def test_is_multiplicative_dim1_identity(gf5):
    spec = exponent_space(gf5, [1])
    ok, certs = is_multiplicative(spec)
    assert ok
    assert all(s == FinitePower(gf5, 1) for s in certs.values())


def test_is_multiplicative_dickson(d9):
    autos = enumerate_mult_autos(d9)
    ident = identity_auto(d9)
    spec = SpaceSpec(
        d9, {"1": ident, "2": autos[4]}, {"1": ident, "2": ident}
    )
    ok, certs = is_multiplicative(spec)
    assert ok
    assert len(certs) == len(quasi_kernel_bruteforce(spec)) - 1
    from nearvec.mult_auto import PermAuto

    assert any(isinstance(s, PermAuto) for s in certs.values())


def test_basis_transport(gf5):
    spec = exponent_space(gf5, [1, 3])
    target, m = normal_form_sigma(spec)
    assert basis_transport_check(m).passed
    # a map landing in a strictly smaller space cannot stay independent
    small = exponent_space(gf5, [1])
    squashed = IsoMap(
        spec, small, {"1": small.basis_vector("1"), "2": small.basis_vector("1")}
    )
    rep = basis_transport_check(squashed)
    assert not rep.passed
    assert any(v["law"] == "independent" for v in rep.violations)


def test_product_hypotheses(gf5, d9):
    rep = product_hypotheses(GaloisField.of(2, 3))
    assert rep.passed
    assert rep.details["induced_additions"] == 2
    assert rep.details["dimension_over_distributive"] == 1

    assert not product_hypotheses(REALS).passed
    assert not product_hypotheses(COMPLEXES).passed

    rep = product_hypotheses(d9)
    assert rep.passed
    assert rep.details["automorphisms"] == 24
    assert rep.details["distributive_size"] == 3
    assert rep.details["dimension_over_distributive"] == 2


def test_product_hypotheses_fd_shortcut_matches_scan(gf5):
    # the commutative shortcut (everything right distributive) against the
    # exhaustive scan
    from nearvec.nearfield import distributive_elements

    for base in (GaloisField.of(2, 2), gf5, GaloisField.of(3, 2)):
        assert len(distributive_elements(base)) == base.order()
        assert product_hypotheses(base).details["distributive_size"] == base.order()


def test_product_regroup_examples(gf5):
    a = exponent_space(gf5, [1, 3])
    b = exponent_space(gf5, [3])
    combined, partition = product_regroup([a, b])
    assert combined.dim == 3
    by_theta = {
        block: {combined.theta(k).alpha for k in block} for block in partition.blocks
    }
    assert set(map(frozenset, by_theta.values())) == {frozenset({1}), frozenset({3})}
    assert nvs_axiom_check(combined).passed

    single, part = product_regroup([a])
    assert single.dim == 2 and len(part) == 2

    gf8 = GaloisField.of(2, 3)
    triple, partition8 = product_regroup(
        [exponent_space(gf8, [e]) for e in (1, 2, 3)]
    )
    assert partition8.blocks == (("0.1", "1.1"), ("2.1",))
    assert nvs_axiom_check(triple).passed


def test_regrouped_product_quasi_kernel(gf5):
    a = exponent_space(gf5, [1, 3])
    b = exponent_space(gf5, [3])
    combined, _ = product_regroup([a, b])
    assert materialize_quasi_kernel(combined) == quasi_kernel_bruteforce(combined)
