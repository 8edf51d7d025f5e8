"""Finite-field sweeps: encoding, enumeration, orbits, the phi ansatz."""

import random

import pytest

from postlie.catalog import builtin_algebra, get_entry
from postlie.errors import (DimensionError, GuardError,
                            ParameterError, StructureError,
                            UnsupportedFieldError)
from postlie.fields import GF, QQ
from postlie.linalg import Matrix
from postlie.search import (BANNER, DEFAULT_GUARD, GUARD_ENV, SearchSpec,
                            automorphism_indices, check_guard, current_guard,
                            decode_matrix, decode_product, encode_matrix,
                            encode_product, enumerate_products,
                            nonexistence_probe, orbit_reduce, pair_from_phi,
                            phi_ansatz_sweep, transform_product)
from postlie.structures import check_structure


def _abelian_spec(p, symmetric=True):
    A = builtin_algebra("abelian", field=GF(p), dim=2)
    return SearchSpec(A, A, symmetric=symmetric)


def test_spec_counts():
    spec = _abelian_spec(3)
    assert spec.p == 3 and spec.dim == 2
    assert spec.digit_count == 6 and spec.total == 729
    full = _abelian_spec(3, symmetric=False)
    assert full.digit_count == 8 and full.total == 6561


def test_spec_guards():
    with pytest.raises(UnsupportedFieldError):
        SearchSpec(builtin_algebra("abelian", dim=2),
                   builtin_algebra("abelian", dim=2))
    with pytest.raises(ParameterError):
        SearchSpec(builtin_algebra("abelian", field=GF(3), dim=2),
                   builtin_algebra("n3", field=GF(3)))
    with pytest.raises(ParameterError):
        SearchSpec(builtin_algebra("abelian", field=GF(3), dim=2),
                   builtin_algebra("abelian", field=GF(5), dim=2))


def test_decode_encode_round_trip():
    rng = random.Random(11)
    for spec in (_abelian_spec(5), _abelian_spec(5, symmetric=False)):
        for _ in range(200):
            index = rng.randrange(spec.total)
            product = decode_product(spec, index)
            assert encode_product(spec, product) == index


def test_symmetric_decode_forces_the_skew_slots():
    # g = n = r2 over GF(5): opposite slots differ by [,]_g - {,}_n = 0,
    # so the symmetric mode really is symmetric here
    r2 = builtin_algebra("r2", field=GF(5))
    spec = SearchSpec(r2, r2, symmetric=True)
    product = decode_product(spec, 123)
    assert product.product_basis(0, 1) == product.product_basis(1, 0)

    # mismatched brackets shift the lower slot by the bracket gap
    n = builtin_algebra("abelian", field=GF(5), dim=2)
    spec2 = SearchSpec(r2, n, symmetric=True)
    product2 = decode_product(spec2, 77)
    gap = r2.bracket_basis(0, 1)
    diff = tuple(a - b for a, b in zip(product2.product_basis(1, 0),
                                       product2.product_basis(0, 1)))
    assert diff == tuple(-c for c in gap)


def test_encode_rejects_unreachable_tables():
    spec = _abelian_spec(3)
    from postlie.structures import BilinearProduct
    asym = BilinearProduct(GF(3), 2, {(0, 1): {0: 1}})
    with pytest.raises(ParameterError):
        encode_product(spec, asym)


def test_enumeration_full_agrees_with_direct_scan():
    # GF(2) is small enough to re-check every candidate with the scanner
    spec = _abelian_spec(2, symmetric=False)
    result = enumerate_products(spec)
    direct = []
    for index in range(spec.total):
        product = decode_product(spec, index)
        if check_structure(spec.g, spec.n, product).passed:
            direct.append(index)
    assert list(result.indices) == direct
    assert result.total == 256
    products = result.products()
    assert len(products) == len(result.indices)


def test_enumeration_symmetric_matches_full_tables():
    sym = enumerate_products(_abelian_spec(3))
    full = enumerate_products(_abelian_spec(3, symmetric=False))
    assert len(sym.indices) == len(full.indices) == 105
    sym_tables = {decode_product(sym.spec, i) for i in sym.indices}
    full_tables = {decode_product(full.spec, i) for i in full.indices}
    assert sym_tables == full_tables


def test_catalog_members_appear_in_the_sweep():
    spec = _abelian_spec(3)
    hits = set(enumerate_products(spec).indices)
    for entry_id in ("V1", "V2", "V3", "V4", "V5"):
        pair = get_entry(entry_id).build_sample({}, field=GF(3))
        index = encode_product(spec, pair.product)
        assert index in hits, entry_id


def test_non_hits_fail_the_checker():
    spec = _abelian_spec(5)
    hits = set(enumerate_products(spec).indices)
    rng = random.Random(23)
    tried = 0
    while tried < 1000:
        index = rng.randrange(spec.total)
        if index in hits:
            continue
        product = decode_product(spec, index)
        assert not check_structure(spec.g, spec.n, product).passed
        tried += 1


def test_orbit_reduction_frozen_counts():
    spec = _abelian_spec(3)
    result = enumerate_products(spec)
    dec = orbit_reduce(spec, result.indices)
    assert dec.aut_order == 48
    assert dec.count == 6
    assert sorted(len(orbit) for orbit in dec.orbits) == \
        [1, 8, 24, 24, 24, 24]
    assert sum(len(orbit) for orbit in dec.orbits) == 105
    reps = dec.representatives()
    assert len(reps) == 6
    # every orbit stays inside the hit set
    hits = set(result.indices)
    for orbit in dec.orbits:
        assert set(orbit) <= hits


def test_automorphism_indices_on_abelian_plane():
    A = builtin_algebra("abelian", field=GF(3), dim=2)
    indices = automorphism_indices((A, A))
    assert len(indices) == 48  # all of GL_2(F_3)
    for index in indices[:5]:
        T = decode_matrix(GF(3), 2, index)
        assert encode_matrix(T) == index


def test_automorphism_indices_respect_brackets():
    r2 = builtin_algebra("r2", field=GF(3))
    got = automorphism_indices((r2, r2))
    # direct scan over GL_2(F_3)
    expected = []
    F = GF(3)
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 0:
                        continue
                    T = Matrix(F, [[a, b], [c, d]])
                    lhs = T.apply(r2.bracket_basis(0, 1))
                    rhs = r2.bracket(T.col(0), T.col(1))
                    if lhs == rhs:
                        expected.append(encode_matrix(T))
    assert sorted(got) == sorted(expected)
    assert 0 < len(got) < 48


def test_transform_product_is_an_action():
    spec = _abelian_spec(3)
    product = decode_product(spec, 101)
    ident = Matrix.identity(GF(3), 2)
    assert transform_product(product, ident) == product
    with pytest.raises(DimensionError):
        transform_product(product, Matrix.zeros(GF(3), 2, 2))


def test_guard_env_variable(monkeypatch):
    assert current_guard() == DEFAULT_GUARD
    monkeypatch.setenv(GUARD_ENV, "100")
    assert current_guard() == 100
    with pytest.raises(GuardError):
        check_guard(101)
    check_guard(100)
    with pytest.raises(GuardError):
        enumerate_products(_abelian_spec(3))
    monkeypatch.setenv(GUARD_ENV, "not-a-number")
    with pytest.raises(GuardError):
        current_guard()


def test_phi_sweep_backends_agree():
    pytest.importorskip("postlie._fpkernel")
    import postlie._fpkernel as compiled
    import postlie._fpkernel_py as fallback
    n = builtin_algebra("sl2", field=GF(3))
    res_c = phi_ansatz_sweep(n, kernel=compiled)
    res_p = phi_ansatz_sweep(n, kernel=fallback)
    assert res_c.indices == res_p.indices
    assert res_c.total == 3 ** 9
    assert res_c.backend == "compiled" and res_p.backend == "python"


def test_phi_sweep_hits_validate_and_non_hits_fail():
    n = builtin_algebra("sl2", field=GF(3))
    result = phi_ansatz_sweep(n)
    hits = set(result.indices)
    assert 0 in hits  # the zero endomorphism always works
    for index in list(result.indices)[:20]:
        pair = pair_from_phi(n, decode_matrix(GF(3), 3, index))
        assert pair.validated
    rng = random.Random(5)
    tried = 0
    while tried < 400:
        index = rng.randrange(result.total)
        if index in hits:
            continue
        with pytest.raises(StructureError):
            pair_from_phi(n, decode_matrix(GF(3), 3, index))
        tried += 1


def test_pair_from_phi_shapes():
    n = builtin_algebra("sl2", field=GF(5))
    pair = pair_from_phi(n, Matrix.identity(GF(5), 3).scale(GF(5).scalar(-1)))
    assert pair.validated
    # x.y = {-x, y} makes the associated bracket the negated one
    assert pair.g.bracket_basis(0, 1) == \
        tuple(-a for a in n.bracket_basis(0, 1))


def test_probe_requires_known_classes():
    with pytest.raises(ParameterError):
        nonexistence_probe("perfect")
    with pytest.raises(ParameterError):
        nonexistence_probe("sl2", n_class="r2")
    with pytest.raises(ParameterError):
        nonexistence_probe("sl2", p=3)


def test_probe_existence_and_banner():
    probe = nonexistence_probe("sl2", p=5)
    assert probe.exists
    assert probe.matching == (0, 1565004)
    assert probe.class_counts["perfect"] == 2
    assert probe.class_counts["solvable"] == 390
    assert probe.total == 5 ** 9
    assert "GF(5)" in probe.banner
    assert "not a characteristic-zero proof" in probe.banner
    assert BANNER % 5 == probe.banner

    nothing = nonexistence_probe("heisenberg", p=5)
    assert not nothing.exists and nothing.matching == ()
