import pytest
from hypothesis import given, settings

from hodgecert import (
    HyperellipticExcludedError,
    ProductHypothesisFailedError,
    Verdict,
    brute_force_witness,
    center_dim_product,
    certify_product,
    certify_single,
    classify,
    multiplicities,
    new_part_dim,
    semisimplicity_criterion,
    unitary_dims,
    validate,
    verify_witness,
)
from support import valid_params


class TestUnitaryDims:
    def test_example(self):
        assert unitary_dims(validate(5, 3, 1)) == (16, 1, 15)

    def test_larger(self):
        assert unitary_dims(validate(19, 3, 2)) == (972, 3, 969)

    @settings(max_examples=200)
    @given(valid_params())
    def test_ledger(self, params):
        if params.q == 2:
            return
        u, c, s = unitary_dims(params)
        assert c + s == u


class TestCertifySingle:
    def test_determined_example(self):
        cert = certify_single(validate(5, 3, 1))
        assert cert.verdict is Verdict.DETERMINED
        assert cert.dim_abelian_variety == 4
        assert (cert.dim_unitary, cert.dim_center, cert.dim_semisimple) == (16, 1, 15)
        assert cert.witness is not None and cert.witness.i == 1
        assert "S_n" in cert.assumption_note

    def test_determined_even_p(self):
        cert = certify_single(validate(7, 2, 2))
        assert cert.verdict is Verdict.DETERMINED
        assert cert.dim_abelian_variety == 6
        assert (cert.dim_unitary, cert.dim_center, cert.dim_semisimple) == (36, 1, 35)

    def test_inconclusive_example(self):
        # n = 19 = 2*9 + 1 sits in the witness-free family
        cert = certify_single(validate(19, 3, 2))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.witness is None
        assert (cert.dim_unitary, cert.dim_center, cert.dim_semisimple) == (972, 3, 969)

    def test_rejects_q2(self):
        with pytest.raises(HyperellipticExcludedError):
            certify_single(validate(9, 2, 1))

    @settings(max_examples=200)
    @given(valid_params())
    def test_determined_is_sound(self, params):
        if params.q == 2:
            return
        cert = certify_single(params)
        conds = classify(params)
        assert cert.conditions == conds
        assert cert.dim_abelian_variety == (
            new_part_dim(params) if params.n > 1 else 0
        )
        if cert.verdict is Verdict.DETERMINED:
            assert conds.theorem_applicable
            assert cert.witness is not None
            assert verify_witness(params, cert.witness)
            flag, _tau = semisimplicity_criterion(multiplicities(params))
            assert flag
        else:
            assert cert.witness is None

    @settings(max_examples=200)
    @given(valid_params())
    def test_inconclusive_has_no_constructive_route(self, params):
        # when the verdict is Inconclusive despite the theorem applying,
        # the brute-force oracle must come up empty as well
        if params.q == 2 or params.n <= params.q:
            return
        cert = certify_single(params)
        if cert.verdict is Verdict.INCONCLUSIVE and cert.conditions.theorem_applicable:
            assert brute_force_witness(params) is None


class TestCenterDimProduct:
    def test_values(self):
        assert center_dim_product(3, 1) == 1
        assert center_dim_product(3, 2) == 3
        assert center_dim_product(5, 1) == 2

    def test_rejects_even(self):
        with pytest.raises(ProductHypothesisFailedError):
            center_dim_product(2, 3)


class TestCertifyProduct:
    def test_example_11_3_2(self):
        cert = certify_product(validate(11, 3, 2))
        assert cert.dim_center_product == 3
        assert [lv.dim_semisimple for lv in cert.levels] == [99, 297]
        assert cert.dim_total == 399
        assert all(lv.verdict is Verdict.DETERMINED for lv in cert.levels)
        assert "isogeny" in cert.isogeny_note

    def test_rejects_p_dividing_n_minus_1(self):
        with pytest.raises(ProductHypothesisFailedError):
            certify_product(validate(10, 3, 2))

    def test_rejects_p_dividing_n_times_n_minus_1(self):
        with pytest.raises(ProductHypothesisFailedError):
            certify_product(validate(4, 3, 1))

    def test_rejects_even_p(self):
        with pytest.raises(ProductHypothesisFailedError):
            certify_product(validate(7, 2, 2))

    def test_rejects_n_below_q(self):
        with pytest.raises(ProductHypothesisFailedError):
            certify_product(validate(5, 3, 2))

    @settings(max_examples=100)
    @given(valid_params(max_q=243, max_n=1000, min_n=5))
    def test_total_is_center_plus_levels(self, params):
        conds = classify(params)
        if not conds.product_applicable or params.n <= params.q:
            return
        cert = certify_product(params)
        assert len(cert.levels) == params.r
        assert cert.dim_center_product == center_dim_product(params.p, params.r)
        assert cert.dim_total == cert.dim_center_product + sum(
            lv.dim_semisimple for lv in cert.levels
        )
