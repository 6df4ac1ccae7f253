"""Parameter derivation, NAF recoding, generators and Frobenius constants."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnpair import curve, params, tower
from bnpair.params import ParamError, derive_params, naf_recode


class TestFamilyPolynomials:
    def test_tiny_values(self, tiny):
        assert (tiny.p, tiny.r, tiny.t_r) == (103, 97, 7)

    def test_paper_sizes(self, paper):
        assert paper.p.bit_length() == 254
        assert paper.r.bit_length() == 254
        assert paper.t == 2**62 - 2**54 + 2**44

    def test_identities(self, paper):
        t = paper.t
        assert paper.p == 36 * t**4 + 36 * t**3 + 24 * t**2 + 6 * t + 1
        assert paper.r == 36 * t**4 + 36 * t**3 + 18 * t**2 + 6 * t + 1
        assert paper.t_r == 6 * t**2 + 1
        assert paper.p + 1 - paper.t_r == paper.r
        assert paper.s == 6 * t + 2

    def test_t_zero_rejected(self):
        with pytest.raises(ParamError):
            derive_params(0, 5)

    def test_composite_family_rejected(self):
        # t = 3 gives composite p/r for this family
        with pytest.raises(ParamError):
            derive_params(3, 5)

    def test_beta_is_non_square(self, tiny, paper):
        for par in (tiny, paper):
            assert pow(par.beta % par.p, (par.p - 1) // 2, par.p) == par.p - 1


class TestNaf:
    def test_small_values(self):
        assert naf_recode(1) == [1]
        assert naf_recode(7) == [-1, 0, 0, 1]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            naf_recode(0)

    @given(st.integers(1, 2**80))
    @settings(max_examples=1000, deadline=None)
    def test_properties(self, n):
        digits = naf_recode(n)
        assert sum(d << i for i, d in enumerate(digits)) == n
        assert all(d in (-1, 0, 1) for d in digits)
        assert all(
            not (digits[i] and digits[i + 1]) for i in range(len(digits) - 1)
        )
        assert len(digits) <= n.bit_length() + 1

    def test_paper_s(self, paper):
        digits = list(paper.s_naf)
        assert sum(d << i for i, d in enumerate(digits)) == paper.s
        # signed bit length (index of the most significant digit) is 65
        assert len(digits) - 1 == 65


class TestGenerators:
    def test_g1_order(self, tiny, paper):
        for par in (tiny, paper):
            G = curve.g1_generator(par)
            assert not G.infinity
            assert curve.g1_is_on_curve(G, par)
            assert curve.g1_scalar_mul(G, par.r, par).infinity

    def test_g2_order(self, tiny, paper):
        for par in (tiny, paper):
            G = curve.g2_generator(par)
            assert not G.infinity
            assert curve.g2_is_on_curve(G, par)
            assert curve.g2_scalar_mul(G, par.r, par).infinity

    def test_g2_cofactor(self, tiny, paper):
        for par in (tiny, paper):
            assert par.g2_cofactor == 2 * par.p - par.r

    def test_tiny_g1_matches_exhaustive_count(self, tiny):
        from oracles import enumerate_e_fp

        pts = enumerate_e_fp(tiny)
        assert len(pts) + 1 == tiny.r  # affine points plus infinity
        assert tiny.g1_gen in pts


class TestFrobeniusConstants:
    def test_k0_is_one(self, tiny, paper):
        for par in (tiny, paper):
            for power in (1, 2, 3):
                assert par.frobenius_constants[power][0] == tower.fp2_one(par)

    def test_twelve_constants_per_odd_power(self, paper):
        for power in (1, 2, 3):
            assert len(paper.frobenius_constants[power]) == 6

    def test_gamma_values(self, tiny):
        x = tower.fp2_from_ints(tiny.xi[0], tiny.xi[1], tiny)
        for power in (1, 2, 3):
            step = (tiny.p**power - 1) // 6
            for k in range(6):
                assert tiny.frobenius_constants[power][k] == tower.fp2_pow(
                    x, k * step, tiny
                )


class TestTowerSelection:
    def test_paper_tower(self, paper):
        assert (paper.beta, paper.xi) == (-5, (0, 1))
        assert paper.twist_type == "D"

    def test_tiny_tower(self, tiny):
        assert (tiny.beta, tiny.xi) == (-1, (1, 2))
        assert tiny.twist_type == "D"


class TestSerialization:
    def test_json_roundtrip_tiny(self, tiny):
        doc = tiny.to_json()
        again = params.load_params_json(doc)
        assert (again.t, again.p, again.r, again.params_id) == (
            tiny.t,
            tiny.p,
            tiny.r,
            tiny.params_id,
        )

    def test_json_rejects_tamper(self, tiny):
        doc = json.loads(tiny.to_json())
        doc["r"] = hex(tiny.r + 2)
        with pytest.raises(ParamError):
            params.load_params_json(json.dumps(doc))

    def test_json_rejects_bad_schema(self, tiny):
        doc = json.loads(tiny.to_json())
        doc["schema_version"] = 99
        with pytest.raises(ParamError):
            params.load_params_json(json.dumps(doc))

    def test_warnings_surface_nist_note(self, paper):
        assert any("256" in w for w in paper.warnings)
