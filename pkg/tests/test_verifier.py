"""Catalog integrity, instantiation, and the verification engines."""

import json

import pytest

from q3series.report import FAIL, PASS, SKIPPED
from q3series.verifier import (SuiteConfig, _exact_div, catalog, class_members,
                               implied_congruence_holds, instantiate, run_suite,
                               verify_congruence, verify_gf_identity, verify_mr10)


class TestCatalog:
    def test_complete(self):
        cat = catalog()
        ids = {c.id for c in cat["congruences"]}
        expected = {f"MR{i}" for i in range(1, 25)} | {"MR171", "G1", "B1", "B2", "B3", "B4",
                                                       "T1", "T2", "T3", "BC1", "BC2"}
        assert ids == expected
        identity_ids = {i.id for i in cat["identities"]}
        assert identity_ids == {"H1", "H2", "T11", "D6", "T12", "T21", "T22", "T23",
                                "T24", "T25", "T31", "T311", "T32", "T321"}

    def test_exponent_formulas(self):
        by_id = {c.id: c for c in catalog()["congruences"]}
        assert by_id["MR1"].exponent({"alpha": 2, "beta": 3}) == 3 * 2 + 2 * 3 + 2
        assert by_id["BC2"].exponent({"k": 2, "m": 1}) == 3 * 2 + 2 * 1 - 1
        assert by_id["T3"].exponent({"beta": 3}) == 2 * 3 + 4

    def test_conjectures_flagged(self):
        by_id = {c.id: c for c in catalog()["congruences"]}
        assert by_id["BC1"].conjecture and by_id["BC2"].conjecture
        assert not by_id["MR1"].conjecture


class TestInstantiate:
    def test_overlap_with_prior_base_cases(self):
        # the alpha=beta=0 member of the first family is the published base case
        a = instantiate("MR1", {"alpha": 0, "beta": 0})
        g = instantiate("G1", {"beta": 0})
        assert (a.progression, a.exponent, a.fn) == (g.progression, g.exponent, g.fn)
        b = instantiate("MR5", {"alpha": 0, "beta": 0})
        b1 = instantiate("B1", {"beta": 0})
        assert (b.progression, b.exponent, b.fn) == (b1.progression, b1.exponent, b1.fn)

    def test_shift_examples(self):
        inst = instantiate("MR15", {"alpha": 0, "beta": 0})
        assert inst.fn.label() == "twocolor(3)" and inst.progression.A == 3
        assert inst.progression.B == 2 and inst.exponent == 2
        inst = instantiate("MR5", {"alpha": 0, "beta": 0})
        assert (inst.progression.A, inst.progression.B) == (3, 2)

    def test_class_membership_enforced(self):
        instantiate("MR7", {"alpha": 0, "beta": 0, "ell": 15})
        with pytest.raises(ValueError):
            instantiate("MR7", {"alpha": 0, "beta": 0, "ell": 9})
        with pytest.raises(ValueError):
            instantiate("MR12", {"alpha": 0, "beta": 0, "ell": 27})

    def test_prime_classes_enforced(self):
        instantiate("MR4", {"alpha": 0, "beta": 0, "p": 7, "k": 0})
        with pytest.raises(ValueError):
            instantiate("MR4", {"alpha": 0, "beta": 0, "p": 5, "k": 0})
        with pytest.raises(ValueError):
            instantiate("MR16", {"alpha": 0, "beta": 0, "p": 7, "k": 0})
        instantiate("MR16", {"alpha": 0, "beta": 0, "p": 5, "k": 0})

    def test_non_integral_shift_is_hard_error(self):
        with pytest.raises(ValueError):
            _exact_div(7, 8)

    def test_unknown_case(self):
        with pytest.raises(KeyError):
            instantiate("MR99", {})

    def test_class_member_sets(self):
        assert class_members(3, 4) == [3, 6, 12, 15, 21, 24, 30, 33]
        assert class_members(9, 2) == [9, 18, 36, 45]


class TestVerifyCongruence:
    def test_base_family_passes(self):
        rep = verify_congruence("MR1", {"alpha": 0, "beta": 0}, 200)
        assert rep.status == PASS and rep.checked == 201
        assert rep.extras["holds_to_exponent"] == 2

    def test_published_family_passes(self):
        rep = verify_congruence("G1", {"beta": 1}, 100)
        assert rep.status == PASS

    def test_prime_family_skips_multiples(self):
        rep = verify_congruence("MR4", {"alpha": 0, "beta": 0, "p": 7, "k": 0}, 50)
        assert rep.status == PASS
        assert rep.checked == 51 - len(range(0, 51, 7))

    def test_counterexamples_documented(self):
        rep = verify_congruence("MR8", {"alpha": 0, "beta": 1, "ell": 3}, 60)
        assert rep.status == FAIL
        assert rep.extras["holds_to_exponent"] == 3 < rep.extras["modulus_exponent"]
        first = rep.failures[0]
        assert set(first) == {"n", "value", "valuation", "required"}
        assert int(first["value"]) % 27 == 0

    def test_monotone_in_nmax(self):
        small = verify_congruence("MR8", {"alpha": 0, "beta": 1, "ell": 3}, 20)
        large = verify_congruence("MR8", {"alpha": 0, "beta": 1, "ell": 3}, 60)
        assert small.status == FAIL and large.status == FAIL

    def test_conjecture_marked(self):
        rep = verify_congruence("BC1", {"k": 1, "m": 0}, 50)
        assert rep.status == PASS and rep.extras["conjecture"] is True

    def test_reduced_engine_used_beyond_threshold(self):
        rep = verify_congruence("MR1", {"alpha": 0, "beta": 0}, 60, exact_threshold=10)
        assert rep.status == PASS and rep.extras["engine"].startswith("reduced")
        exact = verify_congruence("MR1", {"alpha": 0, "beta": 0}, 60)
        assert exact.extras["engine"] == "exact"


class TestBranchCase:
    def test_structure_documented(self):
        rep = verify_mr10(0, 0, 60)
        assert rep.status == FAIL  # nominal exponent overstated; structure holds lower
        assert rep.extras["fitted_constant"] == "9"
        assert rep.extras["plain_branch_holds"] is False
        assert rep.extras["branch_holds_to_exponent"] == 2

    def test_class_member_choice(self):
        rep = verify_mr10(0, 0, 30, ell=6)
        assert rep.extras["fitted_constant"] == "9"


class TestIdentities:
    def test_base_identity_exact(self):
        rep = verify_gf_identity("H1", {"alpha": 0}, 60, "exact")
        assert rep.status == PASS and rep.extras["exact_equal"] is True

    @pytest.mark.parametrize("iid", ["H2", "T11", "D6", "T12", "T21", "T22", "T23"])
    def test_exact_families_small_grid(self, iid):
        rep = verify_gf_identity(iid, {"alpha": 0, "beta": 0}, 12, "exact")
        assert rep.status == PASS, rep.to_dict()

    def test_class_identity_is_congruence_only(self):
        rep = verify_gf_identity("T31", {"alpha": 0, "beta": 0, "ell": 3}, 16, "auto")
        assert rep.status == PASS
        assert rep.extras["exact_equal"] is False
        assert rep.extras["mod_equal"] is True
        assert rep.extras["diff_valuation"] == 2

    def test_class_identity_failure_documented(self):
        rep = verify_gf_identity("T31", {"alpha": 0, "beta": 1, "ell": 6}, 16, "auto")
        assert rep.status == FAIL
        assert rep.extras["diff_valuation"] < rep.extras["lemma_exponent"]

    def test_exact_mode_counterexample(self):
        rep = verify_gf_identity("T31", {"alpha": 0, "beta": 0, "ell": 3}, 12, "exact")
        assert rep.status == FAIL
        assert rep.failures[0]["required"] == "exact"

    def test_seed_reading_probe(self):
        # the one-step families really do start from the odd base vector
        from q3series.verifier import probe_seed_reading

        for iid in ("T12", "T22"):
            for alpha in (0, 1):
                verdict = probe_seed_reading(iid, alpha)
                assert verdict == {"odd_base_seed": True, "even_base_seed": False}
        with pytest.raises(ValueError):
            probe_seed_reading("T11", 0)

    def test_implied_congruence_consistency(self):
        # identities that hold exactly force the j=1 divisibility on the window
        for iid, params in (("H1", {"alpha": 0}), ("T11", {"alpha": 0, "beta": 1}),
                            ("T12", {"alpha": 1, "beta": 0})):
            rep = verify_gf_identity(iid, params, 10, "exact")
            assert rep.status == PASS
            assert implied_congruence_holds(iid, params, n_max=40)


class TestSuite:
    CFG = dict(alphas=(0,), betas=(0,), n_max=30, n_max_small=40, priors_betas=(0,),
               conjecture_ms=(0,), identity_terms=10, class_reps_per_sign=1,
               prime_n_max=15, priors_n_max=40)

    def test_deterministic(self):
        a = run_suite(SuiteConfig(**self.CFG))
        b = run_suite(SuiteConfig(**self.CFG))
        assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)

    def test_threaded_matches_serial(self):
        serial = run_suite(SuiteConfig(**self.CFG))
        threaded = run_suite(SuiteConfig(**dict(self.CFG, threads=2)))
        threaded_d = threaded.to_dict()
        threaded_d["reports"] = threaded_d["reports"]
        assert json.dumps(serial.to_dict(), sort_keys=True) == json.dumps(threaded_d, sort_keys=True)

    def test_include_filter(self):
        suite = run_suite(SuiteConfig(**dict(self.CFG, include=("MR1", "H1"))))
        assert {r.case for r in suite.reports} == {"MR1", "H1"}
        assert suite.status == PASS

    def test_empty_grid_skips(self):
        suite = run_suite(SuiteConfig(**dict(self.CFG, include=("nothing",))))
        assert suite.status == SKIPPED and not suite.reports

    def test_config_roundtrip(self):
        cfg = SuiteConfig(**self.CFG)
        again = SuiteConfig.from_json(cfg.to_json())
        assert cfg == again

    def test_config_rejects_unknown_keys(self):
        with pytest.raises(ValueError):
            SuiteConfig.from_json('{"bogus": 1}')
