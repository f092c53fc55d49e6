#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopfinv/basechange.hpp"
#include "support/corpus.hpp"

using namespace hopfinv;

namespace {

DenseInt mat2(long a, long b, long c, long d) {
    DenseInt m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

DenseInt mat1(long a) {
    DenseInt m(1, 1);
    m(0, 0) = a;
    return m;
}

Comodule sign_rep() {
    return action_to_coaction(GroupTable::cyclic(2), {mat1(1), mat1(-1)});
}

Comodule swap_rep() {
    return action_to_coaction(GroupTable::cyclic(2),
                              {DenseInt::identity(2), mat2(0, 1, 1, 0)});
}

Comodule mu_weight(std::size_t n, std::size_t w) {
    Comodule m;
    m.hopf = mu_n(n);
    m.rank = 1;
    m.coaction = DenseInt(n, 1);
    m.coaction(w % n, 0) = 1;
    return m;
}

/// V := M^G free, phi := inclusion of the computed invariant basis.
TheoremInstance instance_from_invariants(const Comodule& m) {
    Invariants inv = invariants(m);
    TheoremInstance inst;
    inst.m = m;
    inst.v_presentation = IntMatrix::zero(inv.generators.cols, 0);
    inst.phi = inv.generators;
    inst.sample_algebras = TheoremInstance::default_algebras();
    return inst;
}

bool contains_prime(const std::vector<Int>& primes, long p) {
    return std::find(primes.begin(), primes.end(), Int(p)) != primes.end();
}

} // namespace

TEST_CASE("candidate_bad_primes: worked examples") {
    SUBCASE("constant Z/2, Z sign, phi : 0 -> M^G gives {2}") {
        std::vector<Int> primes = candidate_bad_primes(instance_from_invariants(sign_rep()));
        CHECK(contains_prime(primes, 2));
    }
    SUBCASE("trivial action, phi identity: empty") {
        TheoremInstance inst;
        inst.m = trivial_comodule(mu_n(2), 2);
        inst.v_presentation = IntMatrix::zero(2, 0);
        inst.phi = DenseInt::identity(2);
        inst.sample_algebras = TheoremInstance::default_algebras();
        CHECK(candidate_bad_primes(inst).empty());
    }
    SUBCASE("mu_3, weight-1 Z: differentials unimodular, no bad primes needed") {
        // delta^0 = (1,-1,0)^T and delta^1 both have unit invariant factors,
        // and every field verdict matches characteristic 0 here.
        TheoremInstance inst = instance_from_invariants(mu_weight(3, 1));
        CHECK(candidate_bad_primes(inst).empty());
        for (long p : {0L, 2L, 3L}) CHECK(check_hypothesis_over_field(inst, p).pass);
    }
    SUBCASE("torsion in V contributes its primes") {
        TheoremInstance inst;
        inst.m = sign_rep();
        inst.v_presentation = IntMatrix::diagonal({Int(5)});
        inst.phi = DenseInt(1, 1); // zero map from Z/5
        inst.sample_algebras = TheoremInstance::default_algebras();
        CHECK(contains_prime(candidate_bad_primes(inst), 5));
    }
}

TEST_CASE("check_hypothesis_over_field: worked examples") {
    SUBCASE("swap rep, V = Z, phi(1) = e1 + e2, p = 2: PASS") {
        TheoremInstance inst = instance_from_invariants(swap_rep());
        REQUIRE(inst.phi.cols == 1);
        FieldVerdict v = check_hypothesis_over_field(inst, 2);
        CHECK(v.pass);
        CHECK(v.dim_v == 1);
        CHECK(v.dim_invariants == 1);
    }
    SUBCASE("sign rep, V = 0, p = 2: FAIL (target has dimension 1)") {
        TheoremInstance inst = instance_from_invariants(sign_rep());
        REQUIRE(inst.phi.cols == 0);
        FieldVerdict v = check_hypothesis_over_field(inst, 2);
        CHECK(!v.pass);
        CHECK(v.dim_invariants == 1);
        CHECK(!v.surjective);
    }
    SUBCASE("sign rep, V = 0, p = 0: PASS") {
        CHECK(check_hypothesis_over_field(instance_from_invariants(sign_rep()), 0).pass);
    }
}

TEST_CASE("check_h1_flat: worked examples") {
    SUBCASE("regular rep Z[Z/2]: H^1 = 0, flat") {
        H1FlatReport rep = check_h1_flat(swap_rep(), {2, 3});
        CHECK(rep.flat);
        CHECK(rep.h1.is_zero());
        for (const auto& [p, cert] : rep.tor_certificates) CHECK(cert.is_zero());
    }
    SUBCASE("sign rep: H^1 = Z/2, not flat, Tor_1(F_2, H^1) != 0") {
        H1FlatReport rep = check_h1_flat(sign_rep(), {2, 3});
        CHECK(!rep.flat);
        CHECK(rep.h1.torsion() == std::vector<Int>{2});
        CHECK(!rep.tor_certificates[0].second.is_zero()); // p = 2
        CHECK(rep.tor_certificates[1].second.is_zero());  // p = 3
    }
    SUBCASE("trivial rep over mu_2: flat") {
        CHECK(check_h1_flat(trivial_comodule(mu_n(2), 1), {2}).flat);
    }
}

TEST_CASE("check_v_torsion_free: worked examples") {
    CHECK(check_v_torsion_free(FpModule::free_of_rank(2)).torsion_free);
    TorsionFreeReport rep = check_v_torsion_free(FpModule::from_invariants(1, {Int(4)}));
    CHECK(!rep.torsion_free);
    CHECK(rep.witness_order == 4);
    CHECK(check_v_torsion_free(FpModule::zero()).torsion_free);
}

TEST_CASE("run_pipeline: worked examples") {
    SUBCASE("swap instance: all PASS") {
        PipelineReport rep = run_pipeline(instance_from_invariants(swap_rep()));
        CHECK(rep.hypothesis_all_pass);
        CHECK(rep.all_conclusions_pass);
        CHECK(rep.h1_flat.flat);
        CHECK(rep.v_torsion_free.torsion_free);
    }
    SUBCASE("sign instance with V = 0: FAIL at p = 2, phi_F2 failure recorded, no throw") {
        PipelineReport rep = run_pipeline(instance_from_invariants(sign_rep()));
        CHECK(!rep.hypothesis_all_pass);
        bool fails_at_2 = false;
        for (const FieldVerdict& v : rep.hypothesis)
            if (v.p == 2 && !v.pass) fails_at_2 = true;
        CHECK(fails_at_2);
        bool f2_fail_recorded = false;
        for (const ConclusionVerdict& v : rep.conclusions)
            if (v.scalar == BaseScalar::prime_field(2) && !v.pass) f2_fail_recorded = true;
        CHECK(f2_fail_recorded);
    }
    SUBCASE("trivial-action instance, V = Z^m, phi = id: PASS for every S") {
        TheoremInstance inst;
        inst.m = trivial_comodule(constant_group(GroupTable::cyclic(3)), 2);
        inst.v_presentation = IntMatrix::zero(2, 0);
        inst.phi = DenseInt::identity(2);
        inst.sample_algebras = TheoremInstance::default_algebras();
        PipelineReport rep = run_pipeline(inst);
        CHECK(rep.hypothesis_all_pass);
        CHECK(rep.all_conclusions_pass);
    }
}

TEST_CASE("soundness harness over the representation corpus") {
    std::vector<corpus::RepInstance> reps = corpus::representation_corpus(2026, 50);
    REQUIRE(reps.size() == 50);
    std::size_t passing = 0;
    for (const corpus::RepInstance& r : reps) {
        Comodule m = action_to_coaction(r.group, r.rep);
        // no TheoremViolation allowed for any instance
        PipelineReport rep = run_pipeline(instance_from_invariants(m));
        if (rep.hypothesis_all_pass) {
            CHECK(rep.all_conclusions_pass);
            ++passing;
        }
    }
    CHECK(passing > 0); // the corpus must exercise the positive branch
}

TEST_CASE("monotonicity: extra primes never flip a passing pipeline") {
    for (const corpus::RepInstance& r : corpus::representation_corpus(7, 12)) {
        Comodule m = action_to_coaction(r.group, r.rep);
        TheoremInstance inst = instance_from_invariants(m);
        PipelineReport rep = run_pipeline(inst);
        if (!rep.hypothesis_all_pass) continue;
        for (long extra : {7L, 11L})
            CHECK(check_hypothesis_over_field(inst, extra).pass);
    }
}

TEST_CASE("Tor_1(F_p, H^1) matches coker(rho_Fp) on the corpus") {
    for (const corpus::RepInstance& r : corpus::representation_corpus(11, 15)) {
        Comodule m = action_to_coaction(r.group, r.rep);
        FpModule h1 = cohomology(cobar_complex(m, 2), 1);
        for (long p : {2L, 3L}) {
            BaseScalar fp = BaseScalar::prime_field(p);
            ScalarModule tor = tor1(fp, h1);
            RhoReport rr = rho(fp, m);
            CHECK(tor.isomorphic(rr.cokernel));
        }
    }
}

TEST_CASE("theorem instance JSON round trip") {
    TheoremInstance inst = instance_from_invariants(swap_rep());
    TheoremInstance inst2 = TheoremInstance::from_json(inst.to_json());
    inst2.validate();
    CHECK(inst2.phi == inst.phi);
    CHECK(inst2.sample_algebras.size() == inst.sample_algebras.size());
    nlohmann::json bad = inst.to_json();
    bad["extra"] = 1;
    CHECK_THROWS_AS(TheoremInstance::from_json(bad), BadInput);
}

TEST_CASE("prime_factors") {
    CHECK(prime_factors(0).empty());
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(-12) == std::vector<Int>{2, 3});
    CHECK(prime_factors(97) == std::vector<Int>{97});
    CHECK(prime_factors(360) == std::vector<Int>{2, 3, 5});
}
