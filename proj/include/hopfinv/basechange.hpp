#ifndef HOPFINV_BASECHANGE_HPP
#define HOPFINV_BASECHANGE_HPP

#include <vector>

#include "hopfinv/comodule.hpp"

namespace hopfinv {

/// A base-change verification instance over Z: a comodule M, a finitely
/// presented abelian group V = coker(P), and a map phi : V -> M^G given on
/// V's generators. phi must kill the relations and land in the invariants.
struct TheoremInstance {
    Comodule m;                 // over Z
    IntMatrix v_presentation;   // P : Z^a -> Z^b, V = coker P
    DenseInt phi;               // rank(M) x b
    std::vector<BaseScalar> sample_algebras;

    static std::vector<BaseScalar> default_algebras();
    /// Checks phi * P = 0 and (omega - iota) * phi = 0 over Z; throws
    /// BadInput on failure.
    void validate() const;

    nlohmann::json to_json() const;
    static TheoremInstance from_json(const nlohmann::json& j);
};

/// Prime divisors of the nonzero invariant factors of delta^0, delta^1, phi
/// and V's presentation: outside this set every field verdict matches
/// characteristic 0.
std::vector<Int> candidate_bad_primes(const TheoremInstance& inst);

/// Bijectivity of phi_K : K (x) V -> (K (x) M)^G over the prime field of
/// characteristic p (p = 0 means Q).
struct FieldVerdict {
    Int p;          // characteristic
    bool pass = false;
    std::size_t dim_v = 0;          // dim_K K (x) V
    std::size_t dim_invariants = 0; // dim_K (K (x) M)^G
    bool injective = false;
    bool surjective = false;
    nlohmann::json to_json() const;
};

FieldVerdict check_hypothesis_over_field(const TheoremInstance& inst, const Int& p);

/// H^1(G, M) is flat over Z iff it has no torsion; certified additionally by
/// Tor_1(F_p, H^1) = 0 at each supplied prime.
struct H1FlatReport {
    bool flat = false;
    FpModule h1;
    std::vector<std::pair<Int, ScalarModule>> tor_certificates;
    nlohmann::json to_json() const;
};

H1FlatReport check_h1_flat(const Comodule& m, const std::vector<Int>& primes);

struct TorsionFreeReport {
    bool torsion_free = false;
    Int witness_order = 0; // order of a torsion invariant factor otherwise
    nlohmann::json to_json() const;
};

TorsionFreeReport check_v_torsion_free(const FpModule& v);

/// Bijectivity of phi_S for one sample algebra S.
struct ConclusionVerdict {
    BaseScalar scalar = BaseScalar::integers();
    bool pass = false;
    std::string detail;
    nlohmann::json to_json() const;
};

ConclusionVerdict check_conclusion(const TheoremInstance& inst, const BaseScalar& s);

struct PipelineReport {
    std::vector<Int> bad_primes;
    std::vector<FieldVerdict> hypothesis;   // char 0 first, then bad primes
    bool hypothesis_all_pass = false;
    H1FlatReport h1_flat;
    TorsionFreeReport v_torsion_free;
    std::vector<ConclusionVerdict> conclusions;
    bool all_conclusions_pass = false;
    nlohmann::json to_json() const;
};

/// Full check: bad primes, hypothesis at 0 and each bad prime, H^1 flatness,
/// torsion-freeness of V, then phi_S for every sample algebra. When the
/// hypothesis holds at every checked characteristic, a failing phi_S throws
/// TheoremViolation.
PipelineReport run_pipeline(const TheoremInstance& inst);

/// Prime factors of |n|, sorted; empty for n in {-1, 0, 1}.
std::vector<Int> prime_factors(const Int& n);

} // namespace hopfinv

#endif
