#ifndef HOPFINV_COMODULE_HPP
#define HOPFINV_COMODULE_HPP

#include <vector>

#include "hopfinv/exactlin.hpp"
#include "hopfinv/fpmodule.hpp"
#include "hopfinv/hopf.hpp"

namespace hopfinv {

/// Right C-comodule on a finite free module. The coaction matrix represents
/// omega : M -> M (x) C in the tensor basis e_i (x) c_j |-> i*c + j; column
/// k is omega(e_k).
struct Comodule {
    HopfAlgebra hopf;
    std::size_t rank = 0;     // m
    DenseInt coaction;        // (m*c) x m

    const BaseScalar& scalar() const { return hopf.scalar; }

    nlohmann::json to_json() const;
    static Comodule from_json(const nlohmann::json& j);
};

/// omega(e_k) = e_k (x) 1 for every k.
Comodule trivial_comodule(const HopfAlgebra& h, std::size_t rank);

/// Checks the coassociativity and counit comodule axioms exactly.
ValidationReport validate_comodule(const Comodule& m);

/// M^G = ker(omega - iota), iota(m) = m (x) 1, over the comodule's scalar.
/// Over Z the columns are a basis of the saturated invariant lattice; over a
/// field a basis; over Z/n a generating set.
struct Invariants {
    BaseScalar scalar = BaseScalar::integers();
    DenseInt generators;      // m x k, columns generate M^G inside M
    ScalarModule structure;
    DenseInt lift_lattice;    // Z/n only: basis of {x in Z^m : W x = 0 mod n}
};

Invariants invariants(const Comodule& m);

/// Turns a finite-group representation into a comodule over the constant
/// group scheme: omega(v) = sum_g (g v) (x) delta_g. The matrices must
/// satisfy the group relations.
Comodule action_to_coaction(const GroupTable& g, const std::vector<DenseInt>& rep);

/// The cobar complex M -> M(x)C -> M(x)C^2 -> ... truncated after n_max
/// terms; differentials delta^0 .. delta^{n_max - 1}.
struct CobarComplex {
    Comodule comodule;
    std::size_t n_max = 0;
    std::vector<std::size_t> term_ranks;   // m * c^n for n = 0..n_max
    std::vector<DenseInt> differentials;
};

CobarComplex cobar_complex(const Comodule& m, std::size_t n_max);

/// ker(delta^i) / im(delta^{i-1}); comodule over Z only. Requires i < n_max.
FpModule cohomology(const CobarComplex& c, std::size_t i);

/// Classical group cohomology H^i(G, M) for i <= 2 via the inhomogeneous
/// cochain complex of the bar resolution; independent of the cobar route.
FpModule group_cohomology_oracle(const GroupTable& g, const std::vector<DenseInt>& rep,
                                 std::size_t i);

Comodule base_change_comodule(const Comodule& m, const BaseScalar& scalar);

/// The natural map rho_S : S (x) M^G -> (S (x) M)^G.
struct RhoReport {
    BaseScalar scalar = BaseScalar::integers();
    DenseRat matrix;          // in the computed generating sets
    bool injective = false;
    bool surjective = false;
    ScalarModule cokernel;
    nlohmann::json to_json() const;
};

RhoReport rho(const BaseScalar& s, const Comodule& m);

/// Verifies 0 -> S (x) M^G -> (S (x) M)^G -> Tor_1(S, H^1(G,M)) -> 0.
struct UcsReport {
    BaseScalar scalar = BaseScalar::integers();
    ScalarModule tensored_invariants;   // S (x) M^G
    ScalarModule invariants_of_tensor;  // (S (x) M)^G
    ScalarModule tor_term;              // Tor_1(S, H^1(G, M))
    FpModule h1;                        // H^1(G, M) over Z
    RhoReport rho;
    bool exact = false;
    nlohmann::json to_json() const;
};

UcsReport universal_coefficient_check(const Comodule& m, const BaseScalar& s);

} // namespace hopfinv

#endif
