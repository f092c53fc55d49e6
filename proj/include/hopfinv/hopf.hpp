#ifndef HOPFINV_HOPF_HPP
#define HOPFINV_HOPF_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfinv/grouptable.hpp"
#include "hopfinv/intmatrix.hpp"

namespace hopfinv {

/// Kronecker product (tensor of linear maps in the lexicographic basis).
DenseInt kron(const DenseInt& a, const DenseInt& b);
/// Permutation matrix of the flip V (x) W -> W (x) V, dim V = c1, dim W = c2.
DenseInt tensor_flip(std::size_t c1, std::size_t c2);

/// Finite-rank-free Hopf algebra given by structure constants, the
/// coordinate ring of a finite flat group scheme. Basis indexed 0..rank-1;
/// the unit is an explicit coordinate vector (it need not be a basis
/// element: for constant group schemes it is the sum of all of them).
struct HopfAlgebra {
    BaseScalar scalar = BaseScalar::integers();
    std::size_t rank = 0;
    DenseInt mult;     // rank x rank^2, column i*rank+j = e_i * e_j
    DenseInt unit;     // rank x 1
    DenseInt comult;   // rank^2 x rank, column j = Delta(e_j)
    DenseInt counit;   // 1 x rank
    DenseInt antipode; // rank x rank
    std::string name;

    nlohmann::json to_json() const;
    static HopfAlgebra from_json(const nlohmann::json& j);
};

struct AxiomFailure {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    std::vector<std::string> checked;
    std::vector<AxiomFailure> failures;
    bool all_pass() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Checks every Hopf axiom as an exact matrix identity on basis elements.
ValidationReport validate_axioms(const HopfAlgebra& h);

/// mu_n = Spec Z[x]/(x^n - 1), the group scheme of n-th roots of unity.
HopfAlgebra mu_n(std::size_t n);

/// Constant group scheme of a finite group: functions on G with pointwise
/// multiplication; comodules over it are exactly G-representations.
HopfAlgebra constant_group(const GroupTable& g, const std::string& name = "");

/// alpha_p = Spec F_p[x]/(x^p) with x primitive; non-etale, exists only in
/// characteristic p.
HopfAlgebra alpha_p(const Int& p);

/// Structure constants reduced into the new scalar ring.
HopfAlgebra base_change_hopf(const HopfAlgebra& h, const BaseScalar& scalar);

/// Built-ins addressable by CLI name: mu_<n>, alpha_<p>, const_Z<n>,
/// const_Z2xZ2.
std::optional<HopfAlgebra> builtin_hopf(const std::string& name);

} // namespace hopfinv

#endif
