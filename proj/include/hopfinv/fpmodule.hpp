#ifndef HOPFINV_FPMODULE_HPP
#define HOPFINV_FPMODULE_HPP

#include <string>
#include <vector>

#include "hopfinv/intmatrix.hpp"
#include "hopfinv/smith.hpp"

namespace hopfinv {

/// Finitely presented abelian group: coker of P : Z^a -> Z^b.
/// Canonical decomposition Z^f + sum_i Z/d_i (d_i >= 2, d_i | d_{i+1}).
class FpModule {
public:
    FpModule() : presentation_(IntMatrix::zero(0, 0)) { recompute(); }
    explicit FpModule(IntMatrix presentation);

    static FpModule zero() { return FpModule(); }
    static FpModule free_of_rank(std::size_t f) {
        return FpModule(IntMatrix::zero(f, 0));
    }
    static FpModule from_invariants(std::size_t free_rank, const std::vector<Int>& torsion);

    const IntMatrix& presentation() const { return presentation_; }
    std::size_t generators() const { return presentation_.rows(); }
    std::size_t free_rank() const { return free_rank_; }
    /// Invariant factors >= 2, in divisibility-chain order.
    const std::vector<Int>& torsion() const { return torsion_; }

    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_torsion_free() const { return torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    Int torsion_order() const;

    /// Same isomorphism class (free rank and invariant factors agree).
    bool isomorphic(const FpModule& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }

    std::string describe() const;
    nlohmann::json to_json() const;

private:
    IntMatrix presentation_;
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
    void recompute();
};

/// Module over a fixed BaseScalar, reported structurally: a dimension over
/// a field, a list of cyclic orders over Z/n, free rank + torsion over Z.
struct ScalarModule {
    BaseScalar scalar = BaseScalar::integers();
    std::size_t free_rank = 0;     // field dimension, or free rank over Z,
                                   // or number of Z/n summands over Z/n
    std::vector<Int> cyclic;       // proper cyclic orders (>= 2, < n) over
                                   // Z/n; torsion over Z; empty over fields

    bool is_zero() const { return free_rank == 0 && cyclic.empty(); }
    /// Invariant factors of the underlying finite abelian group (for
    /// modular scalars) or the field dimension as a count.
    std::vector<Int> abelian_invariants() const;
    bool isomorphic(const ScalarModule& o) const;
    std::string describe() const;
    nlohmann::json to_json() const;
};

/// Canonical invariant-factor chain of sum_i Z/orders[i]; drops trivial
/// factors.
std::vector<Int> canonical_cyclic(const std::vector<Int>& orders);

FpModule cokernel(const IntMatrix& a);

/// Underlying module of scalar (x) M.
ScalarModule tensor_module(const FpModule& m, const BaseScalar& scalar);

/// Tor_1^Z(scalar, M), from the invariant factors.
ScalarModule tor1(const BaseScalar& scalar, const FpModule& m);

} // namespace hopfinv

#endif
