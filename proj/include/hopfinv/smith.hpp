#ifndef HOPFINV_SMITH_HPP
#define HOPFINV_SMITH_HPP

#include <vector>

#include "hopfinv/intmatrix.hpp"

namespace hopfinv {

/// U * A * V = D with U, V unimodular and D diagonal with the divisibility
/// chain d_1 | d_2 | ... ; nonnegative diagonal. Uinv and Vinv are carried
/// along because image/preimage computations need them.
struct SmithForm {
    IntMatrix U, V, D;
    DenseInt Uinv, Vinv;
    std::vector<Int> invariant_factors; // the nonzero d_i, in chain order
    std::size_t rank = 0;
};

/// Minimal-absolute-value pivoting; deterministic for a fixed input.
SmithForm smith_normal_form(const IntMatrix& a);
SmithForm smith_normal_form(const DenseInt& a);

} // namespace hopfinv

#endif
