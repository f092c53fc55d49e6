#ifndef HOPFINV_DETINV_HPP
#define HOPFINV_DETINV_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfinv/poly.hpp"

namespace hopfinv {

/// Shape of a generic matrix of variables x[i][j]: g rows, f columns,
/// flattened as variable index i*f + j.
struct MatrixShape {
    std::size_t g = 0; // rows
    std::size_t f = 0; // cols
    std::size_t nvars() const { return g * f; }
    std::size_t var(std::size_t i, std::size_t j) const { return i * f + j; }
};

/// The ideal I_size of all size x size minors of the generic g x f matrix.
struct MinorIdealSpec {
    MatrixShape shape;
    std::size_t size = 0;          // v + 1
    std::vector<Poly> generators;  // homogeneous of degree `size`
};

/// Determinant of the submatrix of variables picked by rows/cols, by
/// cofactor expansion; rows and cols are strictly increasing index lists.
Poly minor_poly(const MatrixShape& shape, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols);

MinorIdealSpec minors(const MatrixShape& shape, std::size_t size);

/// Degree-d slice of the ideal with a chosen complement of monomials.
struct GradedPiece {
    unsigned degree = 0;
    std::vector<Exponents> monomials;   // grlex-sorted basis of the full slice
    EchelonBasisQ ideal_span;           // row space of the ideal's slice
    std::vector<std::size_t> complement; // indices into monomials

    GradedPiece() : ideal_span(0) {}
    std::size_t ideal_dim() const { return ideal_span.dim(); }
    std::size_t quotient_dim() const { return complement.size(); }
};

GradedPiece ideal_degree_span(const MinorIdealSpec& spec, unsigned d);

/// dim K[Y_v]_d by exact quotient: monomial count minus the ideal slice.
std::size_t hilbert_dim_exact(const MatrixShape& shape, std::size_t v, unsigned d);

struct HilbertResult {
    std::size_t dim = 0;
    std::size_t samples_used = 0;
    std::string method; // "evaluation" or "exact"
    nlohmann::json to_json() const;
};

/// dim K[Y_v]_d as the exact rank of the evaluation matrix at random
/// rank-<= v integer points P*Q with entries of P, Q in [-5, 5]; sampling
/// stops once the rank is stable for 3 consecutive batches (or hits the
/// monomial count).
HilbertResult hilbert_dim(const MatrixShape& shape, std::size_t v, unsigned d,
                          unsigned long seed = 0);

/// Images of the variables x[i][j] under the comorphism
/// x_{ij} |-> sum_c a_{ic} b_{cj}, as polynomials in the m*r variables
/// a[i][c] followed by the r*n variables b[c][j].
std::vector<Poly> pi_sharp(std::size_t m, std::size_t n, std::size_t r);

/// Explicit integer (A, B) with rank A = s, rank B = t, rank(AB) = min(s,t);
/// A is m x r, B is r x n. Throws ConstraintViolation when s > min(m,r) or
/// t > min(n,r).
std::pair<DenseInt, DenseInt> rank_witness(std::size_t m, std::size_t n, std::size_t r,
                                           std::size_t s, std::size_t t);

/// p in the degree-d slice of the ideal? Decided by the exact span and
/// cross-checked by vanishing at sampled rank points; a mismatch throws
/// OracleDisagreement.
bool membership_modulo_ideal(const Poly& p, const MinorIdealSpec& spec, unsigned d,
                             unsigned long seed = 0);

} // namespace hopfinv

#endif
