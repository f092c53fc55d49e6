#ifndef HOPFINV_GLINV_HPP
#define HOPFINV_GLINV_HPP

#include "hopfinv/detinv.hpp"

namespace hopfinv {

/// The GL_r action on pairs (A, B) with A an m x r and B an r x n matrix of
/// indeterminates, (A, B) . g = (A g^-1, g B), restricted to rank A <= s and
/// rank B <= t. Variables: a[i][c] = i*r + c, then b[c][j] = m*r + c*n + j.
struct ActionSpec {
    std::size_t m = 0, n = 0, r = 0, s = 0, t = 0;

    std::size_t u() const { return std::min(s, t); }
    std::size_t nvars() const { return m * r + r * n; }
    std::size_t avar(std::size_t i, std::size_t c) const { return i * r + c; }
    std::size_t bvar(std::size_t c, std::size_t j) const { return m * r + c * n + j; }
    /// Requires r >= 1, s <= m,r and t <= n,r; throws ConstraintViolation.
    void validate() const;
};

/// Bidegree-(d1, d2) piece of Q[a, b] / (I_{s+1}(A) + I_{t+1}(B)): the full
/// monomial basis, the span of the ideal slice, and complement
/// representatives.
struct BidegreePiece {
    unsigned d1 = 0, d2 = 0;
    std::vector<Exponents> monomials;
    EchelonBasisQ ideal_span;
    std::vector<std::size_t> complement;

    BidegreePiece() : ideal_span(0) {}
    std::size_t quotient_dim() const { return complement.size(); }
};

/// Throws SizeGuard when the bidegree has more than 5000 monomials.
BidegreePiece bidegree_piece(const ActionSpec& spec, unsigned d1, unsigned d2);

/// The infinitesimal operator
/// D_{ab} f = -sum_i a[i][a] df/da[i][b] + sum_j b[b][j] df/db[a][j].
Poly polarization_apply(const ActionSpec& spec, std::size_t a, std::size_t b, const Poly& f);

/// Matrix of D_{ab} on the complement basis of the quotient piece; checks
/// exactly that the ideal slice is D_{ab}-stable (IdealNotStable otherwise).
DenseRat polarization_matrix(const ActionSpec& spec, std::size_t a, std::size_t b,
                             const BidegreePiece& piece);

/// Basis of the joint kernel of all D_{ab} on the quotient piece, returned
/// as polynomials with primitive integer coefficients.
std::vector<Poly> invariant_space(const ActionSpec& spec, unsigned d1, unsigned d2);

/// Substitutes explicit group elements g (elementary I + E_{ab} and
/// diag(2, 1, ..., 1)) into every basis element: f(A g^-1, g B) - f(A, B)
/// must lie in the ideal slice. Exact; returns the verdict.
bool finite_group_cross_check(const ActionSpec& spec, unsigned d1, unsigned d2,
                              const std::vector<Poly>& basis);

struct FftDegreeReport {
    unsigned d = 0;
    std::size_t dim_y = 0;   // dim K[Y_u(V, W)]_d
    std::size_t dim_inv = 0; // dim (K[X]^G)_{(d,d)}
    bool injective = false;
    bool pass = false;
    nlohmann::json to_json() const;
};

struct FftReport {
    ActionSpec spec;
    std::vector<FftDegreeReport> per_degree;
    bool overall = false;
    nlohmann::json to_json() const;
};

/// Degreewise first-fundamental-theorem check for d = 0..d_max: dimension
/// equality between K[Y_u]_d and the (d, d) invariants, plus injectivity of
/// the comorphism on degree d.
FftReport fft_check(const ActionSpec& spec, unsigned d_max, unsigned long seed = 0);

} // namespace hopfinv

#endif
