#ifndef HOPFINV_POLY_HPP
#define HOPFINV_POLY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfinv/intmatrix.hpp"

namespace hopfinv {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically with earlier variables weighing more.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in graded lexicographic order with no zero coefficients.
class Poly {
public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rat& c);
    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly monomial(const Exponents& e, const Rat& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree of the highest term; 0 for the zero polynomial.
    unsigned degree() const;
    bool is_homogeneous(unsigned d) const;
    const std::map<Exponents, Rat, GrlexLess>& terms() const { return terms_; }
    Rat coefficient(const Exponents& e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly derivative(std::size_t var) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    Int evaluate_int(const std::vector<Int>& point) const;
    /// Algebra map sending variable i to images[i]; the result lives in the
    /// images' variable set.
    Poly substitute(const std::vector<Poly>& images) const;

    /// Coefficients against an indexed monomial list (missing monomials must
    /// have zero coefficient or DimensionMismatch is thrown).
    std::vector<Rat> coefficient_vector(const std::map<Exponents, std::size_t, GrlexLess>& index,
                                        std::size_t width) const;

    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    std::size_t nvars_;
    std::map<Exponents, Rat, GrlexLess> terms_;
    void add_term(const Exponents& e, const Rat& c);
};

/// All exponent vectors of total degree d in nvars variables, sorted by
/// GrlexLess.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d);

/// Exponent vectors with total degree d1 on the first n1 variables and d2 on
/// the remaining n2, sorted by GrlexLess on the concatenation.
std::vector<Exponents> monomials_of_bidegree(std::size_t n1, std::size_t n2, unsigned d1,
                                             unsigned d2);

/// Incremental reduced row echelon basis over Q. Pivot entries are 1 and
/// pivot columns are cleared in all other rows.
class EchelonBasisQ {
public:
    explicit EchelonBasisQ(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    /// Reduces v against the basis in place; the result has zeros at all
    /// pivot columns.
    void reduce(std::vector<Rat>& v) const;
    /// Inserts v if independent; returns whether the dimension grew.
    bool insert(std::vector<Rat> v);
    bool contains(std::vector<Rat> v) const;

    /// Columns without a pivot, in order: coordinates of the complement.
    std::vector<std::size_t> complement() const;

private:
    std::size_t width_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Incremental echelon over F_p with p = 2^61 - 1, for fast certified rank
/// lower bounds of integer matrices: rows independent mod p are independent
/// over Q (a rational dependence scales to a primitive integer dependence,
/// which survives reduction mod p).
class EchelonBasisMod {
public:
    static constexpr unsigned long long kPrime = (1ULL << 61) - 1;

    explicit EchelonBasisMod(std::size_t width) : width_(width) {}
    std::size_t dim() const { return rows_.size(); }
    bool insert(const std::vector<Int>& v);

private:
    std::size_t width_;
    std::vector<std::vector<unsigned long long>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace hopfinv

#endif
