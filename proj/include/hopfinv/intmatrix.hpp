#ifndef HOPFINV_INTMATRIX_HPP
#define HOPFINV_INTMATRIX_HPP

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

/// True for JSON integers >= 0 regardless of signed/unsigned storage.
inline bool json_is_size(const nlohmann::json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

struct DenseInt;

/// Arbitrary-precision integer matrix in sparse triplet form.
/// Triplets are kept sorted row-major with no explicit zeros and no
/// duplicates, so operator== is structural equality.
class IntMatrix {
public:
    struct Entry {
        std::size_t row, col;
        Int value;
        bool operator==(const Entry&) const = default;
    };

    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const std::vector<Int>& d);
    /// Row-major dense initializer, zeros dropped.
    static IntMatrix from_rows(std::size_t rows, std::size_t cols, const std::vector<Int>& flat);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    Int at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Int& v);

    bool is_zero() const { return entries_.empty(); }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Entrywise reduction into the canonical representatives of the scalar
    /// ring (no-op for Int and Rat).
    IntMatrix reduced(const BaseScalar& s) const;

    DenseInt to_dense() const;
    static IntMatrix from_dense(const DenseInt& d);

    nlohmann::json to_json() const;
    static IntMatrix from_json(const nlohmann::json& j);

private:
    std::size_t rows_, cols_;
    std::vector<Entry> entries_;
    void check_index(std::size_t i, std::size_t j) const;
};

/// Dense working representation used by the elimination algorithms.
struct DenseInt {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a; // row-major

    DenseInt() = default;
    DenseInt(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static DenseInt identity(std::size_t n);
    bool is_zero() const;
    bool operator==(const DenseInt&) const = default;

    DenseInt transpose() const;
    DenseInt operator*(const DenseInt& rhs) const;
    DenseInt operator+(const DenseInt& rhs) const;
    DenseInt operator-(const DenseInt& rhs) const;

    void reduce_inplace(const BaseScalar& s);
    /// True if every entry reduces to zero in the given ring.
    bool is_zero_over(const BaseScalar& s) const;
    bool equals_over(const DenseInt& rhs, const BaseScalar& s) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += q * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& q);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    /// Horizontal concatenation [this | rhs].
    DenseInt hcat(const DenseInt& rhs) const;
    /// Vertical concatenation [this; rhs].
    DenseInt vcat(const DenseInt& rhs) const;
    DenseInt submatrix_cols(const std::vector<std::size_t>& cols_sel) const;
    DenseInt submatrix_rows(const std::vector<std::size_t>& rows_sel) const;
};

/// Exact determinant by fraction-free (Bareiss) elimination; square only.
Int determinant(const DenseInt& m);

/// Dense rational matrix.
struct DenseRat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    DenseRat() = default;
    DenseRat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static DenseRat from_int(const DenseInt& m);
    DenseRat operator*(const DenseRat& rhs) const;
    bool is_zero() const;
    bool operator==(const DenseRat&) const = default;
};

} // namespace hopfinv

#endif
