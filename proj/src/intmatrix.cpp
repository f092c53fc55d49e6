#include "hopfinv/intmatrix.hpp"

#include <algorithm>

#include "hopfinv/errors.hpp"

namespace hopfinv {

void IntMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw DimensionMismatch("index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const Entry& e = entries_[k];
        check_index(e.row, e.col);
        if (e.value == 0)
            throw BadInput("explicit zero entry at (" + std::to_string(e.row) + "," +
                           std::to_string(e.col) + ")");
        if (k > 0 && entries_[k - 1].row == e.row && entries_[k - 1].col == e.col)
            throw BadInput("duplicate entry at (" + std::to_string(e.row) + "," +
                           std::to_string(e.col) + ")");
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) m.entries_.push_back({i, i, d[i]});
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t rows, std::size_t cols, const std::vector<Int>& flat) {
    if (flat.size() != rows * cols) throw DimensionMismatch("from_rows: wrong element count");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (flat[i * cols + j] != 0) m.entries_.push_back({i, j, flat[i * cols + j]});
    return m;
}

Int IntMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                               [](const Entry& e, const std::pair<std::size_t, std::size_t>& p) {
                                   return e.row != p.first ? e.row < p.first : e.col < p.second;
                               });
    if (it != entries_.end() && it->row == i && it->col == j) return it->value;
    return 0;
}

void IntMatrix::set(std::size_t i, std::size_t j, const Int& v) {
    check_index(i, j);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                               [](const Entry& e, const std::pair<std::size_t, std::size_t>& p) {
                                   return e.row != p.first ? e.row < p.first : e.col < p.second;
                               });
    if (it != entries_.end() && it->row == i && it->col == j) {
        if (v == 0)
            entries_.erase(it);
        else
            it->value = v;
    } else if (v != 0) {
        entries_.insert(it, Entry{i, j, v});
    }
}

IntMatrix IntMatrix::transpose() const { return from_dense(to_dense().transpose()); }

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    return from_dense(to_dense() * rhs.to_dense());
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    return from_dense(to_dense() + rhs.to_dense());
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    return from_dense(to_dense() - rhs.to_dense());
}

IntMatrix IntMatrix::reduced(const BaseScalar& s) const {
    DenseInt d = to_dense();
    d.reduce_inplace(s);
    return from_dense(d);
}

DenseInt IntMatrix::to_dense() const {
    DenseInt d(rows_, cols_);
    for (const Entry& e : entries_) d(e.row, e.col) = e.value;
    return d;
}

IntMatrix IntMatrix::from_dense(const DenseInt& d) {
    IntMatrix m(d.rows, d.cols);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j)
            if (d(i, j) != 0) m.entries_.push_back({i, j, d(i, j)});
    return m;
}

nlohmann::json IntMatrix::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const Entry& e : entries_)
        entries.push_back({e.row, e.col, e.value.get_str()});
    return {{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

IntMatrix IntMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw BadInput("matrix: expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "rows" && key != "cols" && key != "entries")
            throw BadInput("matrix: unknown field \"" + key + "\"");
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw BadInput("matrix: fields rows, cols, entries are required");
    if (!json_is_size(j["rows"]) || !json_is_size(j["cols"]))
        throw BadInput("matrix: rows/cols must be nonnegative integers");
    std::vector<Entry> entries;
    if (!j["entries"].is_array()) throw BadInput("matrix: entries must be an array");
    for (const auto& t : j["entries"]) {
        if (!t.is_array() || t.size() != 3 || !json_is_size(t[0]) ||
            !json_is_size(t[1]) || !t[2].is_string())
            throw BadInput("matrix: each entry must be [row, col, \"decimal-value\"]");
        try {
            entries.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(),
                               Int(t[2].get<std::string>())});
        } catch (const std::invalid_argument&) {
            throw BadInput("matrix: entry value is not a decimal integer: " +
                           t[2].get<std::string>());
        }
    }
    return IntMatrix(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(),
                     std::move(entries));
}

// ---------------------------------------------------------------------------

DenseInt DenseInt::identity(std::size_t n) {
    DenseInt d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
}

bool DenseInt::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

DenseInt DenseInt::transpose() const {
    DenseInt t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseInt DenseInt::operator*(const DenseInt& rhs) const {
    if (cols != rhs.rows) throw DimensionMismatch("dense multiply: inner dimensions differ");
    DenseInt out(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) {
                if (rhs(k, j) == 0) continue;
                out(i, j) += x * rhs(k, j);
            }
        }
    return out;
}

DenseInt DenseInt::operator+(const DenseInt& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw DimensionMismatch("dense add: shapes differ");
    DenseInt out(rows, cols);
    for (std::size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] + rhs.a[k];
    return out;
}

DenseInt DenseInt::operator-(const DenseInt& rhs) const {
    if (rows != rhs.rows || cols != rhs.cols) throw DimensionMismatch("dense sub: shapes differ");
    DenseInt out(rows, cols);
    for (std::size_t k = 0; k < a.size(); ++k) out.a[k] = a[k] - rhs.a[k];
    return out;
}

void DenseInt::reduce_inplace(const BaseScalar& s) {
    if (!s.has_modulus()) return;
    for (Int& x : a) x = s.reduce(x);
}

bool DenseInt::is_zero_over(const BaseScalar& s) const {
    for (const Int& x : a)
        if (s.reduce(x) != 0) return false;
    return true;
}

bool DenseInt::equals_over(const DenseInt& rhs, const BaseScalar& s) const {
    if (rows != rhs.rows || cols != rhs.cols) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (s.reduce(a[k] - rhs.a[k]) != 0) return false;
    return true;
}

void DenseInt::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void DenseInt::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void DenseInt::add_row_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) += q * (*this)(j, c);
}

void DenseInt::add_col_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) += q * (*this)(r, j);
}

void DenseInt::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
}

void DenseInt::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) = -(*this)(r, i);
}

DenseInt DenseInt::hcat(const DenseInt& rhs) const {
    if (rows != rhs.rows) throw DimensionMismatch("hcat: row counts differ");
    DenseInt out(rows, cols + rhs.cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols; ++j) out(i, cols + j) = rhs(i, j);
    }
    return out;
}

DenseInt DenseInt::vcat(const DenseInt& rhs) const {
    if (cols != rhs.cols) throw DimensionMismatch("vcat: column counts differ");
    DenseInt out(rows + rhs.rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < rhs.rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(rows + i, j) = rhs(i, j);
    return out;
}

DenseInt DenseInt::submatrix_cols(const std::vector<std::size_t>& cols_sel) const {
    DenseInt out(rows, cols_sel.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols_sel.size(); ++j) out(i, j) = (*this)(i, cols_sel[j]);
    return out;
}

DenseInt DenseInt::submatrix_rows(const std::vector<std::size_t>& rows_sel) const {
    DenseInt out(rows_sel.size(), cols);
    for (std::size_t i = 0; i < rows_sel.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(rows_sel[i], j);
    return out;
}

Int determinant(const DenseInt& m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant: matrix not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    DenseInt w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

DenseRat DenseRat::from_int(const DenseInt& m) {
    DenseRat out(m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k) out.a[k] = Rat(m.a[k]);
    return out;
}

DenseRat DenseRat::operator*(const DenseRat& rhs) const {
    if (cols != rhs.rows) throw DimensionMismatch("rat multiply: inner dimensions differ");
    DenseRat out(rows, rhs.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) {
                if (rhs(k, j) == 0) continue;
                out(i, j) += x * rhs(k, j);
            }
        }
    return out;
}

bool DenseRat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

} // namespace hopfinv
