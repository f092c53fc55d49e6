#include "hopfinv/exactlin.hpp"

#include <algorithm>

#include "hopfinv/errors.hpp"

namespace hopfinv {

// --- over Z ---------------------------------------------------------------

DenseInt kernel_int(const DenseInt& a) {
    SmithForm snf = smith_normal_form(a);
    DenseInt v = snf.V.to_dense();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = snf.rank; j < a.cols; ++j) free_cols.push_back(j);
    return v.submatrix_cols(free_cols);
}

DenseInt image_lattice_basis(const DenseInt& a) {
    SmithForm snf = smith_normal_form(a);
    DenseInt d = snf.D.to_dense();
    DenseInt basis(a.rows, snf.rank);
    for (std::size_t j = 0; j < snf.rank; ++j)
        for (std::size_t i = 0; i < a.rows; ++i)
            basis(i, j) = snf.Uinv(i, j) * d(j, j);
    return basis;
}

namespace {

// Transforms B into Y with D Y = U B; reports failure instead of throwing.
bool snf_solve(const DenseInt& k, const DenseInt& b, DenseInt& x) {
    if (k.rows != b.rows) throw DimensionMismatch("solve_int: row counts differ");
    SmithForm snf = smith_normal_form(k);
    DenseInt ub = snf.U.to_dense() * b;
    DenseInt d = snf.D.to_dense();
    DenseInt y(k.cols, b.cols);
    for (std::size_t i = 0; i < k.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            if (i < snf.rank) {
                if (ub(i, j) % d(i, i) != 0) return false;
                y(i, j) = ub(i, j) / d(i, i);
            } else if (ub(i, j) != 0) {
                return false;
            }
        }
    }
    x = snf.V.to_dense() * y;
    return true;
}

} // namespace

DenseInt solve_int(const DenseInt& k, const DenseInt& b) {
    DenseInt x;
    if (!snf_solve(k, b, x)) throw DimensionMismatch("solve_int: no integral solution");
    return x;
}

bool solvable_int(const DenseInt& a, const DenseInt& b) {
    DenseInt x;
    return snf_solve(a, b, x);
}

// --- over Q ---------------------------------------------------------------

namespace {

std::vector<std::size_t> rref_rat(DenseRat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m(pr, col) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(pr, j));
        Rat inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank_rat(const DenseRat& a) {
    DenseRat m = a;
    return rref_rat(m).size();
}

DenseRat kernel_rat(const DenseRat& a) {
    DenseRat m = a;
    std::vector<std::size_t> pivots = rref_rat(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    DenseRat k(a.cols, free_cols.size());
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        k(free_cols[fj], fj) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], fj) = -m(i, free_cols[fj]);
    }
    return k;
}

bool solve_rat(const DenseRat& a, const DenseRat& b, DenseRat& x) {
    if (a.rows != b.rows) throw DimensionMismatch("solve_rat: row counts differ");
    DenseRat m(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) m(i, a.cols + j) = b(i, j);
    }
    std::vector<std::size_t> pivots = rref_rat(m);
    for (std::size_t p : pivots)
        if (p >= a.cols) return false;
    x = DenseRat(a.cols, b.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols; ++j) x(pivots[i], j) = m(i, a.cols + j);
    return true;
}

// --- over F_p -------------------------------------------------------------

namespace {

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DimensionMismatch("inv_mod: element not invertible");
    return r;
}

std::vector<std::size_t> rref_fp(DenseInt& m, const Int& p) {
    for (Int& v : m.a) {
        Int r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        v = r;
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    auto mod = [&p](const Int& v) {
        Int r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = row;
        while (pr < m.rows && m(pr, col) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != row) m.swap_rows(row, pr);
        Int inv = inv_mod(m(row, col), p);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) = mod(m(row, j) * inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Int f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) = mod(m(i, j) - f * m(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank_fp(const DenseInt& a, const Int& p) {
    DenseInt m = a;
    return rref_fp(m, p).size();
}

DenseInt kernel_fp(const DenseInt& a, const Int& p) {
    DenseInt m = a;
    std::vector<std::size_t> pivots = rref_fp(m, p);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t q : pivots) is_pivot[q] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    DenseInt k(a.cols, free_cols.size());
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        k(free_cols[fj], fj) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Int r;
            Int neg = -m(i, free_cols[fj]);
            mpz_mod(r.get_mpz_t(), neg.get_mpz_t(), p.get_mpz_t());
            k(pivots[i], fj) = r;
        }
    }
    return k;
}

bool solve_fp(const DenseInt& a, const DenseInt& b, const Int& p, DenseInt& x) {
    if (a.rows != b.rows) throw DimensionMismatch("solve_fp: row counts differ");
    DenseInt m = a.hcat(b);
    std::vector<std::size_t> pivots = rref_fp(m, p);
    for (std::size_t q : pivots)
        if (q >= a.cols) return false;
    x = DenseInt(a.cols, b.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols; ++j) x(pivots[i], j) = m(i, a.cols + j);
    return true;
}

// --- over Z/n -------------------------------------------------------------

DenseInt kernel_mod(const DenseInt& a, const Int& n) {
    SmithForm snf = smith_normal_form(a);
    DenseInt v = snf.V.to_dense();
    DenseInt d = snf.D.to_dense();
    std::vector<std::pair<std::size_t, Int>> gens; // (column of V, scale)
    for (std::size_t j = 0; j < a.cols; ++j) {
        Int dj = j < std::min(a.rows, a.cols) ? d(j, j) : Int(0);
        Int g = gcd(dj, n); // gcd(0, n) = n, so zero columns contribute freely
        if (g == 1) continue; // d_j is a unit mod n: y_j forced to 0
        gens.push_back({j, n / g});
    }
    DenseInt out(a.cols, gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < a.cols; ++i) {
            Int r;
            Int val = v(i, gens[k].first) * gens[k].second;
            mpz_mod(r.get_mpz_t(), val.get_mpz_t(), n.get_mpz_t());
            out(i, k) = r;
        }
    return out;
}

DenseInt kernel_lift_lattice(const DenseInt& a, const Int& n) {
    DenseInt scaled_id(a.rows, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) scaled_id(i, i) = n;
    DenseInt k = kernel_int(a.hcat(scaled_id));
    std::vector<std::size_t> head(a.cols);
    for (std::size_t i = 0; i < a.cols; ++i) head[i] = i;
    DenseInt gens = k.submatrix_rows(head);
    // Append n*I so the lattice provably contains n Z^c even when A has
    // zero columns that the kernel projection misses.
    DenseInt nid(a.cols, a.cols);
    for (std::size_t i = 0; i < a.cols; ++i) nid(i, i) = n;
    return image_lattice_basis(gens.hcat(nid));
}

// --- dispatch -------------------------------------------------------------

IntMatrix kernel_basis(const IntMatrix& a, const BaseScalar& scalar) {
    DenseInt m = a.to_dense();
    switch (scalar.tag()) {
    case ScalarTag::Int:
        return IntMatrix::from_dense(kernel_int(m));
    case ScalarTag::Rat: {
        DenseRat k = kernel_rat(DenseRat::from_int(m));
        // Clear denominators columnwise; the result spans the same space.
        DenseInt out(k.rows, k.cols);
        for (std::size_t j = 0; j < k.cols; ++j) {
            Int l = 1;
            for (std::size_t i = 0; i < k.rows; ++i) l = lcm(l, Int(k(i, j).get_den()));
            for (std::size_t i = 0; i < k.rows; ++i) {
                Rat v = k(i, j) * l;
                out(i, j) = Int(v.get_num());
            }
        }
        return IntMatrix::from_dense(out);
    }
    case ScalarTag::Fp:
        return IntMatrix::from_dense(kernel_fp(m, scalar.modulus()));
    case ScalarTag::IntMod:
        return IntMatrix::from_dense(kernel_mod(m, scalar.modulus()));
    }
    throw BadInput("kernel_basis: unknown scalar");
}

std::size_t rank_over(const DenseInt& a, const BaseScalar& field) {
    switch (field.tag()) {
    case ScalarTag::Int:
    case ScalarTag::Rat:
        return rank_rat(DenseRat::from_int(a));
    case ScalarTag::Fp:
        return rank_fp(a, field.modulus());
    case ScalarTag::IntMod:
        throw BadInput("rank_over: Z/n has no rank");
    }
    throw BadInput("rank_over: unknown scalar");
}

FpModule complex_cohomology(const DenseInt& d_in, const DenseInt& d_out) {
    if (d_out.cols != d_in.rows)
        throw DimensionMismatch("complex_cohomology: d_out and d_in do not compose");
    if (!(d_out * d_in).is_zero())
        throw NotAComplex("complex_cohomology: d_out * d_in != 0");
    DenseInt k = kernel_int(d_out);
    DenseInt x = solve_int(k, d_in);
    return FpModule(IntMatrix::from_dense(x));
}

FpModule complex_cohomology(const IntMatrix& d_in, const IntMatrix& d_out) {
    return complex_cohomology(d_in.to_dense(), d_out.to_dense());
}

FpModule quotient_of_lattice_mod(const DenseInt& lattice_basis, const DenseInt& b, const Int& n) {
    DenseInt nid(lattice_basis.rows, lattice_basis.rows);
    for (std::size_t i = 0; i < lattice_basis.rows; ++i) nid(i, i) = n;
    DenseInt rel = solve_int(lattice_basis, b.hcat(nid));
    return FpModule(IntMatrix::from_dense(rel));
}

} // namespace hopfinv
