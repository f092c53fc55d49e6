#include "hopfinv/smith.hpp"

#include <cstdlib>

namespace hopfinv {

namespace {

// Nearest-integer quotient; minimizes |a - q*b|.
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int babs = abs(b);
    if (2 * r > babs) q += 1;
    return q;
}

struct Worker {
    DenseInt d, u, uinv, v, vinv;

    explicit Worker(const DenseInt& a)
        : d(a),
          u(DenseInt::identity(a.rows)),
          uinv(DenseInt::identity(a.rows)),
          v(DenseInt::identity(a.cols)),
          vinv(DenseInt::identity(a.cols)) {}

    void swap_rows(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    // row_i += q*row_j
    void row_op(std::size_t i, std::size_t j, const Int& q) {
        d.add_row_multiple(i, j, q);
        u.add_row_multiple(i, j, q);
        uinv.add_col_multiple(j, i, -q);
    }
    // col_i += q*col_j
    void col_op(std::size_t i, std::size_t j, const Int& q) {
        d.add_col_multiple(i, j, q);
        v.add_col_multiple(i, j, q);
        vinv.add_row_multiple(j, i, -q);
    }
    void negate_row(std::size_t i) {
        d.negate_row(i);
        u.negate_row(i);
        uinv.negate_col(i);
    }
};

} // namespace

SmithForm smith_normal_form(const DenseInt& a) {
    Worker w(a);
    const std::size_t nr = a.rows, nc = a.cols;
    const std::size_t steps = std::min(nr, nc);

    for (std::size_t k = 0; k < steps; ++k) {
        for (;;) {
            // Minimal |value| pivot in the trailing submatrix.
            std::size_t pi = nr, pj = nc;
            Int best;
            for (std::size_t i = k; i < nr; ++i)
                for (std::size_t j = k; j < nc; ++j) {
                    const Int& x = w.d(i, j);
                    if (x == 0) continue;
                    if (pi == nr || abs(x) < best) {
                        best = abs(x);
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == nr) goto done; // trailing block is zero
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            bool dirty = false;
            for (std::size_t i = k + 1; i < nr; ++i) {
                if (w.d(i, k) == 0) continue;
                w.row_op(i, k, -round_div(w.d(i, k), w.d(k, k)));
                if (w.d(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < nc; ++j) {
                if (w.d(k, j) == 0) continue;
                w.col_op(j, k, -round_div(w.d(k, j), w.d(k, k)));
                if (w.d(k, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the remaining entries for the chain to hold.
            bool fixed = false;
            for (std::size_t i = k + 1; i < nr && !fixed; ++i)
                for (std::size_t j = k + 1; j < nc && !fixed; ++j)
                    if (w.d(i, j) % w.d(k, k) != 0) {
                        w.row_op(k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (w.d(k, k) < 0) w.negate_row(k);
    }
done:;

    SmithForm out;
    out.Uinv = std::move(w.uinv);
    out.Vinv = std::move(w.vinv);
    out.U = IntMatrix::from_dense(w.u);
    out.V = IntMatrix::from_dense(w.v);
    out.D = IntMatrix::from_dense(w.d);
    for (std::size_t k = 0; k < steps; ++k)
        if (w.d(k, k) != 0) {
            out.invariant_factors.push_back(w.d(k, k));
            ++out.rank;
        }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a) { return smith_normal_form(a.to_dense()); }

} // namespace hopfinv
