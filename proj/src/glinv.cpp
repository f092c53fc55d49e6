#include "hopfinv/glinv.hpp"

#include <algorithm>

#include "hopfinv/errors.hpp"
#include "hopfinv/exactlin.hpp"

namespace hopfinv {

void ActionSpec::validate() const {
    if (r < 1) throw ConstraintViolation("action spec: r must be >= 1");
    if (s > m || s > r) throw ConstraintViolation("action spec: need s <= m and s <= r");
    if (t > n || t > r) throw ConstraintViolation("action spec: need t <= n and t <= r");
}

namespace {

std::map<Exponents, std::size_t, GrlexLess> index_of(const std::vector<Exponents>& monomials) {
    std::map<Exponents, std::size_t, GrlexLess> idx;
    for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
    return idx;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Determinant of the k x k matrix of variables picked by varidx, inside a
/// polynomial ring with nv variables.
Poly det_of_vars(std::size_t nv, const std::vector<std::vector<std::size_t>>& varidx) {
    const std::size_t k = varidx.size();
    if (k == 0) return Poly::constant(nv, 1);
    Poly out(nv);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<std::size_t>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<std::size_t> row;
            for (std::size_t l = 0; l < k; ++l)
                if (l != j) row.push_back(varidx[i][l]);
            sub.push_back(row);
        }
        Poly cof = Poly::variable(nv, varidx[0][j]) * det_of_vars(nv, sub);
        if (j % 2 == 0)
            out += cof;
        else
            out -= cof;
    }
    return out;
}

/// Minor-ideal generators for the a-block (rows m x cols r) or b-block.
std::vector<Poly> block_minors(const ActionSpec& spec, bool a_block, std::size_t size) {
    std::vector<Poly> out;
    const std::size_t rows = a_block ? spec.m : spec.r;
    const std::size_t cols = a_block ? spec.r : spec.n;
    if (size > std::min(rows, cols)) return out;
    for (const auto& ri : subsets(rows, size))
        for (const auto& ci : subsets(cols, size)) {
            std::vector<std::vector<std::size_t>> varidx(size, std::vector<std::size_t>(size));
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    varidx[i][j] =
                        a_block ? spec.avar(ri[i], ci[j]) : spec.bvar(ri[i], ci[j]);
            out.push_back(det_of_vars(spec.nvars(), varidx));
        }
    return out;
}

/// Coordinates of the residue of f modulo the ideal slice, in the
/// complement basis.
std::vector<Rat> quotient_coordinates(const BidegreePiece& piece,
                                      const std::map<Exponents, std::size_t, GrlexLess>& idx,
                                      const Poly& f) {
    std::vector<Rat> v = f.coefficient_vector(idx, piece.monomials.size());
    piece.ideal_span.reduce(v);
    std::vector<Rat> out(piece.complement.size());
    for (std::size_t k = 0; k < piece.complement.size(); ++k) out[k] = v[piece.complement[k]];
    return out;
}

Poly row_to_poly(const BidegreePiece& piece, const std::vector<Rat>& row) {
    Poly f(piece.monomials.empty() ? 0 : piece.monomials[0].size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) f += Poly::monomial(piece.monomials[j], row[j]);
    return f;
}

} // namespace

BidegreePiece bidegree_piece(const ActionSpec& spec, unsigned d1, unsigned d2) {
    spec.validate();
    BidegreePiece piece;
    piece.d1 = d1;
    piece.d2 = d2;
    piece.monomials = monomials_of_bidegree(spec.m * spec.r, spec.r * spec.n, d1, d2);
    if (piece.monomials.size() > 5000)
        throw SizeGuard("bidegree piece has more than 5000 monomials");
    piece.ideal_span = EchelonBasisQ(piece.monomials.size());
    auto idx = index_of(piece.monomials);

    auto insert_multiples = [&](const std::vector<Poly>& gens, unsigned ga, unsigned gb) {
        if (gens.empty() || d1 < ga || d2 < gb) return;
        for (const Poly& g : gens)
            for (const Exponents& e :
                 monomials_of_bidegree(spec.m * spec.r, spec.r * spec.n, d1 - ga, d2 - gb)) {
                Poly prod = g * Poly::monomial(e, 1);
                piece.ideal_span.insert(prod.coefficient_vector(idx, piece.monomials.size()));
            }
    };
    insert_multiples(block_minors(spec, true, spec.s + 1), spec.s + 1, 0);
    insert_multiples(block_minors(spec, false, spec.t + 1), 0, spec.t + 1);
    piece.complement = piece.ideal_span.complement();
    return piece;
}

Poly polarization_apply(const ActionSpec& spec, std::size_t a, std::size_t b, const Poly& f) {
    Poly out(spec.nvars());
    for (std::size_t i = 0; i < spec.m; ++i)
        out -= Poly::variable(spec.nvars(), spec.avar(i, a)) * f.derivative(spec.avar(i, b));
    for (std::size_t j = 0; j < spec.n; ++j)
        out += Poly::variable(spec.nvars(), spec.bvar(b, j)) * f.derivative(spec.bvar(a, j));
    return out;
}

DenseRat polarization_matrix(const ActionSpec& spec, std::size_t a, std::size_t b,
                             const BidegreePiece& piece) {
    auto idx = index_of(piece.monomials);
    // the ideal slice must be carried into itself
    for (const std::vector<Rat>& row : piece.ideal_span.rows()) {
        Poly image = polarization_apply(spec, a, b, row_to_poly(piece, row));
        if (!image.is_zero() &&
            !piece.ideal_span.contains(image.coefficient_vector(idx, piece.monomials.size())))
            throw IdealNotStable("polarization operator leaves the ideal slice");
    }
    DenseRat out(piece.complement.size(), piece.complement.size());
    for (std::size_t k = 0; k < piece.complement.size(); ++k) {
        Poly mono = Poly::monomial(piece.monomials[piece.complement[k]], 1);
        std::vector<Rat> col =
            quotient_coordinates(piece, idx, polarization_apply(spec, a, b, mono));
        for (std::size_t i = 0; i < col.size(); ++i) out(i, k) = col[i];
    }
    return out;
}

std::vector<Poly> invariant_space(const ActionSpec& spec, unsigned d1, unsigned d2) {
    BidegreePiece piece = bidegree_piece(spec, d1, d2);
    const std::size_t q = piece.quotient_dim();
    DenseRat basis(q, q);
    for (std::size_t i = 0; i < q; ++i) basis(i, i) = 1;
    std::size_t cols = q;
    for (std::size_t a = 0; a < spec.r && cols > 0; ++a)
        for (std::size_t b = 0; b < spec.r && cols > 0; ++b) {
            DenseRat op = polarization_matrix(spec, a, b, piece);
            DenseRat ker = kernel_rat(op * basis);
            basis = basis * ker;
            cols = basis.cols;
        }
    std::vector<Poly> out;
    for (std::size_t c = 0; c < cols; ++c) {
        // clear denominators and remove integer content
        Int lcm_den = 1, gcd_num = 0;
        for (std::size_t i = 0; i < q; ++i)
            if (basis(i, c) != 0) lcm_den = lcm(lcm_den, basis(i, c).get_den());
        for (std::size_t i = 0; i < q; ++i)
            if (basis(i, c) != 0) gcd_num = gcd(gcd_num, Int(basis(i, c).get_num() * lcm_den /
                                                             basis(i, c).get_den()));
        Poly f(spec.nvars());
        for (std::size_t i = 0; i < q; ++i)
            if (basis(i, c) != 0)
                f += Poly::monomial(piece.monomials[piece.complement[i]],
                                    Rat(basis(i, c) * lcm_den / gcd_num));
        out.push_back(f);
    }
    return out;
}

bool finite_group_cross_check(const ActionSpec& spec, unsigned d1, unsigned d2,
                              const std::vector<Poly>& basis) {
    BidegreePiece piece = bidegree_piece(spec, d1, d2);
    auto idx = index_of(piece.monomials);
    const std::size_t nv = spec.nvars();

    // sampled group elements as (g, g^-1) with exact rational entries
    std::vector<std::pair<DenseRat, DenseRat>> elements;
    for (std::size_t a = 0; a < spec.r; ++a)
        for (std::size_t b = 0; b < spec.r; ++b) {
            if (a == b) continue;
            DenseRat g(spec.r, spec.r), gi(spec.r, spec.r);
            for (std::size_t i = 0; i < spec.r; ++i) g(i, i) = gi(i, i) = 1;
            g(a, b) = 1;
            gi(a, b) = -1;
            elements.emplace_back(g, gi);
        }
    {
        DenseRat g(spec.r, spec.r), gi(spec.r, spec.r);
        for (std::size_t i = 0; i < spec.r; ++i) g(i, i) = gi(i, i) = 1;
        g(0, 0) = 2;
        gi(0, 0) = Rat(1, 2);
        elements.emplace_back(g, gi);
    }

    for (const auto& [g, gi] : elements) {
        // A |-> A g^-1, B |-> g B
        std::vector<Poly> images(nv, Poly(nv));
        for (std::size_t i = 0; i < spec.m; ++i)
            for (std::size_t c = 0; c < spec.r; ++c) {
                Poly img(nv);
                for (std::size_t k = 0; k < spec.r; ++k)
                    if (gi(k, c) != 0)
                        img += Poly::variable(nv, spec.avar(i, k)) * gi(k, c);
                images[spec.avar(i, c)] = img;
            }
        for (std::size_t c = 0; c < spec.r; ++c)
            for (std::size_t j = 0; j < spec.n; ++j) {
                Poly img(nv);
                for (std::size_t k = 0; k < spec.r; ++k)
                    if (g(c, k) != 0)
                        img += Poly::variable(nv, spec.bvar(k, j)) * g(c, k);
                images[spec.bvar(c, j)] = img;
            }
        for (const Poly& f : basis) {
            Poly diff = f.substitute(images) - f;
            if (diff.is_zero()) continue;
            if (!piece.ideal_span.contains(
                    diff.coefficient_vector(idx, piece.monomials.size())))
                return false;
        }
    }
    return true;
}

FftReport fft_check(const ActionSpec& spec, unsigned d_max, unsigned long seed) {
    spec.validate();
    FftReport report;
    report.spec = spec;
    report.overall = true;
    const MatrixShape y_shape{spec.m, spec.n};
    std::vector<Poly> comorphism = pi_sharp(spec.m, spec.n, spec.r);

    for (unsigned d = 0; d <= d_max; ++d) {
        FftDegreeReport deg;
        deg.d = d;
        deg.dim_y = hilbert_dim(y_shape, spec.u(), d, seed).dim;

        BidegreePiece piece = bidegree_piece(spec, d, d);
        auto idx = index_of(piece.monomials);
        deg.dim_inv = invariant_space(spec, d, d).size();

        // representatives of a basis of K[Y_u]_d, pushed through the
        // comorphism and reduced modulo the X-side ideal slice
        std::vector<Exponents> y_basis;
        if (spec.u() >= std::min(spec.m, spec.n)) {
            y_basis = monomials_of_degree(y_shape.nvars(), d);
        } else {
            GradedPiece y_piece = ideal_degree_span(minors(y_shape, spec.u() + 1), d);
            for (std::size_t k : y_piece.complement) y_basis.push_back(y_piece.monomials[k]);
        }
        EchelonBasisQ image_span(piece.monomials.size());
        deg.injective = true;
        for (const Exponents& e : y_basis) {
            Poly image = Poly::monomial(e, 1).substitute(comorphism);
            std::vector<Rat> v = image.coefficient_vector(idx, piece.monomials.size());
            piece.ideal_span.reduce(v);
            if (!image_span.insert(std::move(v))) {
                deg.injective = false;
                break;
            }
        }
        deg.pass = deg.injective && deg.dim_y == deg.dim_inv;
        report.overall = report.overall && deg.pass;
        report.per_degree.push_back(deg);
    }
    return report;
}

nlohmann::json FftDegreeReport::to_json() const {
    return {{"d", d},
            {"dim_y", dim_y},
            {"dim_inv", dim_inv},
            {"injective", injective},
            {"pass", pass}};
}

nlohmann::json FftReport::to_json() const {
    nlohmann::json per = nlohmann::json::array();
    for (const FftDegreeReport& d : per_degree) per.push_back(d.to_json());
    return {{"spec",
             {{"m", spec.m}, {"n", spec.n}, {"r", spec.r}, {"s", spec.s}, {"t", spec.t}}},
            {"per_degree", per},
            {"overall", overall}};
}

} // namespace hopfinv
