#include "hopfinv/detinv.hpp"

#include <algorithm>
#include <random>

#include "hopfinv/errors.hpp"

namespace hopfinv {

Poly minor_poly(const MatrixShape& shape, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw DimensionMismatch("minor: square index sets required");
    const std::size_t k = rows.size();
    if (k == 0) return Poly::constant(shape.nvars(), 1);
    Poly out(shape.nvars());
    // Laplace expansion along the first listed row
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> subcols;
        for (std::size_t l = 0; l < k; ++l)
            if (l != j) subcols.push_back(cols[l]);
        Poly cof = Poly::variable(shape.nvars(), shape.var(rows[0], cols[j])) *
                   minor_poly(shape, subrows, subcols);
        if (j % 2 == 0)
            out += cof;
        else
            out -= cof;
    }
    return out;
}

namespace {

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

std::map<Exponents, std::size_t, GrlexLess> index_of(const std::vector<Exponents>& monomials) {
    std::map<Exponents, std::size_t, GrlexLess> idx;
    for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
    return idx;
}

/// Random g x f integer matrix of rank <= v: P (g x v) times Q (v x f) with
/// entries in [-5, 5].
std::vector<Int> random_rank_point(const MatrixShape& shape, std::size_t v, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-5, 5);
    std::vector<std::vector<long>> p(shape.g, std::vector<long>(v));
    std::vector<std::vector<long>> q(v, std::vector<long>(shape.f));
    for (auto& row : p)
        for (long& x : row) x = entry(rng);
    for (auto& row : q)
        for (long& x : row) x = entry(rng);
    std::vector<Int> point(shape.nvars());
    for (std::size_t i = 0; i < shape.g; ++i)
        for (std::size_t j = 0; j < shape.f; ++j) {
            long s = 0;
            for (std::size_t c = 0; c < v; ++c) s += p[i][c] * q[c][j];
            point[shape.var(i, j)] = s;
        }
    return point;
}

Int eval_monomial(const Exponents& e, const std::vector<Int>& point) {
    Int out = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) out *= point[i];
    return out;
}

} // namespace

MinorIdealSpec minors(const MatrixShape& shape, std::size_t size) {
    if (size < 1) throw BadInput("minors: size must be >= 1");
    MinorIdealSpec spec;
    spec.shape = shape;
    spec.size = size;
    for (const auto& rows : subsets(shape.g, size))
        for (const auto& cols : subsets(shape.f, size))
            spec.generators.push_back(minor_poly(shape, rows, cols));
    return spec;
}

GradedPiece ideal_degree_span(const MinorIdealSpec& spec, unsigned d) {
    GradedPiece piece;
    piece.degree = d;
    piece.monomials = monomials_of_degree(spec.shape.nvars(), d);
    piece.ideal_span = EchelonBasisQ(piece.monomials.size());
    auto idx = index_of(piece.monomials);
    if (d >= spec.size) {
        const unsigned rem = d - static_cast<unsigned>(spec.size);
        for (const Poly& gen : spec.generators)
            for (const Exponents& m : monomials_of_degree(spec.shape.nvars(), rem)) {
                Poly prod = gen * Poly::monomial(m, 1);
                piece.ideal_span.insert(prod.coefficient_vector(idx, piece.monomials.size()));
            }
    }
    piece.complement = piece.ideal_span.complement();
    return piece;
}

std::size_t hilbert_dim_exact(const MatrixShape& shape, std::size_t v, unsigned d) {
    if (v >= std::min(shape.g, shape.f))
        return monomials_of_degree(shape.nvars(), d).size(); // full polynomial ring
    return ideal_degree_span(minors(shape, v + 1), d).quotient_dim();
}

HilbertResult hilbert_dim(const MatrixShape& shape, std::size_t v, unsigned d,
                          unsigned long seed) {
    const std::vector<Exponents> mons = monomials_of_degree(shape.nvars(), d);
    HilbertResult res;
    res.method = "evaluation";
    std::mt19937_64 rng(seed);
    EchelonBasisMod ech(mons.size());
    const std::size_t batch = std::max<std::size_t>(2 * mons.size(), 50);
    std::size_t stable = 0;
    while (stable < 3 && ech.dim() < mons.size()) {
        const std::size_t before = ech.dim();
        for (std::size_t k = 0; k < batch && ech.dim() < mons.size(); ++k) {
            std::vector<Int> point = random_rank_point(shape, v, rng);
            std::vector<Int> col(mons.size());
            for (std::size_t i = 0; i < mons.size(); ++i) col[i] = eval_monomial(mons[i], point);
            ech.insert(std::move(col));
            ++res.samples_used;
        }
        stable = ech.dim() == before ? stable + 1 : 0;
    }
    res.dim = ech.dim();
    return res;
}

nlohmann::json HilbertResult::to_json() const {
    return {{"dim", dim}, {"samples_used", samples_used}, {"method", method}};
}

std::vector<Poly> pi_sharp(std::size_t m, std::size_t n, std::size_t r) {
    if (r < 1) throw BadInput("pi_sharp: r must be >= 1");
    const std::size_t nv = m * r + r * n;
    std::vector<Poly> images;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly sum(nv);
            for (std::size_t c = 0; c < r; ++c)
                sum += Poly::variable(nv, i * r + c) * Poly::variable(nv, m * r + c * n + j);
            images.push_back(sum);
        }
    return images;
}

std::pair<DenseInt, DenseInt> rank_witness(std::size_t m, std::size_t n, std::size_t r,
                                           std::size_t s, std::size_t t) {
    if (s > m || s > r || t > n || t > r)
        throw ConstraintViolation("rank_witness: need s <= m,r and t <= n,r");
    DenseInt a(m, r), b(r, n);
    for (std::size_t i = 0; i < s; ++i) a(i, i) = 1;
    for (std::size_t i = 0; i < t; ++i) b(i, i) = 1;
    return {a, b};
}

bool membership_modulo_ideal(const Poly& p, const MinorIdealSpec& spec, unsigned d,
                             unsigned long seed) {
    if (!p.is_homogeneous(d)) throw BadInput("membership: polynomial must be homogeneous of the given degree");
    GradedPiece piece = ideal_degree_span(spec, d);
    auto idx = index_of(piece.monomials);
    bool in_span =
        piece.ideal_span.contains(p.coefficient_vector(idx, piece.monomials.size()));

    // cross-check: members must vanish at every rank-deficient point
    std::mt19937_64 rng(seed);
    const std::size_t v = spec.size - 1;
    bool vanishes_everywhere = true;
    for (std::size_t k = 0; k < 50; ++k) {
        std::vector<Int> point = random_rank_point(spec.shape, v, rng);
        std::vector<Rat> rat(point.size());
        for (std::size_t i = 0; i < point.size(); ++i) rat[i] = Rat(point[i]);
        if (p.evaluate(rat) != 0) {
            vanishes_everywhere = false;
            break;
        }
    }
    if (in_span != vanishes_everywhere)
        throw OracleDisagreement(
            "ideal membership: span decision and point-vanishing decision differ");
    return in_span;
}

} // namespace hopfinv
