#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfinv/glinv.hpp"

using namespace hopfinv;

namespace {

std::map<Exponents, std::size_t, GrlexLess> index_of(const std::vector<Exponents>& monomials) {
    std::map<Exponents, std::size_t, GrlexLess> idx;
    for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
    return idx;
}

} // namespace

TEST_CASE("action spec validation") {
    ActionSpec ok{2, 2, 2, 1, 1};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.u() == 1);
    CHECK_THROWS_AS((ActionSpec{2, 2, 2, 3, 1}.validate()), ConstraintViolation);
    CHECK_THROWS_AS((ActionSpec{2, 2, 1, 1, 2}.validate()), ConstraintViolation);
    CHECK_THROWS_AS((ActionSpec{1, 1, 0, 0, 0}.validate()), ConstraintViolation);
}

TEST_CASE("polarization operators: worked examples") {
    SUBCASE("every entry of AB is annihilated by every D_{ab}") {
        ActionSpec spec{2, 2, 2, 2, 2};
        std::vector<Poly> ab = pi_sharp(2, 2, 2);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (const Poly& entry : ab)
                    CHECK(polarization_apply(spec, a, b, entry).is_zero());
    }
    SUBCASE("m=n=r=1, bidegree (1,1): D_11 is the zero matrix on {ab}") {
        ActionSpec spec{1, 1, 1, 1, 1};
        BidegreePiece piece = bidegree_piece(spec, 1, 1);
        REQUIRE(piece.quotient_dim() == 1);
        DenseRat d = polarization_matrix(spec, 0, 0, piece);
        CHECK(d(0, 0) == 0);
    }
    SUBCASE("m=n=r=1, bidegree (1,0): D_11 acts as -1 on {a}") {
        ActionSpec spec{1, 1, 1, 1, 1};
        BidegreePiece piece = bidegree_piece(spec, 1, 0);
        REQUIRE(piece.quotient_dim() == 1);
        DenseRat d = polarization_matrix(spec, 0, 0, piece);
        CHECK(d(0, 0) == -1);
    }
}

TEST_CASE("center weight: sum of D_aa is (d2 - d1) times the identity") {
    for (const ActionSpec& spec :
         {ActionSpec{2, 2, 2, 2, 2}, ActionSpec{2, 2, 2, 1, 1}, ActionSpec{2, 2, 1, 1, 1}})
        for (unsigned d1 = 0; d1 <= 2; ++d1)
            for (unsigned d2 = 0; d2 <= 2; ++d2) {
                BidegreePiece piece = bidegree_piece(spec, d1, d2);
                const std::size_t q = piece.quotient_dim();
                DenseRat total(q, q);
                for (std::size_t a = 0; a < spec.r; ++a) {
                    DenseRat op = polarization_matrix(spec, a, a, piece);
                    for (std::size_t i = 0; i < q; ++i)
                        for (std::size_t j = 0; j < q; ++j) total(i, j) += op(i, j);
                }
                const Rat expect(static_cast<long>(d2) - static_cast<long>(d1));
                for (std::size_t i = 0; i < q; ++i)
                    for (std::size_t j = 0; j < q; ++j)
                        CHECK(total(i, j) == (i == j ? expect : Rat(0)));
            }
}

TEST_CASE("invariant_space: worked examples") {
    SUBCASE("(1,1,1,1,1), bidegree (1,1): dimension 1, basis {ab}") {
        std::vector<Poly> inv = invariant_space(ActionSpec{1, 1, 1, 1, 1}, 1, 1);
        REQUIRE(inv.size() == 1);
        CHECK(inv[0] == Poly::variable(2, 0) * Poly::variable(2, 1));
    }
    SUBCASE("(2,2,2,2,2), bidegree (1,1): dimension 4, spanned by the entries of AB") {
        ActionSpec spec{2, 2, 2, 2, 2};
        std::vector<Poly> inv = invariant_space(spec, 1, 1);
        REQUIRE(inv.size() == 4);
        std::vector<Exponents> mons = monomials_of_bidegree(4, 4, 1, 1);
        auto idx = index_of(mons);
        EchelonBasisQ span(mons.size());
        for (const Poly& f : inv) span.insert(f.coefficient_vector(idx, mons.size()));
        for (const Poly& entry : pi_sharp(2, 2, 2))
            CHECK(span.contains(entry.coefficient_vector(idx, mons.size())));
    }
    SUBCASE("off-diagonal bidegree (1,2): dimension 0") {
        CHECK(invariant_space(ActionSpec{2, 2, 2, 2, 2}, 1, 2).empty());
        CHECK(invariant_space(ActionSpec{2, 2, 2, 1, 1}, 1, 2).empty());
        CHECK(invariant_space(ActionSpec{1, 1, 1, 1, 1}, 0, 1).empty());
    }
}

TEST_CASE("finite group cross check") {
    SUBCASE("computed invariant bases are fixed by the sampled elements") {
        for (const ActionSpec& spec :
             {ActionSpec{1, 1, 1, 1, 1}, ActionSpec{2, 2, 2, 2, 2}, ActionSpec{2, 2, 2, 1, 1}})
            for (unsigned d = 1; d <= 2; ++d) {
                std::vector<Poly> inv = invariant_space(spec, d, d);
                CHECK(finite_group_cross_check(spec, d, d, inv));
            }
    }
    SUBCASE("a non-invariant monomial is rejected (r = 2, g = diag(2,1))") {
        ActionSpec spec{2, 2, 2, 2, 2};
        // a[0][0] * b[0][0] is not invariant: it rescales under diag(2,1)
        Poly bad = Poly::variable(8, spec.avar(0, 0)) * Poly::variable(8, spec.bvar(0, 0));
        CHECK(!finite_group_cross_check(spec, 1, 1, {bad}));
    }
}

TEST_CASE("comorphism images are invariants") {
    for (const ActionSpec& spec : {ActionSpec{2, 2, 2, 2, 2}, ActionSpec{2, 2, 2, 1, 1}}) {
        std::vector<Poly> images = pi_sharp(spec.m, spec.n, spec.r);
        BidegreePiece piece = bidegree_piece(spec, 1, 1);
        auto idx = index_of(piece.monomials);
        for (const Poly& f : images)
            for (std::size_t a = 0; a < spec.r; ++a)
                for (std::size_t b = 0; b < spec.r; ++b) {
                    Poly im = polarization_apply(spec, a, b, f);
                    if (im.is_zero()) continue;
                    CHECK(piece.ideal_span.contains(
                        im.coefficient_vector(idx, piece.monomials.size())));
                }
    }
}

TEST_CASE("fft_check: worked examples") {
    SUBCASE("(1,1,1,1,1), d_max = 2: dims (1,1,1)") {
        FftReport rep = fft_check(ActionSpec{1, 1, 1, 1, 1}, 2);
        CHECK(rep.overall);
        for (unsigned d = 0; d <= 2; ++d) {
            CHECK(rep.per_degree[d].dim_y == 1);
            CHECK(rep.per_degree[d].dim_inv == 1);
        }
    }
    SUBCASE("(2,2,2,2,2), d_max = 2: dims (1,4,10)") {
        FftReport rep = fft_check(ActionSpec{2, 2, 2, 2, 2}, 2);
        CHECK(rep.overall);
        std::vector<std::size_t> expect = {1, 4, 10};
        for (unsigned d = 0; d <= 2; ++d) {
            CHECK(rep.per_degree[d].dim_y == expect[d]);
            CHECK(rep.per_degree[d].dim_inv == expect[d]);
            CHECK(rep.per_degree[d].injective);
        }
    }
    SUBCASE("(2,2,1,1,1), d_max = 2: dims (1,4,9)") {
        FftReport rep = fft_check(ActionSpec{2, 2, 1, 1, 1}, 2);
        CHECK(rep.overall);
        std::vector<std::size_t> expect = {1, 4, 9};
        for (unsigned d = 0; d <= 2; ++d) {
            CHECK(rep.per_degree[d].dim_y == expect[d]);
            CHECK(rep.per_degree[d].dim_inv == expect[d]);
        }
    }
    SUBCASE("(2,2,2,1,1), d_max = 2: nontrivial ideals on both sides") {
        CHECK(fft_check(ActionSpec{2, 2, 2, 1, 1}, 2).overall);
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(bidegree_piece(ActionSpec{3, 3, 3, 3, 3}, 4, 4), SizeGuard);
}
