#include <gtest/gtest.h>

#include "support.hpp"

using namespace detloci;
using namespace testsupport;

namespace {
Exponents pure(int nvars, int var, int e) {
    Exponents x(static_cast<std::size_t>(nvars), 0);
    x[static_cast<std::size_t>(var)] = e;
    return x;
}
}  // namespace

TEST(Monomials, CountAndRank) {
    for (int nv = 1; nv <= 6; ++nv)
        for (int v = 0; v <= 6; ++v) {
            auto ms = monomials(nv, v);
            EXPECT_EQ(ms.size(), monomial_count(nv, v));
            EXPECT_EQ(BigInt(static_cast<unsigned long>(ms.size())), binom(v + nv - 1, nv - 1));
            for (std::size_t k = 0; k < ms.size(); ++k) {
                EXPECT_EQ(monomial_rank(ms[k]), k);
                if (k) EXPECT_TRUE(ms[k - 1] > ms[k]);
            }
        }
    EXPECT_EQ(monomial_count(3, -1), 0u);
}

TEST(SparsePoly, Arithmetic) {
    const Coeff p = 101;
    auto x = SparsePoly::monomial(2, p, {1, 0});
    auto y = SparsePoly::monomial(2, p, {0, 1});
    auto sq = (x + y) * (x + y);
    EXPECT_EQ(sq.size(), 3u);
    EXPECT_EQ(sq.terms().at({1, 1}), 2u);
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_EQ((x - x).degree(), -1);
    EXPECT_EQ(x.scaled(100).terms().at({1, 0}), 100u);
    EXPECT_EQ(x.scaled(101).size(), 0u);
    EXPECT_TRUE(sq.is_homogeneous());
    EXPECT_EQ(sq.to_string(), "1 x0^2x1^0 + 2 x0^1x1^1 + 1 x0^0x1^2");
    EXPECT_THROW(x.add_term({1, 0, 0}, 1), VariableError);
}

TEST(SparsePoly, ProductIsCommutativeAndDistributive) {
    std::mt19937_64 rng(61);
    const Coeff p = 32003;
    auto rand_poly = [&](int deg) {
        SparsePoly f(3, p);
        for (const auto& e : monomials(3, deg)) f.add_term(e, rng() % p);
        return f;
    };
    for (int k = 0; k < 20; ++k) {
        auto f = rand_poly(2), g = rand_poly(3), h = rand_poly(3);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f * g).degree(), 5);
    }
}

TEST(LemmaMatrix, TwistedCubicBand) {
    auto m = lemma_matrix(twisted_cubic(), LemmaVariant::Standard);
    EXPECT_EQ(m.nvars, 4);
    // row 1: x1, x0, 0; row 2: 0, x1, x0
    EXPECT_EQ(m.at(0, 0), SparsePoly::monomial(4, m.p, pure(4, 1, 1)));
    EXPECT_EQ(m.at(0, 1), SparsePoly::monomial(4, m.p, pure(4, 0, 1)));
    EXPECT_TRUE(m.at(0, 2).is_zero());
    EXPECT_TRUE(m.at(1, 0).is_zero());
    EXPECT_EQ(m.at(1, 1), SparsePoly::monomial(4, m.p, pure(4, 1, 1)));
    EXPECT_EQ(m.at(1, 2), SparsePoly::monomial(4, m.p, pure(4, 0, 1)));
}

TEST(LemmaMatrix, EntryDegreesAndBand) {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 100; ++k) {
        auto d = random_nonempty(rng);
        auto m = lemma_matrix(d, LemmaVariant::Standard);
        for (int i = 1; i <= d.t; ++i)
            for (int j = 0; j < d.columns(); ++j) {
                const auto& f = m.at(i - 1, j);
                const bool band = j >= i - 1 && j <= i + d.c - 2;
                EXPECT_EQ(!f.is_zero(), band);
                if (band) {
                    EXPECT_EQ(f.size(), 1u);
                    EXPECT_EQ(f.degree(), d.aj(j) - d.bi(i));
                }
            }
    }
}

TEST(LemmaMatrix, GoodVariant) {
    auto d = curve_3x6();
    auto m = lemma_matrix(d, LemmaVariant::Good);
    for (int i = 1; i < d.t; ++i)
        EXPECT_EQ(m.at(i - 1, i + d.c - 1), SparsePoly::monomial(m.nvars, m.p, pure(m.nvars, d.c, 1)));
    EXPECT_TRUE(m.at(d.t - 1, 0).is_zero());
    // validated data always has N >= c; only hand-built data can lack x_c
    DegreeData raw = validate({0}, {1, 1, 1}, 0);
    raw.n = -1;
    EXPECT_THROW(lemma_matrix(raw, LemmaVariant::Good), VariableError);
    EXPECT_NO_THROW(lemma_matrix(raw, LemmaVariant::Standard));
}

TEST(LemmaMatrix, EmptyData) {
    EXPECT_THROW(lemma_matrix(validate({0}, {0, 2}, 1), LemmaVariant::Standard), EmptyError);
    EXPECT_THROW(generic_matrix(validate({0}, {0, 2}, 1), 32003, 0), EmptyError);
}

TEST(GenericMatrix, DegreesAndDeterminism) {
    auto d = validate({0, 1}, {1, 2, 3}, 1);
    auto m = generic_matrix(d, 32003, 5);
    EXPECT_EQ(m.at(0, 0).degree(), 1);
    EXPECT_EQ(m.at(0, 2).degree(), 3);
    EXPECT_TRUE(m.at(1, 0).is_zero());
    EXPECT_EQ(m.at(1, 2).degree(), 2);
    EXPECT_TRUE(m.at(1, 2).is_homogeneous());
    auto again = generic_matrix(d, 32003, 5);
    EXPECT_EQ(matrix_to_text(m), matrix_to_text(again));
    EXPECT_NE(matrix_to_text(m), matrix_to_text(generic_matrix(d, 32003, 6)));
}

TEST(GenericMatrix, MinimalityDropsConstants) {
    auto d = validate({0, 1}, {1, 2, 2}, 1);
    EXPECT_TRUE(generic_matrix(d, 32003, 0).at(1, 0).is_zero());
    auto m = generic_matrix(d, 32003, 0, false);
    EXPECT_EQ(m.at(1, 0).degree(), 0);
}

TEST(GenericMatrix, PrimeRange) {
    EXPECT_THROW(generic_matrix(twisted_cubic(), 97, 0), InputError);
    EXPECT_THROW(generic_matrix(twisted_cubic(), 32004, 0), InputError);
    EXPECT_THROW(generic_matrix(twisted_cubic(), 65537, 0), InputError);
    EXPECT_NO_THROW(generic_matrix(twisted_cubic(), 101, 0));
}

TEST(PolyMatrix, DisplayOrderReversesRowsAndColumns) {
    auto d = validate({0, 1}, {1, 2, 3}, 1);
    auto m = generic_matrix(d, 32003, 1);
    EXPECT_EQ(m.displayRows, (std::vector<int>{1, 0}));
    EXPECT_EQ(m.displayColumns, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(m.display_at(0, 0), m.at(1, 2));
    EXPECT_EQ(m.display_at(1, 2), m.at(0, 0));
}

TEST(PolyMatrix, TextRoundTrip) {
    std::mt19937_64 rng(65);
    for (int k = 0; k < 20; ++k) {
        auto d = random_nonempty(rng, 3, 3, 1);
        auto m = generic_matrix(d, 32003, static_cast<std::uint64_t>(k));
        auto back = matrix_from_text(matrix_to_text(m));
        EXPECT_EQ(back.t, m.t);
        EXPECT_EQ(back.seed, m.seed);
        EXPECT_EQ(back.entries, m.entries);
        EXPECT_EQ(matrix_to_text(back), matrix_to_text(m));
    }
    EXPECT_THROW(matrix_from_text("1 0 : 1 x0^1\n"), InputError);
    EXPECT_THROW(matrix_from_text(""), InputError);
    EXPECT_THROW(matrix_from_text("# t=1 columns=2 nvars=2 p=101 seed=0\n1 5 : 0\n"), InputError);
}
