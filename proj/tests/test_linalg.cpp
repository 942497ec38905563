#include <gtest/gtest.h>

#include "support.hpp"

using namespace detloci;
using namespace testsupport;

namespace {

std::vector<SparseRow> to_sparse(const std::vector<std::vector<std::uint64_t>>& m) {
    std::vector<SparseRow> rows;
    for (const auto& r : m) {
        SparseRow s;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j]) s.entries.emplace_back(static_cast<std::uint32_t>(j), static_cast<Coeff>(r[j]));
        rows.push_back(std::move(s));
    }
    return rows;
}

// Random m x n matrix of rank at most r, with some sparsity.
std::vector<std::vector<std::uint64_t>> low_rank(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                                 std::size_t r, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> A(m, std::vector<std::uint64_t>(n, 0)), B(r, std::vector<std::uint64_t>(n, 0));
    for (auto& row : B)
        for (auto& x : row) x = rng() % 3 == 0 ? rng() % p : 0;
    for (auto& row : A)
        for (std::size_t k = 0; k < r; ++k) {
            if (rng() % 2) continue;
            const std::uint64_t s = rng() % p;
            for (std::size_t j = 0; j < n; ++j) row[j] = (row[j] + s * B[k][j]) % p;
        }
    return A;
}

}  // namespace

TEST(Echelon, MatchesNaiveRankSquareish) {
    std::mt19937_64 rng(71);
    for (std::uint64_t p : {101ull, 32003ull, 65521ull})
        for (int k = 0; k < 30; ++k) {
            const std::size_t m = 1 + rng() % 40, n = 1 + rng() % 40, r = rng() % 30;
            auto A = low_rank(rng, m, n, r, p);
            EXPECT_EQ(rank_of_rows(to_sparse(A), n, static_cast<Coeff>(p)), naive_rank(A, p));
        }
}

TEST(Echelon, MatchesNaiveRankTall) {
    std::mt19937_64 rng(73);
    for (std::uint64_t p : {101ull, 32003ull})
        for (int k = 0; k < 12; ++k) {
            const std::size_t n = 20 + rng() % 60, m = 2 * n + rng() % 300, r = rng() % (n + 10);
            auto A = low_rank(rng, m, n, r, p);
            EXPECT_EQ(rank_of_rows(to_sparse(A), n, static_cast<Coeff>(p), k), naive_rank(A, p));
        }
}

TEST(Echelon, SmallBlocksAgree) {
    std::mt19937_64 rng(75);
    const std::uint64_t p = 32003;
    for (int k = 0; k < 10; ++k) {
        auto A = low_rank(rng, 90, 50, 35, p);
        const auto expect = naive_rank(A, p);
        for (std::size_t block : {1u, 7u, 64u})
            EXPECT_EQ(echelon_of_rows(to_sparse(A), 50, static_cast<Coeff>(p), 0, block).rank(), expect);
    }
}

TEST(Echelon, NormalFormVanishesOnRowSpace) {
    std::mt19937_64 rng(77);
    const std::uint64_t p = 32003;
    auto A = low_rank(rng, 30, 25, 12, p);
    auto rows = to_sparse(A);
    auto E = echelon_of_rows(rows, 25, static_cast<Coeff>(p));
    EXPECT_EQ(E.rank() + E.free_columns().size(), 25u);
    for (const auto& r : rows)
        for (Coeff x : E.normal_form(r)) EXPECT_EQ(x, 0u);
    SparseRow e0;
    e0.entries.emplace_back(E.free_columns().front(), 1);
    bool nonzero = false;
    for (Coeff x : E.normal_form(e0)) nonzero |= x != 0;
    EXPECT_TRUE(nonzero);
}

TEST(Echelon, IncrementalEqualsBatch) {
    std::mt19937_64 rng(79);
    const std::uint64_t p = 101;
    auto A = low_rank(rng, 40, 30, 20, p);
    ModpEchelon E(30, static_cast<Coeff>(p));
    std::size_t gained = 0;
    for (std::size_t i = 0; i < A.size(); i += 5) {
        DenseBlock X = DenseBlock::Zero(5, 30);
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t j = 0; j < 30; ++j)
                X(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = static_cast<double>(A[i + k][j]);
        gained += E.add_rows(X);
    }
    EXPECT_EQ(gained, E.rank());
    EXPECT_EQ(E.rank(), naive_rank(A, p));
}

TEST(Echelon, RejectsWrongWidth) {
    ModpEchelon E(4, 101);
    EXPECT_THROW(E.add_rows(DenseBlock::Zero(2, 3)), SizeError);
}

TEST(LeftKernel, AnnihilatesAndHasFullDimension) {
    std::mt19937_64 rng(81);
    const std::uint64_t p = 32003;
    for (int k = 0; k < 20; ++k) {
        const std::size_t m = 1 + rng() % 30, n = 1 + rng() % 30;
        auto A = low_rank(rng, m, n, rng() % 20, p);
        auto K = left_kernel(to_sparse(A), n, static_cast<Coeff>(p));
        EXPECT_EQ(K.size(), m - naive_rank(A, p));
        for (const auto& x : K) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t s = 0;
                for (std::size_t i = 0; i < m; ++i) s = (s + x[i] * A[i][j]) % p;
                EXPECT_EQ(s, 0u);
            }
        }
        std::vector<std::vector<std::uint64_t>> Kd;
        for (const auto& x : K) Kd.emplace_back(x.begin(), x.end());
        EXPECT_EQ(naive_rank(Kd, p), K.size());
    }
}
