#pragma once
#include <detloci/detloci.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using detloci::BigInt;
using detloci::Degree;
using detloci::DegreeData;
using detloci::Rational;

inline DegreeData twisted_cubic() { return detloci::validate({0, 0}, {1, 1, 1}, 1); }
inline DegreeData curve_3x6() { return detloci::validate({0, 0, 0}, {1, 1, 1, 1, 1, 1}, 1); }
inline DegreeData curve_3x7() { return detloci::validate({0, 0, 0}, {1, 1, 1, 1, 1, 1, 1}, 1); }
inline DegreeData surface_2x6() { return detloci::validate({0, 0}, {1, 1, 1, 1, 1, 1}, 2); }
inline DegreeData koszul_115() { return detloci::validate({0}, {1, 1, 5}, 1); }

inline DegreeData equal_degree(int t, int c, Degree d, int n) {
    return detloci::validate(std::vector<Degree>(static_cast<std::size_t>(t), 0),
                             std::vector<Degree>(static_cast<std::size_t>(t + c - 1), d), n);
}

// Pascal's rule with zero extension, no library help.
inline BigInt pascal_binom(std::int64_t m, std::int64_t k) {
    if (k < 0 || m < k) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(k + 1), 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

// Sorted nonempty random data with degrees in [0, 6].
inline DegreeData random_nonempty(std::mt19937_64& rng, int tMax = 4, int cMax = 6, int nMax = 3) {
    while (true) {
        const int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(tMax));
        const int c = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(cMax - 1));
        const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(nMax + 1));
        std::vector<Degree> b(static_cast<std::size_t>(t)), a(static_cast<std::size_t>(t + c - 1));
        for (auto& x : b) x = static_cast<Degree>(rng() % 7);
        for (auto& x : a) x = static_cast<Degree>(rng() % 7);
        auto d = detloci::validate(b, a, n);
        if (detloci::is_nonempty(d)) return d;
    }
}

// Textbook Gaussian elimination mod p on a dense copy.
inline std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        const std::uint64_t inv = detloci::detail::inv_mod(m[rank][c] % p, p);
        for (auto& x : m[rank]) x = x % p * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            const std::uint64_t f = m[r][c] % p;
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] % p + p * p - f * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Lagrange interpolation through (x_i, y_i), evaluated as coefficients.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * ys[i] / denom;
    }
    for (auto& c : out) c.canonicalize();
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace testsupport
