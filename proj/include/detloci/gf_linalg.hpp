#pragma once
#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace detloci {

// Dense blocks hold residues in [0, p) as doubles; products are exact while the
// inner dimension times (p-1)^2 stays below 2^53.
using DenseBlock = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SparseRow {
    std::vector<std::pair<std::uint32_t, Coeff>> entries;  // (column, value)
};

namespace detail {

inline void reduce_mod(double* x, std::size_t n, double p) {
    const double inv = 1.0 / p;
    for (std::size_t i = 0; i < n; ++i) {
        double y = x[i] - p * std::floor(x[i] * inv);
        if (y < 0) y += p;
        if (y >= p) y -= p;
        x[i] = y;
    }
}

inline void reduce_mod(DenseBlock& m, double p) {
    reduce_mod(m.data(), static_cast<std::size_t>(m.size()), p);
}

inline void check_exact_range(std::size_t inner, Coeff p) {
    const double bound = static_cast<double>(inner) * (p - 1.0) * (p - 1.0) + p;
    if (bound >= 9007199254740992.0)
        throw GuardError("inner dimension " + std::to_string(inner) +
                         " too large for exact double arithmetic mod " + std::to_string(p));
}

}  // namespace detail

// Row echelon form over GF(p), kept reduced: basis row k is e_{pivot[k]} plus a
// combination of the free columns given by row k of F.
class ModpEchelon {
public:
    ModpEchelon(std::size_t ncols, Coeff p) : ncols_(ncols), p_(p), dp_(static_cast<double>(p)) {
        free_.resize(ncols);
        for (std::size_t j = 0; j < ncols; ++j) free_[j] = static_cast<std::uint32_t>(j);
        F_.resize(0, static_cast<Eigen::Index>(ncols));
    }

    std::size_t rank() const { return pivots_.size(); }
    std::size_t ncols() const { return ncols_; }
    Coeff prime() const { return p_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    const std::vector<std::uint32_t>& free_columns() const { return free_; }
    const DenseBlock& free_part() const { return F_; }

    // Adds the rows of X (ncols wide, residues in [0, p)). Returns the rank increase.
    std::size_t add_rows(const DenseBlock& X) {
        if (static_cast<std::size_t>(X.cols()) != ncols_) throw SizeError("row width mismatch");
        if (X.rows() == 0 || free_.empty()) return 0;
        const Eigen::Index b = X.rows();
        const Eigen::Index r = static_cast<Eigen::Index>(pivots_.size());
        const Eigen::Index f = static_cast<Eigen::Index>(free_.size());
        DenseBlock Y(b, f);
        for (Eigen::Index j = 0; j < f; ++j) Y.col(j) = X.col(free_[static_cast<std::size_t>(j)]);
        if (r > 0) {
            detail::check_exact_range(static_cast<std::size_t>(r), p_);
            DenseBlock Xp(b, r);
            for (Eigen::Index j = 0; j < r; ++j)
                Xp.col(j) = X.col(pivots_[static_cast<std::size_t>(j)]);
            Y.noalias() -= Xp * F_;
            detail::reduce_mod(Y, dp_);
        }
        std::vector<Eigen::Index> q = eliminate(Y);
        const Eigen::Index k = static_cast<Eigen::Index>(q.size());
        if (k == 0) return 0;
        DenseBlock Yr = Y.topRows(k);
        if (r > 0) {
            detail::check_exact_range(static_cast<std::size_t>(k), p_);
            DenseBlock Fq(r, k);
            for (Eigen::Index j = 0; j < k; ++j) Fq.col(j) = F_.col(q[static_cast<std::size_t>(j)]);
            F_.noalias() -= Fq * Yr;
            detail::reduce_mod(F_, dp_);
        }
        std::vector<char> isq(static_cast<std::size_t>(f), 0);
        for (auto j : q) isq[static_cast<std::size_t>(j)] = 1;
        std::vector<Eigen::Index> keep;
        std::vector<std::uint32_t> newFree;
        for (Eigen::Index j = 0; j < f; ++j)
            if (!isq[static_cast<std::size_t>(j)]) {
                keep.push_back(j);
                newFree.push_back(free_[static_cast<std::size_t>(j)]);
            }
        DenseBlock Fn(r + k, static_cast<Eigen::Index>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            if (r > 0) Fn.col(jj).head(r) = F_.col(keep[j]);
            Fn.col(jj).tail(k) = Yr.col(keep[j]);
        }
        for (auto j : q) pivots_.push_back(free_[static_cast<std::size_t>(j)]);
        free_ = std::move(newFree);
        F_ = std::move(Fn);
        colpos_.clear();
        return static_cast<std::size_t>(k);
    }

    // Coordinates of w modulo the row space, indexed like free_columns().
    std::vector<Coeff> normal_form(const SparseRow& w) const {
        std::vector<std::uint64_t> acc(free_.size(), 0);
        if (colpos_.size() != ncols_) build_positions();
        const std::uint64_t p = p_;
        for (auto [col, val] : w.entries) {
            const auto [isPivot, pos] = colpos_[col];
            if (!isPivot) {
                acc[pos] = (acc[pos] + val) % p;
            } else {
                const double* row = F_.row(static_cast<Eigen::Index>(pos)).data();
                const std::uint64_t neg = (p - val % p) % p;
                for (std::size_t j = 0; j < free_.size(); ++j)
                    acc[j] = (acc[j] + neg * static_cast<std::uint64_t>(row[j])) % p;
            }
        }
        return {acc.begin(), acc.end()};
    }

private:
    // In-place reduced echelon form of Y; returns pivot columns, pivot rows moved to the top.
    // Row updates are left unreduced (|entry| < rows * p^2) until an entry is inspected.
    std::vector<Eigen::Index> eliminate(DenseBlock& Y) const {
        std::vector<Eigen::Index> piv;
        const Eigen::Index rows = Y.rows(), cols = Y.cols();
        const std::uint64_t p = p_;
        auto red = [&](double x) {
            double y = x - dp_ * std::floor(x / dp_);
            if (y < 0) y += dp_;
            if (y >= dp_) y -= dp_;
            return y;
        };
        Eigen::Index cur = 0;
        for (Eigen::Index col = 0; col < cols && cur < rows; ++col) {
            Eigen::Index sel = -1;
            for (Eigen::Index i = cur; i < rows; ++i) {
                Y(i, col) = red(Y(i, col));
                if (sel < 0 && Y(i, col) != 0.0) sel = i;
            }
            if (sel < 0) continue;
            if (sel != cur) Y.row(sel).swap(Y.row(cur));
            double* prow = Y.row(cur).data();
            detail::reduce_mod(prow + col, static_cast<std::size_t>(cols - col), dp_);
            const std::uint64_t inv = detail::inv_mod(static_cast<std::uint64_t>(prow[col]), p);
            for (Eigen::Index j = col; j < cols; ++j)
                prow[j] = static_cast<double>(static_cast<std::uint64_t>(prow[j]) * inv % p);
            for (Eigen::Index i = 0; i < rows; ++i) {
                if (i == cur) continue;
                const double fac = red(Y(i, col));
                if (fac == 0.0) {
                    Y(i, col) = 0.0;
                    continue;
                }
                double* row = Y.row(i).data();
                for (Eigen::Index j = col; j < cols; ++j) row[j] -= fac * prow[j];
            }
            piv.push_back(col);
            ++cur;
        }
        detail::reduce_mod(Y, dp_);
        return piv;
    }

    void build_positions() const {
        colpos_.assign(ncols_, {false, 0});
        for (std::size_t k = 0; k < pivots_.size(); ++k) colpos_[pivots_[k]] = {true, k};
        for (std::size_t k = 0; k < free_.size(); ++k) colpos_[free_[k]] = {false, k};
    }

    std::size_t ncols_;
    Coeff p_;
    double dp_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::uint32_t> free_;
    DenseBlock F_;
    mutable std::vector<std::pair<bool, std::size_t>> colpos_;
};

// Echelon form of the span of sparse rows. Tall systems are compressed by random
// combinations until a block fails to raise the rank and a check block of 16 dense
// random combinations adds nothing, so a rank deficit survives with probability <= p^-16.
inline ModpEchelon echelon_of_rows(const std::vector<SparseRow>& rows, std::size_t ncols,
                                   Coeff p, std::uint64_t seed = 0, std::size_t block = 256) {
    ModpEchelon E(ncols, p);
    const std::size_t m = rows.size();
    if (m == 0 || ncols == 0) return E;
    auto densify = [&](std::size_t from, std::size_t to) {
        DenseBlock X = DenseBlock::Zero(static_cast<Eigen::Index>(to - from),
                                        static_cast<Eigen::Index>(ncols));
        for (std::size_t i = from; i < to; ++i)
            for (auto [col, val] : rows[i].entries)
                X(static_cast<Eigen::Index>(i - from), col) = static_cast<double>(val);
        return X;
    };
    if (m <= ncols + ncols / 4) {
        for (std::size_t i = 0; i < m && E.rank() < ncols; i += block)
            E.add_rows(densify(i, std::min(m, i + block)));
        return E;
    }
    detail::check_exact_range(m, p);
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
    using ColBlock = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor>;
    // Dense combinations of all rows; used for the final check.
    auto dense = [&](std::size_t b) {
        ColBlock C = ColBlock::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(ncols));
        Eigen::VectorXd s(static_cast<Eigen::Index>(b));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < b; ++k) s[static_cast<Eigen::Index>(k)] = static_cast<double>(rng() % p);
            for (auto [col, val] : rows[i].entries) C.col(col) += static_cast<double>(val) * s;
        }
        DenseBlock X = C;
        detail::reduce_mod(X, static_cast<double>(p));
        return X;
    };
    // Each row of a sparse block combines a few randomly chosen rows.
    const std::size_t fanIn = 8;
    auto sparse = [&](std::size_t b) {
        DenseBlock X = DenseBlock::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(ncols));
        for (std::size_t k = 0; k < b; ++k)
            for (std::size_t f = 0; f < fanIn; ++f) {
                const auto& row = rows[rng() % m];
                const double s = static_cast<double>(1 + rng() % (p - 1));
                for (auto [col, val] : row.entries)
                    X(static_cast<Eigen::Index>(k), col) += s * static_cast<double>(val);
            }
        detail::reduce_mod(X, static_cast<double>(p));
        return X;
    };
    while (E.rank() < ncols) {
        const std::size_t b = std::min(block, ncols - E.rank());
        if (E.add_rows(sparse(b)) == b) continue;
        if (E.rank() == ncols || E.add_rows(dense(16)) == 0) break;
    }
    return E;
}

inline std::size_t rank_of_rows(const std::vector<SparseRow>& rows, std::size_t ncols, Coeff p,
                                std::uint64_t seed = 0) {
    return echelon_of_rows(rows, ncols, p, seed).rank();
}

// Basis of {x : x A = 0} for the m x n matrix A given by its rows.
inline std::vector<std::vector<Coeff>> left_kernel(const std::vector<SparseRow>& rows,
                                                   std::size_t ncols, Coeff p) {
    const std::size_t m = rows.size();
    // Columns of A become rows of A^T; eliminate and read off the nullspace.
    DenseBlock At = DenseBlock::Zero(static_cast<Eigen::Index>(ncols), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (auto [col, val] : rows[i].entries) At(col, static_cast<Eigen::Index>(i)) = val;
    ModpEchelon E(m, p);
    E.add_rows(At);
    std::vector<std::vector<Coeff>> basis;
    const auto& free = E.free_columns();
    const auto& piv = E.pivots();
    const DenseBlock& F = E.free_part();
    for (std::size_t j = 0; j < free.size(); ++j) {
        std::vector<Coeff> x(m, 0);
        x[free[j]] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) {
            const auto v = static_cast<Coeff>(F(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
            x[piv[k]] = v == 0 ? 0 : p - v;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace detloci
