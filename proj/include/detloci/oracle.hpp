#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "degree_data.hpp"
#include "errors.hpp"
#include "gf_linalg.hpp"
#include "hilbert.hpp"
#include "matrix_factory.hpp"
#include "poly.hpp"
#include "resolutions.hpp"

namespace detloci {

inline constexpr std::uint64_t kDefaultGuard = 20000;

// Maximal minors in lexicographic order of column subsets; zero minors are kept.
inline std::vector<SparsePoly> expand_minors(const PolyMatrix& m) {
    if (m.t > 4) throw SizeError("Leibniz expansion supports t <= 4, got t=" + std::to_string(m.t));
    std::vector<int> perm(static_cast<std::size_t>(m.t));
    std::vector<SparsePoly> out;
    for_each_subset(m.columns, m.t, [&](const std::vector<int>& S) {
        SparsePoly det(m.nvars, m.p);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (int x = 0; x < m.t; ++x)
                for (int y = x + 1; y < m.t; ++y)
                    if (perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)])
                        ++inversions;
            SparsePoly term = SparsePoly::monomial(m.nvars, m.p, Exponents(static_cast<std::size_t>(m.nvars), 0));
            for (int r = 0; r < m.t && !term.is_zero(); ++r)
                term = term * m.at(r, S[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]);
            det = inversions % 2 ? det - term : det + term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.push_back(std::move(det));
    });
    return out;
}

namespace detail {

inline void guard_piece(int nvars, Degree v, std::uint64_t guard) {
    const std::uint64_t dim = monomial_count(nvars, static_cast<int>(v));
    if (dim > guard)
        throw GuardError("dim R_" + std::to_string(v) + " = " + std::to_string(dim) +
                         " in " + std::to_string(nvars) + " variables exceeds the guard " +
                         std::to_string(guard));
}

inline int nvars_of(const std::vector<SparsePoly>& gens, int N) {
    for (const auto& g : gens)
        if (g.nvars() != N + 1) throw VariableError("generator has the wrong number of variables");
    return N + 1;
}

// Rows mu*g for every nonzero generator g with deg g <= v and monomial mu of degree v - deg g.
inline std::vector<SparseRow> macaulay_rows(const std::vector<SparsePoly>& gens, Degree v,
                                            int nvars) {
    std::vector<SparseRow> rows;
    Exponents e(static_cast<std::size_t>(nvars));
    for (const auto& g : gens) {
        const int dg = g.degree();
        if (dg < 0 || dg > v) continue;
        for (const auto& mu : monomials(nvars, static_cast<int>(v) - dg)) {
            SparseRow row;
            row.entries.reserve(g.size());
            for (const auto& [ge, c] : g.terms()) {
                for (int i = 0; i < nvars; ++i)
                    e[static_cast<std::size_t>(i)] =
                        ge[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(i)];
                row.entries.emplace_back(static_cast<std::uint32_t>(monomial_rank(e)), c);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace detail

inline std::int64_t ideal_hilbert_function(const std::vector<SparsePoly>& gens, Degree v, int N,
                                           Coeff p, std::uint64_t guard = kDefaultGuard,
                                           std::uint64_t seed = 0) {
    if (v < 0) return 0;
    const int nvars = detail::nvars_of(gens, N);
    detail::guard_piece(nvars, v, guard);
    for (const auto& g : gens)
        if (g.prime() != p) throw InputError("generator prime differs from the requested prime");
    const auto rows = detail::macaulay_rows(gens, v, nvars);
    const std::size_t dim = monomial_count(nvars, static_cast<int>(v));
    return static_cast<std::int64_t>(dim) -
           static_cast<std::int64_t>(rank_of_rows(rows, dim, p, seed ^ static_cast<std::uint64_t>(v)));
}

// Vectors over the product of R_{v - deg g_k} (generator order, lexicographic monomials).
struct GradedPieceBasis {
    Degree degree = 0;
    std::vector<std::size_t> offsets;  // start of each generator's block
    std::vector<std::vector<Coeff>> vectors;
};

inline GradedPieceBasis syzygies_in_degree(const std::vector<SparsePoly>& gens, Degree v, int N,
                                           Coeff p, std::uint64_t guard = kDefaultGuard) {
    const int nvars = detail::nvars_of(gens, N);
    detail::guard_piece(nvars, v, guard);
    GradedPieceBasis out;
    out.degree = v;
    std::size_t off = 0;
    for (const auto& g : gens) {
        out.offsets.push_back(off);
        if (g.degree() >= 0) off += monomial_count(nvars, static_cast<int>(v) - g.degree());
    }
    if (off > guard)
        throw GuardError("syzygy system has " + std::to_string(off) + " rows, guard is " +
                         std::to_string(guard));
    const auto rows = detail::macaulay_rows(gens, v, nvars);
    out.vectors = left_kernel(rows, monomial_count(nvars, static_cast<int>(v)), p);
    return out;
}

// dim Hom(I, R/I)_0 for I generated by gens, syzygies read off in the degrees of the
// second Eagon-Northcott term of d.
inline std::int64_t tangent_dimension(const std::vector<SparsePoly>& gensIn, const DegreeData& d,
                                      Coeff p, std::uint64_t guard = kDefaultGuard) {
    std::vector<SparsePoly> gens;
    for (const auto& g : gensIn)
        if (!g.is_zero()) gens.push_back(g);
    const int N = d.N();
    const int nvars = detail::nvars_of(gens, N);
    std::set<Degree> syzDegrees;
    const auto en = eagon_northcott(d);
    if (en.terms.size() > 2)
        for (Degree s : en.terms[2].twists) syzDegrees.insert(-s);

    std::size_t unknowns = 0;
    std::vector<std::size_t> colOffset;
    for (const auto& g : gens) {
        detail::guard_piece(nvars, g.degree(), guard);
        colOffset.push_back(unknowns);
        unknowns += monomial_count(nvars, g.degree());
    }
    if (unknowns > guard)
        throw GuardError("tangent system has " + std::to_string(unknowns) +
                         " unknowns, guard is " + std::to_string(guard));

    std::vector<std::vector<double>> constraintRows;
    for (Degree v : syzDegrees) {
        detail::guard_piece(nvars, v, guard);
        const auto rows = detail::macaulay_rows(gens, v, nvars);
        const std::size_t dimV = monomial_count(nvars, static_cast<int>(v));
        const ModpEchelon Iv = echelon_of_rows(rows, dimV, p, static_cast<std::uint64_t>(v));
        const std::size_t f = Iv.free_columns().size();
        const GradedPieceBasis syz = syzygies_in_degree(gens, v, N, p, guard);
        if (syz.vectors.size() * f > 4 * guard * guard)
            throw GuardError("tangent constraint matrix would have " +
                             std::to_string(syz.vectors.size() * f) + " rows");
        Exponents e(static_cast<std::size_t>(nvars));
        for (const auto& sigma : syz.vectors) {
            std::vector<std::vector<double>> block(f, std::vector<double>(unknowns, 0.0));
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const int dg = gens[k].degree();
                if (dg > v) continue;
                const auto mus = monomials(nvars, static_cast<int>(v) - dg);
                const auto nus = monomials(nvars, dg);
                for (std::size_t nu = 0; nu < nus.size(); ++nu) {
                    SparseRow w;
                    for (std::size_t mu = 0; mu < mus.size(); ++mu) {
                        const Coeff s = sigma[syz.offsets[k] + mu];
                        if (s == 0) continue;
                        for (int i = 0; i < nvars; ++i)
                            e[static_cast<std::size_t>(i)] =
                                mus[mu][static_cast<std::size_t>(i)] + nus[nu][static_cast<std::size_t>(i)];
                        w.entries.emplace_back(static_cast<std::uint32_t>(monomial_rank(e)), s);
                    }
                    if (w.entries.empty()) continue;
                    const auto nf = Iv.normal_form(w);
                    for (std::size_t q = 0; q < f; ++q) block[q][colOffset[k] + nu] = nf[q];
                }
            }
            for (auto& r : block) constraintRows.push_back(std::move(r));
        }
    }

    ModpEchelon A(unknowns, p);
    const std::size_t blk = 256;
    for (std::size_t i = 0; i < constraintRows.size() && A.rank() < unknowns; i += blk) {
        const std::size_t hi = std::min(constraintRows.size(), i + blk);
        DenseBlock X(static_cast<Eigen::Index>(hi - i), static_cast<Eigen::Index>(unknowns));
        for (std::size_t r = i; r < hi; ++r)
            for (std::size_t c = 0; c < unknowns; ++c)
                X(static_cast<Eigen::Index>(r - i), static_cast<Eigen::Index>(c)) = constraintRows[r][c];
        A.add_rows(X);
    }

    std::int64_t trivial = 0;
    for (const auto& g : gens)
        trivial += static_cast<std::int64_t>(monomial_count(nvars, g.degree())) -
                   ideal_hilbert_function(gens, g.degree(), N, p, guard);
    return static_cast<std::int64_t>(unknowns) - static_cast<std::int64_t>(A.rank()) - trivial;
}

enum class MatrixSource { Generic, LemmaStandard, LemmaGood };

inline PolyMatrix make_matrix(const DegreeData& d, MatrixSource src, Coeff p, std::uint64_t seed,
                              bool minimality = true) {
    switch (src) {
        case MatrixSource::Generic: return generic_matrix(d, p, seed, minimality);
        case MatrixSource::LemmaStandard: return lemma_matrix(d, LemmaVariant::Standard, p);
        case MatrixSource::LemmaGood: return lemma_matrix(d, LemmaVariant::Good, p);
    }
    throw InputError("unknown matrix source");
}

struct HfComparison {
    std::vector<Degree> degrees;
    std::vector<BigInt> formula;
    std::vector<std::int64_t> oracle;
    bool match = false;
    std::uint64_t seedUsed = 0;
    int attempts = 0;
};

// Oracle Hilbert function against the formula for v = 0..vmax. Generic matrices are
// redrawn with seed+1, seed+2, seed+3 after a mismatch.
inline HfComparison compare_hilbert_function(const DegreeData& d, MatrixSource src, Coeff p,
                                             std::uint64_t seed, Degree vmax,
                                             bool minimality = true, int reseeds = 3,
                                             std::uint64_t guard = kDefaultGuard) {
    HfComparison out;
    const int tries = src == MatrixSource::Generic ? reseeds + 1 : 1;
    for (int a = 0; a < tries; ++a) {
        out = HfComparison{};
        out.attempts = a + 1;
        out.seedUsed = seed + static_cast<std::uint64_t>(a);
        const auto gens = expand_minors(make_matrix(d, src, p, out.seedUsed, minimality));
        out.match = true;
        for (Degree v = 0; v <= vmax; ++v) {
            out.degrees.push_back(v);
            out.formula.push_back(hilbert_function(d, v));
            out.oracle.push_back(ideal_hilbert_function(gens, v, d.N(), p, guard, out.seedUsed));
            if (out.formula.back() != static_cast<long>(out.oracle.back())) out.match = false;
        }
        if (out.match) break;
    }
    return out;
}

}  // namespace detloci
