#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "degree_data.hpp"

namespace detloci {

// Direct sum of R(s) over the twists s.
struct GradedFreeModule {
    std::vector<Degree> twists;

    std::size_t rank() const { return twists.size(); }
    std::map<Degree, long long> multiplicities() const {
        std::map<Degree, long long> m;
        for (Degree s : twists) ++m[s];
        return m;
    }
    std::vector<Degree> sorted_twists() const {
        auto s = twists;
        std::sort(s.begin(), s.end());
        return s;
    }
};

// Betti data only; term k carries the sign (-1)^k.
struct GradedComplex {
    std::vector<GradedFreeModule> terms;
};

namespace detail {

// Twists of (wedge^p of the duals of the first `pool` columns) (x) S_q(F or F*),
// shifted by `base`. Rows enter with sign +1 for F and -1 for F*.
inline GradedFreeModule expand_term(const DegreeData& d, int pool, int p, int q, int rowSign,
                                    Degree base) {
    GradedFreeModule m;
    for_each_subset(pool, p, [&](const std::vector<int>& S) {
        Degree sa = 0;
        for (int j : S) sa += d.a[static_cast<std::size_t>(j)];
        for_each_multiset(d.t, q, [&](const std::vector<int>& J) {
            Degree sb = 0;
            for (int i : J) sb += d.b[static_cast<std::size_t>(i)];
            m.twists.push_back(base - sa + rowSign * sb);
        });
    });
    return m;
}

// D_i for 0 <= i <= c; D_0 is the Eagon-Northcott complex.
inline GradedComplex spliced_complex(const DegreeData& d, int i) {
    GradedComplex cx;
    const int cols = d.columns();
    for (int h = 0; h <= i; ++h) cx.terms.push_back(expand_term(d, cols, h, i - h, -1, 0));
    for (int h = i + 1; h <= d.c; ++h)
        cx.terms.push_back(expand_term(d, cols, d.t + h - 1, h - 1 - i, +1, d.sum_b()));
    return cx;
}

}  // namespace detail

inline GradedComplex eagon_northcott(const DegreeData& d) {
    return detail::spliced_complex(d, 0);
}

inline GradedComplex symmetric_power_resolution(const DegreeData& d, int i) {
    if (i < 1 || i > d.c)
        throw IndexError("symmetric power index must lie in 1.." + std::to_string(d.c));
    return detail::spliced_complex(d, i);
}

// Resolution of Hom(B_{i-1}, R(a_{t+i-2})).
inline GradedComplex hom_B_resolution(const DegreeData& d, int i) {
    if (i < 3 || i > d.c)
        throw IndexError("hom_B index must lie in 3.." + std::to_string(d.c) + ", got " +
                         std::to_string(i));
    GradedComplex cx;
    const Degree base = d.aj(d.t + i - 2) + d.sum_b();
    for (int k = 0; k <= i - 3; ++k)
        cx.terms.push_back(detail::expand_term(d, d.t + i - 2, d.t + k + 1, k, +1, base));
    return cx;
}

inline BigInt term_dimension(const GradedFreeModule& m, Degree v, int N) {
    BigInt s = 0;
    for (auto [tw, mult] : m.multiplicities()) {
        if (v + tw < 0) continue;
        s += binom(v + tw + N, N) * static_cast<long>(mult);
    }
    return s;
}

inline BigInt euler_char(const GradedComplex& cx, Degree v, int N) {
    BigInt s = 0;
    for (std::size_t k = 0; k < cx.terms.size(); ++k) {
        BigInt dk = term_dimension(cx.terms[k], v, N);
        if (k % 2 == 0)
            s += dk;
        else
            s -= dk;
    }
    return s;
}

}  // namespace detloci
