#pragma once
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "degree_data.hpp"
#include "resolutions.hpp"

namespace detloci {

inline Degree ell(const DegreeData& d, int i) {
    if (i < 2 || i > d.c)
        throw IndexError("ell index must lie in 2.." + std::to_string(d.c) + ", got " +
                         std::to_string(i));
    Degree s = -d.sum_b();
    for (int j = 0; j <= d.t + i - 2; ++j) s += d.aj(j);
    return s;
}

inline Degree ell(const DegreeData& d) { return ell(d, d.c); }

// The four-fold binomial sum plus one, for arbitrary row and column lists.
inline BigInt lambda_value(const std::vector<Degree>& b, const std::vector<Degree>& a, int N) {
    BigInt s = 1;
    for (Degree x : a)
        for (Degree y : b) s += binom(x - y + N, N) + binom(y - x + N, N);
    for (Degree x : a)
        for (Degree y : a) s -= binom(x - y + N, N);
    for (Degree x : b)
        for (Degree y : b) s -= binom(x - y + N, N);
    return s;
}

inline BigInt lambda_c(const DegreeData& d) { return lambda_value(d.b, d.a, d.N()); }

inline bool is_stable(const DegreeData& d) {
    return static_cast<Degree>(d.c - 1) * d.a.back() < ell(d);
}

// h_0 .. h_{c-3}.
inline std::vector<Degree> h_values(const DegreeData& d) {
    std::vector<Degree> h;
    const Degree l = ell(d);
    for (int i = 0; i <= d.c - 3; ++i) {
        Degree x = 2 * d.aj(d.t + 1 + i) - l + d.N();
        for (int j = d.t + 2 + i; j <= d.t + d.c - 2; ++j) x += d.aj(j);
        h.push_back(x);
    }
    return h;
}

// K_3 .. K_c from the Euler characteristic of the resolution of Hom(B_{i-1}, R(a_{t+i-2})).
inline std::vector<BigInt> k_values(const DegreeData& d) {
    require_sorted(d);
    std::vector<BigInt> k;
    for (int i = 3; i <= d.c; ++i) k.push_back(euler_char(hom_B_resolution(d, i), 0, d.N()));
    return k;
}

// Same numbers from the h-value double sums over complementary column subsets.
inline std::vector<BigInt> k_values_closed_form(const DegreeData& d) {
    require_sorted(d);
    std::vector<BigInt> k;
    const auto h = h_values(d);
    const int N = d.N();
    for (int i = 3; i <= d.c; ++i) {
        const int top = i - 3;
        BigInt s = 0;
        for (int r = 0; r <= top; ++r) {
            const int q = top - r;
            for_each_subset(d.t + i - 2, r, [&](const std::vector<int>& S) {
                Degree sa = 0;
                for (int j : S) sa += d.a[static_cast<std::size_t>(j)];
                for_each_multiset(d.t, q, [&](const std::vector<int>& J) {
                    Degree sb = 0;
                    for (int x : J) sb += d.b[static_cast<std::size_t>(x)];
                    BigInt term = binom(h[static_cast<std::size_t>(top)] + sa + sb, N);
                    if (q % 2 == 0)
                        s += term;
                    else
                        s -= term;
                });
            });
        }
        k.push_back(s);
    }
    return k;
}

inline BigInt aut_B(const DegreeData& d) {
    BigInt s = 1;
    for (const auto& k : k_values(d)) s += k;
    return s;
}

// The upper bound for dim W written out term by term.
inline BigInt dim_w_bound_expression(const DegreeData& d) {
    require_sorted(d);
    const int N = d.N();
    BigInt total = 0;
    for (Degree x : d.a)
        for (Degree y : d.b) total += binom(x - y + N, N);
    for (Degree x : d.a)
        for (Degree y : d.b) total += binom(y - x + N, N);
    for (Degree x : d.a)
        for (Degree y : d.a) total -= binom(x - y + N, N);
    for (Degree x : d.b)
        for (Degree y : d.b) total -= binom(x - y + N, N);
    total += 1;
    if (d.c == 2 || is_stable(d)) return total;

    const auto h = h_values(d);
    total += binom(h[0], N);
    for (int i = 1; i <= d.c - 3; ++i) {
        for (int r = 0; r <= i; ++r) {
            const int s = i - r;
            for_each_subset(d.t + i + 1, r, [&](const std::vector<int>& S) {
                Degree sa = 0;
                for (int j : S) sa += d.a[static_cast<std::size_t>(j)];
                for_each_multiset(d.t, s, [&](const std::vector<int>& J) {
                    Degree sb = 0;
                    for (int x : J) sb += d.b[static_cast<std::size_t>(x)];
                    BigInt term = binom(h[static_cast<std::size_t>(i)] + sa + sb, N);
                    if ((i - r) % 2 == 0)
                        total += term;
                    else
                        total -= term;
                });
            });
        }
    }
    return total;
}

inline BigInt m_value(const DegreeData& d, int i) {
    if (i < 3 || i > d.c)
        throw IndexError("m index must lie in 3.." + std::to_string(d.c) + ", got " +
                         std::to_string(i));
    const int N = d.N();
    const Degree top = d.aj(d.t + i - 2);
    BigInt s = -1;
    for (Degree y : d.b) s += binom(top - y + N, N);
    for (int j = 0; j <= d.t + i - 3; ++j) s -= binom(top - d.aj(j) + N, N);
    s += euler_char(hom_B_resolution(d, i), 0, N);
    return s;
}

struct DimensionReport {
    bool empty = false;
    Degree ell = 0;
    std::vector<Degree> hValues;
    BigInt lambdaC = 0;
    std::vector<BigInt> kValues;
    BigInt autB = 1;
    bool stable = false;
    BigInt dimW_viaK = 0;
    BigInt dimW_viaBound = 0;
    std::vector<BigInt> mValues;  // m_3(0) .. m_c(0)
    bool crossCheckOK = true;

    BigInt sumK() const {
        BigInt s = 0;
        for (const auto& k : kValues) s += k;
        return s;
    }
};

inline DimensionReport dimension_report(const DegreeData& d) {
    DimensionReport r;
    if (!is_nonempty(d)) {
        r.empty = true;
        return r;
    }
    r.ell = ell(d);
    r.hValues = h_values(d);
    r.lambdaC = lambda_c(d);
    r.kValues = k_values(d);
    const auto closed = k_values_closed_form(d);
    for (std::size_t i = 0; i < closed.size(); ++i)
        if (closed[i] != r.kValues[i])
            throw InternalInconsistency("K_" + std::to_string(i + 3) + " disagrees: resolution " +
                                        to_string(r.kValues[i]) + " vs closed form " +
                                        to_string(closed[i]));
    r.autB = 1 + r.sumK();
    r.stable = is_stable(d);
    r.dimW_viaK = r.lambdaC + r.sumK();
    r.dimW_viaBound = dim_w_bound_expression(d);
    if (r.dimW_viaK != r.dimW_viaBound)
        throw InternalInconsistency("dim W disagrees: lambda + sum K = " + to_string(r.dimW_viaK) +
                                    " vs term-by-term bound " + to_string(r.dimW_viaBound));
    for (int i = 3; i <= d.c; ++i) r.mValues.push_back(m_value(d, i));
    return r;
}

// t(t+c-1)C(deg+N, N) - t^2 - (t+c-1)^2 + 1 with N = n+c.
inline BigInt equal_degree_dimension(int t, int c, Degree deg, int n) {
    BigInt r = binom(deg + n + c, n + c) * (t * (t + c - 1));
    r -= t * t;
    r -= (t + c - 1) * (t + c - 1);
    r += 1;
    return r;
}

// Rational normal curve of degree d in P^d.
inline BigInt scroll_dimension(Degree deg) {
    if (deg < 2) throw IndexError("scroll degree must be at least 2");
    return BigInt(static_cast<long>(deg * deg + 2 * deg - 3));
}

}  // namespace detloci
