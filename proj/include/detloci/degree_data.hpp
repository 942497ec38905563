#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace detloci {

using Degree = std::int64_t;

// Degree data (b; a) of a t x (t+c-1) homogeneous matrix. Built by validate().
struct DegreeData {
    int t = 0;
    int c = 0;
    int n = 0;
    int charK = 0;
    std::vector<Degree> b;  // b_1..b_t stored at b[0..t-1]
    std::vector<Degree> a;  // a_0..a_{t+c-2}

    int N() const { return n + c; }
    int columns() const { return t + c - 1; }
    // Row degree b_i, 1-based as in the usual notation.
    Degree bi(int i) const { return b.at(static_cast<std::size_t>(i - 1)); }
    Degree aj(int j) const { return a.at(static_cast<std::size_t>(j)); }
    Degree sum_b() const { return std::accumulate(b.begin(), b.end(), Degree{0}); }
    Degree sum_a() const { return std::accumulate(a.begin(), a.end(), Degree{0}); }

    bool operator==(const DegreeData&) const = default;
};

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline DegreeData validate(std::vector<Degree> rawB, std::vector<Degree> rawA, int n,
                           int charK = 0) {
    if (rawB.empty()) throw SizeError("b must have at least one entry");
    if (rawA.size() <= rawB.size())
        throw SizeError("need |a| >= |b| + 1 (codimension c >= 2), got |b|=" +
                        std::to_string(rawB.size()) + " |a|=" + std::to_string(rawA.size()));
    if (n < 0) throw InputError("n must be nonnegative, got " + std::to_string(n));
    if (charK != 0 && !is_prime(charK))
        throw CharError("characteristic must be 0 or a prime, got " + std::to_string(charK));
    std::sort(rawB.begin(), rawB.end());
    std::sort(rawA.begin(), rawA.end());
    DegreeData d;
    d.t = static_cast<int>(rawB.size());
    d.c = static_cast<int>(rawA.size() - rawB.size()) + 1;
    d.n = n;
    d.charK = charK;
    d.b = std::move(rawB);
    d.a = std::move(rawA);
    return d;
}

inline void require_sorted(const DegreeData& d) {
    if (!std::is_sorted(d.b.begin(), d.b.end()) || !std::is_sorted(d.a.begin(), d.a.end()))
        throw SortError("degree sequences must be ascending");
}

// u[j][i-1] = a_j - b_i.
struct DegreeMatrix {
    std::vector<std::vector<Degree>> u;

    Degree at(int j, int i) const {
        return u.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i - 1));
    }
    bool operator==(const DegreeMatrix&) const = default;
};

inline DegreeMatrix degree_matrix(const DegreeData& d) {
    DegreeMatrix m;
    m.u.assign(d.a.size(), std::vector<Degree>(d.b.size()));
    for (std::size_t j = 0; j < d.a.size(); ++j)
        for (std::size_t i = 0; i < d.b.size(); ++i) m.u[j][i] = d.a[j] - d.b[i];
    return m;
}

inline bool is_nonempty(const DegreeData& d) {
    for (int i = 1; i <= d.t; ++i)
        if (d.aj(i - 1) - d.bi(i) <= 0) return false;
    return true;
}

inline DegreeData shifted(const DegreeData& d, Degree s) {
    DegreeData e = d;
    for (auto& x : e.b) x += s;
    for (auto& x : e.a) x += s;
    return e;
}

}  // namespace detloci
