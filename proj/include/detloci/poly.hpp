#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace detloci {

using Exponents = std::vector<int>;
using Coeff = std::uint32_t;

namespace detail {

inline std::uint64_t small_binom(int m, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 64>, 256> t{};
        for (int i = 0; i < 256; ++i) {
            t[i][0] = 1;
            for (int j = 1; j < 64 && j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || m < k) return 0;
    if (m >= 256 || k >= 64) throw GuardError("monomial index out of table range");
    return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace detail

// Number of monomials of degree v in nvars variables.
inline std::uint64_t monomial_count(int nvars, int v) {
    if (v < 0) return 0;
    return detail::small_binom(v + nvars - 1, nvars - 1);
}

// Exponent vectors of degree v in descending lexicographic order (x0^v first).
inline std::vector<Exponents> monomials(int nvars, int v) {
    std::vector<Exponents> out;
    if (v < 0) return out;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == nvars - 1) {
            e[static_cast<std::size_t>(i)] = rem;
            out.push_back(e);
            return;
        }
        for (int x = rem; x >= 0; --x) {
            e[static_cast<std::size_t>(i)] = x;
            rec(i + 1, rem - x);
        }
    };
    rec(0, v);
    return out;
}

// Position of e in monomials(e.size(), |e|).
inline std::size_t monomial_rank(const Exponents& e) {
    int rem = 0;
    for (int x : e) rem += x;
    const int nv = static_cast<int>(e.size());
    std::size_t r = 0;
    for (int i = 0; i + 1 < nv; ++i) {
        const int k = nv - i - 1;
        const int gap = rem - e[static_cast<std::size_t>(i)];
        if (gap >= 1) r += detail::small_binom(gap - 1 + k, k);
        rem -= e[static_cast<std::size_t>(i)];
    }
    return r;
}

// Homogeneous polynomial over GF(p); zero coefficients are never stored.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(int nvars, Coeff p) : nvars_(nvars), p_(p) {}

    static SparsePoly monomial(int nvars, Coeff p, const Exponents& e, Coeff c = 1) {
        SparsePoly f(nvars, p);
        f.add_term(e, c);
        return f;
    }

    int nvars() const { return nvars_; }
    Coeff prime() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Exponents, Coeff, std::greater<Exponents>>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        int s = 0;
        for (int x : terms_.begin()->first) s += x;
        return s;
    }

    bool is_homogeneous() const {
        const int d = degree();
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s != d) return false;
        }
        return true;
    }

    void add_term(const Exponents& e, std::uint64_t c) {
        if (static_cast<int>(e.size()) != nvars_) throw VariableError("exponent length mismatch");
        c %= p_;
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, static_cast<Coeff>(c));
            return;
        }
        const std::uint64_t s = (it->second + c) % p_;
        if (s == 0)
            terms_.erase(it);
        else
            it->second = static_cast<Coeff>(s);
    }

    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    SparsePoly scaled(std::uint64_t k) const {
        SparsePoly r(nvars_, p_);
        for (const auto& [e, c] : terms_) r.add_term(e, detail::mul_mod(c, k % p_, p_));
        return r;
    }

    SparsePoly operator-() const { return scaled(p_ - 1); }
    SparsePoly operator-(const SparsePoly& o) const { return *this + (-o); }

    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly r(nvars_, p_);
        if (is_zero() || o.is_zero()) return r;
        const int deg = degree() + o.degree();
        const std::uint64_t dim = monomial_count(nvars_, deg);
        std::vector<std::uint64_t> acc(dim, 0);
        std::vector<Exponents> slot(dim);
        Exponents e(static_cast<std::size_t>(nvars_));
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                for (int i = 0; i < nvars_; ++i)
                    e[static_cast<std::size_t>(i)] =
                        e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
                const std::size_t k = monomial_rank(e);
                acc[k] = (acc[k] + static_cast<std::uint64_t>(c1) * c2) % p_;
                if (slot[k].empty()) slot[k] = e;
            }
        for (std::size_t k = 0; k < dim; ++k)
            if (acc[k]) r.terms_.emplace(std::move(slot[k]), static_cast<Coeff>(acc[k]));
        return r;
    }

    bool operator==(const SparsePoly& o) const {
        return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
    }

    // "coeff x0^e0x1^e1...xN^eN" terms joined by " + ", or "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += std::to_string(c) + " ";
            for (int i = 0; i < nvars_; ++i)
                s += "x" + std::to_string(i) + "^" + std::to_string(e[static_cast<std::size_t>(i)]);
        }
        return s;
    }

private:
    int nvars_ = 0;
    Coeff p_ = 2;
    std::map<Exponents, Coeff, std::greater<Exponents>> terms_;
};

}  // namespace detloci
