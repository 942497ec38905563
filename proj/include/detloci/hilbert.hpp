#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "degree_data.hpp"
#include "resolutions.hpp"

namespace detloci {

// Coefficients in increasing powers of v. The zero polynomial has no coefficients.
struct RationalPolynomial {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }

    Rational operator()(const Rational& v) const {
        Rational r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * v + *it;
        return r;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    RationalPolynomial& add_scaled(const RationalPolynomial& o, const Rational& k) {
        if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += k * o.coeffs[i];
        trim();
        return *this;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> s;
        for (const auto& c : coeffs) s.push_back(c.get_str());
        return s;
    }
};

// C(v+s+N, N) as a polynomial in v.
inline RationalPolynomial binomial_polynomial(Degree s, int N) {
    RationalPolynomial p;
    p.coeffs = {Rational(1)};
    for (int k = 1; k <= N; ++k) {
        std::vector<Rational> next(p.coeffs.size() + 1, Rational(0));
        const Rational shift(static_cast<long>(s + k));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            next[i + 1] += p.coeffs[i];
            next[i] += p.coeffs[i] * shift;
        }
        p.coeffs = std::move(next);
    }
    BigInt fact = 1;
    for (int k = 2; k <= N; ++k) fact *= k;
    for (auto& c : p.coeffs) {
        c /= Rational(fact);
        c.canonicalize();
    }
    return p;
}

struct HilbertSummary {
    RationalPolynomial polynomial;
    int dimensionOfScheme = -1;
    BigInt degreeOfScheme = 0;
    std::optional<BigInt> genus;
};

inline BigInt hilbert_function(const DegreeData& d, Degree v) {
    if (v < 0) return 0;
    return euler_char(eagon_northcott(d), v, d.N());
}

inline RationalPolynomial euler_polynomial(const GradedComplex& cx, int N) {
    RationalPolynomial p;
    for (std::size_t k = 0; k < cx.terms.size(); ++k) {
        const long sign = (k % 2 == 0) ? 1 : -1;
        for (auto [tw, mult] : cx.terms[k].multiplicities())
            p.add_scaled(binomial_polynomial(tw, N), Rational(static_cast<long>(sign * mult)));
    }
    return p;
}

inline HilbertSummary summarize(RationalPolynomial p) {
    HilbertSummary h;
    h.polynomial = std::move(p);
    h.dimensionOfScheme = h.polynomial.degree();
    if (h.dimensionOfScheme >= 0) {
        Rational deg = h.polynomial.leading();
        for (int k = 2; k <= h.dimensionOfScheme; ++k) deg *= k;
        deg.canonicalize();
        h.degreeOfScheme = deg.get_num() / deg.get_den();
        if (h.dimensionOfScheme == 1) {
            Rational g = Rational(1) - h.polynomial.coeffs[0];
            g.canonicalize();
            h.genus = g.get_num() / g.get_den();
        }
    }
    return h;
}

inline void require_consistent(const HilbertSummary& h, int n) {
    if (h.dimensionOfScheme != n)
        throw ConsistencyError("Hilbert polynomial has degree " +
                               std::to_string(h.dimensionOfScheme) + " but n = " +
                               std::to_string(n));
}

inline HilbertSummary hilbert_polynomial(const DegreeData& d) {
    if (!is_nonempty(d)) throw EmptyLocusError("W(b;a) is empty for this degree data");
    HilbertSummary h = summarize(euler_polynomial(eagon_northcott(d), d.N()));
    require_consistent(h, d.n);
    return h;
}

inline bool check_codim(const DegreeData& d) {
    if (!is_nonempty(d)) throw EmptyLocusError("W(b;a) is empty for this degree data");
    return summarize(euler_polynomial(eagon_northcott(d), d.N())).dimensionOfScheme == d.n;
}

}  // namespace detloci
