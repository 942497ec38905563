#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace detloci {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(m, k) with C(m, k) = 0 whenever m < k, negative m included.
inline BigInt binom(std::int64_t m, std::int64_t k) {
    BigInt r = 0;
    if (k < 0 || m < k) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace detloci
