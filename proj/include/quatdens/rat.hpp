#pragma once

#include <gmpxx.h>
#include <string>

namespace quatdens {

// All densities, Gauss sums and series coefficients are exact rationals.
// There are no floating-point numbers in the mathematical core.
using Int = mpz_class;
using Rat = mpq_class;

// q^e for any sign of e.
inline Rat q_pow(long q, long e) {
    Int num = 1;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(num);
    Rat r(1, num);
    r.canonicalize();
    return r;
}

inline Int int_pow(long q, long e) {
    Int v = 1;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(e));
    return v;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline std::string rat_str(const Rat& x) { return x.get_str(); }

} // namespace quatdens
