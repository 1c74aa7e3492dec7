#pragma once

#include <stdexcept>
#include <string>

namespace quatdens {

// Parameters of the base algebra: an odd prime q (the residue field size)
// and a unit non-residue used as the square of the generator of the
// unramified quadratic part. Any non-residue yields an isomorphic algebra;
// the smallest one is fixed so that outputs are deterministic.
struct PAdicConfig {
    long q = 3;       // odd prime; also the residue field size
    long eps_sq = 2;  // canonical lift of the smallest quadratic non-residue mod q

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static bool is_residue(long a, long p) {
        // Euler criterion by repeated squaring mod p.
        long e = (p - 1) / 2, base = a % p, r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r == 1;
    }

    static PAdicConfig make(long p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("q must be an odd prime >= 3, got " +
                                        std::to_string(p));
        long eps = 2;
        while (is_residue(eps, p)) ++eps;
        return PAdicConfig{p, eps};
    }

    // p^ell as a plain integer; levels stay small enough for 64 bits.
    long long pow_level(int ell) const {
        long long m = 1;
        for (int i = 0; i < ell; ++i) m *= q;
        return m;
    }
};

} // namespace quatdens
