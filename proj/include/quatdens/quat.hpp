#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "quatdens/config.hpp"
#include "quatdens/errors.hpp"

namespace quatdens {

// Arithmetic in the division quaternion algebra over the q-adic base field,
// restricted to its maximal order at finite precision.
//
// Elements are written on the basis {1, eps, Pi, Pi*eps} with the relations
//
//   eps^2 = eps_sq (a unit non-residue),  Pi^2 = q,  eps*Pi = -Pi*eps.
//
// The maximal ideal is P = Pi*O, and P^{2l} = q^l * O, so an element known
// modulo P^{2l} is exactly a coordinate vector modulo q^l. `Quat` is an
// exact element of the order (integer coordinates, "level infinity");
// `QuatRes` is a residue at level l, i.e. an element of O/P^{2l}.

struct Quat {
    long long a = 0, b = 0, c = 0, d = 0;

    friend Quat operator+(const Quat& x, const Quat& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Quat operator-(const Quat& x, const Quat& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    Quat operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Quat&) const = default;
};

inline Quat quat_conj(const Quat& x) { return {x.a, -x.b, -x.c, -x.d}; }

inline Quat quat_mul(const Quat& x, const Quat& y, const PAdicConfig& cfg) {
    const long long e = cfg.eps_sq, p = cfg.q;
    return {
        x.a * y.a + e * x.b * y.b + p * x.c * y.c - p * e * x.d * y.d,
        x.a * y.b + x.b * y.a + p * x.c * y.d - p * x.d * y.c,
        x.a * y.c - e * x.b * y.d + x.c * y.a + e * x.d * y.b,
        x.a * y.d - x.b * y.c + x.c * y.b + x.d * y.a,
    };
}

inline long long quat_nrd(const Quat& x, const PAdicConfig& cfg) {
    const long long e = cfg.eps_sq, p = cfg.q;
    return x.a * x.a - e * x.b * x.b - p * x.c * x.c + p * e * x.d * x.d;
}

inline long long quat_trd(const Quat& x) { return 2 * x.a; }

inline Quat quat_scale(long long s, const Quat& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
}

inline Quat quat_one() { return {1, 0, 0, 0}; }
inline Quat quat_eps() { return {0, 1, 0, 0}; }
inline Quat quat_pi_unif() { return {0, 0, 1, 0}; }  // Pi
inline Quat quat_central(long long v) { return {v, 0, 0, 0}; }

// Pi^k as an exact element: Pi^{2e} = q^e, Pi^{2e+1} = q^e * Pi.
Quat quat_pi_pow(int k, const PAdicConfig& cfg);

// ---------------------------------------------------------------------------
// Residues

struct QuatRes {
    long long a = 0, b = 0, c = 0, d = 0;
    int level = 1;  // element of O/P^{2*level}; coordinates reduced mod q^level

    bool operator==(const QuatRes&) const = default;
};

inline long long mod_reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

inline QuatRes quat_reduce(const Quat& x, int level, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(level);
    return {mod_reduce(x.a, m), mod_reduce(x.b, m), mod_reduce(x.c, m),
            mod_reduce(x.d, m), level};
}

inline void require_same_level(const QuatRes& x, const QuatRes& y) {
    if (x.level != y.level)
        throw precision_error("mixed levels " + std::to_string(x.level) + " and " +
                              std::to_string(y.level));
}

QuatRes quat_mul(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg);
QuatRes quat_add(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg);
QuatRes quat_sub(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg);
QuatRes quat_conj(const QuatRes& x, const PAdicConfig& cfg);

long long nrd(const QuatRes& x, const PAdicConfig& cfg);
long long trd(const QuatRes& x, const PAdicConfig& cfg);

// Largest v <= 2*level with x in P^v; 2*level means x == 0 at this precision.
int pi_valuation(const QuatRes& x, const PAdicConfig& cfg);
int pi_valuation(const Quat& x, int cap, const PAdicConfig& cfg);

bool is_unit(const QuatRes& x, const PAdicConfig& cfg);

// ---------------------------------------------------------------------------
// Enumeration of O/P^{2l}: index i decodes as base-q^l digits (a, b, c, d).

inline long long residue_count(const PAdicConfig& cfg, int level) {
    long long m = cfg.pow_level(level);
    return m * m * m * m;
}

inline QuatRes residue_at(long long idx, int level, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(level);
    QuatRes r;
    r.a = idx % m;
    idx /= m;
    r.b = idx % m;
    idx /= m;
    r.c = idx % m;
    r.d = idx / m;
    r.level = level;
    return r;
}

std::vector<QuatRes> enumerate_residues(const PAdicConfig& cfg, int level);
std::vector<QuatRes> enumerate_units(const PAdicConfig& cfg, int level);

// ---------------------------------------------------------------------------
// The unramified quadratic subring at finite level: x + y*eps mod q^l,
// with the conjugate x - y*eps. Target of the splitting map phi.

struct GaloisRingElem {
    long long x = 0, y = 0;
    int level = 1;

    bool operator==(const GaloisRingElem&) const = default;
};

GaloisRingElem gr_add(const GaloisRingElem& u, const GaloisRingElem& v,
                      const PAdicConfig& cfg);
GaloisRingElem gr_mul(const GaloisRingElem& u, const GaloisRingElem& v,
                      const PAdicConfig& cfg);
GaloisRingElem gr_conj(const GaloisRingElem& u, const PAdicConfig& cfg);

// 2x2 matrix over the quadratic subring, row major.
using PhiImage = std::array<GaloisRingElem, 4>;

// phi(a + b eps + c Pi + d Pi eps) = [[a + b eps, (c - d eps) q],
//                                     [c + d eps,  a - b eps   ]]
PhiImage phi(const QuatRes& x, const PAdicConfig& cfg);
PhiImage phi_mul(const PhiImage& u, const PhiImage& v, const PAdicConfig& cfg);
GaloisRingElem phi_det(const PhiImage& u, const PAdicConfig& cfg);
GaloisRingElem phi_trace(const PhiImage& u, const PAdicConfig& cfg);

} // namespace quatdens
