#include "quatdens/quat.hpp"

#include <algorithm>

namespace quatdens {

Quat quat_pi_pow(int k, const PAdicConfig& cfg) {
    long long pe = 1;
    for (int i = 0; i < k / 2; ++i) pe *= cfg.q;
    if (k % 2 == 0) return quat_central(pe);
    return {0, 0, pe, 0};
}

QuatRes quat_mul(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg) {
    require_same_level(x, y);
    Quat prod = quat_mul(Quat{x.a, x.b, x.c, x.d}, Quat{y.a, y.b, y.c, y.d}, cfg);
    return quat_reduce(prod, x.level, cfg);
}

QuatRes quat_add(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg) {
    require_same_level(x, y);
    long long m = cfg.pow_level(x.level);
    return {mod_reduce(x.a + y.a, m), mod_reduce(x.b + y.b, m),
            mod_reduce(x.c + y.c, m), mod_reduce(x.d + y.d, m), x.level};
}

QuatRes quat_sub(const QuatRes& x, const QuatRes& y, const PAdicConfig& cfg) {
    require_same_level(x, y);
    long long m = cfg.pow_level(x.level);
    return {mod_reduce(x.a - y.a, m), mod_reduce(x.b - y.b, m),
            mod_reduce(x.c - y.c, m), mod_reduce(x.d - y.d, m), x.level};
}

QuatRes quat_conj(const QuatRes& x, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(x.level);
    return {x.a, mod_reduce(-x.b, m), mod_reduce(-x.c, m), mod_reduce(-x.d, m),
            x.level};
}

long long nrd(const QuatRes& x, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(x.level);
    return mod_reduce(quat_nrd(Quat{x.a, x.b, x.c, x.d}, cfg), m);
}

long long trd(const QuatRes& x, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(x.level);
    return mod_reduce(2 * x.a, m);
}

static int residue_val(long long v, int cap, long long p) {
    // Largest j <= cap with p^j | v, treating 0 as divisible by everything.
    int j = 0;
    while (j < cap && v % p == 0) {
        v /= p;
        ++j;
        if (v == 0) return cap;
    }
    return v == 0 ? cap : j;
}

int pi_valuation(const QuatRes& x, const PAdicConfig& cfg) {
    int cap = x.level;
    int v1 = std::min(residue_val(x.a, cap, cfg.q), residue_val(x.b, cap, cfg.q));
    int v2 = std::min(residue_val(x.c, cap, cfg.q), residue_val(x.d, cap, cfg.q));
    return std::min({2 * v1, 2 * v2 + 1, 2 * cap});
}

int pi_valuation(const Quat& x, int cap, const PAdicConfig& cfg) {
    return pi_valuation(quat_reduce(x, cap, cfg), cfg);
}

bool is_unit(const QuatRes& x, const PAdicConfig& cfg) {
    return nrd(x, cfg) % cfg.q != 0;
}

std::vector<QuatRes> enumerate_residues(const PAdicConfig& cfg, int level) {
    long long n = residue_count(cfg, level);
    std::vector<QuatRes> out;
    out.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) out.push_back(residue_at(i, level, cfg));
    return out;
}

std::vector<QuatRes> enumerate_units(const PAdicConfig& cfg, int level) {
    long long n = residue_count(cfg, level);
    std::vector<QuatRes> out;
    for (long long i = 0; i < n; ++i) {
        QuatRes r = residue_at(i, level, cfg);
        if (is_unit(r, cfg)) out.push_back(r);
    }
    return out;
}

GaloisRingElem gr_add(const GaloisRingElem& u, const GaloisRingElem& v,
                      const PAdicConfig& cfg) {
    if (u.level != v.level) throw precision_error("mixed levels in quadratic subring");
    long long m = cfg.pow_level(u.level);
    return {mod_reduce(u.x + v.x, m), mod_reduce(u.y + v.y, m), u.level};
}

GaloisRingElem gr_mul(const GaloisRingElem& u, const GaloisRingElem& v,
                      const PAdicConfig& cfg) {
    if (u.level != v.level) throw precision_error("mixed levels in quadratic subring");
    long long m = cfg.pow_level(u.level);
    return {mod_reduce(u.x * v.x + cfg.eps_sq * u.y * v.y, m),
            mod_reduce(u.x * v.y + u.y * v.x, m), u.level};
}

GaloisRingElem gr_conj(const GaloisRingElem& u, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(u.level);
    return {u.x, mod_reduce(-u.y, m), u.level};
}

PhiImage phi(const QuatRes& x, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(x.level);
    GaloisRingElem e11{x.a, x.b, x.level};
    GaloisRingElem e12{mod_reduce(x.c * cfg.q, m), mod_reduce(-x.d * cfg.q, m), x.level};
    GaloisRingElem e21{x.c, x.d, x.level};
    GaloisRingElem e22{x.a, mod_reduce(-x.b, m), x.level};
    return {e11, e12, e21, e22};
}

PhiImage phi_mul(const PhiImage& u, const PhiImage& v, const PAdicConfig& cfg) {
    return {gr_add(gr_mul(u[0], v[0], cfg), gr_mul(u[1], v[2], cfg), cfg),
            gr_add(gr_mul(u[0], v[1], cfg), gr_mul(u[1], v[3], cfg), cfg),
            gr_add(gr_mul(u[2], v[0], cfg), gr_mul(u[3], v[2], cfg), cfg),
            gr_add(gr_mul(u[2], v[1], cfg), gr_mul(u[3], v[3], cfg), cfg)};
}

GaloisRingElem phi_det(const PhiImage& u, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(u[0].level);
    GaloisRingElem ad = gr_mul(u[0], u[3], cfg);
    GaloisRingElem bc = gr_mul(u[1], u[2], cfg);
    return {mod_reduce(ad.x - bc.x, m), mod_reduce(ad.y - bc.y, m), u[0].level};
}

GaloisRingElem phi_trace(const PhiImage& u, const PAdicConfig& cfg) {
    return gr_add(u[0], u[3], cfg);
}

} // namespace quatdens
