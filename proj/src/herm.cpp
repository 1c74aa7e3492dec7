#include "quatdens/herm.hpp"

#include <algorithm>

#include "quatdens/parallel.hpp"
#include "quatdens/rat.hpp"

namespace quatdens {

bool is_hermitian(const HermMat& x) {
    for (int i = 0; i < x.n; ++i) {
        const Quat& d = x.at(i, i);
        if (d.b != 0 || d.c != 0 || d.d != 0) return false;
        for (int j = i + 1; j < x.n; ++j)
            if (x.at(j, i) != quat_conj(x.at(i, j))) return false;
    }
    return true;
}

void require_hermitian(const HermMat& x) {
    if (!is_hermitian(x)) throw shape_error("matrix is not self-adjoint");
}

static bool divisible(long long v, long long m) { return v % m == 0; }

bool in_V_pi_ell(const HermMat& y, int ell, const PAdicConfig& cfg) {
    long long pl = cfg.pow_level(ell);
    long long pl1 = ell >= 1 ? cfg.pow_level(ell - 1) : 1;
    for (int i = 0; i < y.n; ++i) {
        const Quat& d = y.at(i, i);
        if (d.b != 0 || d.c != 0 || d.d != 0) return false;
        if (!divisible(d.a, pl)) return false;
        for (int j = i + 1; j < y.n; ++j) {
            // P^{2*ell-1}: 1 and eps coordinates in q^ell, Pi coordinates in q^{ell-1}.
            const Quat& o = y.at(i, j);
            if (!divisible(o.a, pl) || !divisible(o.b, pl)) return false;
            if (!divisible(o.c, pl1) || !divisible(o.d, pl1)) return false;
        }
    }
    return true;
}

bool in_M_pi_ell(const HermMat& y, int ell, const PAdicConfig& cfg) {
    long long pl = cfg.pow_level(ell);
    for (const Quat& v : y.e)
        if (!divisible(v.a, pl) || !divisible(v.b, pl) || !divisible(v.c, pl) ||
            !divisible(v.d, pl))
            return false;
    return true;
}

HermMat herm_scale(long long s, const HermMat& x) {
    HermMat r = x;
    for (Quat& v : r.e) v = quat_scale(s, v);
    return r;
}

HermMat herm_sub(const HermMat& x, const HermMat& y) {
    if (x.n != y.n) throw shape_error("size mismatch in difference");
    HermMat r = x;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

HermMat block_diag(const HermMat& x, const HermMat& y) {
    HermMat r(x.n + y.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.e[i * r.n + j] = x.at(i, j);
    for (int i = 0; i < y.n; ++i)
        for (int j = 0; j < y.n; ++j) r.e[(x.n + i) * r.n + (x.n + j)] = y.at(i, j);
    return r;
}

HermMat canonical_form(const SignedPartition& gamma, const PAdicConfig& cfg) {
    require_lambda(gamma);
    for (int v : gamma.parts)
        if (v < 0 || exp_is_inf(v))
            throw partition_error("only integral partitions have a matrix form: " +
                                  partition_str(gamma));
    HermMat m(gamma.size());
    int pos = 0;
    for (auto [value, mult] : multiplicity_form(gamma.parts)) {
        if (value % 2 == 0) {
            long long pe = 1;
            for (int i = 0; i < value / 2; ++i) pe *= cfg.q;
            for (int r = 0; r < mult; ++r) m.set(pos + r, pos + r, quat_central(pe));
            pos += mult;
        } else {
            long long pe = 1;
            for (int i = 0; i < value / 2; ++i) pe *= cfg.q;
            Quat w{0, 0, pe, 0};  // q^e * Pi
            for (int r = 0; r < mult / 2; ++r) {
                m.set(pos, pos + 1, w);
                pos += 2;
            }
        }
    }
    return m;
}

HermMat build_h(int r, const PAdicConfig& cfg) {
    if (r < 0) throw partition_error("negative hyperbolic exponent");
    // [[0, Pi^r], [(-Pi)^r, 0]]; the mirrored entry conj(Pi^r) equals (-Pi)^r
    // in both parities.
    HermMat m(2);
    m.set(0, 1, quat_pi_pow(r, cfg));
    return m;
}

HermMat build_H(const GammaPartition& lam, const PAdicConfig& cfg) {
    require_gamma(lam);
    if (lam.size() == 0) return HermMat(0);
    HermMat m = build_h(lam.parts[0], cfg);
    for (int i = 1; i < lam.size(); ++i) m = block_diag(m, build_h(lam.parts[i], cfg));
    return m;
}

HermMat build_Hk(int k, const PAdicConfig& cfg) {
    return build_H(GammaPartition(std::vector<int>(k, 1)), cfg);
}

SignedPartition h_partition(const GammaPartition& lam) {
    std::vector<int> parts;
    for (int v : lam.parts) {
        parts.push_back(v);
        parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return SignedPartition(parts);
}

SignedPartition concat_sorted(const SignedPartition& a, const SignedPartition& b) {
    std::vector<int> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return SignedPartition(parts);
}

long long pairing(const HermMat& a, const HermMat& b, const PAdicConfig& cfg) {
    if (a.n != b.n) throw shape_error("size mismatch in pairing");
    long long s = 0;
    for (int i = 0; i < a.n; ++i) s += a.at(i, i).a * b.at(i, i).a;
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j)
            s += quat_trd(quat_mul(a.at(i, j), b.at(j, i), cfg));
    return s;
}

long long pairing_mod(const HermMat& a, const HermMat& b, const PAdicConfig& cfg,
                      int ell) {
    return mod_reduce(pairing(a, b, cfg), cfg.pow_level(ell));
}

HermMat transform(const HermMat& a, const std::vector<Quat>& v, int rows, int cols,
                  const PAdicConfig& cfg) {
    if (a.n != rows || static_cast<int>(v.size()) != rows * cols)
        throw shape_error("transform shape mismatch");
    HermMat r(cols);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) {
            Quat s{};
            for (int k = 0; k < rows; ++k) {
                // (v* A)_{i k'} v_{k' j} expanded directly
                Quat vki = quat_conj(v[k * cols + i]);
                for (int l = 0; l < rows; ++l)
                    s = s + quat_mul(quat_mul(vki, a.at(k, l), cfg), v[l * cols + j], cfg);
            }
            r.e[i * r.n + j] = s;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Packed residues

HermCodec::HermCodec(const PAdicConfig& c, int size, int level, bool coarse_mode)
    : n(size), ell(level), coarse(coarse_mode), cfg(c) {
    m = cfg.pow_level(ell);
    m1 = ell >= 1 ? cfg.pow_level(ell - 1) : 1;
    if (!coarse) m1 = m;
}

long long HermCodec::size() const {
    long long s = 1;
    for (int i = 0; i < n; ++i) s *= m;
    for (int k = 0; k < n * (n - 1) / 2; ++k) s *= m * m * m1 * m1;
    return s;
}

long long HermCodec::encode(const HermMat& x) const {
    long long key = 0;
    for (int i = 0; i < n; ++i) key = key * m + mod_reduce(x.at(i, i).a, m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Quat& o = x.at(i, j);
            key = key * m + mod_reduce(o.a, m);
            key = key * m + mod_reduce(o.b, m);
            key = key * m1 + mod_reduce(o.c, m1);
            key = key * m1 + mod_reduce(o.d, m1);
        }
    return key;
}

HermMat HermCodec::decode(long long key) const {
    // Inverse of encode: digits come off the low end in reverse order.
    int pairs = n * (n - 1) / 2;
    std::vector<long long> digits(static_cast<size_t>(n) + 4 * pairs);
    int idx = static_cast<int>(digits.size()) - 1;
    for (int k = pairs - 1; k >= 0; --k) {
        digits[idx--] = key % m1;
        key /= m1;
        digits[idx--] = key % m1;
        key /= m1;
        digits[idx--] = key % m;
        key /= m;
        digits[idx--] = key % m;
        key /= m;
    }
    for (int i = n - 1; i >= 0; --i) {
        digits[idx--] = key % m;
        key /= m;
    }
    HermMat x(n);
    int pos = 0;
    for (int i = 0; i < n; ++i) x.set(i, i, quat_central(digits[pos++]));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Quat o{digits[pos], digits[pos + 1], digits[pos + 2], digits[pos + 3]};
            pos += 4;
            x.set(i, j, o);
        }
    return x;
}

long long HermCodec::pairing_key(const HermMat& integral, long long key) const {
    return pairing_mod(integral, decode(key), cfg, ell);
}

Int gl_order(const PAdicConfig& cfg, int n, int ell) {
    Rat r = q_pow(cfg.q, 4LL * ell * n * n);
    for (int i = 1; i <= n; ++i) r *= (Rat(1) - q_pow(cfg.q, -2 * i));
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("gl_order not integral");
    return r.get_num();
}

// Residue field arithmetic for the invertibility test: elements x + y*eps
// of O/P with the non-residue relation eps^2 = eps_sq.
namespace {
struct Fq2 {
    long x, y;
};
inline Fq2 fq2_mul(Fq2 u, Fq2 v, long p, long e) {
    return {static_cast<long>((u.x * v.x + e * u.y * v.y) % p),
            static_cast<long>((u.x * v.y + u.y * v.x) % p)};
}
inline Fq2 fq2_sub(Fq2 u, Fq2 v, long p) {
    return {(u.x - v.x + p) % p, (u.y - v.y + p) % p};
}
inline bool fq2_zero(Fq2 u) { return u.x == 0 && u.y == 0; }

long mod_inv(long a, long p) {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline Fq2 fq2_inv(Fq2 u, long p, long e) {
    long nrm = ((u.x * u.x - e * u.y * u.y) % p + p) % p;
    long ninv = mod_inv(nrm, p);
    return {u.x * ninv % p, (p - u.y % p) * ninv % p};
}
}  // namespace

bool invertible_mod_P(const Quat* g, int n, const PAdicConfig& cfg) {
    const long p = cfg.q, e = cfg.eps_sq;
    if (n == 1) return g[0].a % p != 0 || g[0].b % p != 0;
    if (n == 2) {
        Fq2 a{g[0].a % p, g[0].b % p}, b{g[1].a % p, g[1].b % p};
        Fq2 c{g[2].a % p, g[2].b % p}, d{g[3].a % p, g[3].b % p};
        return !fq2_zero(fq2_sub(fq2_mul(a, d, p, e), fq2_mul(b, c, p, e), p));
    }
    // Gaussian elimination over the residue field.
    std::vector<Fq2> mat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n * n; ++i)
        mat[i] = {mod_reduce(g[i].a, p), mod_reduce(g[i].b, p)};
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!fq2_zero(mat[r * n + col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < n; ++j) std::swap(mat[pivot * n + j], mat[col * n + j]);
        Fq2 inv = fq2_inv(mat[col * n + col], p, e);
        for (int r = col + 1; r < n; ++r) {
            Fq2 f = fq2_mul(mat[r * n + col], inv, p, e);
            for (int j = col; j < n; ++j)
                mat[r * n + j] =
                    fq2_sub(mat[r * n + j], fq2_mul(f, mat[col * n + j], p, e), p);
        }
    }
    return true;
}

// g* b g with every entry reduced mod q^ell; b entries assumed reduced.
static void transform_reduced(const Quat* b, const Quat* g, int n, long long m,
                              const PAdicConfig& cfg, Quat* out) {
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Quat s{};
            for (int k = 0; k < n; ++k) {
                Quat gki = quat_conj(g[k * n + i]);
                for (int l = 0; l < n; ++l)
                    s = s + quat_mul(quat_mul(gki, b[k * n + l], cfg), g[l * n + j], cfg);
            }
            Quat sr{mod_reduce(s.a, m), mod_reduce(s.b, m), mod_reduce(s.c, m),
                    mod_reduce(s.d, m)};
            out[i * n + j] = sr;
            if (i != j) out[j * n + i] = quat_conj(sr);
        }
}

std::vector<std::unordered_set<long long>> orbit_enumerate_many(
    const std::vector<HermMat>& reps, const PAdicConfig& cfg, int ell, double budget,
    bool coarse) {
    if (reps.empty()) return {};
    const int n = reps.front().n;
    for (const auto& r : reps)
        if (r.n != n) throw shape_error("mixed sizes in orbit enumeration");
    const long long m = cfg.pow_level(ell);
    double cost = 1;
    for (int i = 0; i < 4 * n * n * ell; ++i) cost *= static_cast<double>(cfg.q);
    require_feasible(cost, budget);

    std::vector<std::vector<Quat>> b_red(reps.size());
    for (size_t r = 0; r < reps.size(); ++r) {
        require_hermitian(reps[r]);
        b_red[r].resize(static_cast<size_t>(n) * n);
        for (int i = 0; i < n * n; ++i) {
            QuatRes q = quat_reduce(reps[r].e[i], ell, cfg);
            b_red[r][i] = Quat{q.a, q.b, q.c, q.d};
        }
    }

    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= m * m * m * m;
    HermCodec codec(cfg, n, ell, coarse);

    using SetVec = std::vector<std::unordered_set<long long>>;
    auto chunks = parallel_chunks<SetVec>(total, [&](long long lo, long long hi) {
        SetVec local(reps.size());
        std::vector<Quat> g(static_cast<size_t>(n) * n);
        std::vector<Quat> t(static_cast<size_t>(n) * n);
        HermMat tm(n);
        for (long long idx = lo; idx < hi; ++idx) {
            long long rest = idx;
            for (int cgi = 0; cgi < n * n; ++cgi) {
                g[cgi].a = rest % m;
                rest /= m;
                g[cgi].b = rest % m;
                rest /= m;
                g[cgi].c = rest % m;
                rest /= m;
                g[cgi].d = rest % m;
                rest /= m;
            }
            if (!invertible_mod_P(g.data(), n, cfg)) continue;
            for (size_t r = 0; r < reps.size(); ++r) {
                transform_reduced(b_red[r].data(), g.data(), n, m, cfg, t.data());
                tm.e = t;
                local[r].insert(codec.encode(tm));
            }
        }
        return local;
    });

    SetVec out(reps.size());
    for (const auto& ch : chunks)
        for (size_t r = 0; r < reps.size(); ++r)
            out[r].insert(ch[r].begin(), ch[r].end());
    return out;
}

std::unordered_set<long long> orbit_enumerate(const HermMat& b, const PAdicConfig& cfg,
                                              int ell, double budget, bool coarse) {
    return orbit_enumerate_many({b}, cfg, ell, budget, coarse).front();
}

} // namespace quatdens
