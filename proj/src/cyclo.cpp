#include "quatdens/cyclo.hpp"

namespace quatdens {

Cyclo::Cyclo(long q, int level) : q_(q), level_(level) {
    if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
    modulus_ = 1;
    for (int i = 0; i < level; ++i) modulus_ *= q;
    coef_.assign(static_cast<size_t>(modulus_), Int(0));
}

void Cyclo::add_term(long long t, long long count) {
    t %= modulus_;
    if (t < 0) t += modulus_;
    coef_[static_cast<size_t>(t)] += count;
}

void Cyclo::add(const Cyclo& other) {
    if (other.modulus_ != modulus_) throw precision_error("cyclotomic level mismatch");
    for (long long t = 0; t < modulus_; ++t) coef_[t] += other.coef_[t];
}

Cyclo Cyclo::mul(const Cyclo& other) const {
    if (other.modulus_ != modulus_) throw precision_error("cyclotomic level mismatch");
    Cyclo out(q_, level_);
    for (long long s = 0; s < modulus_; ++s) {
        if (coef_[s] == 0) continue;
        for (long long t = 0; t < modulus_; ++t) {
            if (other.coef_[t] == 0) continue;
            long long u = s + t;
            if (u >= modulus_) u -= modulus_;
            out.coef_[u] += coef_[s] * other.coef_[t];
        }
    }
    return out;
}

std::vector<Int> Cyclo::power_basis() const {
    // Fold exponents down with zeta^{s + (q-1)q^{level-1}} =
    // -sum_{j=0}^{q-2} zeta^{s + j q^{level-1}}, i.e. division by the
    // minimal polynomial of zeta.
    std::vector<Int> work = coef_;
    long long step = modulus_ / q_;          // q^{level-1}
    long long phi = step * (q_ - 1);         // degree of the power basis
    for (long long t = modulus_ - 1; t >= phi; --t) {
        if (work[t] == 0) continue;
        Int c = work[t];
        work[t] = 0;
        long long s = t - phi;  // t = s + (q-1)*step with 0 <= s < step
        for (long j = 0; j < q_ - 1; ++j) work[s + j * step] -= c;
    }
    work.resize(static_cast<size_t>(phi));
    return work;
}

bool Cyclo::is_zero() const {
    for (const Int& c : power_basis())
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    std::vector<Int> pb = power_basis();
    for (size_t t = 1; t < pb.size(); ++t)
        if (pb[t] != 0) return false;
    return true;
}

Int Cyclo::rational_value() const {
    std::vector<Int> pb = power_basis();
    for (size_t t = 1; t < pb.size(); ++t)
        if (pb[t] != 0)
            throw rationality_error(
                "character sum is not Galois-fixed; this indicates an arithmetic bug");
    return pb[0];
}

Cyclo char_line_sum(long q, int level, long long c, long long range) {
    Cyclo s(q, level);
    long long t = 0, m = s.modulus();
    c = ((c % m) + m) % m;
    for (long long y = 0; y < range; ++y) {
        s.add_term(t, 1);
        t += c;
        if (t >= m) t -= m;
    }
    return s;
}

} // namespace quatdens
