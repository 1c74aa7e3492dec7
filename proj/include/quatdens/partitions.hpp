#pragma once

#include <limits>
#include <string>
#include <vector>

#include "quatdens/errors.hpp"

namespace quatdens {

// Exponent tuples of elementary divisors.
//
// A signed partition is a decreasing integer tuple; the orbit classification
// additionally requires every odd value to occur with even multiplicity.
// A part may carry the sentinel `kInfExp` for a degenerate (zero) divisor;
// sentinel parts act as +infinity in exponent arithmetic.

constexpr int kInfExp = std::numeric_limits<int>::max() / 4;

inline bool exp_is_inf(int e) { return e >= kInfExp; }

struct SignedPartition {
    std::vector<int> parts;  // decreasing

    SignedPartition() = default;
    explicit SignedPartition(std::vector<int> p) : parts(std::move(p)) {}

    int size() const { return static_cast<int>(parts.size()); }
    long long weight() const {  // sum of parts; only meaningful without sentinels
        long long s = 0;
        for (int v : parts) s += v;
        return s;
    }
    bool operator==(const SignedPartition&) const = default;
};

// Decreasing, and odd values occur with even multiplicity.
bool lambda_valid(const SignedPartition& g, bool allow_inf = false);
void require_lambda(const SignedPartition& g, bool allow_inf = false);

// All of Lambda^+_{n,bound}: decreasing tuples in [0, bound]^n obeying the
// parity rule.
std::vector<SignedPartition> enumerate_lambda_plus(int n, int bound);

struct GammaPartition {
    std::vector<int> parts;  // decreasing, non-negative

    GammaPartition() = default;
    explicit GammaPartition(std::vector<int> p) : parts(std::move(p)) {}

    int size() const { return static_cast<int>(parts.size()); }
    long long weight() const {
        long long s = 0;
        for (int v : parts) s += v;
        return s;
    }
    bool operator==(const GammaPartition&) const = default;
};

void require_gamma(const GammaPartition& g, int cap = -1);

// Gamma_{k,ell}: decreasing tuples of length k with parts in [0, ell].
std::vector<GammaPartition> enumerate_gamma(int k, int ell);

// Conjugate: hat(lam)_i = #{j : lam_j >= i} for i = 1..len. For lam in
// Gamma_{k,ell} with len = ell the conjugate lies in Gamma_{ell,k} and
// conjugation is an involution.
GammaPartition conjugate(const GammaPartition& lam, int len);

long long pair_partitions(const GammaPartition& a, const GammaPartition& b);

// (value, multiplicity) runs of a decreasing tuple, largest value first.
std::vector<std::pair<int, int>> multiplicity_form(const std::vector<int>& parts);

// Comma-separated literal with "^" multiplicity sugar and "inf" sentinel:
// "2,1,0", "1^2,0", "inf,-2".
SignedPartition parse_partition(const std::string& text);
std::string partition_str(const SignedPartition& g);
std::string partition_str(const GammaPartition& g);

} // namespace quatdens
