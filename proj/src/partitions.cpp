#include "quatdens/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace quatdens {

bool lambda_valid(const SignedPartition& g, bool allow_inf) {
    const auto& p = g.parts;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (exp_is_inf(p[i])) {
            if (!allow_inf) return false;
        } else if (p[i] % 2 != 0 && (j - i) % 2 != 0) {
            return false;  // odd value with odd multiplicity
        }
        i = j;
    }
    return true;
}

void require_lambda(const SignedPartition& g, bool allow_inf) {
    if (!lambda_valid(g, allow_inf))
        throw partition_error("not a valid elementary divisor partition: " +
                              partition_str(g));
}

static void lambda_rec(int n, int bound, int maxv, std::vector<int>& cur,
                       std::vector<SignedPartition>& out) {
    if (n == 0) {
        SignedPartition g(cur);
        if (lambda_valid(g)) out.push_back(std::move(g));
        return;
    }
    for (int v = std::min(bound, maxv); v >= 0; --v) {
        cur.push_back(v);
        lambda_rec(n - 1, bound, v, cur, out);
        cur.pop_back();
    }
}

std::vector<SignedPartition> enumerate_lambda_plus(int n, int bound) {
    std::vector<SignedPartition> out;
    std::vector<int> cur;
    lambda_rec(n, bound, bound, cur, out);
    return out;
}

void require_gamma(const GammaPartition& g, int cap) {
    const auto& p = g.parts;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw partition_error("parts not decreasing");
    for (int v : p) {
        if (v < 0) throw partition_error("negative part in Gamma partition");
        if (cap >= 0 && v > cap) throw partition_error("part exceeds cap");
    }
}

static void gamma_rec(int k, int maxv, std::vector<int>& cur,
                      std::vector<GammaPartition>& out) {
    if (k == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = maxv; v >= 0; --v) {
        cur.push_back(v);
        gamma_rec(k - 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<GammaPartition> enumerate_gamma(int k, int ell) {
    std::vector<GammaPartition> out;
    std::vector<int> cur;
    gamma_rec(k, ell, cur, out);
    return out;
}

GammaPartition conjugate(const GammaPartition& lam, int len) {
    std::vector<int> hat(len, 0);
    for (int i = 1; i <= len; ++i)
        for (int v : lam.parts)
            if (v >= i) ++hat[i - 1];
    return GammaPartition(hat);
}

long long pair_partitions(const GammaPartition& a, const GammaPartition& b) {
    size_t n = std::min(a.parts.size(), b.parts.size());
    long long s = 0;
    for (size_t i = 0; i < n; ++i) s += 1LL * a.parts[i] * b.parts[i];
    // Remaining parts pair against implicit zeros.
    return s;
}

std::vector<std::pair<int, int>> multiplicity_form(const std::vector<int>& parts) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        out.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

SignedPartition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t caret = item.find('^');
        std::string base = caret == std::string::npos ? item : item.substr(0, caret);
        int mult = 1;
        if (caret != std::string::npos) mult = std::stoi(item.substr(caret + 1));
        if (mult < 0) throw partition_error("negative multiplicity in '" + text + "'");
        int v;
        if (base == "inf")
            v = kInfExp;
        else
            try {
                v = std::stoi(base);
            } catch (const std::exception&) {
                throw partition_error("bad partition literal '" + text + "'");
            }
        for (int i = 0; i < mult; ++i) parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return SignedPartition(parts);
}

std::string partition_str(const SignedPartition& g) {
    std::string s;
    for (size_t i = 0; i < g.parts.size(); ++i) {
        if (i) s += ",";
        s += exp_is_inf(g.parts[i]) ? "inf" : std::to_string(g.parts[i]);
    }
    return s;
}

std::string partition_str(const GammaPartition& g) {
    std::string s;
    for (size_t i = 0; i < g.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.parts[i]);
    }
    return s;
}

} // namespace quatdens
