#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "quatdens/quat.hpp"

using namespace quatdens;

namespace {
const PAdicConfig cfg3 = PAdicConfig::make(3);
const PAdicConfig cfg5 = PAdicConfig::make(5);

QuatRes random_res(std::mt19937_64& rng, int level, const PAdicConfig& cfg) {
    long long m = cfg.pow_level(level);
    std::uniform_int_distribution<long long> d(0, m - 1);
    return {d(rng), d(rng), d(rng), d(rng), level};
}
}  // namespace

TEST_CASE("config picks the smallest non-residue") {
    CHECK(cfg3.eps_sq == 2);
    CHECK(cfg5.eps_sq == 2);
    CHECK(PAdicConfig::make(7).eps_sq == 3);
    CHECK_THROWS_AS(PAdicConfig::make(2), std::invalid_argument);
    CHECK_THROWS_AS(PAdicConfig::make(9), std::invalid_argument);
}

TEST_CASE("defining relations") {
    // eps * Pi = -(Pi * eps) and Pi^2 = q
    Quat eps = quat_eps(), pi = quat_pi_unif();
    CHECK(quat_mul(eps, pi, cfg3) == -quat_mul(pi, eps, cfg3));
    CHECK(quat_mul(pi, pi, cfg3) == quat_central(3));
    CHECK(quat_mul(eps, eps, cfg3) == quat_central(cfg3.eps_sq));
}

TEST_CASE("norm and trace basics") {
    QuatRes one{1, 0, 0, 0, 2};
    CHECK(nrd(one, cfg3) == 1);
    CHECK(trd(one, cfg3) == 2);
    QuatRes pi{0, 0, 1, 0, 2};
    CHECK(nrd(pi, cfg3) == mod_reduce(-3, 9));  // Nrd(Pi) = -q
    QuatRes x{1, 2, 0, 1, 1};
    // nrd(x) == x x* and trd(x) == x + x* land in the center
    QuatRes xxs = quat_mul(x, quat_conj(x, cfg3), cfg3);
    CHECK(xxs.b == 0);
    CHECK(xxs.c == 0);
    CHECK(xxs.d == 0);
    CHECK(xxs.a == nrd(x, cfg3));
    QuatRes xpxs = quat_add(x, quat_conj(x, cfg3), cfg3);
    CHECK(xpxs.a == trd(x, cfg3));
}

TEST_CASE("level mismatch is an error") {
    QuatRes x{1, 0, 0, 0, 1}, y{1, 0, 0, 0, 2};
    CHECK_THROWS_AS(quat_mul(x, y, cfg3), precision_error);
}

TEST_CASE("involution is an exhaustive anti-automorphism at q=3 level 1") {
    auto all = enumerate_residues(cfg3, 1);
    REQUIRE(all.size() == 81);
    for (const auto& x : all)
        for (const auto& y : all) {
            QuatRes lhs = quat_conj(quat_mul(x, y, cfg3), cfg3);
            QuatRes rhs = quat_mul(quat_conj(y, cfg3), quat_conj(x, cfg3), cfg3);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("involution anti-automorphism randomized at level 2") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 300; ++it) {
        QuatRes x = random_res(rng, 2, cfg3), y = random_res(rng, 2, cfg3);
        CHECK(quat_conj(quat_mul(x, y, cfg3), cfg3) ==
              quat_mul(quat_conj(y, cfg3), quat_conj(x, cfg3), cfg3));
    }
}

TEST_CASE("Trd(xy) = Trd(yx) exhaustively at q=3 level 1") {
    auto all = enumerate_residues(cfg3, 1);
    for (const auto& x : all)
        for (const auto& y : all)
            REQUIRE(trd(quat_mul(x, y, cfg3), cfg3) == trd(quat_mul(y, x, cfg3), cfg3));
}

TEST_CASE("unit counts match q^{4l}(1 - q^{-2})") {
    CHECK(enumerate_residues(cfg3, 1).size() == 81);
    CHECK(enumerate_units(cfg3, 1).size() == 72);
    CHECK(enumerate_units(cfg5, 1).size() == 600);
    CHECK(enumerate_residues(cfg3, 2).size() == 6561);
    CHECK(enumerate_units(cfg3, 2).size() == 6561 - 729);
}

TEST_CASE("norms of units equidistribute over unit classes at q=3 level 1") {
    std::map<long long, int> freq;
    for (const auto& u : enumerate_units(cfg3, 1)) ++freq[nrd(u, cfg3)];
    REQUIRE(freq.size() == 2);
    CHECK(freq[1] == 36);
    CHECK(freq[2] == 36);
}

TEST_CASE("pi valuation") {
    QuatRes zero{0, 0, 0, 0, 2};
    CHECK(pi_valuation(zero, cfg3) == 4);
    QuatRes pi{0, 0, 1, 0, 2};
    CHECK(pi_valuation(pi, cfg3) == 1);
    QuatRes p_eps{0, 3, 0, 0, 2};  // q * eps = Pi^2 eps
    CHECK(pi_valuation(p_eps, cfg3) == 2);
    QuatRes one{1, 0, 0, 0, 1};
    CHECK(pi_valuation(one, cfg3) == 0);

    // v(xy) = v(x) + v(y) whenever the sum is visible at this precision,
    // checked exhaustively at level 1.
    for (const auto& x : enumerate_residues(cfg3, 1))
        for (const auto& y : enumerate_residues(cfg3, 1)) {
            int vx = pi_valuation(x, cfg3), vy = pi_valuation(y, cfg3);
            if (vx + vy < 2) REQUIRE(pi_valuation(quat_mul(x, y, cfg3), cfg3) == vx + vy);
        }
}

TEST_CASE("membership in P^2 \\ P^3 by enumeration matches valuation 2") {
    // q*eps lies in P^2 but not P^3: P^2 = q*O and P^3 = q*P.
    for (const auto& x : enumerate_residues(cfg3, 2)) {
        int v = pi_valuation(x, cfg3);
        bool in_p2 = x.a % 3 == 0 && x.b % 3 == 0 && x.c % 3 == 0 && x.d % 3 == 0;
        bool in_p3 = x.a % 9 == 0 && x.b % 9 == 0 && x.c % 3 == 0 && x.d % 3 == 0;
        REQUIRE(((v >= 2) == in_p2));
        REQUIRE(((v >= 3) == (in_p2 && in_p3)));
    }
}

TEST_CASE("Trd(P^m) is exactly q^{ceil(m/2)} as a set") {
    const int level = 2;
    for (int m = 0; m <= 4; ++m) {
        std::map<long long, bool> seen;
        for (const auto& x : enumerate_residues(cfg3, level))
            if (pi_valuation(x, cfg3) >= m) seen[trd(x, cfg3)] = true;
        long long step = 1;
        for (int i = 0; i < (m + 1) / 2; ++i) step *= 3;
        int expect = static_cast<int>(9 / step);
        if (expect == 0) expect = 1;
        CHECK(static_cast<int>(seen.size()) == expect);
        for (auto& [v, _] : seen) CHECK(v % step == 0);
    }
}

TEST_CASE("phi is multiplicative, determinant is nrd, trace is trd") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 400; ++it) {
        int level = 1 + static_cast<int>(it % 2);
        QuatRes x = random_res(rng, level, cfg3), y = random_res(rng, level, cfg3);
        PhiImage px = phi(x, cfg3), py = phi(y, cfg3);
        CHECK(phi(quat_mul(x, y, cfg3), cfg3) == phi_mul(px, py, cfg3));
        GaloisRingElem det = phi_det(px, cfg3);
        CHECK(det.x == nrd(x, cfg3));
        CHECK(det.y == 0);
        GaloisRingElem tr = phi_trace(px, cfg3);
        CHECK(tr.x == trd(x, cfg3));
        CHECK(tr.y == 0);
        // det(phi(x*)) = det(phi(x))
        CHECK(phi_det(phi(quat_conj(x, cfg3), cfg3), cfg3) == det);
    }
}

TEST_CASE("phi is injective at level 1 for q=3") {
    int zero_kernel = 0;
    for (const auto& x : enumerate_residues(cfg3, 1)) {
        PhiImage p = phi(x, cfg3);
        bool all_zero = true;
        for (const auto& g : p) all_zero = all_zero && g.x == 0 && g.y == 0;
        if (all_zero) ++zero_kernel;
    }
    CHECK(zero_kernel == 1);  // only x = 0
}

TEST_CASE("Galois conjugation on the quadratic subring is a ring map") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> d(0, 8);
    for (int it = 0; it < 200; ++it) {
        GaloisRingElem u{d(rng), d(rng), 2}, v{d(rng), d(rng), 2};
        CHECK(gr_conj(gr_mul(u, v, cfg3), cfg3) ==
              gr_mul(gr_conj(u, cfg3), gr_conj(v, cfg3), cfg3));
        CHECK(gr_conj(gr_add(u, v, cfg3), cfg3) ==
              gr_add(gr_conj(u, cfg3), gr_conj(v, cfg3), cfg3));
    }
}

TEST_CASE("central values commute with everything") {
    auto all = enumerate_residues(cfg3, 1);
    for (long long v = 0; v < 3; ++v) {
        QuatRes n{v, 0, 0, 0, 1};
        for (const auto& y : all)
            REQUIRE(quat_mul(n, y, cfg3) == quat_mul(y, n, cfg3));
    }
}
