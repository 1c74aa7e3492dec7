#pragma once

#include <unordered_set>
#include <vector>

#include "quatdens/partitions.hpp"
#include "quatdens/quat.hpp"

namespace quatdens {

// Hermitian matrices over the order: x = x* under the conjugate transpose.
// Entries are exact order elements; reductions to a finite level happen on
// demand inside the counting and orbit kernels.

struct HermMat {
    int n = 0;
    std::vector<Quat> e;  // row-major

    HermMat() = default;
    explicit HermMat(int size) : n(size), e(static_cast<size_t>(size) * size) {}

    static HermMat identity(int size) {
        HermMat m(size);
        for (int i = 0; i < size; ++i) m.e[i * size + i] = quat_one();
        return m;
    }
    static HermMat scalar(long long v) {
        HermMat m(1);
        m.e[0] = quat_central(v);
        return m;
    }

    const Quat& at(int i, int j) const { return e[i * n + j]; }

    // Sets (i,j) and mirrors (j,i) = conj.
    void set(int i, int j, const Quat& v) {
        e[i * n + j] = v;
        if (i != j) e[j * n + i] = quat_conj(v);
    }

    bool operator==(const HermMat&) const = default;
};

bool is_hermitian(const HermMat& x);
void require_hermitian(const HermMat& x);

// Diagonal entries in q^ell, off-diagonal entries in P^{2*ell-1}.
bool in_V_pi_ell(const HermMat& y, int ell, const PAdicConfig& cfg);
// Every entry in q^ell * O.
bool in_M_pi_ell(const HermMat& y, int ell, const PAdicConfig& cfg);

HermMat herm_scale(long long s, const HermMat& x);
HermMat herm_sub(const HermMat& x, const HermMat& y);
HermMat block_diag(const HermMat& x, const HermMat& y);

// The canonical orbit representative of an integral elementary divisor
// partition: even exponent 2e contributes a central diagonal entry q^e,
// an odd exponent 2e+1 (even multiplicity) contributes 2x2 blocks
// [[0, q^e Pi], [-q^e Pi, 0]].
HermMat canonical_form(const SignedPartition& gamma, const PAdicConfig& cfg);

// Scaled hyperbolic planes: h^r = [[0, Pi^r], [(-Pi)^r, 0]], and
// H^lam = h^{lam_1} perp ... perp h^{lam_k}.
HermMat build_h(int r, const PAdicConfig& cfg);
HermMat build_H(const GammaPartition& lam, const PAdicConfig& cfg);
HermMat build_Hk(int k, const PAdicConfig& cfg);

// Elementary divisor exponents of H^lam: every lam_i twice, decreasing.
SignedPartition h_partition(const GammaPartition& lam);
SignedPartition concat_sorted(const SignedPartition& a, const SignedPartition& b);

// <A,B> = sum_i A_ii B_ii + sum_{i<j} Trd(A_ij B_ji); central-valued.
long long pairing(const HermMat& a, const HermMat& b, const PAdicConfig& cfg);
long long pairing_mod(const HermMat& a, const HermMat& b, const PAdicConfig& cfg,
                      int ell);

// v* A v for v with `rows` rows and `cols` columns (row-major), A of size rows.
HermMat transform(const HermMat& a, const std::vector<Quat>& v, int rows, int cols,
                  const PAdicConfig& cfg);

// ---------------------------------------------------------------------------
// Packed hermitian residues.
//
// Entrywise packing stores the diagonal mod q^ell and off-diagonal entries
// mod P^{2*ell}. The coarse packing stores off-diagonal entries mod
// P^{2*ell-1} instead, which is exactly the precision the pairing against an
// integral matrix can see at level ell.

struct HermCodec {
    int n = 1;
    int ell = 1;
    bool coarse = false;
    long long m = 3;       // q^ell
    long long m1 = 1;      // q^{ell-1}, off-diagonal c,d radix in coarse mode
    PAdicConfig cfg;

    HermCodec(const PAdicConfig& c, int size, int level, bool coarse_mode = false);

    long long size() const;                      // number of residues
    long long encode(const HermMat& exact) const;
    HermMat decode(long long key) const;         // representative lift
    long long pairing_key(const HermMat& integral, long long key) const;  // mod q^ell
};

// Exact order of GL_n(O/P^{2*ell}).
Int gl_order(const PAdicConfig& cfg, int n, int ell);

// Invertibility over the residue field O/P (entries reduced mod Pi).
bool invertible_mod_P(const Quat* g, int n, const PAdicConfig& cfg);

// The set {g* B g : g in GL_n(O/P^{2*ell})} as packed keys. Exhaustive with a
// feasibility guard of q^{4*ell*n^2} enumerated matrices.
std::unordered_set<long long> orbit_enumerate(const HermMat& b, const PAdicConfig& cfg,
                                              int ell, double budget,
                                              bool coarse = false);

// One pass classifying several representatives at once; returns one orbit set
// per input, in order.
std::vector<std::unordered_set<long long>> orbit_enumerate_many(
    const std::vector<HermMat>& reps, const PAdicConfig& cfg, int ell, double budget,
    bool coarse = false);

} // namespace quatdens
