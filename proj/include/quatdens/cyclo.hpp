#pragma once

#include <vector>

#include "quatdens/config.hpp"
#include "quatdens/errors.hpp"
#include "quatdens/rat.hpp"

namespace quatdens {

// Exact elements of Z[zeta] for zeta a primitive (q^level)-th root of unity,
// held as an integer coefficient vector indexed by exponents mod q^level.
// Character sums are accumulated as counts per residue class and only
// resolved at the end; a value is read off as a rational exactly when it is
// fixed by the full Galois group, and anything short of that is reported as
// an internal arithmetic failure rather than coerced.
class Cyclo {
public:
    Cyclo(long q, int level);

    long q() const { return q_; }
    int level() const { return level_; }
    long long modulus() const { return modulus_; }

    // Adds count * zeta^t.
    void add_term(long long t, long long count);
    void add(const Cyclo& other);
    Cyclo mul(const Cyclo& other) const;

    bool is_zero() const;
    bool is_rational() const;
    // Exact integer value; throws rationality_error if not Galois-fixed.
    Int rational_value() const;

    // Coefficients rewritten on the power basis 1, zeta, ..., zeta^{phi-1}
    // (unique representation; used by the rationality test).
    std::vector<Int> power_basis() const;

private:
    long q_;
    int level_;
    long long modulus_;  // q^level
    std::vector<Int> coef_;
};

// Geometric character sum sum_{y mod range} zeta^{c*y} at the given level,
// as an exact Cyclo value.
Cyclo char_line_sum(long q, int level, long long c, long long range);

} // namespace quatdens
