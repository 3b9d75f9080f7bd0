// Cohomology of line bundles on the full flag variety of SL_{r+1}.
//
// For L_lambda either every cohomology group vanishes (lambda + rho on a
// chamber wall) or exactly one degree survives: the number of positive roots
// paired negatively with lambda + rho.  The surviving group is the
// irreducible representation with highest weight w(lambda + rho) - rho, whose
// dimension comes from the Weyl product formula.  Dimensions are exact
// arbitrary-precision integers.

#pragma once

#include <gmpxx.h>

#include <optional>

#include "flagcoh/root_system.hpp"

namespace flagcoh {

struct Nonvanishing {
  int degree;             // in [0, r(r+1)/2]
  Weight highest_weight;  // dominant
  mpz_class dimension;    // >= 1
};

// nullopt means every degree vanishes.
using CohomologyResult = std::optional<Nonvanishing>;

CohomologyResult bwb_cohomology(const Weight& lambda);

// Degree of the unique surviving group, skipping the dimension work.
std::optional<int> bwb_degree(const Weight& lambda);

// dim H^i(X, L_lambda) for 0 <= i <= r(r+1)/2.
mpz_class bwb_h(const Weight& lambda, int degree);

// Product over positive roots of <mu+rho, alpha^vee> / <rho, alpha^vee>;
// mu must be dominant.  Equals 1 iff mu = 0.
mpz_class weyl_dimension(const Weight& mu);

// Signed product over positive roots of <lambda+rho, alpha^vee> divided by
// the rho products.  Zero exactly when lambda + rho is on a wall; otherwise
// (-1)^degree * dimension.  Kept independent of bwb_cohomology so the two
// can be checked against each other.
mpz_class euler_characteristic(const Weight& lambda);

}  // namespace flagcoh
