// Ampleness of a smooth subvariety Y of P^n decided from its rational Betti
// numbers: Y is ample exactly when its cohomology below dim Y matches that
// of the ambient projective space (1 in even degrees, 0 in odd degrees).
// The caller supplies the Betti numbers and attests that Y is smooth; no
// topology is computed here.

#pragma once

#include <optional>
#include <vector>

namespace flagcoh {

// Rational Betti numbers b_0 .. b_{dim_y - 1} of Y in degrees below dim Y.
struct BettiProfile {
  int ambient_n;            // >= 1
  int dim_y;                // in [1, ambient_n - 1]
  std::vector<long> betti;  // exactly dim_y entries, non-negative, b_0 >= 1

  void validate() const;  // throws std::invalid_argument
};

struct AmplenessVerdict {
  bool ample;
  std::optional<int> first_failing_degree;  // smallest violating i; present iff !ample
};

AmplenessVerdict ampleness_verdict(const BettiProfile& profile);

}  // namespace flagcoh
