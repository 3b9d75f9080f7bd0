#include "flagcoh/lefschetz.hpp"

#include <stdexcept>
#include <string>

namespace flagcoh {

void BettiProfile::validate() const {
  if (ambient_n < 1)
    throw std::invalid_argument("ambient dimension must be positive");
  if (dim_y < 1 || dim_y > ambient_n - 1)
    throw std::invalid_argument("dim Y must lie in [1, " + std::to_string(ambient_n - 1) + "]");
  if (static_cast<int>(betti.size()) != dim_y)
    throw std::invalid_argument("expected exactly " + std::to_string(dim_y) +
                                " Betti numbers b_0..b_" + std::to_string(dim_y - 1) + ", got " +
                                std::to_string(betti.size()));
  for (long b : betti)
    if (b < 0) throw std::invalid_argument("Betti numbers must be non-negative");
  if (betti[0] < 1) throw std::invalid_argument("a nonempty variety has b_0 >= 1");
}

AmplenessVerdict ampleness_verdict(const BettiProfile& profile) {
  profile.validate();
  for (int i = 0; i < profile.dim_y; ++i) {
    const long expected = (i % 2 == 0) ? 1 : 0;
    if (profile.betti[i] != expected) return AmplenessVerdict{false, i};
  }
  return AmplenessVerdict{true, std::nullopt};
}

}  // namespace flagcoh
