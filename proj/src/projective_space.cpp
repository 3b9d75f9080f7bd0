#include "flagcoh/projective_space.hpp"

#include <stdexcept>
#include <string>

namespace flagcoh {

namespace {

void check(TwistSpec spec) {
  if (spec.n < 1)
    throw std::invalid_argument("ambient dimension must be >= 1, got " + std::to_string(spec.n));
}

}  // namespace

mpz_class binomial(long a, int k) {
  if (a < 0 || k < 0) throw std::invalid_argument("binomial arguments must be non-negative");
  if (a < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return out;
}

mpz_class bott_h(TwistSpec spec, int i) {
  check(spec);
  if (i < 0 || i > spec.n)
    throw std::invalid_argument("degree " + std::to_string(i) + " out of range [0," +
                                std::to_string(spec.n) + "]");
  if (i == 0 && spec.d >= 0) return binomial(static_cast<long>(spec.n) + spec.d, spec.n);
  if (i == spec.n && spec.d <= -spec.n - 1) return binomial(-static_cast<long>(spec.d) - 1, spec.n);
  return 0;
}

int pn_q_ample_index(TwistSpec spec) {
  check(spec);
  return spec.d > 0 ? 0 : spec.n;
}

}  // namespace flagcoh
