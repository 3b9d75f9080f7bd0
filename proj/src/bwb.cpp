#include "flagcoh/bwb.hpp"

#include <stdexcept>

namespace flagcoh {

CohomologyResult bwb_cohomology(const Weight& lambda) {
  const Weight rho = Weight::rho(lambda.rank());
  const auto reduced = dominant_conjugate(lambda + rho);
  if (!reduced) return std::nullopt;
  Weight hw = reduced->dominant - rho;
  mpz_class dim = weyl_dimension(hw);
  return Nonvanishing{reduced->w.length(), std::move(hw), std::move(dim)};
}

std::optional<int> bwb_degree(const Weight& lambda) {
  std::vector<Int> l = (lambda + Weight::rho(lambda.rank())).eps();
  const int n = static_cast<int>(l.size());
  int negatives = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (l[i] == l[j]) return std::nullopt;
      if (l[i] < l[j]) ++negatives;
    }
  return negatives;
}

mpz_class bwb_h(const Weight& lambda, int degree) {
  const int top = lambda.rank() * (lambda.rank() + 1) / 2;
  if (degree < 0 || degree > top)
    throw std::invalid_argument("cohomological degree " + std::to_string(degree) +
                                " out of range [0," + std::to_string(top) + "]");
  const CohomologyResult result = bwb_cohomology(lambda);
  if (result && result->degree == degree) return result->dimension;
  return 0;
}

mpz_class weyl_dimension(const Weight& mu) {
  if (!mu.is_dominant())
    throw std::invalid_argument("weyl_dimension requires a dominant weight, got " + mu.str());
  const RootSystem rs(mu.rank());
  const Weight shifted = mu + Weight::rho(mu.rank());
  mpz_class num = 1;
  mpz_class den = 1;
  for (Root alpha : rs.positive_roots()) {
    num *= static_cast<long>(pairing(shifted, alpha));
    den *= static_cast<long>(alpha.j - alpha.i);  // <rho, alpha^vee>
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

mpz_class euler_characteristic(const Weight& lambda) {
  const RootSystem rs(lambda.rank());
  const Weight shifted = lambda + Weight::rho(lambda.rank());
  mpz_class num = 1;
  mpz_class den = 1;
  for (Root alpha : rs.positive_roots()) {
    const Int p = pairing(shifted, alpha);
    if (p == 0) return 0;
    num *= static_cast<long>(p);
    den *= static_cast<long>(alpha.j - alpha.i);
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace flagcoh
