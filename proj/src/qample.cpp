#include "flagcoh/qample.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagcoh/bwb.hpp"

namespace flagcoh {

int q_ample_index(const Weight& lambda) {
  const RootSystem rs(lambda.rank());
  int count = 0;
  for (Root alpha : rs.positive_roots())
    if (pairing(lambda, alpha) <= 0) ++count;
  return count;
}

namespace {

// surviving degree of the weight with the given epsilon coordinates
std::optional<int> degree_from_eps(const std::vector<Int>& l) {
  const int n = static_cast<int>(l.size());
  int negatives = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (l[i] == l[j]) return std::nullopt;
      if (l[i] < l[j]) ++negatives;
    }
  return negatives;
}

}  // namespace

int q_ample_index_oracle(const Weight& lambda, const OracleWindow& window) {
  if (window.box_radius < 1)
    throw std::invalid_argument("oracle box radius must be >= 1");
  if (window.m_min <= 0 || window.m_min >= window.m_max)
    throw std::invalid_argument("oracle window needs 0 < m_min < m_max");

  const int rank = lambda.rank();
  const std::vector<Int> lam = lambda.eps();
  const std::vector<Int> rho = Weight::rho(rank).eps();
  const Int radius = window.box_radius;

  int worst = 0;
  std::vector<Int> nu(rank, -radius);
  std::vector<Int> l(rank + 1);
  for (;;) {
    // eps coordinates of the twist nu (suffix sums), reused across m
    std::vector<Int> nu_eps(rank + 1, 0);
    for (int k = rank - 1; k >= 0; --k) nu_eps[k] = nu[k] + nu_eps[k + 1];

    for (int m = window.m_min; m <= window.m_max; ++m) {
      for (int k = 0; k <= rank; ++k) l[k] = m * lam[k] + nu_eps[k] + rho[k];
      if (const auto degree = degree_from_eps(l)) worst = std::max(worst, *degree);
    }

    int k = rank - 1;
    while (k >= 0 && nu[k] == radius) nu[k--] = -radius;
    if (k < 0) break;
    ++nu[k];
  }
  return worst;
}

std::vector<ChamberRecord> chamber_map(int rank, int range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  const RootSystem rs(rank);  // validates the rank

  const long long side = 2LL * range + 1;
  long long points = 1;
  for (int k = 0; k < rank; ++k) {
    points *= side;
    if (points > (1LL << 22))
      throw std::length_error("chamber grid too large: (2*range+1)^rank exceeds 2^22 points");
  }

  std::vector<ChamberRecord> records;
  records.reserve(static_cast<std::size_t>(points));
  std::vector<Int> coords(rank, -range);
  for (;;) {
    Weight lambda{coords};
    const int qmin = q_ample_index(lambda);
    const auto reduced = dominant_conjugate(lambda);
    std::optional<int> weyl_length;
    if (reduced) weyl_length = reduced->w.length();
    records.push_back(ChamberRecord{std::move(lambda), qmin, reduced.has_value(), weyl_length});

    int k = rank - 1;
    while (k >= 0 && coords[k] == range) coords[k--] = -range;
    if (k < 0) break;
    ++coords[k];
  }
  return records;
}

}  // namespace flagcoh
