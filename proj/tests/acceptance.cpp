// Acceptance suite: every release-gating check in one binary, one PASS/FAIL
// line per criterion.  All comparisons are exact; each criterion also
// carries a wall-clock budget.
//
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flagcoh/bwb.hpp"
#include "flagcoh/lefschetz.hpp"
#include "flagcoh/projective_space.hpp"
#include "flagcoh/qample.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"

using namespace flagcoh;

namespace {

std::string g_cli_path;

using CriterionFn = std::function<bool(std::string&)>;

bool require(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// 1. the flagship example: L_(2,-1) is 1-ample, H^2 of its canonical twist
// is one-dimensional, and the CLI reports the same
bool criterion_counterexample(std::string& detail) {
  bool ok = true;
  ok &= require(q_ample_index(Weight({2, -1})) == 1, detail, "closed-form qmin of (2,-1) != 1");
  ok &= require(q_ample_index_oracle(Weight({2, -1}), OracleWindow{3, 10, 30}) == 1, detail,
                "oracle qmin of (2,-1) != 1");
  const CohomologyResult res = bwb_cohomology(Weight({0, -3}));
  ok &= require(res.has_value(), detail, "H^*(L_(0,-3)) vanished entirely");
  if (res) {
    ok &= require(res->degree == 2, detail, "surviving degree of (0,-3) != 2");
    ok &= require(res->highest_weight == Weight({0, 0}), detail, "highest weight != (0,0)");
    ok &= require(res->dimension == 1, detail, "dim H^2 != 1");
  }
  const auto run = testing::run_command(g_cli_path, "verify-paper");
  ok &= require(run.exit_code == 0, detail,
                "verify-paper exited with " + std::to_string(run.exit_code));
  return ok;
}

// 2. chamber classification of [-6,6]^2: 169 points, chamber lengths, the
// ample cone, and closure of the qmin<=1 region under the two simple
// reflections of dominant interior points
bool criterion_chamber_map(std::string& detail) {
  bool ok = true;
  const auto records = chamber_map(2, 6);
  ok &= require(records.size() == 169, detail, "expected 169 records");

  std::map<std::pair<Int, Int>, int> qmin_at;
  for (const auto& rec : records) {
    qmin_at[{rec.weight.coord(1), rec.weight.coord(2)}] = rec.qmin;
    if (rec.regular)
      ok &= require(rec.qmin == *rec.weyl_length, detail,
                    "regular point " + rec.weight.str() + " has qmin != weyl_length");
    ok &= require((rec.qmin == 0) == rec.weight.is_strictly_dominant(), detail,
                  "ample cone mismatch at " + rec.weight.str());
  }

  const WeylElement s1 = WeylElement::simple_reflection(2, 1);
  const WeylElement s2 = WeylElement::simple_reflection(2, 2);
  for (const auto& rec : records) {
    if (!rec.weight.is_strictly_dominant()) continue;
    for (const WeylElement* s : {&s1, &s2}) {
      const Weight image = s->apply(rec.weight);
      const auto it = qmin_at.find({image.coord(1), image.coord(2)});
      if (it == qmin_at.end()) continue;  // reflection left the box
      ok &= require(it->second <= 1, detail,
                    "reflection image " + image.str() + " has qmin > 1");
    }
  }

  const auto csv = testing::run_command(g_cli_path, "chambers --rank 2 --range 6 --format csv");
  ok &= require(csv.exit_code == 0, detail, "chambers CSV run failed");
  std::size_t rows = 0;
  for (char c : csv.output)
    if (c == '\n') ++rows;
  ok &= require(rows == 170, detail, "chambers CSV should have 169 rows plus a header");
  return ok;
}

// 3. h^i(lambda) = h^{N-i}(-2rho - lambda) in degree and dimension
bool criterion_serre_duality(std::string& detail) {
  bool ok = true;
  for (const auto& [rank, radius] : std::vector<std::pair<int, Int>>{{2, 5}, {3, 3}}) {
    const int top = rank * (rank + 1) / 2;
    const Weight twice_rho = 2 * Weight::rho(rank);
    for (const Weight& lambda : testing::weight_grid(rank, radius)) {
      const CohomologyResult a = bwb_cohomology(lambda);
      const CohomologyResult b = bwb_cohomology(-twice_rho - lambda);
      ok &= require(a.has_value() == b.has_value(), detail,
                    "vanishing mismatch at " + lambda.str());
      if (a && b) {
        ok &= require(a->degree == top - b->degree, detail, "degree mismatch at " + lambda.str());
        ok &= require(a->dimension == b->dimension, detail,
                      "dimension mismatch at " + lambda.str());
      }
    }
  }
  return ok;
}

// 4. the signed product matches the alternating sum of the h^i, and is zero
// exactly on the walls
bool criterion_euler(std::string& detail) {
  bool ok = true;
  for (const auto& [rank, radius] : std::vector<std::pair<int, Int>>{{2, 5}, {3, 3}}) {
    for (const Weight& lambda : testing::weight_grid(rank, radius)) {
      const CohomologyResult res = bwb_cohomology(lambda);
      mpz_class alternating = 0;
      if (res) alternating = (res->degree % 2 == 0) ? res->dimension : -res->dimension;
      const mpz_class chi = euler_characteristic(lambda);
      ok &= require(chi == alternating, detail, "Euler mismatch at " + lambda.str());
      ok &= require((chi == 0) == !res.has_value(), detail,
                    "Euler zero-locus mismatch at " + lambda.str());
    }
  }
  return ok;
}

// 5. closed form vs the definition-level twist test
bool criterion_oracle_equivalence(std::string& detail) {
  bool ok = true;
  const OracleWindow window{3, 10, 30};
  for (const Weight& lambda : testing::weight_grid(2, 4))
    ok &= require(q_ample_index(lambda) == q_ample_index_oracle(lambda, window), detail,
                  "oracle disagreement at " + lambda.str());

  testing::SplitMix rng(0x9a3f51c2u);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> coords(3);
    for (Int& c : coords) c = rng.in_range(-6, 6);
    const Weight lambda(coords);
    ok &= require(q_ample_index(lambda) == q_ample_index_oracle(lambda, window), detail,
                  "oracle disagreement at " + lambda.str());
  }
  return ok;
}

// 6. O(-1) on P^n is exactly n-ample, witnessed by undying top cohomology
bool criterion_pn_negative_twist(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    ok &= require(pn_q_ample_index({n, -1}) == n, detail,
                  "pn_q_ample_index(" + std::to_string(n) + ",-1) != n");
    for (int m = n + 1; m <= 20; ++m)
      ok &= require(bott_h({n, -m}, n) > 0, detail,
                    "h^n(O(-" + std::to_string(m) + ")) vanished on P^" + std::to_string(n));
  }
  return ok;
}

// 7. duality and Euler polynomiality of the closed-form h^i on P^n
bool criterion_pn_invariants(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n)
    for (int d = -12; d <= 12; ++d) {
      for (int i = 0; i <= n; ++i)
        ok &= require(bott_h({n, d}, i) == bott_h({n, -d - n - 1}, n - i), detail,
                      "Serre duality fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
      mpz_class chi = 0;
      for (int i = 0; i <= n; ++i) {
        const mpz_class h = bott_h({n, d}, i);
        chi += (i % 2 == 0) ? h : -h;
      }
      ok &= require(chi == testing::binomial_poly(n + d, n), detail,
                    "Euler polynomiality fails at n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
    }
  return ok;
}

// 8. the four classical ampleness verdicts
bool criterion_betti_corpus(std::string& detail) {
  bool ok = true;
  ok &= require(ampleness_verdict({4, 1, {1}}).ample, detail, "connected curve not ample");
  ok &= require(ampleness_verdict({5, 2, {1, 0}}).ample, detail, "Enriques surface not ample");
  const auto skew = ampleness_verdict({3, 1, {2}});
  ok &= require(!skew.ample && skew.first_failing_degree == 0, detail, "skew lines verdict wrong");
  const auto segre = ampleness_verdict({5, 3, {1, 0, 2}});
  ok &= require(!segre.ample && segre.first_failing_degree == 2, detail, "Segre verdict wrong");
  return ok;
}

// 9. Weyl-group structure: group sizes, length palindromicity, dominant
// reduction vs exhaustive search, dimension formula vs pattern counting
bool criterion_weyl_structure(std::string& detail) {
  bool ok = true;
  for (int rank = 1; rank <= 5; ++rank) {
    const auto group = enumerate_weyl_group(rank);
    std::size_t factorial = 1;
    for (int k = 2; k <= rank + 1; ++k) factorial *= k;
    ok &= require(group.size() == factorial, detail,
                  "|W(A_" + std::to_string(rank) + ")| != (r+1)!");
    const int top = rank * (rank + 1) / 2;
    std::map<int, int> histogram;
    for (const auto& w : group) ++histogram[w.length()];
    for (int len = 0; len <= top; ++len)
      ok &= require(histogram[len] == histogram[top - len], detail,
                    "length histogram not palindromic at rank " + std::to_string(rank));
  }

  for (int rank = 1; rank <= 3; ++rank) {
    const auto group = enumerate_weyl_group(rank);
    for (const Weight& mu : testing::weight_grid(rank, 4)) {
      const WeylElement* unique_hit = nullptr;
      int hits = 0;
      for (const auto& w : group)
        if (w.apply(mu).is_strictly_dominant()) {
          unique_hit = &w;
          ++hits;
        }
      const auto reduced = dominant_conjugate(mu);
      if (!reduced) {
        ok &= require(hits == 0, detail, "singular verdict mismatch at " + mu.str());
      } else {
        ok &= require(hits == 1 && *unique_hit == reduced->w, detail,
                      "dominant reduction mismatch at " + mu.str());
      }
    }
  }

  for (int rank = 1; rank <= 3; ++rank) {
    std::vector<Int> c(rank, 0);
    for (;;) {
      const Weight mu(c);
      ok &= require(weyl_dimension(mu) == testing::gt_dimension(mu), detail,
                    "dimension formula mismatch at " + mu.str());
      int k = rank - 1;
      while (k >= 0 && c[k] == 3) c[k--] = 0;
      if (k < 0) break;
      ++c[k];
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 2;
  }
  g_cli_path = argv[1];

  struct Criterion {
    std::string name;
    CriterionFn run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"verify-paper counterexample: (2,-1) is 1-ample, H^2(L+K) = C", criterion_counterexample,
       1.0},
      {"chamber map, rank 2, range 6: 169 points classified by Weyl chamber",
       criterion_chamber_map, 1.0},
      {"Serre duality across the canonical twist on rank-2 and rank-3 grids",
       criterion_serre_duality, 5.0},
      {"Euler characteristic equals the alternating sum of cohomology", criterion_euler, 5.0},
      {"closed-form q-ample index matches the twist-test oracle", criterion_oracle_equivalence,
       30.0},
      {"O(-1) on P^n is exactly n-ample for n <= 5", criterion_pn_negative_twist, 1.0},
      {"Bott duality and Euler polynomiality on P^n, n <= 6, |d| <= 12", criterion_pn_invariants,
       1.0},
      {"Betti ampleness corpus: curve, Enriques, skew lines, Segre", criterion_betti_corpus, 1.0},
      {"Weyl-group structure, dominant reduction, dimension oracle", criterion_weyl_structure,
       10.0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& criterion = criteria[k];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= criterion.budget_seconds) {
      ok = false;
      if (detail.empty())
        detail = "exceeded the " + std::to_string(criterion.budget_seconds) + " s budget";
    }
    std::printf("%s  %zu. %s  (%.0f ms)\n", ok ? "PASS" : "FAIL", k + 1, criterion.name.c_str(),
                seconds * 1000.0);
    if (!ok) {
      ++failures;
      if (!detail.empty()) std::printf("      %s\n", detail.c_str());
    }
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
