// Minimal q for which a line bundle on the flag variety is q-ample, in
// closed form and by a definition-level twist test, plus the lattice-point
// chamber classification behind the cone pictures.
//
// Closed form: qmin(lambda) = #{alpha > 0 : <lambda, alpha^vee> <= 0}.  A
// zero pairing counts against lambda: twisting pushes a wall pairing
// negative, so the higher degree persists.  The twist test validates this
// convention wholesale.

#pragma once

#include <optional>
#include <vector>

#include "flagcoh/root_system.hpp"

namespace flagcoh {

// qmin in [0, r(r+1)/2]: 0 on the ample cone (strictly dominant lambda),
// r(r+1)/2 at zero and on the anti-ample cone.
int q_ample_index(const Weight& lambda);

struct OracleWindow {
  int box_radius = 3;
  int m_min = 10;
  int m_max = 30;
};

// Definition-level check: the largest degree in which some twist
// m*lambda + nu, nu in [-box, box]^r, keeps cohomology alive for some m in
// the window.  The degree of m*lambda + nu is eventually constant in m, so a
// window starting past the crossover suffices.
int q_ample_index_oracle(const Weight& lambda, const OracleWindow& window = {});

struct ChamberRecord {
  Weight weight;
  int qmin;
  bool regular;                    // no zero pairing with a positive root
  std::optional<int> weyl_length;  // present iff regular
};

// One record per lattice point of [-range, range]^rank, in lexicographic
// coordinate order.  Deterministic for fixed inputs.
std::vector<ChamberRecord> chamber_map(int rank, int range);

}  // namespace flagcoh
