// Cohomology of the twists O(d) on P^n in closed form, and the q-ampleness
// classification of O(d).  Serves as the desk-scale model for the duality
// and nonvanishing checks that the flag-variety computations mirror.

#pragma once

#include <gmpxx.h>

namespace flagcoh {

// The line bundle O(d) on P^n.
struct TwistSpec {
  int n;  // ambient dimension, >= 1
  int d;  // twist
};

// C(a, k) for integers a, k >= 0; zero when a < k.
mpz_class binomial(long a, int k);

// h^i(P^n, O(d)): C(n+d, n) at i = 0 for d >= 0, C(-d-1, n) at i = n for
// d <= -n-1, zero everywhere else.
mpz_class bott_h(TwistSpec spec, int i);

// 0 for d > 0 (Serre), n for d <= 0: powers of a non-positive twist never
// kill top cohomology of sufficiently negative twists.
int pn_q_ample_index(TwistSpec spec);

}  // namespace flagcoh
