// Exact combinatorics of the type A_r root system: weights in the
// fundamental-weight basis, coroot pairings, the Weyl group W(A_r) = S_{r+1}
// and its linear and shifted ("dot") actions on the weight lattice.
//
// Conventions used throughout:
//  * A weight is a vector (a_1, ..., a_r) of integers in the
//    fundamental-weight basis.  On the full flag variety of SL_{r+1} these
//    coordinates also index the Picard group, so a weight doubles as a line
//    bundle; the strictly dominant weights form the ample cone.
//  * The positive roots are e_i - e_j for 1 <= i < j <= r+1, written as the
//    index pair (i, j); the simple roots are the pairs (i, i+1).  The coroot
//    pairing is <lambda, alpha_{ij}^vee> = a_i + a_{i+1} + ... + a_{j-1}.
//  * Permutations act on epsilon coordinates (l_1, ..., l_{r+1}) with
//    l_k - l_{k+1} = a_k.  All operations stay in exact integer arithmetic.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagcoh {

using Int = std::int64_t;

// Closed-form operations accept ranks up to kMaxRank; explicit Weyl-group
// enumeration stops at kMaxEnumerationRank, where |W| = 8! = 40320.
inline constexpr int kMaxRank = 32;
inline constexpr int kMaxEnumerationRank = 7;

class Weight {
public:
  explicit Weight(std::vector<Int> coords);

  static Weight zero(int rank);
  static Weight rho(int rank);  // the Weyl vector: all coordinates 1

  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const Int> coords() const noexcept { return coords_; }
  Int coord(int k) const;  // a_k, 1-based

  // Epsilon coordinates (l_1, ..., l_{r+1}) with l_k - l_{k+1} = a_k and
  // l_{r+1} = 0.  from_eps() only reads differences, so any representative
  // modulo the all-ones vector gives the same weight.
  std::vector<Int> eps() const;
  static Weight from_eps(std::span<const Int> eps);

  bool is_dominant() const noexcept;           // all coordinates >= 0
  bool is_strictly_dominant() const noexcept;  // all coordinates > 0

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  Weight& operator*=(Int scale);

  friend bool operator==(const Weight&, const Weight&) = default;

  std::string str() const;  // "(2,-1)"

private:
  std::vector<Int> coords_;
};

Weight operator+(Weight lhs, const Weight& rhs);
Weight operator-(Weight lhs, const Weight& rhs);
Weight operator-(Weight w);
Weight operator*(Int scale, Weight w);

// The positive root e_i - e_j, 1 <= i < j <= rank+1.
struct Root {
  int i;
  int j;
  friend bool operator==(const Root&, const Root&) = default;
};

class RootSystem {
public:
  explicit RootSystem(int rank);

  int rank() const noexcept { return rank_; }
  // r(r+1)/2; this is also the dimension of the full flag variety.
  int num_positive_roots() const noexcept { return static_cast<int>(positive_.size()); }
  std::span<const Root> positive_roots() const noexcept { return positive_; }
  Root simple_root(int i) const;  // (i, i+1), 1 <= i <= rank

private:
  int rank_;
  std::vector<Root> positive_;  // lexicographic: (1,2), (1,3), ..., (r,r+1)
};

// <lambda, alpha_{ij}^vee>; throws std::invalid_argument on a malformed pair.
Int pairing(const Weight& lambda, Root root);

// Element of W(A_r) = S_{r+1}, stored as the images w(1), ..., w(r+1).
class WeylElement {
public:
  explicit WeylElement(std::vector<int> images);

  static WeylElement identity(int rank);
  static WeylElement simple_reflection(int rank, int i);  // s_i, swaps i and i+1
  static WeylElement longest(int rank);                   // order-reversing permutation

  int rank() const noexcept { return static_cast<int>(images_.size()) - 1; }
  std::span<const int> images() const noexcept { return images_; }
  int operator()(int k) const;  // w(k), 1-based

  int length() const noexcept;  // inversion count; longest element has r(r+1)/2
  WeylElement inverse() const;

  Weight apply(const Weight& lambda) const;  // linear action
  Weight dot(const Weight& lambda) const;    // w(lambda + rho) - rho

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string str() const;  // "[2 3 1]"

private:
  std::vector<int> images_;
};

// Composition acting on weights: (u * v).apply(x) == u.apply(v.apply(x)).
WeylElement operator*(const WeylElement& u, const WeylElement& v);

struct DominantConjugate {
  WeylElement w;    // the unique element with w(mu) strictly dominant
  Weight dominant;  // w(mu)
};

// nullopt when mu lies on a chamber wall, i.e. <mu, alpha^vee> = 0 for some
// positive root.  For regular mu, length(w) = #{alpha > 0 : <mu, alpha^vee> < 0}.
std::optional<DominantConjugate> dominant_conjugate(const Weight& mu);

// All (rank+1)! elements in lexicographic image order.  Throws
// std::length_error above kMaxEnumerationRank.
std::vector<WeylElement> enumerate_weyl_group(int rank);

}  // namespace flagcoh
